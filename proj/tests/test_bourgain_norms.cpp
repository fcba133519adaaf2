#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "gnls/diagnostics.hpp"
#include "gnls/errors.hpp"
#include "gnls/estimates.hpp"
#include "gnls/initial_data.hpp"
#include "gnls/rng.hpp"
#include "gnls/spacetime.hpp"
#include "test_helpers.hpp"

using namespace gnls;
using namespace gnls_test;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const GridSpec g64 = make_grid(1, 64, 2 * kPi);

SpaceTimeField st_mode(const GridSpec& g, int m, double t_len, int j, int k) {
  cvec spec(g.size() * m);
  const std::size_t jt = static_cast<std::size_t>(j >= 0 ? j : j + m);
  const std::size_t ks = static_cast<std::size_t>(k >= 0 ? k : k + g.n);
  spec[jt * g.size() + ks] = 1.0;
  return SpaceTimeField::from_spectrum(g, m, t_len, std::move(spec));
}
}  // namespace

TEST_CASE("space-time transform and Parseval") {
  SamplerConfig sc{g64, 16, 2 * kPi};
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const SpaceTimeField f = sample_slab_field(sc, seed);
    const SpaceTimeField rt =
        SpaceTimeField::from_values(g64, f.m(), f.t_len(), f.values());
    CHECK(max_abs_diff(rt.spectrum(), f.spectrum()) < 1e-12);
    // Riemann-sum L^2 equals the weighted coefficient sum
    CHECK(rel_err(mixed_lebesgue_norm(f, 2, 2), xsb_norm(f, {0, 0, 0})) <
          1e-10);
  }
}

TEST_CASE("xsb norm closed forms") {
  SUBCASE("single space-time mode") {
    const double t_len = 2 * kPi;
    const SpaceTimeField f = st_mode(g64, 32, t_len, 3, 2);
    const double tau = 3.0, k = 2.0;
    const double want = std::sqrt(t_len * 2 * kPi) *
                        std::pow(1 + k * k, 0.75) *
                        std::pow(1 + std::pow(tau + k * k, 2), 0.3);
    CHECK(rel_err(xsb_norm(f, {0.0, 1.5, 0.6}), want) < 1e-12);
  }
  SUBCASE("free solutions sit on the characteristic surface") {
    const SpaceTimeField f =
        SpaceTimeField::free_evolution(plane_wave(g64), 32, 2 * kPi);
    const double l2 = xsb_norm(f, {0, 0, 0});
    for (double b : {0.6, -0.6, 0.9})
      CHECK(rel_err(xsb_norm(f, {0, 0, b}), l2) < 1e-10);
  }
  SUBCASE("homogeneity and weight monotonicity") {
    SamplerConfig sc{g64, 16, 2 * kPi};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const SpaceTimeField f = sample_slab_field(sc, seed);
      const complexd lam(0.3, -1.9);
      CHECK(rel_err(xsb_norm(f * lam, {0.1, 0.7, 0.4}),
                    std::abs(lam) * xsb_norm(f, {0.1, 0.7, 0.4})) < 1e-12);
      // <.> >= 1 makes every weight nondecreasing in its exponent
      CHECK(xsb_norm(f, {0.05, 0.3, 0.2}) <=
            xsb_norm(f, {0.1, 0.6, 0.5}) * (1 + 1e-12));
      CHECK(xsb_norm(f, {0, 0, -0.6}) <= xsb_norm(f, {0, 0, 0.6}) * (1 + 1e-12));
    }
  }
  SUBCASE("gevrey guard applies to the spatial weight") {
    const SpaceTimeField f = st_mode(g64, 16, 2 * kPi, 0, 1);
    CHECK_THROWS_AS(xsb_norm(f, {10.0, 0.0, 0.0}), OverflowGuard);
  }
  SUBCASE("b outside (-1, 1) is rejected") {
    const SpaceTimeField f = st_mode(g64, 16, 2 * kPi, 0, 1);
    CHECK_THROWS_AS(xsb_norm(f, {0.0, 0.0, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(xsb_norm(f, {0.0, 0.0, -1.5}), InvalidArgument);
  }
}

TEST_CASE("sharp time window") {
  const int m = 32;
  cvec vals(g64.size() * m, complexd(1.0, 0.0));
  const SpaceTimeField f =
      SpaceTimeField::from_values(g64, m, 2 * kPi, std::move(vals));

  SUBCASE("full interval is the identity") {
    const SpaceTimeField w = window(f, 0.0, 2 * kPi);
    CHECK(xsb_norm(w - f, {0, 0, 0}) == 0.0);
  }
  SUBCASE("half window scales the L2 norm by sqrt(1/2)") {
    const SpaceTimeField w = window(f, 0.0, kPi);
    CHECK(rel_err(xsb_norm(w, {0, 0, 0}),
                  std::sqrt(0.5) * xsb_norm(f, {0, 0, 0})) < 1e-12);
  }
  SUBCASE("degenerate intervals are rejected") {
    CHECK_THROWS_AS(window(f, 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(window(f, 2.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(window(f, -0.1, 1.0), InvalidArgument);
    CHECK_THROWS_AS(window(f, 0.0, 7.0), InvalidArgument);
  }
}

TEST_CASE("admissible pairs") {
  CHECK(admissible_pair(8, 4, 1));
  CHECK(admissible_pair(4, 4, 2));
  CHECK(admissible_pair(6, 6, 1));
  CHECK(admissible_pair(kInf, 2, 1));
  CHECK(admissible_pair(kInf, 2, 2));
  CHECK(!admissible_pair(2, kInf, 2));  // excluded endpoint
  CHECK(!admissible_pair(2, kInf, 1));  // scaling off in d = 1
  CHECK(!admissible_pair(4, 4, 1));
  CHECK(!admissible_pair(1.5, 4, 1));  // below the q >= 2 range
}

TEST_CASE("mixed lebesgue norm") {
  const int m = 16;
  cvec ones(g64.size() * m, complexd(1.0, 0.0));
  const SpaceTimeField f =
      SpaceTimeField::from_values(g64, m, 2 * kPi, std::move(ones));
  CHECK(rel_err(mixed_lebesgue_norm(f, 3, 5),
                std::pow(2 * kPi, 1.0 / 3) * std::pow(2 * kPi, 1.0 / 5)) <
        1e-12);
  CHECK(rel_err(mixed_lebesgue_norm(f, kInf, kInf), 1.0) < 1e-12);

  SamplerConfig sc{g64, m, 2 * kPi};
  const SpaceTimeField r = sample_slab_field(sc, 42);
  // independent summation-order oracle for (q, r) = (4, 6)
  const double cell = 2 * kPi / g64.n, dt = r.dt();
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    double s = 0.0;
    for (int j = 0; j < g64.n; ++j)
      s += std::pow(std::abs(r.values()[i * g64.n + j]), 6.0);
    acc += std::pow(cell * s, 4.0 / 6.0);
  }
  CHECK(rel_err(mixed_lebesgue_norm(r, 4, 6), std::pow(dt * acc, 0.25)) <
        1e-12);
}

TEST_CASE("conjugation flips the space-time spectrum") {
  SamplerConfig sc{g64, 16, 2 * kPi};
  const SpaceTimeField r = sample_slab_field(sc, 9);
  const SpaceTimeField rc = r.conj();
  for (int j = 1; j < 15; ++j)
    for (int k = 1; k < 63; ++k) {
      const complexd a = rc.spectrum()[static_cast<std::size_t>(j) * 64 + k];
      const complexd b = std::conj(
          r.spectrum()[static_cast<std::size_t>(16 - j) * 64 + (64 - k)]);
      CHECK(std::abs(a - b) < 1e-14);
    }
}

TEST_CASE("sampler is seed-deterministic") {
  SamplerConfig sc{g64, 16, 2 * kPi};
  const SpaceTimeField a = sample_slab_field(sc, 1234);
  const SpaceTimeField b = sample_slab_field(sc, 1234);
  CHECK(max_abs_diff(a.values(), b.values()) == 0.0);
  const SpaceTimeField c = sample_slab_field(sc, 1235);
  CHECK(max_abs_diff(a.values(), c.values()) > 0.0);
}

TEST_CASE("single-mode ratios against hand formulas") {
  const int m = 32, p = 5;
  const double t_len = 2 * kPi;
  const double st = std::sqrt(t_len * 2 * kPi);
  const auto [s0, s1] = critical_indices(p, 1);
  EstimateParams par;

  SUBCASE("p-fold product in L2") {
    // all inputs the same mode e^{i(x + 2t)}; the NLS pattern leaves the
    // product at the same mode with unit amplitude
    const SpaceTimeField mode = st_mode(g64, m, t_len, 2, 1);
    const auto ratio =
        estimate_ratio(EstimateId::multilinear_l2,
                       std::vector<SpaceTimeField>(p, mode),
                       nls_conjugation_pattern(p), par);
    REQUIRE(ratio.has_value());
    const double k = 1.0, tau = 2.0;
    const double wdisp = std::pow(1 + std::pow(tau + k * k, 2), 0.3);
    const double w_s0 = std::pow(1 + k * k, 0.5 * s0) * wdisp;
    const double rhs = std::pow(st * w_s0, p - 1) * (st * wdisp);
    CHECK(rel_err(*ratio, st / rhs) < 1e-10);
  }

  SUBCASE("commutator ratio is controlled by the weight quotient") {
    // f(v) on one mode has norm (1 - e^{-(p-1) sigma ||k||}) sqrt(t_len box);
    // since 1 - e^{-x} <= x the ratio is bounded by (p-1)||k|| / W with
    // W the remaining weight product, uniformly in sigma.
    const SpaceTimeField mode = st_mode(g64, m, t_len, 2, 1);
    const double k = 1.0, tau = 2.0;
    const double wdisp = std::pow(1 + std::pow(tau + k * k, 2), 0.3);
    const double w_s0 = std::pow(1 + k * k, 0.5 * s0) * wdisp;
    const double w_1 = std::pow(1 + k * k, 0.5) * wdisp;
    const double W = std::pow(st * w_s0, p - 1) * st * w_1 / st;
    double prev = 0.0;
    for (double sigma : {0.5, 0.1, 0.01, 0.001}) {
      EstimateParams ps = par;
      ps.sigma = sigma;
      const auto ratio = estimate_ratio(EstimateId::commutator_l2, {mode}, {},
                                        ps);
      REQUIRE(ratio.has_value());
      const double closed =
          (1 - std::exp(-(p - 1) * sigma * k)) / (sigma * W);
      CHECK(rel_err(*ratio, closed) < 1e-9);
      CHECK(*ratio <= (p - 1) * k / W * (1 + 1e-12));
      CHECK(*ratio >= prev);  // increases toward the sigma -> 0 limit
      prev = *ratio;
    }
  }
}

TEST_CASE("check_estimate aggregates and validates") {
  SamplerConfig sc{g64, 16, 2 * kPi};
  EstimateParams par;

  SUBCASE("arity mismatch is rejected before any compute") {
    const SpaceTimeField f = sample_slab_field(sc, 1);
    CHECK_THROWS_AS(
        estimate_ratio(EstimateId::multilinear_l2, {f}, {false}, par),
        InvalidArgument);
    CHECK_THROWS_AS(check_estimate(EstimateId::multilinear_l2, {{f}},
                                   nls_conjugation_pattern(5), par),
                    InvalidArgument);
  }

  SUBCASE("zero samples are excluded and counted") {
    const SpaceTimeField z = SpaceTimeField::zero(g64, 16, 2 * kPi);
    const SpaceTimeField f = sample_slab_field(sc, 1);
    const EstimateReport rep = check_estimate(
        EstimateId::strichartz, {{z}, {f}, {z}}, {}, par);
    CHECK(rep.sample_count == 3);
    CHECK(rep.excluded_zero_rhs == 2);
    CHECK(rep.ratios.size() == 1);
    CHECK(rep.max_ratio == rep.ratios.front());
    // an all-zero batch cannot produce statistics
    CHECK_THROWS_AS(check_estimate(EstimateId::strichartz, {{z}}, {}, par),
                    DegenerateInput);
  }
}

TEST_CASE("estimate ratios stay bounded when resolution doubles") {
  EstimateParams par;
  for (EstimateId id : all_estimates()) {
    double worst[2] = {0.0, 0.0};
    int slot = 0;
    for (int n : {32, 64}) {
      const GridSpec g = make_grid(1, n, 2 * kPi);
      SamplerConfig sc{g, 32, 2 * kPi};
      const int arity = estimate_arity(id, par.p);
      for (int s = 0; s < 10; ++s) {
        Rng rng(100 + s);
        std::vector<SpaceTimeField> in;
        in.reserve(arity);
        for (int j = 0; j < arity; ++j) in.push_back(sample_slab_field(sc, rng));
        const auto r =
            estimate_ratio(id, in, nls_conjugation_pattern(par.p), par);
        REQUIRE(r.has_value());
        CHECK(std::isfinite(*r));
        worst[slot] = std::max(worst[slot], *r);
      }
      ++slot;
    }
    CHECK(worst[1] < 2.0 * worst[0]);
  }
}

TEST_CASE("2d space-time products match the convolution oracle") {
  // exact coefficientwise convolution over (tau, k1, k2), truncated to the
  // slab band afterwards
  const GridSpec g = make_grid(2, 8, 2 * kPi);
  const int m = 4;
  const double t_len = 2 * kPi;

  using Key = std::array<int, 3>;
  using Map = std::map<Key, complexd>;

  auto to_map = [&](const SpaceTimeField& f) {
    Map out;
    for (int j = 0; j < m; ++j)
      for (int i1 = 0; i1 < g.n; ++i1)
        for (int i2 = 0; i2 < g.n; ++i2) {
          const complexd c =
              f.spectrum()[(static_cast<std::size_t>(j) * g.n + i1) * g.n + i2];
          if (std::abs(c) > 0.0)
            out[{j < m / 2 ? j : j - m, g.wavenumber(i1), g.wavenumber(i2)}] = c;
        }
    return out;
  };
  auto conj_flip = [](const Map& a) {
    Map out;
    for (const auto& [k, c] : a)
      out[{-k[0], -k[1], -k[2]}] = std::conj(c);
    return out;
  };
  auto convolve = [](const Map& a, const Map& b) {
    Map out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b)
        out[{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}] += ca * cb;
    return out;
  };

  Rng rng(17);
  auto sparse_field = [&]() {
    cvec spec(g.size() * m);
    for (int j = -1; j <= 1; ++j)
      for (int k1 = -2; k1 <= 2; ++k1)
        for (int k2 = -2; k2 <= 2; ++k2) {
          const std::size_t jt = static_cast<std::size_t>(j >= 0 ? j : j + m);
          const std::size_t i1 = static_cast<std::size_t>(k1 >= 0 ? k1 : k1 + g.n);
          const std::size_t i2 = static_cast<std::size_t>(k2 >= 0 ? k2 : k2 + g.n);
          spec[(jt * g.n + i1) * g.n + i2] = rng.complex_gaussian();
        }
    return SpaceTimeField::from_spectrum(g, m, t_len, std::move(spec));
  };

  const SpaceTimeField a = sparse_field();
  const SpaceTimeField b = sparse_field();
  const SpaceTimeField c = sparse_field();
  const SpaceTimeField got = st_dealiased_product({a, b, c}, {false, true, false});

  const Map want = convolve(convolve(to_map(a), conj_flip(to_map(b))), to_map(c));
  double dev = 0.0;
  std::size_t checked = 0;
  for (int j = -m / 2; j < m / 2; ++j)
    for (int k1 = -g.n / 2; k1 < g.n / 2; ++k1)
      for (int k2 = -g.n / 2; k2 < g.n / 2; ++k2) {
        const std::size_t jt = static_cast<std::size_t>(j >= 0 ? j : j + m);
        const std::size_t i1 = static_cast<std::size_t>(k1 >= 0 ? k1 : k1 + g.n);
        const std::size_t i2 = static_cast<std::size_t>(k2 >= 0 ? k2 : k2 + g.n);
        const complexd lhs =
            got.spectrum()[(jt * g.n + i1) * g.n + i2];
        const auto it = want.find({j, k1, k2});
        const complexd rhs = it == want.end() ? complexd(0.0) : it->second;
        dev = std::max(dev, std::abs(lhs - rhs));
        ++checked;
      }
  CHECK(checked == g.size() * m);
  CHECK(dev < 1e-12);

  // the 2d commutator route (rank-3 padded transforms) stays finite and
  // vanishes with the weight
  EstimateParams par;
  const auto r = estimate_ratio(EstimateId::commutator_l2, {a}, {}, par);
  REQUIRE(r.has_value());
  CHECK(std::isfinite(*r));
  const SpaceTimeField f0 = st_gevrey_commutator(a, 0.0, 5);
  CHECK(xsb_norm(f0, {0, 0, 0}) == 0.0);
}

TEST_CASE("strichartz sanity: admissible bounded, inadmissible grows") {
  const GridSpec g = make_grid(1, 256, 2 * kPi);
  const int m = 512;
  const double t_len = 1.0;

  auto packet = [&](int W) {
    cvec c(g.size());
    for (int k = -W; k <= W; ++k) c[k >= 0 ? k : k + g.n] = 1.0;
    Field phi = Field::from_spectrum(g, std::move(c));
    // pre-evolve so the focus lands mid-slab, inside the bump support
    phi = apply_multiplier(phi, FreePropagator{-t_len / 2});
    SpaceTimeField u = SpaceTimeField::free_evolution(phi, m, t_len);
    cvec vals = u.values();
    for (int i = 0; i < m; ++i) {
      const double b = time_bump(u.time(i), t_len);
      for (std::size_t sp = 0; sp < g.size(); ++sp)
        vals[static_cast<std::size_t>(i) * g.size() + sp] *= b;
    }
    return SpaceTimeField::from_values(g, m, t_len, std::move(vals));
  };

  double adm[2], bad[2];
  int slot = 0;
  for (int W : {4, 32}) {
    const SpaceTimeField u = packet(W);
    const double x = xsb_norm(u, {0, 0, 0.6});
    adm[slot] = mixed_lebesgue_norm(u, 8, 4) / x;       // admissible in d=1
    bad[slot] = mixed_lebesgue_norm(u, kInf, 4) / x;    // 2/q + d/r < d/2
    ++slot;
  }
  CHECK(adm[1] / adm[0] < 1.25);
  CHECK(bad[1] / bad[0] > 1.5);
}

TEST_CASE("trace embedding ratio is bounded over samples") {
  EstimateParams par;
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SamplerConfig sc{g64, 32, 2 * kPi};
    const SpaceTimeField f = sample_slab_field(sc, seed);
    const auto r = estimate_ratio(EstimateId::trace_embedding, {f}, {}, par);
    REQUIRE(r.has_value());
    worst = std::max(worst, *r);
  }
  CHECK(worst < 10.0);
  CHECK(worst > 0.0);
}
