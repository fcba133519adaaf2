#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "gnls/errors.hpp"
#include "gnls/initial_data.hpp"
#include "gnls/nls.hpp"
#include "gnls/norms.hpp"
#include "test_helpers.hpp"

using namespace gnls;
using namespace gnls_test;

namespace {

constexpr double kPi = std::numbers::pi;
const GridSpec g64 = make_grid(1, 64, 2 * kPi);
const GridSpec g512 = make_grid(1, 512, 40.0);

Field constant_field(const GridSpec& g, complexd a) {
  return Field::from_values(g, cvec(g.size(), a));
}

// Brute-force oracle: exact coefficientwise convolution of trigonometric
// polynomials over the integers, truncated to the grid band afterwards.
using SpectrumMap = std::map<int, complexd>;

SpectrumMap to_map(const Field& f) {
  SpectrumMap m;
  const GridSpec& g = f.grid();
  for (int i = 0; i < g.n; ++i)
    if (std::abs(f.spectrum()[i]) > 0.0) m[g.wavenumber(i)] = f.spectrum()[i];
  return m;
}

SpectrumMap conj_map(const SpectrumMap& a) {
  SpectrumMap out;
  for (const auto& [k, c] : a) out[-k] = std::conj(c);
  return out;
}

SpectrumMap convolve(const SpectrumMap& a, const SpectrumMap& b) {
  SpectrumMap out;
  for (const auto& [k1, c1] : a)
    for (const auto& [k2, c2] : b) out[k1 + k2] += c1 * c2;
  return out;
}

Field from_map_truncated(const GridSpec& g, const SpectrumMap& m) {
  cvec c(g.size());
  for (const auto& [k, v] : m) {
    if (k < -g.n / 2 || k >= g.n / 2) continue;
    c[k >= 0 ? k : k + g.n] = v;
  }
  return Field::from_spectrum(g, std::move(c));
}

}  // namespace

TEST_CASE("nonlinearity pointwise closed forms") {
  CHECK(rel_l2(nonlinearity(constant_field(g64, 2.0), 3),
               constant_field(g64, 8.0)) < 1e-13);
  CHECK(rel_l2(nonlinearity(plane_wave(g64), 5), plane_wave(g64)) < 1e-12);
  CHECK(rel_l2(nonlinearity(constant_field(g64, complexd(1.0, 1.0)), 3),
               constant_field(g64, complexd(2.0, 2.0))) < 1e-13);
  CHECK_THROWS_AS(nonlinearity(plane_wave(g64), 4), InvalidArgument);
  CHECK_THROWS_AS(nonlinearity(plane_wave(g64), 1), InvalidArgument);
}

TEST_CASE("dealiased products match the convolution oracle") {
  const GridSpec g = make_grid(1, 16, 2 * kPi);

  SUBCASE("cubic nonlinearity on a band-limited field") {
    // Modes up to |k| = 3; the cube reaches |k| = 9 > n/2 and must truncate
    // without aliasing back into the band.
    cvec c(g.size());
    c[1] = complexd(0.7, -0.2);
    c[2] = complexd(-0.4, 0.9);
    c[16 - 3] = complexd(0.3, 0.5);
    const Field f = Field::from_spectrum(g, std::move(c));

    const SpectrumMap fm = to_map(f);
    const SpectrumMap cube = convolve(convolve(fm, fm), conj_map(fm));
    const Field want = from_map_truncated(g, cube);
    CHECK(rel_l2(nonlinearity(f, 3), want) < 1e-13);
  }

  SUBCASE("general product with mixed conjugation") {
    const Field a = random_band_limited(g, 5);
    const Field b = random_band_limited(g, 6);
    const Field c = random_band_limited(g, 7);
    const Field got = dealiased_product({a, b, c}, {false, true, false});
    const SpectrumMap want_map =
        convolve(convolve(to_map(a), conj_map(to_map(b))), to_map(c));
    CHECK(rel_l2(got, from_map_truncated(g, want_map)) < 1e-12);
  }

  SUBCASE("nonlinearity equals the p-fold self product") {
    const Field f = random_band_limited(g, 8);
    const Field via_product =
        dealiased_product({f, f, f, f, f}, {false, false, false, true, true});
    CHECK(rel_l2(nonlinearity(f, 5), via_product) < 1e-12);
  }
}

TEST_CASE("mass closed forms") {
  CHECK(rel_err(mass(plane_wave(g64, 1, 2.0)), 8 * kPi) < 1e-13);
  CHECK(mass(Field::zero(g64)) == 0.0);
  // quadrature oracle: integral of sech^2 is 2
  CHECK(rel_err(mass(sech_profile(g512)), 2.0) < 1e-10);
}

TEST_CASE("energy closed forms") {
  CHECK(rel_err(energy(plane_wave(g64), 5), 8 * kPi / 3) < 1e-12);
  CHECK(rel_err(energy(constant_field(g64, 1.0), 3), 0.5 * 2 * kPi) < 1e-13);
  CHECK(energy(Field::zero(g64), 5) == 0.0);
  // quadrature oracle: ||sech'||^2 = 2/3 and integral sech^6 = 16/15,
  // so E = 2/3 + (1/3)(16/15) = 46/45.
  CHECK(rel_err(energy(sech_profile(g512), 5), 46.0 / 45.0) < 1e-10);
}

TEST_CASE("split-step closed forms and mass exactness") {
  SUBCASE("one step on a plane wave is exact") {
    const double dt = 0.37;
    const Field u1 = step_splitstep(plane_wave(g64, 3, 0.5), dt, 5);
    // a e^{i(kx - (k^2 + |a|^{p-1}) t)}
    const double omega = 9.0 + std::pow(0.5, 4);
    const Field want =
        plane_wave(g64, 3, 0.5) * std::exp(complexd(0, -omega * dt));
    CHECK(rel_l2(u1, want) < 1e-12);
  }
  SUBCASE("zero field is a fixed point") {
    CHECK(gevrey_sobolev_norm(step_splitstep(Field::zero(g64), 0.1, 5),
                              {0, 0}) == 0.0);
  }
  SUBCASE("mass is preserved to roundoff per step") {
    Field u = sech_profile(g512);
    const double m0 = mass(u);
    for (int i = 0; i < 50; ++i) {
      u = step_splitstep(u, 1e-2, 5);
      CHECK(std::abs(mass(u) - m0) / m0 < 1e-13);
    }
  }
}

TEST_CASE("split-step self-convergence is second order") {
  const GridSpec g = make_grid(1, 256, 40.0);
  const Field u0 = sech_profile(g);
  const double T = 0.25;
  auto run = [&](double dt) {
    Field u = u0;
    const int n = static_cast<int>(std::round(T / dt));
    for (int i = 0; i < n; ++i) u = step_splitstep(u, dt, 5);
    return u;
  };
  const Field ref = run(T / 4096);
  const double e1 = gevrey_sobolev_norm(run(T / 256) - ref, {0, 0});
  const double e2 = gevrey_sobolev_norm(run(T / 512) - ref, {0, 0});
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));

  // Richardson-style drift oracle: halving dt cuts the energy drift ~4x.
  auto drift = [&](double dt) {
    Field u = u0;
    const double e0 = energy(u0, 5);
    double worst = 0.0;
    const int n = static_cast<int>(std::round(1.0 / dt));
    for (int i = 0; i < n; ++i) {
      u = step_splitstep(u, dt, 5);
      if (i % 50 == 49) worst = std::max(worst, std::abs(energy(u, 5) - e0));
    }
    return worst;
  };
  CHECK(drift(2e-3) / drift(1e-3) == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("duhamel-picard stepper") {
  SUBCASE("plane wave forced frequency, one step") {
    PicardParams pp;
    const Field out = step_duhamel_picard(plane_wave(g64), 0.01, 5, pp);
    const Field want = plane_wave(g64) * std::exp(complexd(0, -2.0 * 0.01));
    CHECK(rel_l2(out, want) < 1e-8);
  }
  SUBCASE("zero field converges in one iteration") {
    PicardParams pp;
    PicardStats st;
    const Field out = step_duhamel_picard(Field::zero(g64), 1.0, 5, pp, &st);
    CHECK(st.iterations == 1);
    CHECK(gevrey_sobolev_norm(out, {0, 0}) == 0.0);
  }
  SUBCASE("cross-integrator agreement on sech data") {
    PicardParams pp;
    pp.tol = 1e-12;
    const Field a = step_duhamel_picard(sech_profile(g512), 1e-2, 5, pp);
    Field b = sech_profile(g512);
    for (int i = 0; i < 100; ++i) b = step_splitstep(b, 1e-4, 5);
    CHECK(gevrey_sobolev_norm(a - b, {0, 0}) < 1e-6);
  }
  SUBCASE("iterate differences contract geometrically") {
    PicardParams pp;
    pp.tol = 1e-13;
    PicardStats st;
    step_duhamel_picard(sech_profile(g512), 1e-2, 5, pp, &st);
    REQUIRE(st.residuals.size() >= 2);
    for (std::size_t i = 1; i < st.residuals.size(); ++i)
      CHECK(st.residuals[i] <= 0.5 * st.residuals[i - 1]);
  }
  SUBCASE("contraction threshold rejects large dt") {
    PicardParams pp;
    pp.contraction_c0 = 0.1;  // the conservative constant makes it bite
    CHECK_THROWS_AS(step_duhamel_picard(sech_profile(g512), 1e-2, 5, pp),
                    InvalidArgument);
  }
  SUBCASE("iteration budget exhaustion reports no convergence") {
    PicardParams pp;
    pp.max_iter = 3;
    pp.tol = 1e-15;
    CHECK_THROWS_AS(step_duhamel_picard(sech_profile(g512), 1e-2, 5, pp),
                    NoConvergence);
  }
}

TEST_CASE("solver in two dimensions") {
  const GridSpec g2 = make_grid(2, 32, 2 * kPi);
  SUBCASE("plane wave along the first axis is exact") {
    const Field u0 = plane_wave(g2);
    const Field u1 = step_splitstep(u0, 0.2, 5);
    const Field want = u0 * std::exp(complexd(0, -2.0 * 0.2));
    CHECK(rel_l2(u1, want) < 1e-12);
  }
  SUBCASE("mass exactness on product sech") {
    const GridSpec g = make_grid(2, 64, 20.0);
    Field u = sech_profile(g);
    const double m0 = mass(u);
    for (int i = 0; i < 20; ++i) u = step_splitstep(u, 1e-3, 5);
    CHECK(std::abs(mass(u) - m0) / m0 < 1e-13);
  }
  SUBCASE("integrators agree on a resolved 2d grid") {
    // n = 64 on this box truncates the sech tail near 1e-7, which the two
    // schemes treat differently; n = 128 resolves it fully.
    const GridSpec g = make_grid(2, 128, 20.0);
    PicardParams pp;
    pp.tol = 1e-12;
    const Field a = step_duhamel_picard(sech_profile(g), 1e-2, 5, pp);
    Field b = sech_profile(g);
    for (int i = 0; i < 100; ++i) b = step_splitstep(b, 1e-4, 5);
    CHECK(gevrey_sobolev_norm(a - b, {0, 0}) < 1e-6);
  }
}

TEST_CASE("evolve") {
  DiagnosticsConfig diag;
  diag.sigma_list = {0.0, 0.1};

  SUBCASE("T = 0 yields the single initial sample") {
    const Trajectory t =
        evolve(sech_profile(g512), 0.0, 1e-3, 5, Method::splitstep, diag);
    CHECK(t.samples.size() == 1);
    CHECK(t.samples.front().t == 0.0);
    CHECK(rel_err(t.samples.front().mass, 2.0) < 1e-10);
  }

  SUBCASE("plane wave reaches the closed form with constant mass") {
    diag.stride = 100;
    const Trajectory t =
        evolve(plane_wave(g64), 1.0, 1e-3, 5, Method::splitstep, diag);
    const Field want = plane_wave(g64) * std::exp(complexd(0, -2.0));
    CHECK(rel_l2(t.samples.back().field, want) < 1e-9);
    const double m0 = t.samples.front().mass;
    for (const auto& s : t.samples) {
      CHECK(std::abs(s.mass - m0) / m0 < 1e-12);
      CHECK(s.A_sigma.size() == 2);
    }
    CHECK(t.samples.front().t == 0.0);
    for (std::size_t i = 1; i < t.samples.size(); ++i)
      CHECK(t.samples[i].t > t.samples[i - 1].t);
    CHECK(t.samples.back().t == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("a trailing partial step lands exactly on T") {
    const Trajectory t =
        evolve(plane_wave(g64), 0.0105, 1e-3, 5, Method::splitstep, diag);
    CHECK(t.samples.back().t == doctest::Approx(0.0105).epsilon(1e-12));
  }

  SUBCASE("A_0 equals mass plus energy along the flow") {
    diag.sigma_list = {0.0};
    diag.stride = 10;
    const Trajectory t =
        evolve(sech_profile(g512), 0.05, 1e-3, 5, Method::splitstep, diag);
    for (const auto& s : t.samples)
      CHECK(rel_err(s.A_sigma.front(), s.mass + s.energy) < 1e-12);
  }
}
