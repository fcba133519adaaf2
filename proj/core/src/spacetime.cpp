#include "gnls/spacetime.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gnls/errors.hpp"
#include "gnls/fft.hpp"

namespace gnls {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<int> extents(const GridSpec& g, int m) {
  return g.dim == 2 ? std::vector<int>{m, g.n, g.n} : std::vector<int>{m, g.n};
}

// (-1)^{k1+..+kd} over the spatial part of the flat index; the time axis is
// sampled from t = 0 so it carries no centering phase.
double spatial_phase(const GridSpec& g, std::size_t idx) {
  const std::size_t sp = idx % g.size();
  int ksum;
  if (g.dim == 1) {
    ksum = g.wavenumber(static_cast<int>(sp));
  } else {
    ksum = g.wavenumber(static_cast<int>(sp / g.n)) +
           g.wavenumber(static_cast<int>(sp % g.n));
  }
  return (ksum & 1) ? -1.0 : 1.0;
}

// Move a DFT-ordered array between extents, preserving wavenumbers (zero
// fill when growing, band truncation when shrinking).
cvec remap_spectrum(const cvec& in, const std::vector<int>& from,
                    const std::vector<int>& to) {
  const int rank = static_cast<int>(from.size());
  std::size_t to_total = 1;
  for (int d : to) to_total *= static_cast<std::size_t>(d);
  cvec out(to_total);

  std::size_t from_total = 1;
  for (int d : from) from_total *= static_cast<std::size_t>(d);

  // Every source wavenumber either lands at its slot in `to` or falls
  // outside the target band and is dropped.
  for (std::size_t flat = 0; flat < from_total; ++flat) {
    std::size_t rest = flat;
    std::size_t to_flat = 0;
    bool in_band = true;
    for (int a = 0; a < rank; ++a) {
      std::size_t stride = 1;
      for (int b = a + 1; b < rank; ++b) stride *= static_cast<std::size_t>(from[b]);
      const int i = static_cast<int>(rest / stride);
      rest %= stride;
      const int k = i < from[a] / 2 ? i : i - from[a];
      if (k < -to[a] / 2 || k >= to[a] / 2) {
        in_band = false;
        break;
      }
      const int j = k >= 0 ? k : k + to[a];
      to_flat = to_flat * static_cast<std::size_t>(to[a]) +
                static_cast<std::size_t>(j);
    }
    if (in_band) out[to_flat] = in[flat];
  }
  return out;
}

}  // namespace

double SpaceTimeField::tau(int j) const {
  const int k = j < m_ / 2 ? j : j - m_;
  return 2.0 * std::numbers::pi / t_len_ * k;
}

SpaceTimeField SpaceTimeField::from_values(const GridSpec& grid, int m,
                                           double t_len, cvec values) {
  if (m < 2 || !power_of_two(m))
    throw InvalidArgument("SpaceTimeField: m must be a power of two >= 2");
  if (!(t_len > 0.0))
    throw InvalidArgument("SpaceTimeField: t_len must be positive");
  if (values.size() != grid.size() * static_cast<std::size_t>(m))
    throw InvalidArgument("SpaceTimeField: values size mismatch");

  cvec spec = fft::forward(values, extents(grid, m));
  const double scale = 1.0 / static_cast<double>(values.size());
  for (std::size_t i = 0; i < spec.size(); ++i)
    spec[i] *= scale * spatial_phase(grid, i);
  return SpaceTimeField(grid, m, t_len, std::move(values), std::move(spec));
}

SpaceTimeField SpaceTimeField::from_spectrum(const GridSpec& grid, int m,
                                             double t_len, cvec spectrum) {
  if (m < 2 || !power_of_two(m))
    throw InvalidArgument("SpaceTimeField: m must be a power of two >= 2");
  if (!(t_len > 0.0))
    throw InvalidArgument("SpaceTimeField: t_len must be positive");
  if (spectrum.size() != grid.size() * static_cast<std::size_t>(m))
    throw InvalidArgument("SpaceTimeField: spectrum size mismatch");

  cvec tmp(spectrum.size());
  for (std::size_t i = 0; i < tmp.size(); ++i)
    tmp[i] = spectrum[i] * spatial_phase(grid, i);
  cvec values = fft::backward(tmp, extents(grid, m));
  return SpaceTimeField(grid, m, t_len, std::move(values), std::move(spectrum));
}

SpaceTimeField SpaceTimeField::free_evolution(const Field& u0, int m,
                                              double t_len) {
  const GridSpec& g = u0.grid();
  cvec values(g.size() * static_cast<std::size_t>(m));
  const double dt = t_len / m;
  for (int i = 0; i < m; ++i) {
    cvec c = u0.spectrum();
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double phase = -dt * i * g.xi_sq(k);
      c[k] *= complexd(std::cos(phase), std::sin(phase));
    }
    cvec slice = detail::spectrum_to_values(g, c);
    std::copy(slice.begin(), slice.end(),
              values.begin() + static_cast<std::ptrdiff_t>(i * g.size()));
  }
  return from_values(g, m, t_len, std::move(values));
}

SpaceTimeField SpaceTimeField::from_slices(const std::vector<Field>& slices,
                                           double t_len) {
  if (slices.empty()) throw InvalidArgument("from_slices: no slices");
  const GridSpec& g = slices.front().grid();
  const int m = static_cast<int>(slices.size());
  cvec values(g.size() * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!(slices[i].grid() == g))
      throw InvalidArgument("from_slices: mixed grids");
    std::copy(slices[i].values().begin(), slices[i].values().end(),
              values.begin() + static_cast<std::ptrdiff_t>(i * g.size()));
  }
  return from_values(g, m, t_len, std::move(values));
}

SpaceTimeField SpaceTimeField::zero(const GridSpec& grid, int m,
                                    double t_len) {
  const std::size_t total = grid.size() * static_cast<std::size_t>(m);
  return SpaceTimeField(grid, m, t_len, cvec(total), cvec(total));
}

Field SpaceTimeField::slice(int i) const {
  if (i < 0 || i >= m_) throw InvalidArgument("slice: time index out of range");
  cvec v(values_.begin() + static_cast<std::ptrdiff_t>(i * grid_.size()),
         values_.begin() + static_cast<std::ptrdiff_t>((i + 1) * grid_.size()));
  return Field::from_values(grid_, std::move(v));
}

SpaceTimeField SpaceTimeField::conj() const {
  cvec v = values_;
  for (auto& x : v) x = std::conj(x);
  return from_values(grid_, m_, t_len_, std::move(v));
}

SpaceTimeField SpaceTimeField::operator*(complexd scalar) const {
  cvec v = values_;
  cvec s = spectrum_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] *= scalar;
    s[i] *= scalar;
  }
  return SpaceTimeField(grid_, m_, t_len_, std::move(v), std::move(s));
}

SpaceTimeField SpaceTimeField::operator+(const SpaceTimeField& other) const {
  cvec v = values_;
  cvec s = spectrum_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] += other.values_[i];
    s[i] += other.spectrum_[i];
  }
  return SpaceTimeField(grid_, m_, t_len_, std::move(v), std::move(s));
}

SpaceTimeField SpaceTimeField::operator-(const SpaceTimeField& other) const {
  cvec v = values_;
  cvec s = spectrum_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] -= other.values_[i];
    s[i] -= other.spectrum_[i];
  }
  return SpaceTimeField(grid_, m_, t_len_, std::move(v), std::move(s));
}

double xsb_norm(const SpaceTimeField& f, const BourgainParams& bp) {
  const GridSpec& g = f.grid();
  if (!(std::abs(bp.b) < 1.0))
    throw InvalidArgument("xsb_norm: need |b| < 1");
  if (bp.sigma < 0.0) throw InvalidArgument("xsb_norm: sigma must be >= 0");
  check_gevrey_guard(g, bp.sigma);
  const std::size_t nsp = g.size();
  double sum = 0.0;
  const cvec& c = f.spectrum();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == complexd(0.0, 0.0)) continue;
    const std::size_t sp = i % nsp;
    const int jt = static_cast<int>(i / nsp);
    double w = 1.0;
    if (bp.sigma != 0.0) w *= std::exp(bp.sigma * g.xi_l1(sp));
    if (bp.s != 0.0) w *= std::pow(1.0 + g.xi_sq(sp), 0.5 * bp.s);
    if (bp.b != 0.0) {
      const double disp = f.tau(jt) + g.xi_sq(sp);
      w *= std::pow(1.0 + disp * disp, 0.5 * bp.b);
    }
    sum += w * w * std::norm(c[i]);
  }
  return std::sqrt(f.t_len() * std::pow(g.box_len, g.dim) * sum);
}

SpaceTimeField window(const SpaceTimeField& f, double a, double c) {
  if (!(0.0 <= a && a < c && c <= f.t_len()))
    throw InvalidArgument("window: need 0 <= a < c <= t_len");
  cvec v = f.values();
  const std::size_t nsp = f.grid().size();
  for (int i = 0; i < f.m(); ++i) {
    const double t = f.time(i);
    if (t < a || t >= c) {
      std::fill(v.begin() + static_cast<std::ptrdiff_t>(i * nsp),
                v.begin() + static_cast<std::ptrdiff_t>((i + 1) * nsp),
                complexd(0.0, 0.0));
    }
  }
  return SpaceTimeField::from_values(f.grid(), f.m(), f.t_len(), std::move(v));
}

bool admissible_pair(double q, double r, int d) {
  constexpr double eps = 1e-12;
  if (!(q >= 2.0 - eps) || !(r >= 2.0 - eps)) return false;
  const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
  const double ir = std::isinf(r) ? 0.0 : 1.0 / r;
  if (std::abs(2.0 * iq + d * ir - 0.5 * d) > eps) return false;
  if (d == 2 && std::abs(q - 2.0) <= eps && std::isinf(r)) return false;
  return true;
}

double mixed_lebesgue_norm(const SpaceTimeField& f, double q, double r) {
  if (!(q >= 1.0) || !(r >= 1.0))
    throw InvalidArgument("mixed_lebesgue_norm: q, r must be >= 1");
  const GridSpec& g = f.grid();
  const std::size_t nsp = g.size();
  const double cell = std::pow(g.box_len / g.n, g.dim);

  std::vector<double> per_slice(f.m());
  for (int i = 0; i < f.m(); ++i) {
    const auto* v = f.values().data() + i * nsp;
    if (std::isinf(r)) {
      double mx = 0.0;
      for (std::size_t j = 0; j < nsp; ++j) mx = std::max(mx, std::abs(v[j]));
      per_slice[i] = mx;
    } else {
      double s = 0.0;
      for (std::size_t j = 0; j < nsp; ++j) s += std::pow(std::abs(v[j]), r);
      per_slice[i] = std::pow(cell * s, 1.0 / r);
    }
  }
  if (std::isinf(q)) {
    double mx = 0.0;
    for (double s : per_slice) mx = std::max(mx, s);
    return mx;
  }
  double s = 0.0;
  for (double x : per_slice) s += std::pow(x, q);
  return std::pow(f.dt() * s, 1.0 / q);
}

SpaceTimeField apply_spatial_multiplier(const SpaceTimeField& f,
                                        const MultiplierSpec& m) {
  const GridSpec& g = f.grid();
  if (const auto* ge = std::get_if<GevreyExp>(&m); ge && ge->sign > 0)
    check_gevrey_guard(g, ge->sigma);
  cvec s = f.spectrum();
  const std::size_t nsp = g.size();
  for (std::size_t i = 0; i < s.size(); ++i)
    s[i] *= multiplier_symbol(m, g, i % nsp);
  return SpaceTimeField::from_spectrum(g, f.m(), f.t_len(), std::move(s));
}

SpaceTimeField st_dealiased_product(const std::vector<SpaceTimeField>& fields,
                                    const std::vector<bool>& conjugate) {
  if (fields.empty() || fields.size() != conjugate.size())
    throw InvalidArgument("st_dealiased_product: empty input or flag mismatch");
  const SpaceTimeField& f0 = fields.front();
  const GridSpec& g = f0.grid();
  for (const auto& f : fields)
    if (!(f.grid() == g) || f.m() != f0.m() || f.t_len() != f0.t_len())
      throw InvalidArgument("st_dealiased_product: mismatched slabs");

  const int qn = static_cast<int>(fields.size());
  const int factor = (qn + 2) / 2;  // ceil((q+1)/2), alias-free for degree q
  const std::vector<int> dims = extents(g, f0.m());
  std::vector<int> pdims = dims;
  for (auto& d : pdims) d *= factor;
  std::size_t ptotal = 1;
  for (int d : pdims) ptotal *= static_cast<std::size_t>(d);

  // Work on the uncentered padded sample set; the series basis is the plain
  // DFT kernel there, so no phases are needed on this path.
  cvec prod(ptotal, complexd(1.0, 0.0));
  for (int j = 0; j < qn; ++j) {
    cvec vals = fft::backward(remap_spectrum(fields[j].spectrum(), dims, pdims),
                              pdims);
    if (conjugate[j]) {
      for (std::size_t i = 0; i < ptotal; ++i) prod[i] *= std::conj(vals[i]);
    } else {
      for (std::size_t i = 0; i < ptotal; ++i) prod[i] *= vals[i];
    }
  }
  cvec pspec = fft::forward(prod, pdims);
  const double scale = 1.0 / static_cast<double>(ptotal);
  for (auto& x : pspec) x *= scale;
  return SpaceTimeField::from_spectrum(g, f0.m(), f0.t_len(),
                                       remap_spectrum(pspec, pdims, dims));
}

}  // namespace gnls
