#include "gnls/field.hpp"

#include <cmath>
#include <cstddef>

#include "gnls/errors.hpp"
#include "gnls/fft.hpp"

namespace gnls {

namespace detail {

namespace {
// (-1)^{k1+...+kd} for the flat spectral index; exact for integer k.
double centering_phase(const GridSpec& g, std::size_t idx) {
  int ksum;
  if (g.dim == 1) {
    ksum = g.wavenumber(static_cast<int>(idx));
  } else {
    ksum = g.wavenumber(static_cast<int>(idx / g.n)) +
           g.wavenumber(static_cast<int>(idx % g.n));
  }
  return (ksum & 1) ? -1.0 : 1.0;
}
}  // namespace

cvec values_to_spectrum(const GridSpec& grid, const cvec& values) {
  cvec out = grid.dim == 2 ? fft::forward(values, {grid.n, grid.n})
                           : fft::forward(values, {grid.n});
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] *= scale * centering_phase(grid, i);
  return out;
}

cvec spectrum_to_values(const GridSpec& grid, const cvec& spectrum) {
  cvec tmp(spectrum.size());
  for (std::size_t i = 0; i < tmp.size(); ++i)
    tmp[i] = spectrum[i] * centering_phase(grid, i);
  return grid.dim == 2 ? fft::backward(tmp, {grid.n, grid.n})
                       : fft::backward(tmp, {grid.n});
}

}  // namespace detail

Field Field::from_values(const GridSpec& grid, cvec values) {
  if (values.size() != grid.size())
    throw InvalidArgument("Field: values size does not match grid");
  cvec spectrum = detail::values_to_spectrum(grid, values);
  return Field(grid, std::move(values), std::move(spectrum));
}

Field Field::from_spectrum(const GridSpec& grid, cvec spectrum) {
  if (spectrum.size() != grid.size())
    throw InvalidArgument("Field: spectrum size does not match grid");
  cvec values = detail::spectrum_to_values(grid, spectrum);
  return Field(grid, std::move(values), std::move(spectrum));
}

Field Field::zero(const GridSpec& grid) {
  return Field(grid, cvec(grid.size()), cvec(grid.size()));
}

bool Field::all_finite() const {
  for (const auto& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

Field Field::operator+(const Field& other) const {
  cvec v = values_;
  cvec s = spectrum_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] += other.values_[i];
    s[i] += other.spectrum_[i];
  }
  return Field(grid_, std::move(v), std::move(s));
}

Field Field::operator-(const Field& other) const {
  cvec v = values_;
  cvec s = spectrum_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] -= other.values_[i];
    s[i] -= other.spectrum_[i];
  }
  return Field(grid_, std::move(v), std::move(s));
}

Field Field::operator*(complexd scalar) const {
  cvec v = values_;
  cvec s = spectrum_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] *= scalar;
    s[i] *= scalar;
  }
  return Field(grid_, std::move(v), std::move(s));
}

Field Field::conj() const {
  cvec v = values_;
  for (auto& x : v) x = std::conj(x);
  return from_values(grid_, std::move(v));
}

}  // namespace gnls
