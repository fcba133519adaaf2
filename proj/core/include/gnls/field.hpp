#pragma once

#include <complex>
#include <vector>

#include "gnls/grid.hpp"

namespace gnls {

using complexd = std::complex<double>;
using cvec = std::vector<complexd>;

/// Complex-valued sample of a field on a periodic grid together with its
/// Fourier-series spectrum c_k = box_len^{-dim} * integral f(x) e^{-i xi_k x} dx.
///
/// Both representations are computed at construction and immutable afterwards,
/// so Field values can be shared freely across threads.  Parseval holds in the
/// form ||f||_{L^2}^2 = box_len^{dim} * sum_k |c_k|^2.
class Field {
 public:
  static Field from_values(const GridSpec& grid, cvec values);
  static Field from_spectrum(const GridSpec& grid, cvec spectrum);
  static Field zero(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  const cvec& values() const { return values_; }
  const cvec& spectrum() const { return spectrum_; }

  bool all_finite() const;

  Field operator+(const Field& other) const;
  Field operator-(const Field& other) const;
  Field operator*(complexd scalar) const;

  /// Pointwise complex conjugate.
  Field conj() const;

 private:
  Field(GridSpec grid, cvec values, cvec spectrum)
      : grid_(grid), values_(std::move(values)), spectrum_(std::move(spectrum)) {}

  GridSpec grid_;
  cvec values_;
  cvec spectrum_;
};

namespace detail {
/// Series coefficients from point samples on the centered grid (the
/// (-1)^k phase absorbs the -box_len/2 origin shift).
cvec values_to_spectrum(const GridSpec& grid, const cvec& values);
cvec spectrum_to_values(const GridSpec& grid, const cvec& spectrum);
}  // namespace detail

}  // namespace gnls
