#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace gnls {

/// Periodic grid on [-box_len/2, box_len/2)^dim with n points per axis.
///
/// Wavevector indices k run over [-n/2, n/2) per axis and carry the physical
/// frequency xi_k = 2*pi*k / box_len.  Spectra are stored in DFT order
/// (index i maps to k = i for i < n/2, k = i - n otherwise).
struct GridSpec {
  int dim = 1;
  int n = 0;
  double box_len = 0.0;

  std::size_t size() const {
    std::size_t s = static_cast<std::size_t>(n);
    return dim == 2 ? s * s : s;
  }
  double spacing() const { return box_len / n; }
  /// Frequency step between adjacent wavevectors, 2*pi/box_len.
  double dxi() const;

  /// Signed wavevector index for DFT position i on one axis.
  int wavenumber(int i) const { return i < n / 2 ? i : i - n; }
  /// Physical frequency for DFT position i on one axis.
  double frequency(int i) const { return dxi() * wavenumber(i); }
  /// Coordinate of sample j on one axis.
  double coordinate(int j) const { return -0.5 * box_len + spacing() * j; }

  /// l^1 norm of the frequency vector at flat spectral index `idx`.
  double xi_l1(std::size_t idx) const;
  /// |xi|^2 at flat spectral index `idx`.
  double xi_sq(std::size_t idx) const;
  /// Frequency components at flat spectral index `idx` (unused axes zero).
  std::array<double, 2> xi(std::size_t idx) const;
  /// Coordinates of flat sample index `idx` (unused axes zero).
  std::array<double, 2> coords(std::size_t idx) const;

  /// Largest l^1 frequency represented on the grid.
  double max_xi_l1() const;

  bool operator==(const GridSpec&) const = default;
};

/// Validates and constructs a GridSpec.  Throws InvalidArgument when
/// dim is not 1 or 2, n is not a power of two >= 8, or box_len <= 0.
GridSpec make_grid(int dim, int n, double box_len);

}  // namespace gnls
