#pragma once

#include <variant>

#include "gnls/field.hpp"

namespace gnls {

/// Diagonal Fourier multipliers used throughout: each kind maps to a scalar
/// symbol m(xi) applied pointwise to the spectrum.
struct GevreyExp {
  double sigma = 0.0;  // e^{+/- sigma ||xi||}, ||xi|| the l^1 frequency norm
  int sign = +1;
};
struct BracketPow {
  double s = 0.0;  // <xi>^s = (1+|xi|^2)^{s/2}
};
struct GradientComponent {
  int axis = 0;  // i*xi_axis
};
struct Laplacian {};  // -|xi|^2
struct FreePropagator {
  double t = 0.0;  // e^{-i t |xi|^2}
};

using MultiplierSpec = std::variant<GevreyExp, BracketPow, GradientComponent,
                                    Laplacian, FreePropagator>;

/// Symbol value m(xi) at the flat spectral index of `grid`.
complexd multiplier_symbol(const MultiplierSpec& m, const GridSpec& grid,
                           std::size_t idx);

/// Multiplies the spectrum pointwise by m(xi_k) and refreshes the samples.
/// Throws OverflowGuard when a growing Gevrey weight would exceed 1e120
/// anywhere on the grid.
Field apply_multiplier(const Field& field, const MultiplierSpec& m);

/// Guard bound: e^{sigma * max ||xi||} must stay below 1e120.
void check_gevrey_guard(const GridSpec& grid, double sigma);

inline constexpr double kOverflowGuard = 1e120;

}  // namespace gnls
