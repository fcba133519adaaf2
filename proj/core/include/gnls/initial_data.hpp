#pragma once

#include <cstdint>

#include "gnls/field.hpp"

namespace gnls {

/// e^{i x_1} (unit-amplitude plane wave at wavenumber k along the first axis).
Field plane_wave(const GridSpec& grid, int k = 1, complexd amplitude = 1.0);

/// sech(x) in 1d, sech(x_1) sech(x_2) in 2d; analytic with strip pi/2.
Field sech_profile(const GridSpec& grid, double amplitude = 1.0,
                   double width = 1.0);

/// e^{-|x|^2 / (2 width^2)}; entire, super-exponential spectral decay.
Field gaussian_profile(const GridSpec& grid, double width = 1.0);

/// Random field with spectrum ~ complex gaussian * e^{-sigma_star ||xi||} *
/// <xi>^{-2}, band-limited to |k| <= n/4 per axis, normalized to unit
/// G^{0,1} norm.  Deterministic in `seed`.
Field random_gevrey(const GridSpec& grid, double sigma_star,
                    std::uint64_t seed);

/// Field with constructed spectrum c_k = e^{-rate ||xi_k||} for |k| <= k_cut
/// per axis (zero beyond); used to exercise the radius estimator.
Field constructed_decay(const GridSpec& grid, double rate, int k_cut);

}  // namespace gnls
