#pragma once

#include <vector>

#include "gnls/field.hpp"
#include "gnls/multiplier.hpp"

namespace gnls {

/// Time-slab sampling of a field over [0, t_len) together with its space-time
/// spectrum over (tau_j, xi_k), tau_j = 2*pi*j / t_len with j in [-m/2, m/2).
/// Values are row-major with the time index slowest.  Immutable once built.
class SpaceTimeField {
 public:
  static SpaceTimeField from_values(const GridSpec& grid, int m, double t_len,
                                    cvec values);
  static SpaceTimeField from_spectrum(const GridSpec& grid, int m,
                                      double t_len, cvec spectrum);
  /// Free Schroedinger flow of spatial data, sampled on the slab.
  static SpaceTimeField free_evolution(const Field& u0, int m, double t_len);
  /// Stack of spatial slices, one per time sample.
  static SpaceTimeField from_slices(const std::vector<Field>& slices,
                                    double t_len);
  static SpaceTimeField zero(const GridSpec& grid, int m, double t_len);

  const GridSpec& grid() const { return grid_; }
  int m() const { return m_; }
  double t_len() const { return t_len_; }
  double dt() const { return t_len_ / m_; }
  double time(int i) const { return dt() * i; }
  /// Temporal frequency at time-DFT position j.
  double tau(int j) const;

  const cvec& values() const { return values_; }
  const cvec& spectrum() const { return spectrum_; }

  /// Spatial slice at time index i.
  Field slice(int i) const;
  SpaceTimeField conj() const;
  SpaceTimeField operator*(complexd scalar) const;
  SpaceTimeField operator+(const SpaceTimeField& other) const;
  SpaceTimeField operator-(const SpaceTimeField& other) const;

 private:
  SpaceTimeField(GridSpec grid, int m, double t_len, cvec values,
                 cvec spectrum)
      : grid_(grid),
        m_(m),
        t_len_(t_len),
        values_(std::move(values)),
        spectrum_(std::move(spectrum)) {}

  GridSpec grid_;
  int m_;
  double t_len_;
  cvec values_;
  cvec spectrum_;
};

/// Weight parameters of || <xi>^s <tau+|xi|^2>^b e^{sigma||D||} f ||.
struct BourgainParams {
  double sigma = 0.0;
  double s = 0.0;
  double b = 0.0;  // any |b| < 1; negative b is the dual-side weight
};

/// X^{sigma,s,b} norm: weighted l^2 of the space-time coefficients,
///   (t_len box^dim)^{1/2} (sum e^{2 sigma||xi||} <xi>^{2s}
///                               <tau+|xi|^2>^{2b} |c|^2)^{1/2}.
/// sigma = s = b = 0 reduces to the space-time L^2 norm.
double xsb_norm(const SpaceTimeField& f, const BourgainParams& bp);

/// Sharp time cutoff to [a, c) (grid membership a <= t_i < c).
/// Requires 0 <= a < c <= t_len; throws InvalidArgument otherwise.
SpaceTimeField window(const SpaceTimeField& f, double a, double c);

/// Schroedinger admissibility: 2 <= q, r <= inf, 2/q + d/r = d/2 (checked to
/// 1e-12) and (q, r, d) != (2, inf, 2).
bool admissible_pair(double q, double r, int d);

/// L^q in time of the per-slice Riemann L^r in space.
double mixed_lebesgue_norm(const SpaceTimeField& f, double q, double r);

/// Spatial Fourier multiplier applied slice-wise (acts along xi only).
SpaceTimeField apply_spatial_multiplier(const SpaceTimeField& f,
                                        const MultiplierSpec& m);

/// Alias-free pointwise product, zero-padded in both time and space by
/// ceil((q+1)/2) for q factors; conjugation acts in physical space.
SpaceTimeField st_dealiased_product(const std::vector<SpaceTimeField>& fields,
                                    const std::vector<bool>& conjugate);

}  // namespace gnls
