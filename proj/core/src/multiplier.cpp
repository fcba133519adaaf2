#include "gnls/multiplier.hpp"

#include <cmath>
#include <string>

#include "gnls/errors.hpp"

namespace gnls {

void check_gevrey_guard(const GridSpec& grid, double sigma) {
  if (sigma <= 0.0) return;
  if (sigma * grid.max_xi_l1() > std::log(kOverflowGuard))
    throw OverflowGuard("gevrey weight exceeds guard: sigma=" +
                        std::to_string(sigma) + " max||xi||=" +
                        std::to_string(grid.max_xi_l1()));
}

complexd multiplier_symbol(const MultiplierSpec& m, const GridSpec& grid,
                           std::size_t idx) {
  return std::visit(
      [&](const auto& spec) -> complexd {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, GevreyExp>) {
          return std::exp(spec.sign * spec.sigma * grid.xi_l1(idx));
        } else if constexpr (std::is_same_v<T, BracketPow>) {
          return std::pow(1.0 + grid.xi_sq(idx), 0.5 * spec.s);
        } else if constexpr (std::is_same_v<T, GradientComponent>) {
          const auto xi = grid.xi(idx);
          return complexd(0.0, xi[spec.axis]);
        } else if constexpr (std::is_same_v<T, Laplacian>) {
          return -grid.xi_sq(idx);
        } else {  // FreePropagator
          const double phase = -spec.t * grid.xi_sq(idx);
          return complexd(std::cos(phase), std::sin(phase));
        }
      },
      m);
}

Field apply_multiplier(const Field& field, const MultiplierSpec& m) {
  const GridSpec& grid = field.grid();
  if (const auto* ge = std::get_if<GevreyExp>(&m)) {
    if (ge->sigma < 0.0 || (ge->sign != 1 && ge->sign != -1))
      throw InvalidArgument("gevrey_exp: need sigma >= 0 and sign +-1");
    if (ge->sign > 0) check_gevrey_guard(grid, ge->sigma);
  }
  if (const auto* gc = std::get_if<GradientComponent>(&m);
      gc && (gc->axis < 0 || gc->axis >= grid.dim))
    throw InvalidArgument("gradient axis out of range");

  cvec s = field.spectrum();
  for (std::size_t i = 0; i < s.size(); ++i)
    s[i] *= multiplier_symbol(m, grid, i);
  return Field::from_spectrum(grid, std::move(s));
}

}  // namespace gnls
