#pragma once

#include <algorithm>
#include <stdexcept>
#include <type_traits>

#include "se3tangent/types.hpp"

namespace se3tan {

/// Central finite-difference stencils used as the universal independent
/// oracle for the closed-form derivatives.
struct FdScheme {
  int order = 4;      ///< stencil accuracy, 2 or 4
  double step = 0.0;  ///< 0 selects the per-derivative default
};

inline double fd_default_step_first(const Vec6& X) { return 1e-4 * std::max(1.0, X.norm()); }
inline constexpr double kFdDefaultStepSecond = 1e-3;

/// Directional derivative d/dt map(X + t U) |_{t=0}.  The map may return any
/// Eigen vector/matrix type or a plain double.
template <typename Map>
auto fd_directional(Map&& map, const Vec6& X, const Vec6& U, FdScheme scheme = {}) {
  using Result = std::decay_t<decltype(map(X))>;
  const double h = scheme.step > 0.0 ? scheme.step : fd_default_step_first(X);
  if (scheme.order == 2) {
    const Result fp = map(X + h * U);
    const Result fm = map(X - h * U);
    return Result((fp - fm) / (2.0 * h));
  }
  if (scheme.order != 4) throw std::invalid_argument("stencil order must be 2 or 4");
  const Result f1 = map(X + 2.0 * h * U);
  const Result f2 = map(X + h * U);
  const Result f3 = map(X - h * U);
  const Result f4 = map(X - 2.0 * h * U);
  return Result((-f1 + 8.0 * f2 - 8.0 * f3 + f4) / (12.0 * h));
}

/// Mixed second directional derivative d/dt (D_{X+tS} map)(U) |_{t=0}.
template <typename Map>
auto fd_second(Map&& map, const Vec6& X, const Vec6& U, const Vec6& S, FdScheme scheme = {}) {
  using Result = std::decay_t<decltype(map(X))>;
  const double h = scheme.step > 0.0 ? scheme.step : kFdDefaultStepSecond;
  const FdScheme inner{scheme.order, 0.1 * h};
  auto g = [&](const Vec6& Y) { return fd_directional(map, Y, U, inner); };
  if (scheme.order == 2) {
    const Result gp = g(X + h * S);
    const Result gm = g(X - h * S);
    return Result((gp - gm) / (2.0 * h));
  }
  if (scheme.order != 4) throw std::invalid_argument("stencil order must be 2 or 4");
  const Result g1 = g(X + 2.0 * h * S);
  const Result g2 = g(X + h * S);
  const Result g3 = g(X - h * S);
  const Result g4 = g(X - 2.0 * h * S);
  return Result((-g1 + 8.0 * g2 - 8.0 * g3 + g4) / (12.0 * h));
}

}  // namespace se3tan
