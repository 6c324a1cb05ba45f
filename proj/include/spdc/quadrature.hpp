#pragma once

#include <functional>
#include <vector>

#include "spdc/types.hpp"

namespace spdc {

/// Gauss-Legendre nodes/weights on [-1, 1]. Cached per order.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int order);

/// Integrates f over [a, b] with a single Gauss-Legendre panel.
template <typename F>
auto integrate_gl(F&& f, double a, double b, int order)
    -> decltype(f(0.0)) {
  const auto& rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  decltype(f(0.0)) sum{};
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

/// Composite quadrature for long oscillatory ranges: the interval is split
/// into ceil(total_points / 16) panels of 16-point Gauss-Legendre.
template <typename F>
auto integrate_composite(F&& f, double a, double b, long total_points)
    -> decltype(f(0.0)) {
  const long panels = std::max(1L, (total_points + 15) / 16);
  const double h = (b - a) / static_cast<double>(panels);
  // pairwise summation keeps the reduction deterministic and well-conditioned
  std::vector<decltype(f(0.0))> partial(static_cast<size_t>(panels));
  for (long p = 0; p < panels; ++p) {
    partial[static_cast<size_t>(p)] =
        integrate_gl(f, a + p * h, a + (p + 1) * h, 16);
  }
  for (size_t stride = 1; stride < partial.size(); stride *= 2) {
    for (size_t i = 0; i + stride < partial.size(); i += 2 * stride) {
      partial[i] += partial[i + stride];
    }
  }
  return partial.empty() ? decltype(f(0.0)){} : partial[0];
}

}  // namespace spdc
