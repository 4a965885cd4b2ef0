#include "zonal/quadrature.hpp"

#include <algorithm>
#include <numbers>

namespace zonal {

void gauss_legendre(int order, std::vector<double>& x, std::vector<double>& w) {
  x.assign(order, 0.0);
  w.assign(order, 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_order with the Chebyshev-based initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[order - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[order - 1 - i] = w[i];
  }
}

QuadratureRule build_rule(int panels, int order) {
  if (order < 2 || order > 64)
    throw std::domain_error("build_rule: order must lie in [2, 64]");
  if (panels < 1) throw std::domain_error("build_rule: panels must be positive");
  std::vector<double> xg, wg;
  gauss_legendre(order, xg, wg);
  QuadratureRule rule;
  rule.panels = panels;
  rule.order = order;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * order);
  rule.weights.reserve(static_cast<std::size_t>(panels) * order);
  const double h = std::numbers::pi / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (int i = 0; i < order; ++i) {
      rule.nodes.push_back(mid + 0.5 * h * xg[i]);
      rule.weights.push_back(0.5 * h * wg[i]);
    }
  }
  return rule;
}

int recommend_panels(int mu, int l, int n_extra) {
  return std::max(8, mu * l + n_extra);
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 32) {
    double s = 0.0;
    for (double t : v) s += t;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace zonal
