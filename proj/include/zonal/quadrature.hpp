#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zonal {

/// Composite Gauss-Legendre rule on (0, pi): `panels` equal subintervals
/// with an `order`-point Gauss rule mapped onto each.  Nodes are strictly
/// increasing and never touch the endpoints; weights sum to pi.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int panels = 0;
  int order = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
void gauss_legendre(int order, std::vector<double>& x, std::vector<double>& w);

QuadratureRule build_rule(int panels, int order);

/// Panel count large enough that each panel spans at most one oscillation
/// of sin(mu t/2)^(2l) * phi_{n_extra}: max(8, mu*l + n_extra).
int recommend_panels(int mu, int l, int n_extra);

/// Deterministic pairwise summation.
double pairwise_sum(std::span<const double> v);

template <class F>
double integrate(F&& f, const QuadratureRule& rule) {
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double fi = f(rule.nodes[i]);
    if (!std::isfinite(fi))
      throw std::runtime_error("integrate: non-finite integrand value at t = " +
                               std::to_string(rule.nodes[i]));
    terms[i] = rule.weights[i] * fi;
  }
  return pairwise_sum(terms);
}

}  // namespace zonal
