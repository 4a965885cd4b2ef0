#include "zonal/jackson.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zonal/specfun.hpp"

namespace zonal {

double sine_ratio(int mu, double t) {
  if (std::abs(t) < 1e-12) return static_cast<double>(mu);
  return std::sin(0.5 * mu * t) / std::sin(0.5 * t);
}

JacksonParams make_jackson(const SpaceParams& space, int l, int mu,
                           const QuadratureRule& rule) {
  if (l < 1) throw std::domain_error("make_jackson: l must be positive");
  if (mu < 1) throw std::domain_error("make_jackson: mu must be >= 1");
  JacksonParams params;
  params.space = space;
  params.l = l;
  params.mu = mu;
  params.nu = l * (mu - 1);
  params.k_nu = integrate(
      [&](double t) {
        return std::pow(sine_ratio(mu, t), 2 * l) * weight_alpha(space, t);
      },
      rule);
  if (!(params.k_nu > 0.0))
    throw std::runtime_error("make_jackson: nonpositive normalizer");
  return params;
}

double jackson_eval(const JacksonParams& params, double t) {
  if (!(t > 0.0 && t <= std::numbers::pi))
    throw std::domain_error("jackson_eval: t must lie in (0, pi]");
  return std::pow(sine_ratio(params.mu, t), 2 * params.l) / params.k_nu;
}

double moment(const JacksonParams& params, double gamma, const QuadratureRule& rule) {
  if (!(gamma > 0.0)) throw std::domain_error("moment: gamma must be positive");
  if (!(2 * params.l > gamma + params.space.m))
    throw std::domain_error("moment: requires 2l > gamma + m");
  return integrate(
      [&](double t) {
        return jackson_eval(params, t) * std::pow(t, gamma) *
               weight_alpha(params.space, t);
      },
      rule);
}

double moment_bound_constant(int m, double gamma, int l) {
  if (!(gamma > 0.0))
    throw std::domain_error("moment_bound_constant: gamma must be positive");
  if (!(2 * l > gamma + m))
    throw std::domain_error("moment_bound_constant: requires 2l > gamma + m");
  const double pi = std::numbers::pi;
  return m * std::pow(pi, 4.0 * l - 1.0) / std::pow(2.0, 4.0 * l - gamma) *
         (1.0 / (gamma + m) + 1.0 / (2.0 * l - (gamma + m)));
}

double normalizer_lower_bound(const SpaceParams& space, int l, int mu) {
  const double pi = std::numbers::pi;
  return std::pow(2.0, 2.0 * l + space.b) / (space.m * std::pow(pi, 2.0 * l - 1.0)) *
         std::pow(static_cast<double>(mu), 2.0 * l - space.m);
}

MultiplierSequence multipliers(const JacksonParams& params, int n_max,
                               const QuadratureRule& rule) {
  if (n_max < 0) throw std::domain_error("multipliers: n_max must be nonnegative");
  const auto table = ZonalFunctionTable::build(params.space, n_max, rule.nodes);
  // D_nu(t_k) alpha(t_k) w_k, shared by every degree
  std::vector<double> base(rule.nodes.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k)
    base[k] = rule.weights[k] * jackson_eval(params, rule.nodes[k]) *
              weight_alpha(params.space, rule.nodes[k]);
  MultiplierSequence seq;
  seq.params = params;
  seq.values.resize(n_max + 1);
  std::vector<double> terms(rule.nodes.size());
  for (int n = 0; n <= n_max; ++n) {
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
      terms[k] = base[k] * table.at(k, n);
    seq.values[n] = pairwise_sum(terms);
  }
  return seq;
}

}  // namespace zonal
