#include "zonal/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace zonal {

namespace {

void check_indices(double alpha, double beta, int n) {
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::domain_error("jacobi: indices must exceed -1");
  if (n < 0) throw std::domain_error("jacobi: degree must be nonnegative");
}

}  // namespace

double jacobi_eval(double alpha, double beta, int n, double x) {
  check_indices(alpha, beta, n);
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = 0.5 * ((alpha - beta) + (alpha + beta + 2.0) * x);
  for (int q = 2; q <= n; ++q) {
    const double s = 2.0 * q + alpha + beta;
    const double denom = 2.0 * q * (q + alpha + beta) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
    const double c2 = 2.0 * (q + alpha - 1.0) * (q + beta - 1.0) * s;
    const double next = (c1 * p - c2 * pm1) / denom;
    pm1 = p;
    p = next;
  }
  return p;
}

double jacobi_at_one(double alpha, double beta, int n) {
  check_indices(alpha, beta, n);
  double v = 1.0;
  for (int k = 1; k <= n; ++k) v *= (alpha + k) / k;
  return v;
}

double jacobi_derivative(double alpha, double beta, int n, double x) {
  check_indices(alpha, beta, n);
  if (n == 0) return 0.0;
  return 0.5 * (n + alpha + beta + 1.0) * jacobi_eval(alpha + 1.0, beta + 1.0, n - 1, x);
}

double zonal_phi(const SpaceParams& space, int n, double t) {
  return zonal_phi_cos(space, n, std::cos(t));
}

double zonal_phi_cos(const SpaceParams& space, int n, double u) {
  return jacobi_eval(space.jacobi_alpha, space.jacobi_beta, n, u) /
         jacobi_at_one(space.jacobi_alpha, space.jacobi_beta, n);
}

void zonal_phi_all_cos(const SpaceParams& space, double u, std::span<double> out) {
  if (out.empty()) return;
  const double alpha = space.jacobi_alpha;
  const double beta = space.jacobi_beta;
  out[0] = 1.0;
  if (out.size() == 1) return;
  double pm1 = 1.0;
  double p = 0.5 * ((alpha - beta) + (alpha + beta + 2.0) * u);
  double norm = alpha + 1.0;  // P_n(1), updated incrementally
  out[1] = p / norm;
  for (std::size_t q = 2; q < out.size(); ++q) {
    const double s = 2.0 * q + alpha + beta;
    const double denom = 2.0 * q * (q + alpha + beta) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * u + alpha * alpha - beta * beta);
    const double c2 = 2.0 * (q + alpha - 1.0) * (q + beta - 1.0) * s;
    const double next = (c1 * p - c2 * pm1) / denom;
    pm1 = p;
    p = next;
    norm *= (alpha + q) / q;
    out[q] = p / norm;
  }
}

double legendre_derivative_maxcheck(const SpaceParams& space, int n_max) {
  if (!space.is_sphere())
    throw std::domain_error("legendre_derivative_maxcheck: sphere families only");
  if (n_max < 1)
    throw std::domain_error("legendre_derivative_maxcheck: n_max must be positive");
  const double alpha = space.jacobi_alpha;
  const double beta = space.jacobi_beta;
  const int grid = 4001;
  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double norm = jacobi_at_one(alpha, beta, n);
    double dmax = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double s = -1.0 + 2.0 * j / (grid - 1);
      dmax = std::max(dmax, std::abs(jacobi_derivative(alpha, beta, n, s)) / norm);
    }
    worst = std::max(worst, dmax / (static_cast<double>(n) * n));
  }
  return worst;
}

ZonalFunctionTable ZonalFunctionTable::build(const SpaceParams& space, int n_max,
                                             std::span<const double> nodes) {
  if (n_max < 0) throw std::domain_error("ZonalFunctionTable: n_max must be nonnegative");
  ZonalFunctionTable table;
  table.space = space;
  table.n_max = n_max;
  table.nodes.assign(nodes.begin(), nodes.end());
  table.values.resize(nodes.size() * (n_max + 1));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::span<double> row(table.values.data() + k * (n_max + 1),
                          static_cast<std::size_t>(n_max) + 1);
    zonal_phi_all_cos(space, std::cos(nodes[k]), row);
  }
  return table;
}

}  // namespace zonal
