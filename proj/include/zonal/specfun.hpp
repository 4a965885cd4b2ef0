#pragma once

#include <span>
#include <vector>

#include "zonal/spaces.hpp"

namespace zonal {

/// Jacobi polynomial P_n^(alpha,beta)(x) by the three-term recurrence in x.
/// Exact for n = 0, 1.  Requires alpha, beta > -1.
double jacobi_eval(double alpha, double beta, int n, double x);

/// P_n^(alpha,beta)(1) = C(n+alpha, n).
double jacobi_at_one(double alpha, double beta, int n);

/// d/dx P_n^(alpha,beta)(x) = (n+alpha+beta+1)/2 * P_{n-1}^(alpha+1,beta+1)(x).
double jacobi_derivative(double alpha, double beta, int n, double x);

/// Normalized zonal function phi_n(t) = P_n(cos t) / P_n(1) with the
/// space's Jacobi indices; the eigenvalue symbol of the translation
/// operator on the degree-n harmonic subspace.  phi_n(0) = 1, |phi_n| <= 1.
double zonal_phi(const SpaceParams& space, int n, double t);

/// Same, evaluated directly at u = cos t.
double zonal_phi_cos(const SpaceParams& space, int n, double u);

/// One recurrence sweep filling out[n] = phi_n(arccos u) for n = 0..out.size()-1.
void zonal_phi_all_cos(const SpaceParams& space, double u, std::span<double> out);

/// max over 1 <= n <= n_max of max_{s in [-1,1]} |d/ds (P_n(s)/P_n(1))| / n^2
/// for a sphere; a finite, eventually non-increasing value certifies the
/// quadratic derivative growth of the normalized Legendre polynomials.
double legendre_derivative_maxcheck(const SpaceParams& space, int n_max);

/// Cached zonal-function values on a fixed node set,
/// values laid out as [node][degree].  Immutable after build().
struct ZonalFunctionTable {
  SpaceParams space;
  int n_max = 0;
  std::vector<double> nodes;
  std::vector<double> values;

  static ZonalFunctionTable build(const SpaceParams& space, int n_max,
                                  std::span<const double> nodes);

  double at(std::size_t node_index, int n) const {
    return values[node_index * (n_max + 1) + n];
  }
};

}  // namespace zonal
