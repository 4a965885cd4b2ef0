#pragma once

#include <string>

namespace zonal {

// The five families of compact two-point homogeneous spaces
// (compact rank-1 symmetric spaces).
enum class Family {
  Sphere,
  RealProjective,
  ComplexProjective,
  QuaternionicProjective,
  CayleyPlane,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Geometric parameters of a compact two-point homogeneous space of
/// dimension m.  The weight exponents (a, b) give the geodesic-polar
/// volume density sin(t/2)^a (sin t)^b, with geodesics normalized to
/// length 2*pi; (jacobi_alpha, jacobi_beta) are the indices of the
/// Jacobi polynomials whose normalized values are the zonal functions.
struct SpaceParams {
  Family family = Family::Sphere;
  int m = 0;
  int a = 0;
  int b = 0;
  double jacobi_alpha = 0.0;  // (a + b - 1) / 2
  double jacobi_beta = 0.0;   // (b - 1) / 2
  double tau_m = 0.0;         // total volume; NaN for non-sphere families

  bool is_sphere() const { return family == Family::Sphere; }
};

/// Builds the parameter record for an admissible (family, m) pair.
/// Throws std::domain_error naming the violated constraint otherwise.
SpaceParams space_params(Family family, int m);

/// N(m, n): dimension of the n-th Laplacian eigenspace.  Integer-valued;
/// returned as double and exact whenever the value is below 2^53.
double harmonic_dim(const SpaceParams& space, int n);

/// d_n^m = sum_{k=0}^{n} N(m, k): dimension of the spherical polynomials
/// of degree at most n.
double poly_space_dim(const SpaceParams& space, int n);

/// Minimal positive integer q with d_n^m <= (q n)^m for all 1 <= n <= n_max.
int choose_q(const SpaceParams& space, int n_max);

/// Weight alpha(t) = sin(t/2)^a (sin t)^b on (0, pi).
double weight_alpha(const SpaceParams& space, double t);

}  // namespace zonal
