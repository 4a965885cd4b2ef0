#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "zonal/kernels.hpp"

namespace zonal {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& x, const Vec3& y);
Vec3 cross(const Vec3& x, const Vec3& y);
Vec3 normalized(const Vec3& x);

/// Quadrature grid on S^2: Gauss-Legendre in the colatitude (as cos theta)
/// crossed with a uniform trapezoid rule in longitude.  Integrates
/// spherical polynomials of degree < min(2 n_theta - 1, n_phi) exactly;
/// weights sum to 4 pi.
struct SphereGrid {
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  int n_theta = 0;
  int n_phi = 0;
};

SphereGrid sphere_grid(int n_theta, int n_phi);

/// Dense symmetric matrix, row-major.
struct SymMatrix {
  int n = 0;
  std::vector<double> data;

  explicit SymMatrix(int size = 0) : n(size), data(static_cast<std::size_t>(size) * size) {}
  double& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

/// Symmetrized Nystroem discretization sqrt(w_i) K(x_i . x_j) sqrt(w_j)
/// of the integral operator generated by the zonal kernel K.
SymMatrix gram_matrix(const std::function<double(double)>& kernel,
                      const SphereGrid& grid);

/// All eigenvalues, nonincreasing.  The input must be symmetric to 1e-12.
std::vector<double> sym_eigs(SymMatrix matrix);

/// Compares the Nystroem spectrum against the spectral coefficients of a
/// zonal kernel on S^2: lambda_hat_n repeated 2n+1 times, plus zeros.
struct FunkHeckeReport {
  struct Row {
    int degree = 0;
    double expected = 0.0;
    std::int64_t multiplicity = 0;
    double max_rel_error = 0.0;
  };
  std::vector<Row> rows;
  std::vector<double> eigenvalues;  // descending
  double min_eigenvalue = 0.0;
  bool pass = false;  // all degrees <= min(10, n_trunc) within 1e-6
};

FunkHeckeReport funk_hecke_check(const ZonalKernelSpec& spec, const SphereGrid& grid);

/// S_t f by direct averaging of f over `circle_order` equally spaced points
/// of the geodesic circle of radius t about each evaluation point.
std::function<double(const Vec3&)> translate_direct(
    std::function<double(const Vec3&)> f, double t, int circle_order = 256);

}  // namespace zonal
