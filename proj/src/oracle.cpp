#include "zonal/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zonal/quadrature.hpp"
#include "zonal/specfun.hpp"

namespace zonal {

double dot(const Vec3& x, const Vec3& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
          x[0] * y[1] - x[1] * y[0]};
}

Vec3 normalized(const Vec3& x) {
  const double r = std::sqrt(dot(x, x));
  if (!(r > 0.0)) throw std::domain_error("normalized: zero vector");
  return {x[0] / r, x[1] / r, x[2] / r};
}

SphereGrid sphere_grid(int n_theta, int n_phi) {
  if (n_theta < 4) throw std::domain_error("sphere_grid: n_theta must be >= 4");
  if (n_phi < 8) throw std::domain_error("sphere_grid: n_phi must be >= 8");
  std::vector<double> xg, wg;
  gauss_legendre(n_theta, xg, wg);
  SphereGrid grid;
  grid.n_theta = n_theta;
  grid.n_phi = n_phi;
  grid.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  grid.weights.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  const double wphi = 2.0 * std::numbers::pi / n_phi;
  for (int i = 0; i < n_theta; ++i) {
    const double ct = xg[i];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = wphi * j;
      grid.nodes.push_back({st * std::cos(phi), st * std::sin(phi), ct});
      grid.weights.push_back(wg[i] * wphi);
    }
  }
  return grid;
}

SymMatrix gram_matrix(const std::function<double(double)>& kernel,
                      const SphereGrid& grid) {
  const int n = static_cast<int>(grid.nodes.size());
  SymMatrix M(n);
  std::vector<double> sw(n);
  for (int i = 0; i < n; ++i) sw[i] = std::sqrt(grid.weights[i]);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double u = dot(grid.nodes[i], grid.nodes[j]);
      u = std::clamp(u, -1.0, 1.0);
      const double v = kernel(u);
      if (!std::isfinite(v))
        throw std::runtime_error("gram_matrix: non-finite kernel value");
      M.at(i, j) = M.at(j, i) = sw[i] * v * sw[j];
    }
  }
  return M;
}

std::vector<double> sym_eigs(SymMatrix matrix) {
  const int n = matrix.n;
  if (n == 0) return {};
  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      asym = std::max(asym, std::abs(matrix.at(i, j) - matrix.at(j, i)));
  if (asym > 1e-12)
    throw std::invalid_argument("sym_eigs: matrix asymmetry exceeds 1e-12");
  std::vector<double> w(n);
  // Row-major symmetric data read column-major is the same matrix; this
  // avoids LAPACKE's internal transpose copy.
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, matrix.data.data(), n, w.data());
  if (info != 0)
    throw std::runtime_error("sym_eigs: LAPACK dsyevd failed with info " +
                             std::to_string(info));
  std::reverse(w.begin(), w.end());
  return w;
}

FunkHeckeReport funk_hecke_check(const ZonalKernelSpec& spec, const SphereGrid& grid) {
  if (!spec.space.is_sphere() || spec.space.m != 2)
    throw std::domain_error("funk_hecke_check: needs a kernel on S^2");
  const int n_trunc = spec.n_trunc();
  if (2 * n_trunc > 2 * grid.n_theta - 1 || 2 * n_trunc >= grid.n_phi)
    throw std::domain_error(
        "funk_hecke_check: grid not exact beyond degree 2*n_trunc");

  // pointwise kernel with the degree weights precomputed once
  std::vector<double> weights(spec.coeffs.size());
  for (std::size_t n = 0; n < spec.coeffs.size(); ++n)
    weights[n] = spec.coeffs[n] * harmonic_dim(spec.space, static_cast<int>(n)) /
                 spec.space.tau_m;
  std::vector<double> phi(weights.size());
  const auto kernel = [&](double u) {
    zonal_phi_all_cos(spec.space, u, phi);
    double s = 0.0;
    for (std::size_t n = 0; n < weights.size(); ++n) s += weights[n] * phi[n];
    return s;
  };

  FunkHeckeReport report;
  report.eigenvalues = sym_eigs(gram_matrix(kernel, grid));
  report.min_eigenvalue = report.eigenvalues.back();

  struct Expected {
    double value;
    int degree;
  };
  std::vector<Expected> expected;
  double lambda_max = 0.0;
  for (int n = 0; n <= n_trunc; ++n) {
    expected.push_back({spec.coeffs[n], n});
    lambda_max = std::max(lambda_max, spec.coeffs[n]);
  }
  std::sort(expected.begin(), expected.end(), [](const Expected& x, const Expected& y) {
    if (x.value != y.value) return x.value > y.value;
    return x.degree < y.degree;
  });

  report.rows.resize(n_trunc + 1);
  for (int n = 0; n <= n_trunc; ++n) {
    report.rows[n].degree = n;
    report.rows[n].expected = spec.coeffs[n];
    report.rows[n].multiplicity = static_cast<std::int64_t>(harmonic_dim(spec.space, n));
  }
  std::size_t pos = 0;
  for (const auto& ex : expected) {
    const auto mult = static_cast<std::size_t>(harmonic_dim(spec.space, ex.degree));
    double err = 0.0;
    for (std::size_t k = 0; k < mult; ++k, ++pos) {
      const double e = report.eigenvalues[pos];
      err = std::max(err, ex.value > 0.0 ? std::abs(e - ex.value) / ex.value
                                         : std::abs(e) / lambda_max);
    }
    report.rows[ex.degree].max_rel_error = err;
  }
  report.pass = true;
  for (int n = 0; n <= std::min(10, n_trunc); ++n)
    if (!(report.rows[n].max_rel_error < 1e-6)) report.pass = false;
  return report;
}

std::function<double(const Vec3&)> translate_direct(std::function<double(const Vec3&)> f,
                                                    double t, int circle_order) {
  if (!(t > 0.0 && t < std::numbers::pi))
    throw std::domain_error("translate_direct: t must lie in (0, pi)");
  if (circle_order < 4)
    throw std::domain_error("translate_direct: circle_order must be >= 4");
  return [f = std::move(f), t, circle_order](const Vec3& x) {
    const Vec3 xn = normalized(x);
    // orthonormal frame perpendicular to x
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(xn[i]) < std::abs(xn[k])) k = i;
    Vec3 v{0.0, 0.0, 0.0};
    v[k] = 1.0;
    const double proj = dot(v, xn);
    const Vec3 e1 = normalized({v[0] - proj * xn[0], v[1] - proj * xn[1],
                                v[2] - proj * xn[2]});
    const Vec3 e2 = cross(xn, e1);
    const double ct = std::cos(t), st = std::sin(t);
    double sum = 0.0;
    for (int j = 0; j < circle_order; ++j) {
      const double psi = 2.0 * std::numbers::pi * j / circle_order;
      const double c = std::cos(psi), s = std::sin(psi);
      const Vec3 xp{ct * xn[0] + st * (c * e1[0] + s * e2[0]),
                    ct * xn[1] + st * (c * e1[1] + s * e2[1]),
                    ct * xn[2] + st * (c * e1[2] + s * e2[2])};
      sum += f(xp);
    }
    return sum / circle_order;
  };
}

}  // namespace zonal
