#include "zonal/spaces.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace zonal {

namespace {

constexpr double kExactIntLimit = 9007199254740992.0;  // 2^53

void check_admissible(Family family, int m) {
  switch (family) {
    case Family::Sphere:
      if (m < 1) throw std::domain_error("space_params: sphere requires m >= 1");
      return;
    case Family::RealProjective:
      if (m < 2)
        throw std::domain_error("space_params: real projective space requires m >= 2");
      return;
    case Family::ComplexProjective:
      if (m < 4 || m % 2 != 0)
        throw std::domain_error(
            "space_params: complex projective space requires even m >= 4");
      return;
    case Family::QuaternionicProjective:
      if (m < 8 || m % 4 != 0)
        throw std::domain_error(
            "space_params: quaternionic projective space requires m in {8, 12, 16, ...}");
      return;
    case Family::CayleyPlane:
      if (m != 16)
        throw std::domain_error("space_params: the Cayley plane has dimension 16");
      return;
  }
  throw std::domain_error("space_params: unknown family");
}

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Sphere: return "sphere";
    case Family::RealProjective: return "real_projective";
    case Family::ComplexProjective: return "complex_projective";
    case Family::QuaternionicProjective: return "quaternionic_projective";
    case Family::CayleyPlane: return "cayley_plane";
  }
  return "unknown";
}

Family family_from_name(const std::string& name) {
  if (name == "sphere") return Family::Sphere;
  if (name == "real_projective") return Family::RealProjective;
  if (name == "complex_projective") return Family::ComplexProjective;
  if (name == "quaternionic_projective") return Family::QuaternionicProjective;
  if (name == "cayley_plane") return Family::CayleyPlane;
  throw std::domain_error("unknown space family: " + name);
}

SpaceParams space_params(Family family, int m) {
  check_admissible(family, m);
  int a = 0, b = 0;
  switch (family) {
    case Family::Sphere: a = 0; b = m - 1; break;
    case Family::RealProjective: a = m - 1; b = 0; break;
    case Family::ComplexProjective: a = m - 2; b = 1; break;
    case Family::QuaternionicProjective: a = m - 4; b = 3; break;
    case Family::CayleyPlane: a = 8; b = 7; break;
  }
  SpaceParams s;
  s.family = family;
  s.m = m;
  s.a = a;
  s.b = b;
  s.jacobi_alpha = 0.5 * (a + b - 1);
  s.jacobi_beta = 0.5 * (b - 1);
  s.tau_m = std::numeric_limits<double>::quiet_NaN();
  if (family == Family::Sphere)
    s.tau_m = 2.0 * std::pow(std::numbers::pi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
  return s;
}

double harmonic_dim(const SpaceParams& space, int n) {
  if (n < 0) throw std::domain_error("harmonic_dim: degree must be nonnegative");
  if (n == 0) return 1.0;
  // The circle: constants plus the two-dimensional spans {cos nt, sin nt}.
  if (space.family == Family::Sphere && space.m == 1) return 2.0;
  const double al = space.jacobi_alpha;
  const double be = space.jacobi_beta;
  double prod = 1.0;
  for (int k = 1; k <= n; ++k)
    prod *= (al + be + k) * (al + k) / ((be + k) * static_cast<double>(k));
  double dim = prod * (2.0 * n + al + be + 1.0) / (al + be + 1.0);
  if (dim < kExactIntLimit) dim = std::round(dim);
  return dim;
}

double poly_space_dim(const SpaceParams& space, int n) {
  if (n < 0) throw std::domain_error("poly_space_dim: degree must be nonnegative");
  if (space.family == Family::Sphere && space.m == 1) return 1.0 + 2.0 * n;
  const double al = space.jacobi_alpha;
  const double be = space.jacobi_beta;
  double total = 1.0;
  double prod = 1.0;
  for (int k = 1; k <= n; ++k) {
    prod *= (al + be + k) * (al + k) / ((be + k) * static_cast<double>(k));
    total += prod * (2.0 * k + al + be + 1.0) / (al + be + 1.0);
  }
  if (total < kExactIntLimit) total = std::round(total);
  return total;
}

int choose_q(const SpaceParams& space, int n_max) {
  if (n_max < 1) throw std::domain_error("choose_q: n_max must be positive");
  for (int q = 1;; ++q) {
    bool ok = true;
    for (int n = 1; n <= n_max && ok; ++n)
      ok = poly_space_dim(space, n) <= ipow(static_cast<double>(q) * n, space.m);
    if (ok) return q;
  }
}

double weight_alpha(const SpaceParams& space, double t) {
  if (!(t > 0.0 && t < std::numbers::pi))
    throw std::domain_error("weight_alpha: t must lie in (0, pi)");
  return std::pow(std::sin(0.5 * t), space.a) * std::pow(std::sin(t), space.b);
}

}  // namespace zonal
