#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "zonal/spaces.hpp"

namespace zonal {

/// A zonal positive-definite kernel given spectrally: lambda_hat[n] is the
/// eigenvalue of the induced integral operator on the degree-n harmonic
/// subspace (multiplicity N(m, n)).  tail_exponent, when set, declares the
/// closed-form law lambda_hat_n = n^(-s) beyond n_trunc for tail bounds.
struct ZonalKernelSpec {
  SpaceParams space;
  std::vector<double> coeffs;
  std::optional<double> tail_exponent;

  int n_trunc() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Checks nonnegativity of the coefficients and summability of the tail law.
void validate_spec(const ZonalKernelSpec& spec);

/// The concrete Hoelder-class kernel on S^m: lambda_hat_0 = tau_m and
/// lambda_hat_n = n^-(2m+beta-2).  Requires beta in (0, 1] and m - beta > 2.
ZonalKernelSpec example_kernel(int m, double beta, int n_trunc);

struct KernelValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Pointwise K(cos_theta) = sum lambda_hat_n (N(m,n)/tau_m) phi_n, as a
/// partial sum over the stored coefficients plus a uniform bound on the
/// omitted tail.  Sphere families only (needs tau_m).
KernelValue kernel_eval(const ZonalKernelSpec& spec, double cos_theta);

/// Upper bound on sup_x |omitted series tail| = sum_{n > n_trunc} lambda_hat_n N/tau.
double tail_bound_uniform(const ZonalKernelSpec& spec);

/// Largest omitted operator eigenvalue, sup_{n > n_trunc} lambda_hat_n.
double tail_bound_operator(const ZonalKernelSpec& spec);

/// Coefficients of x -> S_t(K(y, .))(x): lambda_hat_n phi_n(t).
std::vector<double> translate_kernel_section(const ZonalKernelSpec& spec, double t);

/// sum coeffs[n] (N(m,n)/tau_m) phi_n at u = cos(geodesic distance).
double zonal_expansion_eval(const SpaceParams& space, std::span<const double> coeffs,
                            double cos_theta);

/// omega(t) = sup_x |S_t(K(y,.))(x) - K(y,x)|, reduced by zonality to a
/// max over u = cos(distance) on a Chebyshev grid of the given size.
double hoelder_modulus(const ZonalKernelSpec& spec, double t, int u_grid_size);

/// Least-squares fit of log omega against log t: omega(t) <= B_hat t^beta_hat
/// on the grid, with beta_hat clamped to (0, 2].
struct HoelderEstimate {
  double beta_hat = 0.0;
  double B_hat = 0.0;
  std::vector<double> t_grid;
  std::vector<double> omega;
};

HoelderEstimate estimate_holder(const ZonalKernelSpec& spec,
                                std::span<const double> t_grid,
                                int u_grid_size = 2048);

// --- plain-text key-value serialization ------------------------------------

struct KernelSpecFile {
  ZonalKernelSpec spec;
  double beta = 0.0;  // NaN when the file carries no beta
};

void write_kernel_spec(std::ostream& os, const ZonalKernelSpec& spec, double beta);
KernelSpecFile read_kernel_spec(std::istream& is);

}  // namespace zonal
