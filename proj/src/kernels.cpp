#include "zonal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "zonal/specfun.hpp"

namespace zonal {

namespace {

void require_sphere(const SpaceParams& space, const char* who) {
  if (!space.is_sphere())
    throw std::domain_error(std::string(who) +
                            ": pointwise evaluation needs tau_m (sphere families only)");
}

// sum over degrees of weights[n] * phi_n(u), one recurrence sweep
double weighted_zonal_sum(const SpaceParams& space, std::span<const double> weights,
                          double u, std::vector<double>& phi_buffer) {
  phi_buffer.resize(weights.size());
  zonal_phi_all_cos(space, u, phi_buffer);
  double s = 0.0;
  for (std::size_t n = 0; n < weights.size(); ++n) s += weights[n] * phi_buffer[n];
  return s;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void validate_spec(const ZonalKernelSpec& spec) {
  if (spec.coeffs.empty())
    throw std::domain_error("kernel spec: coefficient list must not be empty");
  for (double c : spec.coeffs)
    if (!(c >= 0.0) || !std::isfinite(c))
      throw std::domain_error("kernel spec: coefficients must be finite and >= 0");
  if (spec.tail_exponent && !(*spec.tail_exponent > spec.space.m))
    throw std::domain_error(
        "kernel spec: tail exponent must exceed m for a trace-class tail");
}

ZonalKernelSpec example_kernel(int m, double beta, int n_trunc) {
  if (m < 3) throw std::domain_error("example_kernel: requires m >= 3");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::domain_error("example_kernel: beta must lie in (0, 1]");
  if (!(m - beta > 2.0))
    throw std::domain_error("example_kernel: requires m - beta > 2");
  if (n_trunc < 1) throw std::domain_error("example_kernel: n_trunc must be positive");
  ZonalKernelSpec spec;
  spec.space = space_params(Family::Sphere, m);
  const double s = 2.0 * m + beta - 2.0;
  spec.coeffs.resize(n_trunc + 1);
  spec.coeffs[0] = spec.space.tau_m;
  for (int n = 1; n <= n_trunc; ++n)
    spec.coeffs[n] = std::pow(static_cast<double>(n), -s);
  spec.tail_exponent = s;
  validate_spec(spec);
  return spec;
}

KernelValue kernel_eval(const ZonalKernelSpec& spec, double cos_theta) {
  require_sphere(spec.space, "kernel_eval");
  std::vector<double> weights(spec.coeffs.size());
  for (std::size_t n = 0; n < spec.coeffs.size(); ++n)
    weights[n] =
        spec.coeffs[n] * harmonic_dim(spec.space, static_cast<int>(n)) / spec.space.tau_m;
  std::vector<double> phi;
  KernelValue out;
  out.value = weighted_zonal_sum(spec.space, weights, cos_theta, phi);
  out.tail_bound = tail_bound_uniform(spec);
  return out;
}

double tail_bound_uniform(const ZonalKernelSpec& spec) {
  if (!spec.tail_exponent) return 0.0;
  require_sphere(spec.space, "tail_bound_uniform");
  const double s = *spec.tail_exponent;
  const int m = spec.space.m;
  const double N = spec.n_trunc();
  if (m == 1)  // N(1,n) = 2
    return 2.0 / spec.space.tau_m * std::pow(N, 1.0 - s) / (s - 1.0);
  // N(m,x) <= c x^(m-1) for x >= N, by bounding every linear factor
  double c = 2.0 + (m - 1.0) / N;
  for (int j = 1; j <= m - 2; ++j) c *= (1.0 + j / N) / j;
  if (m >= 3) c /= (m - 1);  // completes 1/(m-1)!
  return c / spec.space.tau_m * std::pow(N, m - s) / (s - m);
}

double tail_bound_operator(const ZonalKernelSpec& spec) {
  if (!spec.tail_exponent) return 0.0;
  return std::pow(spec.n_trunc() + 1.0, -*spec.tail_exponent);
}

std::vector<double> translate_kernel_section(const ZonalKernelSpec& spec, double t) {
  if (!(t > 0.0 && t < std::numbers::pi))
    throw std::domain_error("translate_kernel_section: t must lie in (0, pi)");
  std::vector<double> phi(spec.coeffs.size());
  zonal_phi_all_cos(spec.space, std::cos(t), phi);
  std::vector<double> out(spec.coeffs.size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = spec.coeffs[n] * phi[n];
  return out;
}

double zonal_expansion_eval(const SpaceParams& space, std::span<const double> coeffs,
                            double cos_theta) {
  require_sphere(space, "zonal_expansion_eval");
  std::vector<double> weights(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    weights[n] = coeffs[n] * harmonic_dim(space, static_cast<int>(n)) / space.tau_m;
  std::vector<double> phi;
  return weighted_zonal_sum(space, weights, cos_theta, phi);
}

double hoelder_modulus(const ZonalKernelSpec& spec, double t, int u_grid_size) {
  require_sphere(spec.space, "hoelder_modulus");
  if (!(t > 0.0 && t < std::numbers::pi))
    throw std::domain_error("hoelder_modulus: t must lie in (0, pi)");
  if (u_grid_size < 2)
    throw std::domain_error("hoelder_modulus: u_grid_size must be >= 2");
  std::vector<double> phi_t(spec.coeffs.size());
  zonal_phi_all_cos(spec.space, std::cos(t), phi_t);
  std::vector<double> weights(spec.coeffs.size());
  for (std::size_t n = 0; n < weights.size(); ++n)
    weights[n] = spec.coeffs[n] * harmonic_dim(spec.space, static_cast<int>(n)) /
                 spec.space.tau_m * (phi_t[n] - 1.0);
  double omega = 0.0;
  std::vector<double> phi;
  for (int j = 0; j < u_grid_size; ++j) {
    const double u = std::cos(std::numbers::pi * j / (u_grid_size - 1));
    omega = std::max(omega, std::abs(weighted_zonal_sum(spec.space, weights, u, phi)));
  }
  return omega;
}

HoelderEstimate estimate_holder(const ZonalKernelSpec& spec,
                                std::span<const double> t_grid, int u_grid_size) {
  if (t_grid.size() < 2)
    throw std::domain_error("estimate_holder: need at least two grid points");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0 && t_grid[i] < std::numbers::pi))
      throw std::domain_error("estimate_holder: grid points must lie in (0, pi)");
    if (i > 0 && !(t_grid[i] < t_grid[i - 1]))
      throw std::domain_error("estimate_holder: grid must be strictly decreasing");
  }
  if (!(t_grid.front() / t_grid.back() >= 10.0))
    throw std::domain_error("estimate_holder: grid must span at least one decade");

  HoelderEstimate est;
  est.t_grid.assign(t_grid.begin(), t_grid.end());
  est.omega.resize(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    est.omega[i] = hoelder_modulus(spec, t_grid[i], u_grid_size);

  bool any_positive = false;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(est.omega[i] > 0.0)) continue;
    any_positive = true;
    const double x = std::log(t_grid[i]);
    const double y = std::log(est.omega[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++count;
  }
  if (!any_positive || count < 2) {
    est.beta_hat = 2.0;  // constant-kernel convention
    est.B_hat = 0.0;
    return est;
  }
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  est.beta_hat = slope > 2.0 ? 2.0 : (slope > 0.0 ? slope : 1e-6);
  est.B_hat = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    est.B_hat = std::max(est.B_hat, est.omega[i] / std::pow(t_grid[i], est.beta_hat));
  return est;
}

void write_kernel_spec(std::ostream& os, const ZonalKernelSpec& spec, double beta) {
  os << "family = " << family_name(spec.space.family) << "\n";
  os << "m = " << spec.space.m << "\n";
  if (std::isfinite(beta)) os << "beta = " << format_g17(beta) << "\n";
  os << "n_trunc = " << spec.n_trunc() << "\n";
  if (spec.tail_exponent)
    os << "tail_exponent = " << format_g17(*spec.tail_exponent) << "\n";
  os << "coeffs =";
  for (double c : spec.coeffs) os << ' ' << format_g17(c);
  os << "\n";
}

KernelSpecFile read_kernel_spec(std::istream& is) {
  KernelSpecFile out;
  out.beta = std::numeric_limits<double>::quiet_NaN();
  std::string family_str;
  int m = 0, n_trunc = -1;
  bool have_family = false, have_m = false;
  std::vector<double> coeffs;
  std::optional<double> tail;

  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("kernel spec file: malformed line: " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "family") {
      family_str = value;
      have_family = true;
    } else if (key == "m") {
      m = std::stoi(value);
      have_m = true;
    } else if (key == "beta") {
      out.beta = std::stod(value);
    } else if (key == "n_trunc") {
      n_trunc = std::stoi(value);
    } else if (key == "tail_exponent") {
      tail = std::stod(value);
    } else if (key == "coeffs") {
      std::istringstream vs(value);
      double c;
      while (vs >> c) coeffs.push_back(c);
    } else {
      throw std::runtime_error("kernel spec file: unknown key: " + key);
    }
  }
  if (!have_family || !have_m || n_trunc < 0 || coeffs.empty())
    throw std::runtime_error(
        "kernel spec file: family, m, n_trunc and coeffs are required");
  if (static_cast<int>(coeffs.size()) != n_trunc + 1)
    throw std::runtime_error("kernel spec file: coefficient count does not match n_trunc");
  out.spec.space = space_params(family_from_name(family_str), m);
  out.spec.coeffs = std::move(coeffs);
  out.spec.tail_exponent = tail;
  validate_spec(out.spec);
  return out;
}

}  // namespace zonal
