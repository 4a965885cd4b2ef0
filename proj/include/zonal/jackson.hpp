#pragma once

#include <vector>

#include "zonal/quadrature.hpp"
#include "zonal/spaces.hpp"

namespace zonal {

/// A generalized Jackson kernel D_nu(t) = (1/k_nu) (sin(mu t/2)/sin(t/2))^(2l)
/// of degree nu = l(mu-1), normalized so that its integral against the
/// weight alpha equals one.
struct JacksonParams {
  SpaceParams space;
  int l = 0;
  int mu = 0;
  int nu = 0;
  double k_nu = 0.0;
};

/// sin(mu t/2)/sin(t/2); the limit value mu is used when |t| < 1e-12.
double sine_ratio(int mu, double t);

/// Computes the normalizer k_nu with the given rule and returns the record.
/// The rule must resolve the oscillation, i.e. at least
/// recommend_panels(mu, l, 0) panels.
JacksonParams make_jackson(const SpaceParams& space, int l, int mu,
                           const QuadratureRule& rule);

/// D_nu(t) for t in (0, pi].
double jackson_eval(const JacksonParams& params, double t);

/// The moment J = integral of D_nu(t) t^gamma alpha(t) dt.
/// Requires 2l > gamma + m.
double moment(const JacksonParams& params, double gamma, const QuadratureRule& rule);

/// Explicit constant c with J * mu^gamma <= c for all mu >= 2:
/// (m pi^(4l-1) / 2^(4l-gamma)) * (1/(gamma+m) + 1/(2l-(gamma+m))).
double moment_bound_constant(int m, double gamma, int l);

/// Lower bound 2^(2l+b) / (m pi^(2l-1)) * mu^(2l-m), valid for mu >= 2.
double normalizer_lower_bound(const SpaceParams& space, int l, int mu);

/// Spectral symbol of the smoothing operator: m_nu(n) = integral of
/// D_nu phi_n alpha for n = 0..n_max.  m_nu(0) = 1, |m_nu(n)| <= 1, and
/// m_nu vanishes (numerically) beyond degree nu.
struct MultiplierSequence {
  JacksonParams params;
  std::vector<double> values;

  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

MultiplierSequence multipliers(const JacksonParams& params, int n_max,
                               const QuadratureRule& rule);

}  // namespace zonal
