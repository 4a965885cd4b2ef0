#pragma once

#include <cstdint>
#include <vector>

#include "zonal/jackson.hpp"
#include "zonal/kernels.hpp"
#include "zonal/quadrature.hpp"
#include "zonal/spaces.hpp"

namespace zonal {

/// A positive self-adjoint operator diagonal in the harmonic basis:
/// one entry per degree, value repeated with the subspace multiplicity.
struct DiagonalEntry {
  int degree = 0;
  double value = 0.0;
  std::int64_t multiplicity = 1;
};

struct DiagonalOperator {
  SpaceParams space;
  std::vector<DiagonalEntry> entries;  // ascending degree, one entry per degree
};

DiagonalOperator operator_from_kernel(const ZonalKernelSpec& spec);

/// Entrywise square root; squaring the result recovers the input exactly.
DiagonalOperator sqrt_op(const DiagonalOperator& op);

/// Multiplies each degree by the smoothing symbol m_nu(n); degrees beyond
/// the sequence's coverage become zero.
DiagonalOperator apply_phi(const DiagonalOperator& op, const MultiplierSequence& mult);

/// Operator norm of the difference of two diagonal operators with the same
/// degree layout: max over degrees of |s_n - s_n'|.
double op_norm_diff(const DiagonalOperator& op, const DiagonalOperator& phi_op);

/// a_j for j = 1..j_max: the j-th largest diagonal value counted with
/// multiplicity (equal to the j-th approximation number for positive
/// diagonal operators).  Pads with zeros past the flattened length.
std::vector<double> approx_numbers(const DiagonalOperator& op, std::int64_t j_max);

/// Number of flattened values exceeding tol in absolute value.
std::int64_t numerical_rank(const DiagonalOperator& op, double tol);

/// Least-squares slope of log values[j] against log j over j in [j_min, j_max]
/// (1-based indices into a nonincreasing positive sequence).
struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  std::int64_t j_min = 0;
  std::int64_t j_max = 0;
};

DecayFit decay_fit(std::span<const double> values, std::int64_t j_min,
                   std::int64_t j_max);

/// Both sides of a_nu(sqrt K) <= sqrt(2 ||B||_1) * integral(D_nu t^(beta/2) alpha),
/// the smoothing-error bound for a (B, beta)-Hoelder kernel.
struct HolderBoundReport {
  int mu = 0;
  int nu = 0;
  double a_nu = 0.0;
  double moment_value = 0.0;  // integral of D_nu t^(beta/2) alpha
  double bound = 0.0;         // sqrt(2 B1) * moment_value
  bool holds = false;
};

HolderBoundReport check_holder_bound(const DiagonalOperator& sqrt_operator,
                                     const JacksonParams& params, double beta,
                                     double B1, const QuadratureRule& rule);

/// The scaled decay table a_{(q n)^m} * n^(beta/2) for n = 1..n_max, its sup,
/// and the flat-index variant sup_j a_j * j^(beta/(2m)) over j <= (q n_max)^m.
struct ScaledDecayReport {
  struct Row {
    int n = 0;
    std::int64_t j = 0;
    double a_j = 0.0;
    double scaled = 0.0;
  };
  std::vector<Row> rows;
  double sup_scaled = 0.0;
  double flat_sup = 0.0;
  std::int64_t flat_sup_j = 0;
};

ScaledDecayReport check_scaled_decay(const DiagonalOperator& op, double beta, int q,
                                     int n_max);

}  // namespace zonal
