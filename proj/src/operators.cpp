#include "zonal/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zonal {

namespace {

constexpr double kExactIntLimit = 9007199254740992.0;  // 2^53

std::int64_t multiplicity_of(const SpaceParams& space, int n) {
  const double dim = harmonic_dim(space, n);
  if (!(dim < kExactIntLimit))
    throw std::runtime_error("harmonic multiplicity too large for exact bookkeeping");
  return static_cast<std::int64_t>(dim);
}

// entries sorted by value descending; ties broken by degree for determinism
std::vector<DiagonalEntry> sorted_entries(const DiagonalOperator& op) {
  std::vector<DiagonalEntry> sorted = op.entries;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.value != y.value) return x.value > y.value;
    return x.degree < y.degree;
  });
  return sorted;
}

}  // namespace

DiagonalOperator operator_from_kernel(const ZonalKernelSpec& spec) {
  validate_spec(spec);
  DiagonalOperator op;
  op.space = spec.space;
  op.entries.reserve(spec.coeffs.size());
  for (std::size_t n = 0; n < spec.coeffs.size(); ++n)
    op.entries.push_back({static_cast<int>(n), spec.coeffs[n],
                          multiplicity_of(spec.space, static_cast<int>(n))});
  return op;
}

DiagonalOperator sqrt_op(const DiagonalOperator& op) {
  DiagonalOperator out = op;
  for (auto& e : out.entries) {
    if (e.value < 0.0)
      throw std::domain_error("sqrt_op: operator has a negative diagonal value");
    e.value = std::sqrt(e.value);
  }
  return out;
}

DiagonalOperator apply_phi(const DiagonalOperator& op, const MultiplierSequence& mult) {
  if (mult.params.space.family != op.space.family || mult.params.space.m != op.space.m)
    throw std::invalid_argument("apply_phi: multiplier sequence built on another space");
  DiagonalOperator out = op;
  for (auto& e : out.entries)
    e.value = e.degree <= mult.n_max() ? e.value * mult.values[e.degree] : 0.0;
  return out;
}

double op_norm_diff(const DiagonalOperator& op, const DiagonalOperator& phi_op) {
  if (op.entries.size() != phi_op.entries.size())
    throw std::invalid_argument("op_norm_diff: degree layout mismatch");
  double norm = 0.0;
  for (std::size_t i = 0; i < op.entries.size(); ++i) {
    const auto& x = op.entries[i];
    const auto& y = phi_op.entries[i];
    if (x.degree != y.degree || x.multiplicity != y.multiplicity)
      throw std::invalid_argument("op_norm_diff: degree layout mismatch");
    norm = std::max(norm, std::abs(x.value - y.value));
  }
  return norm;
}

std::vector<double> approx_numbers(const DiagonalOperator& op, std::int64_t j_max) {
  if (j_max < 1) throw std::domain_error("approx_numbers: j_max must be positive");
  std::vector<double> out;
  out.reserve(j_max);
  for (const auto& e : sorted_entries(op)) {
    const std::int64_t take =
        std::min<std::int64_t>(e.multiplicity, j_max - static_cast<std::int64_t>(out.size()));
    out.insert(out.end(), take, e.value);
    if (static_cast<std::int64_t>(out.size()) == j_max) return out;
  }
  out.resize(j_max, 0.0);
  return out;
}

std::int64_t numerical_rank(const DiagonalOperator& op, double tol) {
  std::int64_t rank = 0;
  for (const auto& e : op.entries)
    if (std::abs(e.value) > tol) rank += e.multiplicity;
  return rank;
}

DecayFit decay_fit(std::span<const double> values, std::int64_t j_min,
                   std::int64_t j_max) {
  if (j_min < 1 || j_max > static_cast<std::int64_t>(values.size()))
    throw std::domain_error("decay_fit: index range exceeds the sequence");
  if (j_max < 2 * j_min)
    throw std::domain_error("decay_fit: requires j_max >= 2*j_min");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(j_max - j_min + 1);
  for (std::int64_t j = j_min; j <= j_max; ++j) {
    const double v = values[j - 1];
    if (!(v > 0.0))
      throw std::domain_error("decay_fit: nonpositive value inside the fit range");
    const double x = std::log(static_cast<double>(j));
    const double y = std::log(v);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  DecayFit fit;
  fit.j_min = j_min;
  fit.j_max = j_max;
  fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / count;
  for (std::int64_t j = j_min; j <= j_max; ++j) {
    const double x = std::log(static_cast<double>(j));
    const double r = std::abs(std::log(values[j - 1]) - (fit.slope * x + fit.intercept));
    fit.max_residual = std::max(fit.max_residual, r);
  }
  return fit;
}

HolderBoundReport check_holder_bound(const DiagonalOperator& sqrt_operator,
                                     const JacksonParams& params, double beta,
                                     double B1, const QuadratureRule& rule) {
  if (params.nu < 1)
    throw std::domain_error("check_holder_bound: requires nu >= 1 (mu >= 2)");
  if (!(B1 > 0.0)) throw std::domain_error("check_holder_bound: B1 must be positive");
  HolderBoundReport report;
  report.mu = params.mu;
  report.nu = params.nu;
  report.a_nu = approx_numbers(sqrt_operator, params.nu).back();
  report.moment_value = moment(params, 0.5 * beta, rule);
  report.bound = std::sqrt(2.0 * B1) * report.moment_value;
  report.holds = report.a_nu <= report.bound;
  return report;
}

ScaledDecayReport check_scaled_decay(const DiagonalOperator& op, double beta, int q,
                                     int n_max) {
  if (q < 1 || n_max < 1)
    throw std::domain_error("check_scaled_decay: q and n_max must be positive");
  const int m = op.space.m;
  if (m * std::log2(static_cast<double>(q) * n_max) > 62.0)
    throw std::domain_error("check_scaled_decay: (q n_max)^m overflows");
  std::int64_t j_top = 1;
  for (int i = 0; i < m; ++i) j_top *= static_cast<std::int64_t>(q) * n_max;

  const std::vector<double> a = approx_numbers(op, j_top);
  ScaledDecayReport report;
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t j = 1;
    for (int i = 0; i < m; ++i) j *= static_cast<std::int64_t>(q) * n;
    ScaledDecayReport::Row row;
    row.n = n;
    row.j = j;
    row.a_j = a[j - 1];
    row.scaled = row.a_j * std::pow(static_cast<double>(n), 0.5 * beta);
    report.sup_scaled = std::max(report.sup_scaled, row.scaled);
    report.rows.push_back(row);
  }
  const double flat_exponent = beta / (2.0 * m);
  report.flat_sup = 0.0;
  report.flat_sup_j = 1;
  for (std::int64_t j = 1; j <= j_top; ++j) {
    const double scaled = a[j - 1] * std::pow(static_cast<double>(j), flat_exponent);
    if (scaled > report.flat_sup) {
      report.flat_sup = scaled;
      report.flat_sup_j = j;
    }
  }
  return report;
}

}  // namespace zonal
