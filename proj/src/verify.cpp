#include "zonal/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>

#include "zonal/jackson.hpp"
#include "zonal/kernels.hpp"
#include "zonal/operators.hpp"
#include "zonal/oracle.hpp"
#include "zonal/quadrature.hpp"
#include "zonal/spaces.hpp"
#include "zonal/specfun.hpp"

namespace zonal {

namespace {

std::string strf(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

// smallest admissible dimension per family
const std::vector<std::pair<Family, int>> kSmallestSpaces = {
    {Family::Sphere, 1},
    {Family::RealProjective, 2},
    {Family::ComplexProjective, 4},
    {Family::QuaternionicProjective, 8},
    {Family::CayleyPlane, 16},
};

// test kernel for the oracle criteria: lambda_hat_0 = tau_2 = 4*pi,
// lambda_hat_n = n^-4 for 1 <= n <= 10
ZonalKernelSpec oracle_test_spec() {
  ZonalKernelSpec spec;
  spec.space = space_params(Family::Sphere, 2);
  spec.coeffs.resize(11);
  spec.coeffs[0] = spec.space.tau_m;
  for (int n = 1; n <= 10; ++n) spec.coeffs[n] = std::pow(n, -4.0);
  validate_spec(spec);
  return spec;
}

CriterionResult c1_normalization() {
  double worst = 0.0;
  int cases = 0;
  for (const auto& [family, m] : kSmallestSpaces) {
    const SpaceParams space = space_params(family, m);
    for (int l : {m, 2 * m}) {
      for (int mu : {2, 4, 8, 16, 32}) {
        const auto rule = build_rule(recommend_panels(mu, l, 0), 16);
        const auto jp = make_jackson(space, l, mu, rule);
        const auto fine = build_rule(2 * recommend_panels(mu, l, 0), 24);
        const double mass = integrate(
            [&](double t) { return jackson_eval(jp, t) * weight_alpha(space, t); },
            fine);
        worst = std::max(worst, std::abs(mass - 1.0));
        ++cases;
      }
    }
  }
  return {1, "Jackson kernel has unit mass against alpha on every family",
          worst <= 1e-10,
          strf("max |integral - 1| = %.3g over %d (family, l, mu) cases", worst, cases)};
}

CriterionResult c2_moment_bound() {
  const SpaceParams space = space_params(Family::Sphere, 2);
  const double c = moment_bound_constant(2, 1.0, 2);
  std::vector<double> by_mu(65, 1.0);
  bool bound_ok = true;
  double worst_ratio = 0.0;
  for (int mu = 2; mu <= 64; ++mu) {
    const auto rule = build_rule(recommend_panels(mu, 2, 0), 16);
    const auto jp = make_jackson(space, 2, mu, rule);
    by_mu[mu] = moment(jp, 1.0, rule);
    const double ratio = by_mu[mu] * mu;
    worst_ratio = std::max(worst_ratio, ratio);
    if (!(ratio <= c)) bound_ok = false;
  }
  const DecayFit fit = decay_fit(std::span(by_mu).subspan(1), 4, 64);
  const bool slope_ok = fit.slope >= -1.15 && fit.slope <= -0.85;
  return {2, "moment J(mu)*mu stays below the explicit constant; slope is -1",
          bound_ok && slope_ok,
          strf("max J*mu = %.4f vs c = %.4f; slope = %.3f", worst_ratio, c, fit.slope)};
}

CriterionResult c3_normalizer() {
  const SpaceParams s2 = space_params(Family::Sphere, 2);
  double min_margin = 1e300;
  for (int mu = 2; mu <= 64; ++mu) {
    const auto rule = build_rule(recommend_panels(mu, 2, 0), 16);
    const auto jp = make_jackson(s2, 2, mu, rule);
    min_margin = std::min(min_margin, jp.k_nu / normalizer_lower_bound(s2, 2, mu));
  }
  const SpaceParams s1 = space_params(Family::Sphere, 1);
  double worst_fejer = 0.0;
  for (int mu = 2; mu <= 64; ++mu) {
    const auto rule = build_rule(2 * recommend_panels(mu, 1, 0), 24);
    const auto jp = make_jackson(s1, 1, mu, rule);
    worst_fejer = std::max(worst_fejer, std::abs(jp.k_nu - mu * std::numbers::pi));
  }
  return {3, "normalizer lower bound holds; circle closed form k_nu = mu*pi",
          min_margin >= 1.0 && worst_fejer <= 1e-10,
          strf("min k_nu/bound = %.3f; max |k_nu - mu*pi| = %.3g", min_margin,
               worst_fejer)};
}

CriterionResult c4_multiplier_rank() {
  const SpaceParams space = space_params(Family::Sphere, 2);
  const auto rule = build_rule(recommend_panels(6, 2, 30), 16);
  const auto jp = make_jackson(space, 2, 6, rule);
  const auto seq = multipliers(jp, 30, rule);
  const double at_zero = std::abs(seq.values[0] - 1.0);
  double beyond = 0.0, magnitude = 0.0;
  for (int n = 0; n <= 30; ++n) {
    magnitude = std::max(magnitude, std::abs(seq.values[n]));
    if (n > jp.nu) beyond = std::max(beyond, std::abs(seq.values[n]));
  }
  const bool pass = at_zero <= 1e-10 && beyond <= 1e-8 && magnitude <= 1.0 + 1e-10;
  return {4, "smoothing symbol: m(0)=1, |m|<=1, vanishing beyond degree nu", pass,
          strf("|m(0)-1| = %.2g; max |m(n>nu)| = %.2g; max |m| = %.12f", at_zero,
               beyond, magnitude)};
}

CriterionResult c5_oracle_equivalence() {
  const ZonalKernelSpec spec = oracle_test_spec();
  const SphereGrid grid = sphere_grid(64, 128);
  const FunkHeckeReport report = funk_hecke_check(spec, grid);
  double cluster_err = 0.0;
  for (const auto& row : report.rows)
    cluster_err = std::max(cluster_err, row.max_rel_error);
  const auto diag = approx_numbers(operator_from_kernel(spec), 50);
  double top50_err = 0.0;
  for (int j = 0; j < 50; ++j)
    top50_err = std::max(top50_err, std::abs(report.eigenvalues[j] - diag[j]) / diag[j]);
  const bool pass = report.pass && top50_err < 0.01;
  return {5, "Nystroem spectrum matches the spectral coefficients (grid 64x128)", pass,
          strf("max cluster rel err = %.2g; top-50 rel err = %.2g; min eig = %.2g",
               cluster_err, top50_err, report.min_eigenvalue)};
}

CriterionResult c6_norm_identity() {
  const ZonalKernelSpec spec = oracle_test_spec();
  const auto rule = build_rule(recommend_panels(6, 2, 10), 16);
  const auto jp = make_jackson(spec.space, 2, 6, rule);
  const auto mult = multipliers(jp, 10, rule);
  const auto sq = sqrt_op(operator_from_kernel(spec));
  const double diag_norm = op_norm_diff(sq, apply_phi(sq, mult));

  std::vector<double> diff_coeffs(spec.coeffs.size());
  for (std::size_t n = 0; n < diff_coeffs.size(); ++n)
    diff_coeffs[n] = std::sqrt(spec.coeffs[n]) * (1.0 - mult.values[n]);
  const SphereGrid grid = sphere_grid(32, 64);
  const auto eigs = sym_eigs(gram_matrix(
      [&](double u) { return zonal_expansion_eval(spec.space, diff_coeffs, u); }, grid));
  const double dense_norm = std::max(std::abs(eigs.front()), std::abs(eigs.back()));
  const double rel = std::abs(dense_norm - diag_norm) / diag_norm;
  return {6, "smoothing error norm: diagonal value vs dense 2-norm", rel < 0.01,
          strf("diagonal = %.8f, dense = %.8f, rel diff = %.2g", diag_norm, dense_norm,
               rel)};
}

struct ExampleKernelContext {
  ZonalKernelSpec spec;
  DiagonalOperator op;
  DiagonalOperator sqrt;
  double b_hat = 0.0;  // max over the base t-grid of omega(t)/t^beta
};

ExampleKernelContext make_example_context() {
  ExampleKernelContext ctx;
  ctx.spec = example_kernel(3, 0.5, 400);
  ctx.op = operator_from_kernel(ctx.spec);
  ctx.sqrt = sqrt_op(ctx.op);
  return ctx;
}

CriterionResult c7_holder_bound(ExampleKernelContext& ctx) {
  const double spectral_tail = tail_bound_operator(ctx.spec);
  std::vector<double> base(11), ratios(11);
  double m1 = 0.0;
  for (int k = 0; k <= 10; ++k) {
    base[k] = std::pow(2.0, -k);
    const double omega = hoelder_modulus(ctx.spec, base[k], 2048);
    ratios[k] = omega / std::sqrt(base[k]);
    m1 = std::max(m1, ratios[k]);
  }
  ctx.b_hat = m1;
  double m2 = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double t = std::pow(2.0, -0.5 * k);
    m2 = std::max(m2, hoelder_modulus(ctx.spec, t, 2048) / std::sqrt(t));
  }
  const auto est = estimate_holder(ctx.spec, base, 2048);
  const bool pass = spectral_tail < 1e-10 && std::isfinite(m1) &&
                    std::abs(m2 - m1) < 0.05 * m1 && est.beta_hat >= 0.4;
  return {7, "Hoelder modulus: omega(t)/t^0.5 bounded and grid-stable", pass,
          strf("max ratio = %.6f (refined %.6f); beta_hat = %.3f; spectral tail = %.2g",
               m1, m2, est.beta_hat, spectral_tail)};
}

CriterionResult c8_smoothing_bound(const ExampleKernelContext& ctx) {
  const double B1 = ctx.b_hat * ctx.spec.space.tau_m;
  bool all_hold = true;
  double min_slack = 1e300;
  for (int mu = 2; mu <= 32; ++mu) {
    const auto rule = build_rule(recommend_panels(mu, 3, 0), 16);
    const auto jp = make_jackson(ctx.spec.space, 3, mu, rule);
    const auto rep = check_holder_bound(ctx.sqrt, jp, 0.5, B1, rule);
    if (!rep.holds) all_hold = false;
    min_slack = std::min(min_slack, rep.bound / std::max(rep.a_nu, 1e-300));
  }
  return {8, "a_nu(sqrt K) <= sqrt(2 B1) * J_{beta/2} for mu in 2..32", all_hold,
          strf("B1 = %.4f; min bound/a_nu = %.3f", B1, min_slack)};
}

CriterionResult c9_scaled_decay(const ExampleKernelContext& ctx) {
  const int q = choose_q(ctx.spec.space, 8);
  const auto rep = check_scaled_decay(ctx.sqrt, 0.5, q, 8);
  const double anchor = rep.rows.front().scaled;
  bool bounded = true;
  for (const auto& row : rep.rows)
    if (!(row.scaled <= 2.0 * anchor)) bounded = false;
  const bool flat_ok = std::isfinite(rep.flat_sup);
  return {9, "scaled approximation numbers stay bounded", bounded && flat_ok,
          strf("q = %d; sup a_{(qn)^3} n^{1/4} = %.4f (n=1 value %.4f); "
               "sup a_j j^{1/12} = %.4f at j = %lld",
               q, rep.sup_scaled, anchor, rep.flat_sup,
               static_cast<long long>(rep.flat_sup_j))};
}

CriterionResult c10_eigenvalue_decay(const ExampleKernelContext& ctx) {
  const auto lambdas = approx_numbers(ctx.op, 5000);
  const DecayFit fit = decay_fit(lambdas, 50, 5000);
  const bool pass = std::abs(fit.slope + 1.5) <= 0.1 && fit.slope <= -7.0 / 6.0;
  return {10, "eigenvalue decay slope is -1.5 over j in [50, 5000]", pass,
          strf("slope = %.4f (target -1.5 +- 0.1, must be <= -7/6)", fit.slope)};
}

CriterionResult c11_minimality(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry_count(1, 5);
  std::uniform_int_distribution<int> mult_dist(1, 4);
  std::uniform_real_distribution<double> value_dist(0.0, 5.0);
  const SpaceParams space = space_params(Family::Sphere, 2);

  for (int trial = 0; trial < 50; ++trial) {
    DiagonalOperator op;
    op.space = space;
    std::vector<double> flat;
    const int entries = entry_count(rng);
    for (int e = 0; e < entries && flat.size() < 12; ++e) {
      const int mult = std::min<int>(mult_dist(rng), 12 - static_cast<int>(flat.size()));
      // quantized values so ties and zeros occur
      const double value = std::round(value_dist(rng) * 4.0) / 4.0;
      op.entries.push_back({e, value, mult});
      flat.insert(flat.end(), mult, value);
    }
    const int len = static_cast<int>(flat.size());
    const auto a = approx_numbers(op, len + 2);
    // brute force over every truncation support
    std::vector<double> best(len + 3, 1e300);
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      double err = 0.0;
      for (int i = 0; i < len; ++i)
        if (!(mask & (1u << i))) err = std::max(err, flat[i]);
      const int kept = std::popcount(mask);
      best[kept + 1] = std::min(best[kept + 1], err);
    }
    for (int j = 1; j <= len + 2; ++j) {
      double brute = 1e300;
      for (int k = 1; k <= std::min(j, len + 1); ++k) brute = std::min(brute, best[k]);
      if (a[j - 1] != brute)
        return {11, "approximation numbers equal brute-force truncation minima", false,
                strf("mismatch at trial %d, j = %d: sorted %.17g vs brute %.17g", trial,
                     j, a[j - 1], brute)};
    }
  }
  return {11, "approximation numbers equal brute-force truncation minima", true,
          "exact agreement on 50 random operators (<= 12 flattened values)"};
}

CriterionResult c12_translation(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> t_dist(0.05, std::numbers::pi - 0.05);
  const SpaceParams space = space_params(Family::Sphere, 2);
  const Vec3 pole{0.0, 0.0, 1.0};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Vec3 x = normalized({gauss(rng), gauss(rng), gauss(rng)});
    const double t = t_dist(rng);
    for (int n = 1; n <= 8; ++n) {
      const auto f = [&space, &pole, n](const Vec3& y) {
        return zonal_phi_cos(space, n, dot(pole, y));
      };
      const double direct = translate_direct(f, t, 256)(x);
      const double spectral = zonal_phi(space, n, t) * f(x);
      worst = std::max(worst, std::abs(direct - spectral));
    }
  }
  return {12, "geodesic-circle average matches the spectral multiplier", worst <= 1e-8,
          strf("max |direct - spectral| = %.2g over 20 random (x, t), n <= 8", worst)};
}

}  // namespace

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

std::vector<CriterionResult> run_acceptance(
    const VerifyOptions& options,
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  const auto run = [&](int id, const std::function<CriterionResult()>& criterion) {
    CriterionResult r;
    try {
      r = criterion();
    } catch (const std::exception& e) {
      r = {id, "criterion raised an exception", false, e.what()};
    }
    results.push_back(r);
    if (on_result) on_result(r);
  };

  run(1, c1_normalization);
  run(2, c2_moment_bound);
  run(3, c3_normalizer);
  run(4, c4_multiplier_rank);
  run(5, c5_oracle_equivalence);
  run(6, c6_norm_identity);

  ExampleKernelContext ctx = make_example_context();
  run(7, [&] { return c7_holder_bound(ctx); });
  run(8, [&] { return c8_smoothing_bound(ctx); });
  run(9, [&] { return c9_scaled_decay(ctx); });
  run(10, [&] { return c10_eigenvalue_decay(ctx); });
  run(11, [&] { return c11_minimality(options.seed); });
  run(12, [&] { return c12_translation(options.seed); });
  return results;
}

}  // namespace zonal
