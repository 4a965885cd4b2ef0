#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "zonal/jackson.hpp"
#include "zonal/operators.hpp"
#include "zonal/quadrature.hpp"
#include "zonal/spaces.hpp"

using namespace zonal;

namespace {
const double kPi = std::numbers::pi;

JacksonParams jackson_for(const SpaceParams& space, int l, int mu) {
  return make_jackson(space, l, mu, build_rule(recommend_panels(mu, l, 0), 16));
}
}  // namespace

TEST_CASE("Fejer identity on the circle: k_nu = mu * pi for l = 1") {
  auto s1 = space_params(Family::Sphere, 1);
  for (int mu : {1, 2, 3, 8, 32}) {
    const auto rule = build_rule(2 * recommend_panels(mu, 1, 0), 24);
    const auto jp = make_jackson(s1, 1, mu, rule);
    CHECK(std::abs(jp.k_nu - mu * kPi) <= 1e-11);
    CHECK(jp.nu == mu - 1);
  }
}

TEST_CASE("mu = 1 degenerates to the constant kernel") {
  auto s2 = space_params(Family::Sphere, 2);
  const auto rule = build_rule(16, 16);
  const auto jp = make_jackson(s2, 3, 1, rule);
  CHECK(jp.nu == 0);
  // k_0 = integral of alpha = integral of sin t = 2
  CHECK(jp.k_nu == doctest::Approx(2.0).epsilon(1e-13));
  for (double t : {0.2, 1.0, 2.8})
    CHECK(jackson_eval(jp, t) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("jackson_eval values, limit and domain") {
  auto s2 = space_params(Family::Sphere, 2);
  const auto jp = jackson_for(s2, 1, 2);
  CHECK(jackson_eval(jp, kPi / 2) ==
        doctest::Approx(2.0 / jp.k_nu).epsilon(1e-13));  // (sin(pi/2)/sin(pi/4))^2 = 2
  CHECK(jackson_eval(jp, 1e-13) ==
        doctest::Approx(std::pow(2.0, 2) / jp.k_nu).epsilon(1e-13));
  CHECK(jackson_eval(jp, kPi) >= 0.0);
  CHECK_THROWS_AS(jackson_eval(jp, 0.0), std::domain_error);
  CHECK_THROWS_AS(jackson_eval(jp, 3.5), std::domain_error);
  CHECK_THROWS_AS(make_jackson(s2, 0, 2, build_rule(8, 16)), std::domain_error);
  CHECK_THROWS_AS(make_jackson(s2, 1, 0, build_rule(8, 16)), std::domain_error);
}

TEST_CASE("kernel is nonnegative on the quadrature nodes") {
  auto s3 = space_params(Family::Sphere, 3);
  const auto rule = build_rule(recommend_panels(9, 2, 0), 16);
  const auto jp = make_jackson(s3, 2, 9, rule);
  for (double t : rule.nodes) CHECK(jackson_eval(jp, t) >= 0.0);
}

TEST_CASE("normalizer lower bound across families") {
  for (auto [family, m] : {std::pair{Family::Sphere, 2},
                           {Family::Sphere, 3},
                           {Family::RealProjective, 2},
                           {Family::CayleyPlane, 16}}) {
    auto s = space_params(family, m);
    for (int l : {m, 2 * m})
      for (int mu : {2, 4, 16}) {
        const auto jp = jackson_for(s, l, mu);
        CHECK(jp.k_nu >= normalizer_lower_bound(s, l, mu));
      }
  }
}

TEST_CASE("moment preconditions") {
  auto s2 = space_params(Family::Sphere, 2);
  const auto rule = build_rule(16, 16);
  const auto jp = make_jackson(s2, 1, 4, rule);  // 2l = 2 < gamma + m
  CHECK_THROWS_WITH_AS(moment(jp, 1.0, rule), doctest::Contains("2l > gamma + m"),
                       std::domain_error);
  const auto jp2 = make_jackson(s2, 2, 4, rule);
  CHECK_THROWS_AS(moment(jp2, 0.0, rule), std::domain_error);
  CHECK_THROWS_AS(moment(jp2, -0.5, rule), std::domain_error);
}

TEST_CASE("moment reduces to the normalization as gamma -> 0") {
  auto s2 = space_params(Family::Sphere, 2);
  const auto rule = build_rule(recommend_panels(8, 2, 0), 16);
  const auto jp = make_jackson(s2, 2, 8, rule);
  CHECK(std::abs(moment(jp, 1e-12, rule) - 1.0) <= 1e-9);
}

TEST_CASE("mu = 1 moment is the plain weighted average of t^gamma") {
  auto s2 = space_params(Family::Sphere, 2);
  const auto rule = build_rule(32, 16);
  const auto jp = make_jackson(s2, 2, 1, rule);
  const double expected =
      integrate([&](double t) { return std::pow(t, 1.5) * weight_alpha(s2, t); }, rule) /
      integrate([&](double t) { return weight_alpha(s2, t); }, rule);
  CHECK(moment(jp, 1.5, rule) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("moment bound constant") {
  CHECK(moment_bound_constant(2, 1.0, 2) ==
        doctest::Approx(std::pow(kPi, 7) / 48.0).epsilon(1e-13));
  // direct evaluation of the formula at another point
  const double direct = 2.0 * std::pow(kPi, 15.0) / std::pow(2.0, 15.75) *
                        (1.0 / 2.25 + 1.0 / (8.0 - 2.25));
  CHECK(moment_bound_constant(2, 0.25, 4) == doctest::Approx(direct).epsilon(1e-13));
  // pole: the constant blows up monotonically as gamma -> (2l - m)-
  double prev = 0.0;
  for (double eps : {0.5, 0.25, 0.1, 0.01}) {
    const double c = moment_bound_constant(2, 2.0 - eps, 2);
    CHECK(c > prev);
    prev = c;
  }
  CHECK_THROWS_AS(moment_bound_constant(2, 2.0, 2), std::domain_error);
}

TEST_CASE("moment decay: J * mu^gamma below the constant, slope near -gamma") {
  auto s2 = space_params(Family::Sphere, 2);
  for (double gamma : {1.0, 0.5}) {
    const double c = moment_bound_constant(2, gamma, 2);
    std::vector<double> by_mu(65, 1.0);
    for (int mu = 2; mu <= 64; ++mu) {
      const auto rule = build_rule(recommend_panels(mu, 2, 0), 16);
      const auto jp = make_jackson(s2, 2, mu, rule);
      by_mu[mu] = moment(jp, gamma, rule);
      CHECK(by_mu[mu] * std::pow(static_cast<double>(mu), gamma) <= c);
    }
    const auto fit = decay_fit(std::span<const double>(by_mu).subspan(1), 4, 64);
    CHECK(fit.slope >= -gamma - 0.15);
    CHECK(fit.slope <= -gamma + 0.15);
  }
}

TEST_CASE("multiplier sequence: normalization, bound, vanishing beyond nu") {
  auto s2 = space_params(Family::Sphere, 2);
  const auto rule = build_rule(recommend_panels(6, 2, 30), 16);
  const auto jp = make_jackson(s2, 2, 6, rule);
  const auto seq = multipliers(jp, 30, rule);
  CHECK(seq.n_max() == 30);
  CHECK(std::abs(seq.values[0] - 1.0) <= 1e-12);
  for (int n = 0; n <= 30; ++n) {
    CHECK(std::abs(seq.values[n]) <= 1.0 + 1e-10);
    if (n > jp.nu) CHECK(std::abs(seq.values[n]) <= 1e-8);
  }
}

TEST_CASE("mu = 1 multipliers vanish beyond degree zero") {
  auto s3 = space_params(Family::Sphere, 3);
  const auto rule = build_rule(recommend_panels(1, 1, 8), 16);
  const auto jp = make_jackson(s3, 1, 1, rule);
  const auto seq = multipliers(jp, 8, rule);
  CHECK(std::abs(seq.values[0] - 1.0) <= 1e-12);
  for (int n = 1; n <= 8; ++n) CHECK(std::abs(seq.values[n]) <= 1e-12);
}

TEST_CASE("multipliers on a projective family share the rank property") {
  auto cp4 = space_params(Family::ComplexProjective, 4);
  const auto rule = build_rule(recommend_panels(4, 2, 16), 16);
  const auto jp = make_jackson(cp4, 2, 4, rule);  // nu = 6
  const auto seq = multipliers(jp, 16, rule);
  CHECK(std::abs(seq.values[0] - 1.0) <= 1e-10);
  for (int n = jp.nu + 1; n <= 16; ++n) CHECK(std::abs(seq.values[n]) <= 1e-8);
}
