#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "zonal/jackson.hpp"
#include "zonal/quadrature.hpp"
#include "zonal/spaces.hpp"

using namespace zonal;

TEST_CASE("rule construction and invariants") {
  for (auto [panels, order] : {std::pair{1, 2}, {8, 16}, {4, 8}, {100, 32}, {3, 64}}) {
    const auto rule = build_rule(panels, order);
    CHECK(static_cast<int>(rule.nodes.size()) == panels * order);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      CHECK(rule.nodes[i] > 0.0);
      CHECK(rule.nodes[i] < std::numbers::pi);
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      CHECK(rule.weights[i] > 0.0);
      total += rule.weights[i];
    }
    CHECK(total == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  }
  CHECK_THROWS_AS(build_rule(4, 1), std::domain_error);
  CHECK_THROWS_AS(build_rule(4, 65), std::domain_error);
  CHECK_THROWS_AS(build_rule(0, 8), std::domain_error);
}

TEST_CASE("closed-form integrals") {
  const double pi = std::numbers::pi;
  // a single 2-point panel is exact for cubics
  const auto tiny = build_rule(1, 2);
  CHECK(integrate([](double t) { return t * t * t; }, tiny) ==
        doctest::Approx(pi * pi * pi * pi / 4.0).epsilon(1e-13));

  CHECK(integrate([](double) { return 1.0; }, build_rule(8, 16)) ==
        doctest::Approx(pi).epsilon(1e-13));
  CHECK(std::abs(integrate([](double t) { return std::sin(t); }, build_rule(8, 16)) -
                 2.0) <= 1e-13);
  CHECK(integrate([](double t) { return t * t; }, build_rule(4, 8)) ==
        doctest::Approx(pi * pi * pi / 3.0).epsilon(1e-12));

  // alpha for S^2 is sin t
  auto s2 = space_params(Family::Sphere, 2);
  CHECK(std::abs(integrate([&](double t) { return weight_alpha(s2, t); },
                           build_rule(8, 16)) -
                 2.0) <= 1e-12);
}

TEST_CASE("recommend_panels floors and oscillation counts") {
  CHECK(recommend_panels(2, 1, 0) == 8);
  CHECK(recommend_panels(64, 4, 0) == 256);
  CHECK(recommend_panels(16, 2, 40) == 72);
  CHECK(recommend_panels(1, 1, 0) == 8);
}

TEST_CASE("non-finite integrand values are reported with the node") {
  const auto rule = build_rule(2, 4);
  CHECK_THROWS_WITH_AS(
      integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, rule),
      doctest::Contains("non-finite"), std::runtime_error);
  CHECK_THROWS_AS(
      integrate([](double t) { return 1.0 / (t - t); }, rule), std::runtime_error);
}

TEST_CASE("positivity") {
  const auto rule = build_rule(6, 12);
  CHECK(integrate([](double t) { return std::sin(t) * std::sin(t); }, rule) >= 0.0);
  CHECK(integrate([](double t) { return std::abs(std::cos(7 * t)); }, rule) >= 0.0);
}

TEST_CASE("refinement stability of the acceptance-style integrands") {
  // hardest normalization case in the suite
  auto cay = space_params(Family::CayleyPlane, 16);
  const int l = 32, mu = 32;
  const auto coarse = build_rule(recommend_panels(mu, l, 0), 16);
  const auto fine = build_rule(2 * recommend_panels(mu, l, 0), 16);
  const auto integrand = [&](double t) {
    return std::pow(sine_ratio(mu, t), 2 * l) * weight_alpha(cay, t);
  };
  const double a = integrate(integrand, coarse);
  const double b = integrate(integrand, fine);
  CHECK(std::abs(b - a) <= 1e-9 * std::abs(b));

  auto s2 = space_params(Family::Sphere, 2);
  const auto jp = make_jackson(s2, 2, 16, build_rule(recommend_panels(16, 2, 0), 16));
  const auto moment_integrand = [&](double t) {
    return jackson_eval(jp, t) * t * weight_alpha(s2, t);
  };
  const double c = integrate(moment_integrand, build_rule(32, 16));
  const double d = integrate(moment_integrand, build_rule(64, 16));
  CHECK(std::abs(d - c) <= 1e-9 * std::abs(d));
}

TEST_CASE("pairwise summation is deterministic") {
  const auto rule = build_rule(16, 16);
  const auto f = [](double t) { return std::sin(17 * t) / (1 + t); };
  const double first = integrate(f, rule);
  const double second = integrate(f, rule);
  CHECK(first == second);
}
