#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "halfplane/error.hpp"
#include "halfplane/params.hpp"

using namespace halfplane;

namespace {

ProjectiveReal inf() { return ProjectiveReal::infinity(); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ok;
}

}  // namespace

TEST_CASE("projective line: inversion and negation are total") {
  CHECK(ProjectiveReal(0.0).inv().is_infinite());
  CHECK(inf().inv().equals(0.0));
  CHECK(inf().neg().is_infinite());
  CHECK(ProjectiveReal(2.0).inv().equals(0.5));
  CHECK(ProjectiveReal(-4.0).neg().equals(4.0));
  CHECK(ProjectiveReal().equals(0.0));
  CHECK(inf() == inf());
  CHECK_FALSE(inf() == ProjectiveReal(1e308));
}

TEST_CASE("projective line: non-finite floats are rejected") {
  CHECK(code_of([] { ProjectiveReal(std::numeric_limits<double>::quiet_NaN()); }) ==
        Errc::invalid_argument);
  CHECK(code_of([] { ProjectiveReal(std::numeric_limits<double>::infinity()); }) ==
        Errc::invalid_argument);
  CHECK(code_of([] { (void)inf().value(); }) == Errc::out_of_domain);
}

TEST_CASE("projective line: parse and print") {
  CHECK(ProjectiveReal::parse("inf").is_infinite());
  CHECK(ProjectiveReal::parse("Infinity").is_infinite());
  CHECK(ProjectiveReal::parse("-INF").is_infinite());
  CHECK(ProjectiveReal::parse("-0.5").equals(-0.5));
  CHECK(ProjectiveReal::parse("1e-3").equals(1e-3));
  CHECK(code_of([] { ProjectiveReal::parse("2x"); }) == Errc::invalid_argument);
  CHECK(code_of([] { ProjectiveReal::parse(""); }) == Errc::invalid_argument);
  CHECK(code_of([] { ProjectiveReal::parse("nan"); }) == Errc::invalid_argument);
  CHECK(inf().to_string() == "inf");
  CHECK(ProjectiveReal(0.1).to_string() == "0.10000000000000001");
  CHECK(ProjectiveReal::parse(ProjectiveReal(0.1).to_string()).equals(0.1));
}

TEST_CASE("model parameters") {
  const ModelParams p{-2.0, ProjectiveReal(1.0)};
  CHECK(p.is_cpt_invariant_bc());
  CHECK(ModelParams{1.0, ProjectiveReal(-1.0)}.is_cpt_invariant_bc());
  CHECK_FALSE(ModelParams{1.0, inf()}.is_cpt_invariant_bc());
  CHECK(p.gap().first == -2.0);
  CHECK(p.gap().second == 2.0);
}

TEST_CASE("edge velocity") {
  CHECK(edge_velocity(ProjectiveReal(0.0)) == 0.0);
  CHECK(edge_velocity(ProjectiveReal(1.0)) == 1.0);
  CHECK(edge_velocity(ProjectiveReal(0.5)) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(edge_velocity(inf()) == 0.0);
  CHECK(edge_velocity(ProjectiveReal(1e200)) == doctest::Approx(2e-200).epsilon(1e-15));
}

TEST_CASE("boundary character examples") {
  const BoundaryCharacter half = boundary_character(ProjectiveReal(0.5));
  CHECK(half.v_edge == doctest::Approx(0.8));
  CHECK(*half.eta == 1);
  CHECK(*half.theta == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(*half.epsilon == 1);

  const BoundaryCharacter zero = boundary_character(ProjectiveReal(0.0));
  CHECK(zero.v_edge == 0.0);
  CHECK(*zero.eta == 1);
  CHECK(*zero.theta == 0.0);
  CHECK_FALSE(zero.epsilon.has_value());

  // (1 + g)/(1 - g) = -1/2 at g = -3
  const BoundaryCharacter minus3 = boundary_character(ProjectiveReal(-3.0));
  CHECK(minus3.v_edge == doctest::Approx(-0.6));
  CHECK(*minus3.eta == -1);
  CHECK(*minus3.theta == doctest::Approx(-std::log(2.0)).epsilon(1e-14));
  CHECK(*minus3.epsilon == -1);

  const BoundaryCharacter infinite = boundary_character(inf());
  CHECK(*infinite.eta == -1);
  CHECK(*infinite.theta == 0.0);
  CHECK_FALSE(infinite.epsilon.has_value());

  for (double g : {1.0, -1.0}) {
    const BoundaryCharacter unit = boundary_character(ProjectiveReal(g));
    CHECK_FALSE(unit.eta.has_value());
    CHECK_FALSE(unit.theta.has_value());
    CHECK(*unit.epsilon == static_cast<int>(g));
    CHECK(std::abs(unit.v_edge) == 1.0);
  }
}

TEST_CASE("boundary character invariants on random gammas") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int n = 0; n < 500; ++n) {
    const double g = std::sinh(u(rng));
    if (std::abs(std::abs(g) - 1.0) < 1e-3 || g == 0.0) continue;
    const BoundaryCharacter c = boundary_character(ProjectiveReal(g));
    REQUIRE(c.eta.has_value());
    CHECK(std::tanh(*c.theta) == doctest::Approx(c.v_edge).epsilon(1e-12));
    CHECK(*c.eta * std::exp(*c.theta) == doctest::Approx((1 + g) / (1 - g)).epsilon(1e-12));
    CHECK(edge_velocity(ProjectiveReal(g)) ==
          doctest::Approx(edge_velocity(ProjectiveReal(1.0 / g))).epsilon(1e-14));
    CHECK(*boundary_character(ProjectiveReal(1.0 / g)).eta == -*c.eta);
    CHECK(std::abs(c.v_edge) < 1.0);
    CHECK(*c.epsilon == (c.v_edge > 0 ? 1 : -1));
  }
}

TEST_CASE("rapidity parametrization round trip") {
  for (double g : {-7.0, -0.3, 0.0, 0.2, 0.9, 3.0, 40.0}) {
    const BoundaryCharacter c = boundary_character(ProjectiveReal(g));
    CHECK(gamma_from_rapidity(*c.eta, *c.theta).value() == doctest::Approx(g).epsilon(1e-13));
  }
  CHECK(gamma_from_rapidity(-1, 0.0).is_infinite());
  CHECK(gamma_from_rapidity(1, 0.0).equals(0.0));
  CHECK(code_of([] { gamma_from_rapidity(0, 1.0); }) == Errc::invalid_argument);
}

TEST_CASE("boosts") {
  CHECK(boost(ProjectiveReal(0.0), 0.0).equals(0.0));
  CHECK(boost(ProjectiveReal(0.5), std::log(3.0)).value() == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(std::abs(boost(ProjectiveReal(0.5), -std::log(3.0)).value()) < 1e-15);
  CHECK(code_of([] { boost(ProjectiveReal(1.0), 0.1); }) == Errc::boost_undefined);
  CHECK(code_of([] { boost(ProjectiveReal(-1.0), 0.1); }) == Errc::boost_undefined);
  // eta = -1 stays eta = -1 and passes through Infinity at theta = 0
  CHECK(boost(ProjectiveReal(2.0), -std::log(3.0)).is_infinite());

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int n = 0; n < 300; ++n) {
    const double g = std::sinh(u(rng));
    if (std::abs(std::abs(g) - 1.0) < 1e-3) continue;
    const double chi = u(rng);
    const BoundaryCharacter before = boundary_character(ProjectiveReal(g));
    const ProjectiveReal boosted = boost(ProjectiveReal(g), chi);
    const BoundaryCharacter after = boundary_character(boosted);
    CHECK(*after.eta == *before.eta);
    CHECK(*after.theta == doctest::Approx(*before.theta + chi).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("dualities") {
  const ModelParams p{1.0, ProjectiveReal(2.0)};
  CHECK(reflection_dual(p) == ModelParams{-1.0, ProjectiveReal(-0.5)});
  CHECK(reflection_dual(ModelParams{1.0, ProjectiveReal(0.0)}) == ModelParams{-1.0, inf()});
  CHECK(cpt_dual(p) == ModelParams{1.0, ProjectiveReal(0.5)});
  CHECK(cpt_dual(ModelParams{1.0, ProjectiveReal(1.0)}) == ModelParams{1.0, ProjectiveReal(1.0)});
  CHECK(halfplane_dual(p) == ModelParams{-1.0, ProjectiveReal(0.5)});
  CHECK(halfplane_dual(ModelParams{0.0, inf()}) == ModelParams{0.0, ProjectiveReal(0.0)});
  for (const ModelParams& q : {p, ModelParams{-3.0, ProjectiveReal(0.25)}, ModelParams{0.5, inf()}}) {
    CHECK(reflection_dual(reflection_dual(q)) == q);
    CHECK(cpt_dual(cpt_dual(q)) == q);
    CHECK(halfplane_dual(halfplane_dual(q)) == q);
  }
}
