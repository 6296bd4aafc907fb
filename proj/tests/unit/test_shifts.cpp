#include <doctest.h>

#include "cdual/corpus.hpp"
#include "cdual/errors.hpp"
#include "cdual/shifts.hpp"
#include "helpers.hpp"

using namespace cdual;
using testing::q;

namespace {

MomentPolynomial product_gamma() { return MomentPolynomial(q(1), q(0), q(1), q(1), q(0)); }
MomentPolynomial affine_gamma() { return MomentPolynomial(q(1), q(0), q(0), q(1), q(0)); }
MomentPolynomial unit_gamma() { return MomentPolynomial(q(0), q(0), q(0), q(0), q(0)); }

}  // namespace

TEST_SUITE("shifts") {
  TEST_CASE("rho to gamma") {
    CHECK(coefficients_from_rho({q(4), q(1), q(2), q(0), q(1)}) == GammaCoefficients{q(3), q(1), q(1), q(1), q(0)});
    CHECK(coefficients_from_rho({q(1), q(1), q(0), q(0), q(1)}) == GammaCoefficients{q(1), q(0), q(1), q(1), q(0)});
    const MomentPolynomial g = gamma_from_rho({q(1), q(1), q(0), q(0), q(0)});
    CHECK(g(std::int64_t{3}, std::int64_t{4}) == 8);
    CHECK_THROWS_AS(gamma_from_rho({q(-1), q(1), q(0), q(0), q(0)}), PreconditionViolated);
  }

  TEST_CASE("gamma to rho") {
    const RhoSet r = rho_from_gamma(MomentPolynomial(q(3), q(1), q(1), q(1), q(0)));
    CHECK(r == RhoSet{q(4), q(1), q(2), q(0), q(1)});
    CHECK(r.rho1() == 6);
    CHECK(r.rho2() == 2);
    CHECK(rho_from_gamma(unit_gamma()) == RhoSet{q(0), q(0), q(0), q(0), q(0)});
  }

  TEST_CASE("rho are the differences at the origin") {
    RationalSampler s(3);
    for (int k = 0; k < 50; ++k) {
      const MomentPolynomial g = random_moment_polynomial(s);
      const Net2 net = gamma_net(g, 3, 3);
      const RhoSet r = rho_from_gamma(g);
      CHECK(forward_difference(net, {1, 0})(0, 0) == r.rho10);
      CHECK(forward_difference(net, {0, 1})(0, 0) == r.rho01);
      CHECK(forward_difference(net, {2, 0})(0, 0) == r.rho20);
      CHECK(forward_difference(net, {0, 2})(0, 0) == r.rho02);
      CHECK(forward_difference(net, {1, 1})(0, 0) == r.rho11);
      CHECK(rho_from_coefficients(coefficients_from_rho(r)) == r);
    }
  }

  TEST_CASE("weights") {
    const ShiftWeights p = shift_weights(product_gamma(), 4, 4);
    CHECK(p.w1sq(0, 0) == 2);
    CHECK(p.w1sq(1, 0) == q(3, 2));
    const ShiftWeights a = shift_weights(affine_gamma(), 4, 4);
    CHECK(a.w1sq(0, 0) == 2);
    CHECK(a.w2sq(1, 0) == q(3, 2));
    const ShiftWeights u = shift_weights(unit_gamma(), 3, 3);
    for (const auto& v : u.w1sq_values()) CHECK(v == 1);
    for (const auto& v : u.w2sq_values()) CHECK(v == 1);
    CHECK(cauchy_dual_weights(u) == u);
    CHECK(cauchy_dual_weights(p).w1sq(0, 0) == q(1, 2));
    CHECK_THROWS_AS(shift_weights(product_gamma(), 0, 3), DimensionError);
    CHECK_THROWS_AS(cauchy_dual_weights(ShiftWeights(1, 1, {q(0)}, {q(1)})), ParameterError);
  }

  TEST_CASE("telescoping and reciprocity") {
    RationalSampler s(5);
    for (int k = 0; k < 20; ++k) {
      const MomentPolynomial g = random_moment_polynomial(s);
      const ShiftWeights w = shift_weights(g, 8, 8);
      CHECK(w.commutes());
      CHECK(w.all_positive());
      const Net2 gamma = gamma_net(g, 8, 8);
      CHECK(moment_net(w, LatticePath::first_then_second) == gamma);
      CHECK(moment_net(w, LatticePath::second_then_first) == gamma);
      const Net2 dual = moment_net(cauchy_dual_weights(w));
      for (std::size_t m = 0; m < 8; ++m) {
        for (std::size_t n = 0; n < 8; ++n) CHECK(dual(m, n) * gamma(m, n) == 1);
      }
    }
  }

  TEST_CASE("expansive shifts have contractive duals") {
    RationalSampler s(9);
    int checked = 0;
    for (int k = 0; k < 60; ++k) {
      const MomentPolynomial g = random_moment_polynomial(s);
      if (!check_torally_expansive(g).expansive) continue;
      ++checked;
      CHECK(cauchy_dual_weights(shift_weights(g, 10, 10)).max_entry() <= 1);
    }
    CHECK(checked > 0);
  }

  TEST_CASE("toral isometries") {
    RationalSampler s(13);
    for (int k = 0; k < 20; ++k) {
      const MomentPolynomial g = random_moment_polynomial(s);
      CHECK(verify_toral_m_isometry(g, 3, 8, 8).holds);
      const LatticeFunction cubic = [&](std::int64_t m, std::int64_t n) -> Rational { return g(m, n) + Rational(m * m * m); };
      const IsometryResult r = verify_toral_m_isometry(cubic, 3, 8, 8);
      CHECK_FALSE(r.holds);
      REQUIRE(r.witness);
      CHECK(r.witness->order == MultiIndex2{3, 0});
    }
    CHECK(verify_toral_m_isometry(affine_gamma(), 2, 6, 6).holds);
    const IsometryResult r = verify_toral_m_isometry(product_gamma(), 2, 6, 6);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->order == MultiIndex2{1, 1});
    CHECK(r.witness->value == 1);
    CHECK_THROWS_AS(verify_toral_m_isometry(product_gamma(), 7, 6, 6), DimensionError);
    CHECK_THROWS_AS(verify_toral_m_isometry(product_gamma(), 0, 6, 6), DimensionError);
  }

  TEST_CASE("toral expansivity") {
    CHECK(check_torally_expansive(product_gamma()).expansive);
    CHECK(check_torally_expansive(unit_gamma()).expansive);
    const ExpansivityResult r = check_torally_expansive(MomentPolynomial(q(-1, 2), q(1, 4), q(0), q(0), q(0)));
    CHECK_FALSE(r.expansive);
    REQUIRE(r.point);
    CHECK(*r.point == GridPoint{0, 0});
    CHECK(r.direction == 1);
    CHECK(r.difference == q(-1, 4));
    CHECK_FALSE(r.beyond_window);
  }

  TEST_CASE("expansivity failure past the window") {
    // Delta_1 gamma = 21 + 2m - n and Delta_2 gamma = 20 - m + 2n; both stay
    // positive on 12x12, the first turns negative at (0, 22).
    const MomentPolynomial g(q(20), q(1), q(-1), q(19), q(1));
    const ExpansivityResult r = check_torally_expansive(g, 12, 12);
    CHECK_FALSE(r.expansive);
    CHECK(r.beyond_window);
    CHECK(*r.point == GridPoint{0, 22});
    CHECK(r.direction == 1);
    CHECK(r.difference == -1);
  }

  TEST_CASE("coordinate 2-isometries") {
    const MomentPolynomial g(q(3), q(1), q(1), q(1), q(0));
    CHECK(is_coordinate_2_isometry(g, 2));
    CHECK_FALSE(is_coordinate_2_isometry(g, 1));
    CHECK(is_coordinate_2_isometry(affine_gamma(), 1));
    CHECK(is_coordinate_2_isometry(affine_gamma(), 2));
    CHECK_THROWS_AS(is_coordinate_2_isometry(g, 3), ParameterError);
  }
}
