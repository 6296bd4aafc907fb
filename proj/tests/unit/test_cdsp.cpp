#include <doctest.h>

#include <functional>

#include "cdual/cdsp.hpp"
#include "cdual/corpus.hpp"
#include "cdual/errors.hpp"
#include "helpers.hpp"

using namespace cdual;
using testing::q;

namespace {

std::vector<MomentPolynomial> split_draws(bool with_c1, std::size_t count) {
  RationalSampler s(2);
  std::vector<MomentPolynomial> out;
  for (int k = 0; k < 100000 && out.size() < count; ++k) {
    const Rational u = s.positive(3, 3), v = s.positive(3, 3);
    const GammaCoefficients c{u + v, u * v, s.uniform(0, 4, 3), s.uniform(-1, 4, 3),
                              with_c1 ? s.positive(2, 3) : Rational(0)};
    if (!MomentPolynomial::check(c).positive) continue;
    const MomentPolynomial g(c);
    if (decide_cdsp(g).verdict == CdspVerdict::precondition_violated) continue;
    if (with_c1 ? !to_bideg22(g) : !to_bideg21(g)) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_SUITE("cdsp") {
  TEST_CASE("worked examples") {
    for (const CdspExample& e : cdsp_examples()) {
      CAPTURE(e.label);
      const CdspDecision d = decide_cdsp_from_rho(e.rho);
      CHECK(d.verdict == e.verdict);
      REQUIRE(d.branch);
      CHECK(*d.branch == e.branch);
    }
    const CdspDecision a = decide_cdsp_from_rho({q(1), q(1), q(0), q(0), q(1)});
    CHECK(a.verdict == CdspVerdict::subnormal);
    CHECK(to_string(*a.branch) == "a");
    REQUIRE(a.trace.find("rho11 <= rho10 rho01"));

    const CdspDecision b = decide_cdsp_from_rho({q(4), q(5), q(2), q(0), q(1)});
    CHECK(b.verdict == CdspVerdict::not_subnormal);
    CHECK(*b.branch == CdspBranch::b_ii);
  }

  TEST_CASE("branch b trace values") {
    const CdspDecision d = decide_cdsp_from_rho({q(4), q(1), q(2), q(0), q(1)});
    const Check* gate = d.trace.find("rho1^2 >= 8 rho20");
    REQUIRE(gate);
    CHECK(std::get<std::pair<Rational, Rational>>(gate->value) == std::pair<Rational, Rational>{q(36), q(16)});
    const Check* last = d.trace.find(
        "(rho20 rho2 - rho11 rho1)^2 <= (4 rho11^2 - rho20 rho02)(rho1^2/4 - 2 rho20)");
    REQUIRE(last);
    CHECK(std::get<std::pair<Rational, Rational>>(last->value) == std::pair<Rational, Rational>{q(4), q(20)});
  }

  TEST_CASE("neither sub-case") {
    const CdspDecision d = decide_cdsp_from_rho({q(3), q(1), q(2), q(0), q(0)});
    CHECK(d.verdict == CdspVerdict::not_subnormal);
    CHECK(*d.branch == CdspBranch::b_none);
    CHECK(d.trace.find("rho01 = 0"));
    CHECK(d.trace.find("rho11 > 0"));
    const CrossValidation cv = cross_validate(gamma_from_rho({q(3), q(1), q(2), q(0), q(0)}), 12, 12, 6);
    CHECK(cv.consistent);
    CHECK(cv.witness_found);
    CHECK(cv.oracle.witness->order == MultiIndex2{3, 0});
    CHECK(cv.oracle.witness->base == MultiIndex2{0, 6});
    CHECK(cv.oracle.witness->value == q(1, 385));
  }

  TEST_CASE("branch c mirrors branch b") {
    const CdspDecision c = decide_cdsp_from_rho({q(1), q(4), q(0), q(2), q(1)});
    CHECK(c.verdict == CdspVerdict::subnormal);
    CHECK(*c.branch == CdspBranch::c_ii);
    CHECK(*decide_cdsp_from_rho({q(0), q(4), q(0), q(2), q(0)}).branch == CdspBranch::c_i);
  }

  TEST_CASE("hypotheses are checked") {
    const CdspDecision neg = decide_cdsp(GammaCoefficients{q(-3), q(1), q(0), q(0), q(0)});
    CHECK(neg.verdict == CdspVerdict::precondition_violated);
    CHECK(neg.failed_hypothesis == "positivity");
    CHECK_FALSE(neg.branch);

    const CdspDecision ex = decide_cdsp(GammaCoefficients{q(-1, 2), q(1, 4), q(0), q(0), q(0)});
    CHECK(ex.verdict == CdspVerdict::precondition_violated);
    CHECK(ex.failed_hypothesis == "expansivity");
    REQUIRE(ex.witness);
    CHECK(*ex.witness == GridPoint{0, 0});
  }

  TEST_CASE("cross-validation") {
    const CrossValidation ok = cross_validate(gamma_from_rho({q(1), q(1), q(0), q(0), q(1)}), 12, 12, 6);
    CHECK(ok.consistent);
    CHECK(ok.oracle.passed);

    const CrossValidation bad = cross_validate(gamma_from_rho({q(1), q(1), q(0), q(0), q(2)}), 12, 12, 6);
    CHECK(bad.decision.verdict == CdspVerdict::not_subnormal);
    CHECK(bad.consistent);
    CHECK(bad.witness_found);
    CHECK_FALSE(bad.escalated);
    CHECK(bad.oracle.witness->order == MultiIndex2{3, 3});

    CHECK(cross_validate(gamma_from_rho({q(4), q(1), q(2), q(0), q(1)}), 12, 12, 6).oracle.passed);
    CHECK_THROWS_AS(cross_validate(MomentPolynomial(q(-1, 2), q(1, 4), q(0), q(0), q(0)), 12, 12, 6),
                    PreconditionViolated);
  }

  TEST_CASE("dual moment net is 1/gamma") {
    const MomentPolynomial g = gamma_from_rho({q(4), q(1), q(2), q(0), q(1)});
    const Net2 d = dual_moment_net(g, 6, 6);
    for (std::size_t m = 0; m < 6; ++m) {
      for (std::size_t n = 0; n < 6; ++n) {
        CHECK(d(m, n) == 1 / g(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)));
      }
    }
  }

  TEST_CASE("both second differences positive, symmetric instance") {
    const RhoSet r{q(4), q(4), q(2), q(2), q(2)};
    const CdspDecision b = evaluate_branch_b(r);
    const CdspDecision c = evaluate_branch_c(r);
    CHECK(b.verdict == CdspVerdict::subnormal);
    CHECK(c.verdict == b.verdict);
    CHECK(*decide_cdsp_from_rho(r).branch == CdspBranch::b_ii);
    CHECK(cross_validate(gamma_from_rho(r), 12, 12, 6).oracle.passed);
  }

  TEST_CASE("branches b and c can disagree") {
    const RhoSet r{q(6), q(3), q(1, 3), q(5, 2), q(5, 2)};
    CHECK(evaluate_branch_b(r).verdict == CdspVerdict::subnormal);
    CHECK(evaluate_branch_c(r).verdict == CdspVerdict::not_subnormal);
    const CrossValidation cv = cross_validate(gamma_from_rho(r), 16, 16, 8);
    CHECK_FALSE(cv.consistent);
    REQUIRE(cv.oracle.witness);
    CHECK(cv.oracle.witness->order == MultiIndex2{0, 8});
    CHECK(cv.oracle.witness->base == MultiIndex2{1, 0});
  }

  TEST_CASE("subnormal verdict with a non-CM row") {
    // Row n = 2 is 13 + 17/3 m + 2/3 m^2, which has no real roots.
    const RhoSet r{q(3), q(5), q(4, 3), q(2), q(5, 3)};
    const MomentPolynomial g = gamma_from_rho(r);
    CHECK(decide_cdsp(g).verdict == CdspVerdict::subnormal);
    CHECK(decide_quadratic_reciprocal_cm({q(13), q(17, 3), q(2, 3)}).verdict == Verdict::no);
    CHECK(g(std::int64_t{4}, std::int64_t{2}) == 13 + q(17, 3) * 4 + q(2, 3) * 16);
    const auto p = to_bideg22(g);
    REQUIRE(p);
    CHECK(decide_bideg22_cm(*p).verdict == Verdict::no);
    const CmVerdict v = check_complete_monotone(dual_moment_net(g, 30, 30), 24, CmMode::separate);
    REQUIRE(v.witness);
    CHECK(v.witness->order == MultiIndex2{23, 0});
  }

  TEST_CASE("agrees with the (2,1) decider when c1 = 0") {
    const auto draws = split_draws(false, 300);
    CHECK(draws.size() == 300);
    for (const MomentPolynomial& g : draws) {
      const bool cdsp = decide_cdsp(g).verdict == CdspVerdict::subnormal;
      const bool cm = decide_bideg21_cm(*to_bideg21(g)).verdict == Verdict::yes;
      CHECK(cdsp == cm);
    }
  }

  TEST_CASE("agrees with the (2,2) decider when c1 > 0" * doctest::should_fail()) {
    const auto draws = split_draws(true, 300);
    for (const MomentPolynomial& g : draws) {
      const bool cdsp = decide_cdsp(g).verdict == CdspVerdict::subnormal;
      const bool cm = decide_bideg22_cm(*to_bideg22(g)).verdict == Verdict::yes;
      CAPTURE(to_string(rho_from_gamma(g).rho10));
      CHECK(cdsp == cm);
    }
  }

  TEST_CASE("converters") {
    const MomentPolynomial g(q(3), q(2), q(1), q(2), q(0));
    const auto p = to_bideg21(g);
    REQUIRE(p);
    // 1 + 3x + 2x^2 = 2 (x + 1/2)(x + 1), n-part (x + 2) y
    CHECK(*p == BiDeg21Params(q(2), q(1, 2), q(1), q(1), q(2)));
    for (std::int64_t m = 0; m < 4; ++m) {
      for (std::int64_t n = 0; n < 4; ++n) CHECK((*p)(q(m), q(n)) == g(m, n));
    }
    const MomentPolynomial h(q(3), q(2), q(1), q(2), q(2));
    const auto p22 = to_bideg22(h);
    REQUIRE(p22);
    for (std::int64_t m = 0; m < 4; ++m) {
      for (std::int64_t n = 0; n < 4; ++n) CHECK((*p22)(q(m), q(n)) * 2 == h(m, n));
    }
    CHECK_FALSE(to_bideg21(h));
    CHECK_FALSE(to_bideg22(g));
    CHECK_FALSE(to_bideg21(MomentPolynomial(q(3), q(1), q(1), q(2), q(0))));
  }
}
