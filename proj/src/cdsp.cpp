#include "cdual/cdsp.hpp"

#include "cdual/errors.hpp"

namespace cdual {

std::string to_string(CdspVerdict v) {
  switch (v) {
    case CdspVerdict::subnormal:
      return "subnormal";
    case CdspVerdict::not_subnormal:
      return "not-subnormal";
    case CdspVerdict::precondition_violated:
      return "precondition-violated";
  }
  return "precondition-violated";
}

std::string to_string(CdspBranch b) {
  switch (b) {
    case CdspBranch::a:
      return "a";
    case CdspBranch::b_i:
      return "b-i";
    case CdspBranch::b_ii:
      return "b-ii";
    case CdspBranch::b_none:
      return "b-none";
    case CdspBranch::c_i:
      return "c-i";
    case CdspBranch::c_ii:
      return "c-ii";
    case CdspBranch::c_none:
      return "c-none";
  }
  return "a";
}

namespace {

// Indices of one coordinate pair: the "first" direction is the one that is
// not a 2-isometry.
struct Oriented {
  Rational r10, r01, r20, r02, r11, r1, r2;
  std::string i, j;  // digit strings for names, e.g. "1" and "2"
};

Oriented orient(const RhoSet& r, bool swap) {
  if (!swap) return {r.rho10, r.rho01, r.rho20, r.rho02, r.rho11, r.rho1(), r.rho2(), "1", "2"};
  return {r.rho01, r.rho10, r.rho02, r.rho20, r.rho11, r.rho2(), r.rho1(), "2", "1"};
}

std::string rho(const std::string& a, const std::string& b) {
  return "rho" + a + b;
}

CdspDecision evaluate_two_sided(const RhoSet& r, bool swap) {
  const Oriented o = orient(r, swap);
  const std::string r01 = swap ? rho("1", "0") : rho("0", "1");
  const std::string r20 = swap ? rho("0", "2") : rho("2", "0");
  const std::string r02 = swap ? rho("2", "0") : rho("0", "2");
  const std::string r1 = "rho" + o.i;
  const std::string r2 = "rho" + o.j;

  CdspDecision d;
  d.rho = r;
  d.gamma = coefficients_from_rho(r);
  DecisionTrace& t = d.trace;

  bool gate = t.add(r1 + " > 0", o.r1, o.r1 > 0);
  const Rational r1sq = o.r1 * o.r1;
  gate = t.add(r1 + "^2 >= 8 " + r20, r1sq, 8 * o.r20, r1sq >= 8 * o.r20) && gate;

  enum class Sub { i, ii, none } sub;
  if (o.r11 > 0) {
    sub = Sub::ii;
  } else if (o.r11 == 0 && o.r01 == 0 && o.r02 == 0) {
    sub = Sub::i;
  } else {
    sub = Sub::none;
  }

  bool sub_i = false;
  bool sub_ii = false;
  if (sub != Sub::ii) {
    sub_i = t.add("rho11 = 0", o.r11, o.r11 == 0);
    sub_i = t.add(r01 + " = 0", o.r01, o.r01 == 0) && sub_i;
    sub_i = t.add(r02 + " = 0", o.r02, o.r02 == 0) && sub_i;
  }
  if (sub != Sub::i) {
    sub_ii = t.add("rho11 > 0", o.r11, o.r11 > 0);
    sub_ii = t.add(r2 + " > 0", o.r2, o.r2 > 0) && sub_ii;
    const Rational sq = o.r11 * o.r11;
    const Rational cross = o.r20 * o.r02;
    sub_ii = t.add("rho11^2 >= " + r20 + " " + r02, sq, cross, sq >= cross) && sub_ii;
    const Rational lhs_base = o.r20 * o.r2 - o.r11 * o.r1;
    const Rational lhs = lhs_base * lhs_base;
    const Rational rhs = (4 * sq - cross) * (r1sq / 4 - 2 * o.r20);
    sub_ii = t.add("(" + r20 + " " + r2 + " - rho11 " + r1 + ")^2 <= (4 rho11^2 - " + r20 + " " + r02 + ")(" + r1 +
                       "^2/4 - 2 " + r20 + ")",
                   lhs, rhs, lhs <= rhs) &&
             sub_ii;
  }

  const bool ok = gate && (sub == Sub::i ? sub_i : sub == Sub::ii ? sub_ii : false);
  t.verdict = ok ? Verdict::yes : Verdict::no;
  d.verdict = ok ? CdspVerdict::subnormal : CdspVerdict::not_subnormal;
  if (swap) {
    d.branch = sub == Sub::i ? CdspBranch::c_i : sub == Sub::ii ? CdspBranch::c_ii : CdspBranch::c_none;
  } else {
    d.branch = sub == Sub::i ? CdspBranch::b_i : sub == Sub::ii ? CdspBranch::b_ii : CdspBranch::b_none;
  }
  if (sub == Sub::none) t.note = "neither sub-case applies";
  return d;
}

CdspDecision violated(const GammaCoefficients& c, std::string hypothesis, std::optional<GridPoint> witness,
                      std::string reason) {
  CdspDecision d;
  d.verdict = CdspVerdict::precondition_violated;
  d.gamma = c;
  d.rho = rho_from_coefficients(c);
  d.failed_hypothesis = std::move(hypothesis);
  d.witness = witness;
  d.trace = DecisionTrace::violated(std::move(reason));
  return d;
}

}  // namespace

CdspDecision evaluate_branch_b(const RhoSet& r) { return evaluate_two_sided(r, false); }
CdspDecision evaluate_branch_c(const RhoSet& r) { return evaluate_two_sided(r, true); }

CdspDecision decide_cdsp(const MomentPolynomial& g) {
  const GammaCoefficients& c = g.coefficients();
  const ExpansivityResult ex = check_torally_expansive(g);
  if (!ex.expansive) {
    return violated(c, "expansivity", ex.point,
                    "not torally expansive: Delta_" + std::to_string(ex.direction) + " gamma = " +
                        to_string(ex.difference) + " at (" + std::to_string(ex.point->m) + "," +
                        std::to_string(ex.point->n) + ")");
  }
  const IsometryResult iso = verify_toral_m_isometry(g, 3, 12, 12);
  if (!iso.holds) {
    const auto& w = *iso.witness;
    return violated(c, "3-isometry",
                    GridPoint{static_cast<std::int64_t>(w.base.i), static_cast<std::int64_t>(w.base.j)},
                    "third difference does not vanish");
  }

  const RhoSet r = rho_from_gamma(g);
  if (r.rho20 > 0) return evaluate_branch_b(r);
  if (r.rho02 > 0) return evaluate_branch_c(r);

  CdspDecision d;
  d.rho = r;
  d.gamma = c;
  d.branch = CdspBranch::a;
  const Rational rhs = r.rho10 * r.rho01;
  d.trace.add("rho11 <= rho10 rho01", r.rho11, rhs, r.rho11 <= rhs);
  d.trace.conclude();
  d.verdict = d.trace.verdict == Verdict::yes ? CdspVerdict::subnormal : CdspVerdict::not_subnormal;
  return d;
}

CdspDecision decide_cdsp(const GammaCoefficients& c) {
  const PositivityResult pos = MomentPolynomial::check(c);
  if (!pos.positive) return violated(c, "positivity", pos.witness, "gamma is not positive: " + pos.describe());
  return decide_cdsp(MomentPolynomial(c));
}

CdspDecision decide_cdsp_from_rho(const RhoSet& r) { return decide_cdsp(coefficients_from_rho(r)); }

namespace {

// Negated roots of 1 + a1 x + a2 x^2 = a2 (x + u)(x + v), when rational.
std::optional<std::pair<Rational, Rational>> split_b_part(const MomentPolynomial& g) {
  if (g.a2() <= 0) return std::nullopt;
  Rational root;
  if (!rational_sqrt(g.a1() * g.a1() - 4 * g.a2(), root)) return std::nullopt;
  // x = (-a1 -+ root) / (2 a2), negated.
  return std::make_pair((g.a1() - root) / (2 * g.a2()), (g.a1() + root) / (2 * g.a2()));
}

}  // namespace

std::optional<BiDeg21Params> to_bideg21(const MomentPolynomial& g) {
  if (g.c1() != 0 || g.b1() == 0 || g.b2() == 0) return std::nullopt;
  auto roots = split_b_part(g);
  if (!roots) return std::nullopt;
  return BiDeg21Params(g.a2(), roots->first, roots->second, g.b1(), g.b2() / g.b1());
}

std::optional<BiDeg22Params> to_bideg22(const MomentPolynomial& g) {
  if (g.c1() <= 0 || g.b1() == 0) return std::nullopt;
  auto roots = split_b_part(g);
  if (!roots) return std::nullopt;
  return BiDeg22Params(g.a2() / g.c1(), roots->first, roots->second, g.b1() / g.c1(), g.b2() / g.b1());
}

Net2 dual_moment_net(const MomentPolynomial& g, std::size_t width, std::size_t height) {
  return moment_net(cauchy_dual_weights(shift_weights(g, width, height)));
}

CrossValidation cross_validate(const MomentPolynomial& g, std::size_t width, std::size_t height,
                               std::size_t max_order, unsigned jobs) {
  CrossValidation out;
  out.decision = decide_cdsp(g);
  if (out.decision.verdict == CdspVerdict::precondition_violated) {
    throw PreconditionViolated("cross-validation needs the hypotheses: " + out.decision.trace.note);
  }
  out.oracle = check_complete_monotone(dual_moment_net(g, width, height), max_order, CmMode::joint, jobs);
  if (out.decision.verdict == CdspVerdict::subnormal) {
    out.consistent = out.oracle.passed;
    out.status = out.oracle.passed ? "oracle passed" : "oracle found a violation of a subnormal decision";
    return out;
  }
  out.consistent = true;
  if (out.oracle.passed && (width < kEscalatedWindow || height < kEscalatedWindow || max_order < kEscalatedOrder)) {
    out.escalated = true;
    out.oracle = check_complete_monotone(dual_moment_net(g, kEscalatedWindow, kEscalatedWindow), kEscalatedOrder,
                                         CmMode::joint, jobs);
  }
  out.witness_found = !out.oracle.passed;
  out.status = out.witness_found ? "witness found"
                                 : "witness not found within budget; enlarge the window or the order";
  return out;
}

}  // namespace cdual
