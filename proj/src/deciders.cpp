#include "cdual/deciders.hpp"

#include <algorithm>
#include <string>

#include "cdual/errors.hpp"

namespace cdual {
namespace {

Rational at(std::int64_t m) { return Rational(Integer(static_cast<long>(m))); }

std::optional<std::int64_t> first_natural_root(const Poly& p) {
  if (p.degree() < 1) return std::nullopt;
  const std::int64_t last = sign_stable_from(p);
  for (std::int64_t n = 0; n <= last; ++n) {
    if (p(n) == 0) return n;
  }
  return std::nullopt;
}

std::string point(const GridPoint& g) { return "(" + std::to_string(g.m) + "," + std::to_string(g.n) + ")"; }

// Records the grid positivity check; returns a precondition_violated trace
// when it fails.
std::optional<DecisionTrace> require_positive(const YQuadratic& p, DecisionTrace& trace) {
  PositivityResult pos = decide_positivity(p);
  if (pos.positive) {
    trace.add("p > 0 on Z_+^2", p(0, 0), true);
    return std::nullopt;
  }
  DecisionTrace out = DecisionTrace::violated("p is not positive on Z_+^2: " + pos.describe());
  out.add("p > 0 on Z_+^2", pos.witness_value, false);
  return out;
}

}  // namespace

BiDeg21Params::BiDeg21Params(Rational b0, Rational b1, Rational b2, Rational a0, Rational a1)
    : b0_(std::move(b0)), b1_(std::move(b1)), b2_(std::move(b2)), a0_(std::move(a0)), a1_(std::move(a1)) {
  if (b1_ > b2_) std::swap(b1_, b2_);
}

Rational BiDeg21Params::c0() const {
  if (a0_ == 0) throw ParameterError("c0 = b0/a0 needs a0 != 0");
  return b0_ / a0_;
}

Rational BiDeg21Params::c1() const { return (a1_ - b2_) * (a1_ - b1_); }

Rational BiDeg21Params::c2() const { return c0() * c1(); }

YQuadratic BiDeg21Params::polynomial() const {
  return {Poly::linear_factor(b0_, b1_) * Poly{b2_, Rational(1)}, Poly::linear_factor(a0_, a1_), Rational(0)};
}

YQuadratic GeneralBiDeg21::polynomial() const {
  return {Poly::linear_factor(b0, b1) * Poly{b2, Rational(1)}, Poly{a2, a1}, Rational(0)};
}

BiDeg22Params::BiDeg22Params(Rational a0, Rational a1, Rational a2, Rational b0, Rational b1)
    : a0_(std::move(a0)), a1_(std::move(a1)), a2_(std::move(a2)), b0_(std::move(b0)), b1_(std::move(b1)) {
  if (a1_ > a2_) std::swap(a1_, a2_);
}

YQuadratic BiDeg22Params::polynomial() const { return {a_poly(), b_poly(), Rational(1)}; }

DecisionTrace decide_quadratic_reciprocal_cm(const Quadratic1D& p) {
  const Poly poly = p.polynomial();
  if (poly.is_zero()) throw ParameterError("quadratic has all coefficients zero");
  if (auto n = first_natural_root(poly)) {
    DecisionTrace t = DecisionTrace::violated("p(" + std::to_string(*n) + ") = 0");
    t.add("p(n) != 0 on Z_+", at(*n), false);
    return t;
  }

  DecisionTrace t;
  t.add("a > 0", p.a, p.a > 0);
  if (p.c != 0) {
    t.add("b > 0", p.b, p.b > 0);
    t.add("c > 0", p.c, p.c > 0);
    const Rational disc = p.b * p.b - 4 * p.a * p.c;
    t.add("b^2 - 4ac >= 0", disc, disc >= 0);
  } else if (p.b != 0) {
    t.add("b >= 0", p.b, p.b >= 0);
  }
  return t.conclude();
}

DecisionTrace decide_bideg21_cm(const BiDeg21Params& p) {
  if (p.a0() == 0 || p.a1() == 0) {
    throw ParameterError("(2,1) family needs a0 != 0 and a1 != 0; use check_bideg21_necessary for a general a-part");
  }
  DecisionTrace t;
  if (auto bad = require_positive(p.polynomial(), t)) return *bad;
  // Positivity forces a0, a1, b0 > 0, and b1 > 0 once b1 <= a1 <= b2 holds
  // (p(0,0) = b0 b1 b2). Recorded for the audit trail.
  t.add("a0 > 0", p.a0(), p.a0() > 0);
  t.add("a1 > 0", p.a1(), p.a1() > 0);
  t.add("b0 > 0", p.b0(), p.b0() > 0);
  t.add("b1 > 0", p.b1(), p.b1() > 0);
  t.add("b1 <= a1", p.b1(), p.a1(), p.b1() <= p.a1());
  t.add("a1 <= b2", p.a1(), p.b2(), p.a1() <= p.b2());
  return t.conclude();
}

DecisionTrace check_bideg21_necessary(const GeneralBiDeg21& q) {
  const YQuadratic poly = q.polynomial();
  PositivityResult pos = decide_positivity(poly);
  if (!pos.positive && pos.witness_value == 0) {
    DecisionTrace t = DecisionTrace::violated("q vanishes at " + point(*pos.witness));
    t.add("q != 0 on Z_+^2", pos.witness_value, false);
    return t;
  }

  DecisionTrace t;
  t.add("q > 0 on Z_+^2", pos.positive ? poly(0, 0) : pos.witness_value, pos.positive);
  t.add("b0 > 0", q.b0, q.b0 > 0);
  t.add("b1 > 0", q.b1, q.b1 > 0);
  t.add("b2 > 0", q.b2, q.b2 > 0);
  t.add("a1 >= 0", q.a1, q.a1 >= 0);
  t.add("a2 >= 0", q.a2, q.a2 >= 0);
  const bool same = (q.a1 == 0 && q.a2 == 0) || (q.a1 > 0 && q.a2 > 0);
  t.add("a1, a2 both zero or both positive", q.a1, q.a2, same);
  t.conclude();
  if (t.verdict == Verdict::yes) {
    if (q.a1 == 0) {
      t.note = "necessary-passed; a-part vanishes, the net is constant in n";
    } else {
      t.note = "necessary-passed; full decision requires the normalized form (decide_bideg21_cm)";
    }
  } else if (!pos.positive) {
    t.note = "q takes a negative value: " + pos.describe();
  }
  return t;
}

std::optional<BiDeg21Params> normalize_bideg21(const GeneralBiDeg21& q) {
  if (q.a1 == 0) return std::nullopt;
  return BiDeg21Params(q.b0, q.b1, q.b2, q.a1, q.a2 / q.a1);
}

DecisionTrace decide_bideg22_cm(const BiDeg22Params& p) {
  if (p.a0() == 0) {
    throw ParameterError(
        "a0 = 0 drops the x-degree of a(x); the (2,2) criterion does not apply (reduce to a lower-degree family)");
  }
  DecisionTrace t;
  if (auto bad = require_positive(p.polynomial(), t)) return *bad;
  t.add("a1 > 0", p.a1(), p.a1() > 0);
  t.add("a2 > 0", p.a2(), p.a2() > 0);
  t.add("b0 > 0", p.b0(), p.b0() > 0);
  t.add("b1 > 0", p.b1(), p.b1() > 0);
  const Rational b0sq = p.b0() * p.b0();
  t.add("b0^2 >= 4 a0", b0sq, 4 * p.a0(), b0sq >= 4 * p.a0());
  const Rational lhs = p.a0() * (p.a2() - p.a1()) * (p.a2() - p.a1());
  const Rational rhs = b0sq * (p.b1() - p.a1()) * (p.a2() - p.b1());
  t.add("a0 (a2 - a1)^2 <= b0^2 (b1 - a1)(a2 - b1)", lhs, rhs, lhs <= rhs);
  t.conclude();
  t.note = "discriminant profile degree " + std::to_string(p.discriminant_profile().degree());
  return t;
}

DecisionTrace check_discriminant_profile(const Poly& q, const Poly& r, const Poly& s, std::size_t scan_bound) {
  if (q.is_zero() && r.is_zero() && s.is_zero()) throw ParameterError("q, r and s are all zero");
  if (scan_bound == 0) throw ParameterError("scan bound must be positive");
  for (std::size_t m = 0; m < scan_bound; ++m) {
    const Rational x = at(static_cast<std::int64_t>(m));
    const Rational qm = q(x), rm = r(x), sm = s(x);
    for (std::size_t n = 0; n < scan_bound; ++n) {
      const Rational y = at(static_cast<std::int64_t>(n));
      if (qm + rm * y + sm * y * y == 0) {
        DecisionTrace t = DecisionTrace::violated("p vanishes at (" + std::to_string(m) + "," + std::to_string(n) + ")");
        t.add("p != 0 on scan window", Rational(0), false);
        return t;
      }
    }
  }

  DecisionTrace t;
  // The zero polynomial has degree -infinity; it is reported as -1.
  const int dq = q.degree(), dr = r.degree(), ds = s.degree();
  bool balanced;
  if (q.is_zero() || s.is_zero()) {
    balanced = true;
  } else if (r.is_zero()) {
    balanced = false;
  } else {
    balanced = dq + ds <= 2 * dr;
  }
  const int lhs_deg = (q.is_zero() || s.is_zero()) ? -1 : dq + ds;
  t.add("deg q + deg s <= 2 deg r", Rational(lhs_deg), Rational(r.is_zero() ? -1 : 2 * dr), balanced);

  const Poly disc = r * r - q * s * Rational(4);
  auto bad = first_sign_violation(disc, 0, /*strict=*/false);
  if (bad) {
    t.add("r^2 - 4 q s >= 0 on Z_+", disc(*bad), false);
    t.note = "discriminant negative at m = " + std::to_string(*bad);
  } else {
    t.add("r^2 - 4 q s >= 0 on Z_+", disc(std::int64_t{0}), true);
  }
  return t.conclude();
}

std::vector<Rational> line_restriction_sequence(const BiDeg22Params& p, const Rational& slope,
                                                const Rational& intercept, std::size_t length) {
  if (slope <= 0 || intercept <= 0) throw ParameterError("slope and intercept must be positive");
  if (length == 0) throw ParameterError("length must be positive");
  const YQuadratic poly = p.polynomial();
  std::vector<Rational> out;
  out.reserve(length);
  for (std::size_t m = 0; m < length; ++m) {
    const Rational x = at(static_cast<std::int64_t>(m));
    const Rational y = slope * x + intercept;
    const Rational v = poly(x, y);
    if (v <= 0) {
      throw PreconditionViolated("p(" + to_string(x) + "," + to_string(y) + ") = " + to_string(v) + " <= 0");
    }
    out.push_back(1 / v);
  }
  return out;
}

}  // namespace cdual
