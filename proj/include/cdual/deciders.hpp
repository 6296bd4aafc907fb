#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cdual/poly.hpp"
#include "cdual/positivity.hpp"
#include "cdual/rational.hpp"
#include "cdual/trace.hpp"

namespace cdual {

// p(x) = a + b x + c x^2
struct Quadratic1D {
  Rational a, b, c;
  Poly polynomial() const { return Poly{a, b, c}; }
};

// p(x, y) = b0 (x + b1)(x + b2) + a0 (x + a1) y, with b1 <= b2.
class BiDeg21Params {
 public:
  // Swaps b1 and b2 if needed.
  BiDeg21Params(Rational b0, Rational b1, Rational b2, Rational a0, Rational a1);

  const Rational& b0() const { return b0_; }
  const Rational& b1() const { return b1_; }
  const Rational& b2() const { return b2_; }
  const Rational& a0() const { return a0_; }
  const Rational& a1() const { return a1_; }

  // c0 = b0/a0, c1 = (a1 - b2)(a1 - b1), c2 = c0 c1. Need a0 != 0.
  Rational c0() const;
  Rational c1() const;
  Rational c2() const;

  YQuadratic polynomial() const;
  Rational operator()(const Rational& x, const Rational& y) const { return polynomial()(x, y); }

  bool operator==(const BiDeg21Params&) const = default;

 private:
  Rational b0_, b1_, b2_, a0_, a1_;
};

// q(x, y) = b0 (x + b1)(x + b2) + (a1 x + a2) y; the a-part is not normalized.
struct GeneralBiDeg21 {
  Rational b0, b1, b2, a1, a2;
  YQuadratic polynomial() const;
};

// p(x, y) = a0 (x + a1)(x + a2) + b0 (x + b1) y + y^2, with a1 <= a2.
class BiDeg22Params {
 public:
  BiDeg22Params(Rational a0, Rational a1, Rational a2, Rational b0, Rational b1);

  const Rational& a0() const { return a0_; }
  const Rational& a1() const { return a1_; }
  const Rational& a2() const { return a2_; }
  const Rational& b0() const { return b0_; }
  const Rational& b1() const { return b1_; }

  Poly a_poly() const { return Poly::linear_factor(a0_, a1_) * Poly{a2_, Rational(1)}; }
  Poly b_poly() const { return Poly::linear_factor(b0_, b1_); }
  // b(x)^2 - 4 a(x)
  Poly discriminant_profile() const { return b_poly() * b_poly() - a_poly() * Rational(4); }

  YQuadratic polynomial() const;
  Rational operator()(const Rational& x, const Rational& y) const { return polynomial()(x, y); }

  bool operator==(const BiDeg22Params&) const = default;

 private:
  Rational a0_, a1_, a2_, b0_, b1_;
};

// Reciprocal of a one-variable quadratic: completely monotone iff a, b, c > 0
// and the discriminant is nonnegative; affine and constant p handled too.
// Throws ParameterError for the zero polynomial. A nonnegative integer root
// yields precondition_violated.
DecisionTrace decide_quadratic_reciprocal_cm(const Quadratic1D& p);

// Joint complete monotonicity of 1/p for the (2,1) family: b1 <= a1 <= b2.
// Throws ParameterError when a0 = 0 or a1 = 0.
DecisionTrace decide_bideg21_cm(const BiDeg21Params& p);

// Necessary conditions for 1/q in the general a1 x + a2 form. A yes verdict
// means only that the necessary set passed; see normalize_bideg21.
DecisionTrace check_bideg21_necessary(const GeneralBiDeg21& q);

// Rewrites a1 x + a2 as a1 (x + a2/a1) when a1 != 0.
std::optional<BiDeg21Params> normalize_bideg21(const GeneralBiDeg21& q);

// Joint complete monotonicity of 1/p for the (2,2) family. Throws
// ParameterError when a0 = 0 (the bi-degree drops).
DecisionTrace decide_bideg22_cm(const BiDeg22Params& p);

// Necessary conditions for p = q(x) + r(x) y + s(x) y^2: degree balance and
// r^2 - 4 q s >= 0 on Z_+. p must not vanish on the scan_bound x scan_bound
// window.
DecisionTrace check_discriminant_profile(const Poly& q, const Poly& r, const Poly& s, std::size_t scan_bound);

// 1/p(m, slope m + intercept) for m = 0 .. length-1. Throws ParameterError for
// nonpositive slope, intercept or length, PreconditionViolated if p <= 0 at a
// sampled point.
std::vector<Rational> line_restriction_sequence(const BiDeg22Params& p, const Rational& slope,
                                                const Rational& intercept, std::size_t length);

}  // namespace cdual
