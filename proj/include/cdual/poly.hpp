#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "cdual/rational.hpp"

namespace cdual {

// Univariate polynomial with rational coefficients, lowest degree first.
// Trailing zero coefficients are trimmed, so the zero polynomial has no
// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c) { return Poly{c}; }
  // c * (x + root)
  static Poly linear_factor(const Rational& c, const Rational& root) { return Poly{c * root, c}; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  Rational operator()(std::int64_t x) const { return (*this)(Rational(Integer(static_cast<long>(x)))); }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& c) const;
  Poly operator-() const;
  bool operator==(const Poly& other) const = default;

  // 1 + max |a_k / a_n|; every complex root has modulus below it.
  // Requires degree >= 1.
  Rational cauchy_bound() const;

  // p(x+1) - p(x)
  Poly forward_difference() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Largest integer beyond which a nonconstant polynomial keeps the sign of its
// leading coefficient: ceil(cauchy_bound). Constants return 0.
std::int64_t sign_stable_from(const Poly& p);

// Exhaustive-scan limit for the root-bound sign checks below.
inline constexpr std::int64_t kMaxSignScan = 10'000'000;

// First integer m >= from with p(m) <= 0 (strict) or p(m) < 0 (non-strict),
// or nullopt when none exists. Decided exactly: integers beyond the Cauchy
// bound carry the sign of the leading coefficient, everything below it is
// scanned. Throws ParameterError if the scan would exceed kMaxSignScan.
std::optional<std::int64_t> first_sign_violation(const Poly& p, std::int64_t from, bool strict);

}  // namespace cdual
