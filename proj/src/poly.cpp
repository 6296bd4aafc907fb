#include "cdual/poly.hpp"

#include <algorithm>
#include <string>

#include "cdual/errors.hpp"

namespace cdual {

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = coefficient(static_cast<int>(k)) + other.coefficient(static_cast<int>(k));
  }
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

Rational Poly::cauchy_bound() const {
  if (degree() < 1) throw ParameterError("Cauchy bound needs a nonconstant polynomial");
  Rational lead = abs(leading());
  Rational worst = 0;
  for (int k = 0; k < degree(); ++k) {
    Rational ratio = abs(coeffs_[static_cast<std::size_t>(k)]) / lead;
    if (ratio > worst) worst = ratio;
  }
  return worst + 1;
}

Poly Poly::forward_difference() const {
  // p(x+1) via Horner on the shifted argument.
  Poly shifted;
  const Poly x_plus_one{Rational(1), Rational(1)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) shifted = shifted * x_plus_one + Poly{*it};
  return shifted - *this;
}

std::int64_t sign_stable_from(const Poly& p) {
  if (p.degree() < 1) return 0;
  return to_int64(ceil_of(p.cauchy_bound()));
}

std::optional<std::int64_t> first_sign_violation(const Poly& p, std::int64_t from, bool strict) {
  auto bad = [strict](const Rational& v) { return strict ? sgn(v) <= 0 : sgn(v) < 0; };
  if (p.degree() < 1) {
    return bad(p.coefficient(0)) ? std::optional<std::int64_t>(from) : std::nullopt;
  }
  const std::int64_t stable = sign_stable_from(p);
  // Beyond `stable` the polynomial has no roots, so either every value there
  // is bad (negative leading coefficient) or none is.
  const std::int64_t last = std::max(from, stable);
  if (last - from > kMaxSignScan) {
    throw ParameterError("root bound " + std::to_string(stable) + " exceeds the exhaustive scan limit");
  }
  for (std::int64_t m = from; m <= last; ++m) {
    if (bad(p(m))) return m;
  }
  return std::nullopt;
}

}  // namespace cdual
