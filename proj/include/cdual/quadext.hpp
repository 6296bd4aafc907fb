#pragma once

#include <string>

#include "cdual/rational.hpp"

namespace cdual {

// u + v sqrt(d) in Q(sqrt d), d a fixed positive rational. Mixing scalars with
// different radicands throws ParameterError unless one of them is rational
// (v = 0).
class QuadExtScalar {
 public:
  QuadExtScalar() : u_(0), v_(0), d_(1) {}
  QuadExtScalar(Rational u, Rational v, Rational d);
  // Embeds a rational.
  static QuadExtScalar rational(Rational u, const Rational& d) { return {std::move(u), Rational(0), d}; }
  // sqrt(d)
  static QuadExtScalar root(const Rational& d) { return {Rational(0), Rational(1), d}; }

  const Rational& rational_part() const { return u_; }
  const Rational& radical_part() const { return v_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return v_ == 0; }

  QuadExtScalar operator+(const QuadExtScalar& o) const;
  QuadExtScalar operator-(const QuadExtScalar& o) const;
  QuadExtScalar operator*(const QuadExtScalar& o) const;
  QuadExtScalar operator*(const Rational& c) const { return {u_ * c, v_ * c, d_}; }
  QuadExtScalar operator-() const { return {-u_, -v_, d_}; }

  // Exact equality of the represented real numbers.
  bool operator==(const QuadExtScalar& o) const;

  // Exact sign of u + v sqrt(d).
  int sign() const;
  // Exact comparison with a rational.
  int compare(const Rational& r) const { return (*this - rational(r, d_)).sign(); }

  double to_double() const;
  std::string str() const;

 private:
  const Rational& common_radicand(const QuadExtScalar& o) const;
  Rational u_, v_, d_;
};

}  // namespace cdual
