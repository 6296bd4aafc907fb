#include "cdual/quadext.hpp"

#include <cmath>

#include "cdual/errors.hpp"

namespace cdual {

QuadExtScalar::QuadExtScalar(Rational u, Rational v, Rational d) : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
  if (d_ <= 0) throw ParameterError("radicand must be positive, got " + to_string(d_));
}

const Rational& QuadExtScalar::common_radicand(const QuadExtScalar& o) const {
  if (d_ == o.d_ || o.is_rational()) return d_;
  if (is_rational()) return o.d_;
  throw ParameterError("mixed radicands " + to_string(d_) + " and " + to_string(o.d_));
}

QuadExtScalar QuadExtScalar::operator+(const QuadExtScalar& o) const {
  return {u_ + o.u_, v_ + o.v_, common_radicand(o)};
}

QuadExtScalar QuadExtScalar::operator-(const QuadExtScalar& o) const { return *this + (-o); }

QuadExtScalar QuadExtScalar::operator*(const QuadExtScalar& o) const {
  const Rational& d = common_radicand(o);
  return {u_ * o.u_ + v_ * o.v_ * d, u_ * o.v_ + v_ * o.u_, d};
}

bool QuadExtScalar::operator==(const QuadExtScalar& o) const { return (*this - o).sign() == 0; }

int QuadExtScalar::sign() const {
  const int su = sgn(u_);
  const int sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: compare u^2 with v^2 d.
  const int c = cmp(u_ * u_, v_ * v_ * d_);
  if (c == 0) return 0;
  return c > 0 ? su : sv;
}

double QuadExtScalar::to_double() const { return u_.get_d() + v_.get_d() * std::sqrt(d_.get_d()); }

std::string QuadExtScalar::str() const {
  if (is_rational()) return to_string(u_);
  return to_string(u_) + " + " + to_string(v_) + "*sqrt(" + to_string(d_) + ")";
}

}  // namespace cdual
