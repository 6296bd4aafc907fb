#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cdual/deciders.hpp"
#include "cdual/quadext.hpp"
#include "cdual/rational.hpp"

namespace cdual {

// sum_{k>=0} z^k / (k!)^2, the entire function with K(-x) = J0(2 sqrt x) and
// K(x) = I0(2 sqrt x) for x >= 0.
struct KernelValue {
  double z = 0.0;
  double value = 0.0;
  int terms_used = 0;
};

// Sums until the tail is provably below rel_tol * max(1, |partial sum|): once
// |z| < (k+1)^2 / 2 the term ratios stay below 1/2, so the tail after term k
// is at most twice the next term. Throws DomainError for non-finite z or
// rel_tol outside (0,1).
KernelValue kernel_eval(double z, double rel_tol);

// Representing density of 1/p for the (2,1) family on (0,1)^2:
//   w(s,t) = (s/t^c0)^(a1-1) t^(c0(b1+b2-a1)-1) / (a0 t^c0) * K(-c2 log(s/t^c0) log t)
// for s <= t^c0 and 0 otherwise.
class BiDeg21Density {
 public:
  // Throws ParameterError if a0 or a1 is zero, PreconditionViolated if p is
  // not positive on Z_+^2.
  explicit BiDeg21Density(const BiDeg21Params& p);

  // Throws DomainError unless s, t lie in (0,1).
  double operator()(double s, double t) const;
  // Same density from log s and log t (both negative).
  double from_logs(double log_s, double log_t) const;

  struct Parts {
    bool inside = false;       // s <= t^c0
    double log_prefactor = 0;  // log of the factor in front of the kernel
    double kernel = 0;
  };
  Parts parts(double log_s, double log_t) const;

  const BiDeg21Params& params() const { return params_; }
  double c0() const { return c0_; }
  double c2() const { return c2_; }

 private:
  BiDeg21Params params_;
  double a0_, a1_, b1_, b2_, c0_, c2_;
};

double weight21_eval(const BiDeg21Params& p, double s, double t);

// w_m(t) = (t^(r1-1) - t^(r2-1)) / (r2 - r1) with r1 > r2 > 0 the negated
// roots of p(m, .): integrates t^y against it to 1/p(m, y).
class LineDensity22 {
 public:
  // Throws DegenerateDensityError when b(m)^2 = 4 a(m), PreconditionViolated
  // when b(m)^2 < 4 a(m) or a root is not negative.
  LineDensity22(const BiDeg22Params& p, std::int64_t m);

  double operator()(double t) const;
  double r1() const { return r1_; }
  double r2() const { return r2_; }
  std::int64_t m() const { return m_; }
  const BiDeg22Params& params() const { return params_; }

 private:
  BiDeg22Params params_;
  std::int64_t m_;
  double r1_, r2_;
};

double weight22_line_eval(const BiDeg22Params& p, std::int64_t m, double t);

// n + slope m + constant, with coefficients in Q(sqrt d).
struct LinearForm {
  QuadExtScalar slope;
  QuadExtScalar constant;
};

// p = p1 p2 - c2 over Q(sqrt d), d = b0^2 - 4 a0.
struct Factorization22 {
  Rational radicand;
  QuadExtScalar c0;  // sqrt(d) / 2
  QuadExtScalar c1;  // (b0^2 b1 - 2 a0 (a1 + a2)) / (2 sqrt d)
  LinearForm p1;
  LinearForm p2;
  Rational c2;  // -a0 (a0 (a2 - a1)^2 - b0^2 (b1 - a1)(a2 - b1)) / d

  QuadExtScalar p1_at(const Rational& m, const Rational& n) const;
  QuadExtScalar p2_at(const Rational& m, const Rational& n) const;

  // b0 b1/2 + c1 > 0, b0 b1/2 - c1 > 0 and c2 >= 0: the facts that make
  // 1/p = sum_k c2^k / (p1 p2)^(k+1) a sum of completely monotone nets.
  bool geometric_chain_holds() const;
};

// Throws WrongCaseError unless b0^2 > 4 a0. The identity p = p1 p2 - c2 is
// checked coefficient by coefficient before returning.
Factorization22 factorize22(const BiDeg22Params& p);

// Coefficients of p - (p1 p2 - c2) in the monomials 1, m, n, m^2, m n, n^2.
std::array<QuadExtScalar, 6> factorization_residual(const BiDeg22Params& p, const Factorization22& f);

struct MomentReport {
  std::int64_t m = 0;
  std::int64_t n = 0;
  double integral = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  long evaluations = 0;
  bool passed = false;
};

inline constexpr long kQuadratureBudget = 1'000'000;

// Integrates t^n s^m w(s,t) over (0,1)^2 and compares with 1/p(m,n). The
// s-boundary is flattened by s = u t^c0, and the endpoint powers by
// u = v^(1/A), t = w^(1/B). Throws NumericalBudgetError if the budget runs out.
MomentReport verify_moment_integral(const BiDeg21Params& p, std::int64_t m, std::int64_t n, double abs_tol);

// Integrates t^n w_m(t) over (0,1) and compares with 1/p(m,n).
MomentReport verify_moment_integral(const BiDeg22Params& p, std::int64_t m, std::int64_t n, double abs_tol);

// Density grids at cell centers of an N x N (or N) partition of (0,1).
std::string density21_csv(const BiDeg21Density& w, std::size_t resolution);
std::string line_density_csv(const LineDensity22& w, std::size_t resolution);

}  // namespace cdual
