#include "cdual/measures.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "cdual/errors.hpp"
#include "cdual/quadrature.hpp"

namespace cdual {

KernelValue kernel_eval(double z, double rel_tol) {
  if (!std::isfinite(z)) throw DomainError("kernel argument must be finite");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("rel_tol must lie in (0,1)");
  KernelValue out;
  out.z = z;
  double term = 1.0;  // z^k / (k!)^2
  double sum = 1.0;
  const double az = std::abs(z);
  for (int k = 0;; ++k) {
    const double kp1 = static_cast<double>(k + 1);
    const double next = term * z / (kp1 * kp1);
    // Ratios after the next term are at most |z|/(k+2)^2; below 1/2 the
    // remaining tail is bounded by 2|next|.
    const double kp2 = kp1 + 1.0;
    if (az < 0.5 * kp2 * kp2 && 2.0 * std::abs(next) < rel_tol * std::max(1.0, std::abs(sum))) {
      out.value = sum;
      out.terms_used = k + 1;
      return out;
    }
    sum += next;
    term = next;
  }
}

BiDeg21Density::BiDeg21Density(const BiDeg21Params& p) : params_(p) {
  if (p.a0() == 0 || p.a1() == 0) throw ParameterError("(2,1) density needs a0 != 0 and a1 != 0");
  PositivityResult pos = decide_positivity(p.polynomial());
  if (!pos.positive) throw PreconditionViolated("p is not positive on Z_+^2: " + pos.describe());
  a0_ = p.a0().get_d();
  a1_ = p.a1().get_d();
  b1_ = p.b1().get_d();
  b2_ = p.b2().get_d();
  c0_ = p.c0().get_d();
  c2_ = p.c2().get_d();
}

BiDeg21Density::Parts BiDeg21Density::parts(double log_s, double log_t) const {
  Parts out;
  const double log_ratio = log_s - c0_ * log_t;  // log(s / t^c0)
  if (log_ratio > 0.0) return out;
  out.inside = true;
  out.log_prefactor = (a1_ - 1.0) * log_ratio + (c0_ * (b1_ + b2_ - a1_) - 1.0 - c0_) * log_t - std::log(a0_);
  out.kernel = kernel_eval(-c2_ * log_ratio * log_t, 1e-15).value;
  return out;
}

double BiDeg21Density::from_logs(double log_s, double log_t) const {
  Parts p = parts(log_s, log_t);
  return p.inside ? std::exp(p.log_prefactor) * p.kernel : 0.0;
}

double BiDeg21Density::operator()(double s, double t) const {
  if (!(s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0)) throw DomainError("density is defined on (0,1)^2");
  return from_logs(std::log(s), std::log(t));
}

double weight21_eval(const BiDeg21Params& p, double s, double t) { return BiDeg21Density(p)(s, t); }

LineDensity22::LineDensity22(const BiDeg22Params& p, std::int64_t m) : params_(p), m_(m) {
  if (m < 0) throw DomainError("m must be nonnegative");
  const Rational x(Integer(static_cast<long>(m)));
  const Rational b = p.b_poly()(x);
  const Rational disc = p.discriminant_profile()(x);
  if (disc == 0) {
    throw DegenerateDensityError("b(m)^2 = 4 a(m) at m = " + std::to_string(m) + "; the line density degenerates");
  }
  if (disc < 0) throw PreconditionViolated("b(m)^2 < 4 a(m) at m = " + std::to_string(m));
  // r2 = (b - sqrt(disc))/2 must be positive; r1 > r2 then follows.
  const QuadExtScalar r2{b / 2, Rational(-1, 2), disc};
  if (r2.sign() <= 0) throw PreconditionViolated("p(m, .) has a nonnegative root at m = " + std::to_string(m));
  const double root = std::sqrt(disc.get_d());
  r1_ = 0.5 * (b.get_d() + root);
  r2_ = r2.to_double();
}

double LineDensity22::operator()(double t) const {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("line density is defined on (0,1)");
  const double lt = std::log(t);
  const double gap = r1_ - r2_;
  // t^(r2-1) (1 - t^gap) / gap
  return std::exp((r2_ - 1.0) * lt) * (-std::expm1(gap * lt)) / gap;
}

double weight22_line_eval(const BiDeg22Params& p, std::int64_t m, double t) { return LineDensity22(p, m)(t); }

QuadExtScalar Factorization22::p1_at(const Rational& m, const Rational& n) const {
  return QuadExtScalar::rational(n, radicand) + p1.slope * m + p1.constant;
}

QuadExtScalar Factorization22::p2_at(const Rational& m, const Rational& n) const {
  return QuadExtScalar::rational(n, radicand) + p2.slope * m + p2.constant;
}

bool Factorization22::geometric_chain_holds() const {
  return p1.constant.sign() > 0 && p2.constant.sign() > 0 && c2 >= 0;
}

std::array<QuadExtScalar, 6> factorization_residual(const BiDeg22Params& p, const Factorization22& f) {
  const Rational& d = f.radicand;
  auto rat = [&](const Rational& r) { return QuadExtScalar::rational(r, d); };
  const auto& s1 = f.p1.slope;
  const auto& k1 = f.p1.constant;
  const auto& s2 = f.p2.slope;
  const auto& k2 = f.p2.constant;
  // p1 p2 - c2 = n^2 + (s1 + s2) m n + (k1 + k2) n + s1 s2 m^2 + (s1 k2 + s2 k1) m + k1 k2 - c2
  const std::array<QuadExtScalar, 6> product = {k1 * k2 - rat(f.c2), s1 * k2 + s2 * k1, k1 + k2,
                                                s1 * s2,              s1 + s2,           rat(Rational(1))};
  const std::array<Rational, 6> target = {p.a0() * p.a1() * p.a2(), p.a0() * (p.a1() + p.a2()), p.b0() * p.b1(),
                                          p.a0(),                    p.b0(),                     Rational(1)};
  std::array<QuadExtScalar, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = rat(target[k]) - product[k];
  return out;
}

Factorization22 factorize22(const BiDeg22Params& p) {
  const Rational d = p.b0() * p.b0() - 4 * p.a0();
  if (d <= 0) {
    throw WrongCaseError("factorize22 needs b0^2 > 4 a0 (got b0^2 - 4 a0 = " + to_string(d) +
                         "); the perfect-square and linear profiles factor over Q directly");
  }
  Factorization22 f;
  f.radicand = d;
  f.c0 = QuadExtScalar(Rational(0), Rational(1, 2), d);
  // 1/(2 sqrt d) = sqrt(d) / (2 d)
  const Rational c1_num = p.b0() * p.b0() * p.b1() - 2 * p.a0() * (p.a1() + p.a2());
  f.c1 = QuadExtScalar(Rational(0), c1_num / (2 * d), d);
  const Rational gap = p.a2() - p.a1();
  // Constant term of b(m)^2/4 - a(m) - (c0 m + c1)^2.
  f.c2 = -p.a0() * (p.a0() * gap * gap - p.b0() * p.b0() * (p.b1() - p.a1()) * (p.a2() - p.b1())) / d;

  const auto half_b0 = QuadExtScalar::rational(p.b0() / 2, d);
  const auto half_b0b1 = QuadExtScalar::rational(p.b0() * p.b1() / 2, d);
  f.p1 = {half_b0 + f.c0, half_b0b1 + f.c1};
  f.p2 = {half_b0 - f.c0, half_b0b1 - f.c1};

  for (const auto& r : factorization_residual(p, f)) {
    if (r.sign() != 0) throw Error("factorization identity failed: residual coefficient " + r.str());
  }
  return f;
}

namespace {

MomentReport finish(MomentReport report, const QuadratureResult& q, double abs_tol) {
  report.integral = q.value;
  report.residual = std::abs(q.value - report.expected);
  report.evaluations = q.evaluations;
  report.passed = report.residual < abs_tol;
  if (!q.converged) {
    throw NumericalBudgetError("quadrature did not reach the tolerance within " + std::to_string(kQuadratureBudget) +
                                   " evaluations",
                               report.residual, q.evaluations);
  }
  return report;
}

}  // namespace

MomentReport verify_moment_integral(const BiDeg21Params& p, std::int64_t m, std::int64_t n, double abs_tol) {
  if (m < 0 || n < 0) throw DomainError("moment indices must be nonnegative");
  if (!(abs_tol > 0.0)) throw DomainError("abs_tol must be positive");
  const BiDeg21Density w(p);
  const double c0 = w.c0();
  const double a = static_cast<double>(m) + p.a1().get_d();
  const double b = static_cast<double>(n) + c0 * (static_cast<double>(m) + Rational(p.b1() + p.b2() - p.a1()).get_d());
  if (!(a > 0.0 && b > 0.0)) throw DomainError("moment integral diverges for these parameters");

  MomentReport report;
  report.m = m;
  report.n = n;
  report.expected = Rational(1 / p(Rational(Integer(static_cast<long>(m))), Rational(Integer(static_cast<long>(n)))))
                        .get_d();

  const double dm = static_cast<double>(m), dn = static_cast<double>(n);
  // s = u t^c0, u = v^(1/a), t = x^(1/b); x stands in for the second
  // coordinate to avoid clashing with the density name.
  auto integrand = [&](double v, double x) {
    const double log_u = std::log(v) / a;
    const double log_t = std::log(x) / b;
    const double log_s = log_u + c0 * log_t;
    const BiDeg21Density::Parts parts = w.parts(log_s, log_t);
    if (!parts.inside) return 0.0;
    const double log_jacobian = c0 * log_t + (1.0 / a - 1.0) * std::log(v) + (1.0 / b - 1.0) * std::log(x);
    const double log_monomial = dn * log_t + dm * log_s;
    return std::exp(log_monomial + log_jacobian + parts.log_prefactor) * parts.kernel / (a * b);
  };

  AdaptiveIntegrator integrator(kQuadratureBudget);
  return finish(report, integrator.integrate_unit_square(integrand, abs_tol / 4.0), abs_tol);
}

MomentReport verify_moment_integral(const BiDeg22Params& p, std::int64_t m, std::int64_t n, double abs_tol) {
  if (m < 0 || n < 0) throw DomainError("moment indices must be nonnegative");
  if (!(abs_tol > 0.0)) throw DomainError("abs_tol must be positive");
  const LineDensity22 w(p, m);
  MomentReport report;
  report.m = m;
  report.n = n;
  report.expected = Rational(1 / p(Rational(Integer(static_cast<long>(m))), Rational(Integer(static_cast<long>(n)))))
                        .get_d();

  // t = v^(1/e) absorbs t^(n + r2 - 1).
  const double e = static_cast<double>(n) + w.r2();
  const double dn = static_cast<double>(n);
  auto integrand = [&](double v) {
    const double log_t = std::log(v) / e;
    const double t = std::exp(log_t);
    if (!(t > 0.0 && t < 1.0)) return 0.0;
    const double jacobian = std::exp((1.0 / e - 1.0) * std::log(v)) / e;
    return std::exp(dn * log_t) * w(t) * jacobian;
  };
  AdaptiveIntegrator integrator(kQuadratureBudget);
  return finish(report, integrator.integrate(integrand, 0.0, 1.0, abs_tol / 4.0), abs_tol);
}

std::string density21_csv(const BiDeg21Density& w, std::size_t resolution) {
  std::ostringstream os;
  os << std::setprecision(17) << "s,t,w\n";
  for (std::size_t i = 0; i < resolution; ++i) {
    const double s = (static_cast<double>(i) + 0.5) / static_cast<double>(resolution);
    for (std::size_t j = 0; j < resolution; ++j) {
      const double t = (static_cast<double>(j) + 0.5) / static_cast<double>(resolution);
      os << s << "," << t << "," << w(s, t) << "\n";
    }
  }
  return os.str();
}

std::string line_density_csv(const LineDensity22& w, std::size_t resolution) {
  std::ostringstream os;
  os << std::setprecision(17) << "t,w\n";
  for (std::size_t j = 0; j < resolution; ++j) {
    const double t = (static_cast<double>(j) + 0.5) / static_cast<double>(resolution);
    os << t << "," << w(t) << "\n";
  }
  return os.str();
}

}  // namespace cdual
