#include "cdual/shifts.hpp"

#include <algorithm>

#include "cdual/errors.hpp"

namespace cdual {

YQuadratic GammaCoefficients::polynomial() const { return {Poly{Rational(1), a1, a2}, Poly{b2, b1}, c1}; }

PositivityResult MomentPolynomial::check(const GammaCoefficients& c) { return decide_positivity(c.polynomial()); }

MomentPolynomial::MomentPolynomial(GammaCoefficients c) : c_(std::move(c)) {
  PositivityResult pos = check(c_);
  if (!pos.positive) throw PreconditionViolated("gamma is not positive on Z_+^2: " + pos.describe());
}

MomentPolynomial::MomentPolynomial(Rational a1, Rational a2, Rational b1, Rational b2, Rational c1)
    : MomentPolynomial(GammaCoefficients{std::move(a1), std::move(a2), std::move(b1), std::move(b2), std::move(c1)}) {}

Rational MomentPolynomial::operator()(const Rational& m, const Rational& n) const {
  return 1 + c_.a1 * m + c_.a2 * m * m + (c_.b1 * m + c_.b2) * n + c_.c1 * n * n;
}

Rational MomentPolynomial::operator()(std::int64_t m, std::int64_t n) const {
  return (*this)(Rational(Integer(static_cast<long>(m))), Rational(Integer(static_cast<long>(n))));
}

GammaCoefficients coefficients_from_rho(const RhoSet& r) {
  return {r.rho10 - r.rho20 / 2, r.rho20 / 2, r.rho11, r.rho01 - r.rho02 / 2, r.rho02 / 2};
}

MomentPolynomial gamma_from_rho(const RhoSet& r) { return MomentPolynomial(coefficients_from_rho(r)); }

RhoSet rho_from_coefficients(const GammaCoefficients& c) {
  return {c.a1 + c.a2, c.b2 + c.c1, 2 * c.a2, 2 * c.c1, c.b1};
}

RhoSet rho_from_gamma(const MomentPolynomial& g) { return rho_from_coefficients(g.coefficients()); }

ShiftWeights::ShiftWeights(std::size_t width, std::size_t height, std::vector<Rational> w1sq,
                           std::vector<Rational> w2sq)
    : width_(width), height_(height), w1sq_(std::move(w1sq)), w2sq_(std::move(w2sq)) {
  if (width_ == 0 || height_ == 0) throw DimensionError("weight window must be at least 1x1");
  if (w1sq_.size() != width_ * height_ || w2sq_.size() != width_ * height_) {
    throw DimensionError("weight grids must have width*height entries");
  }
}

bool ShiftWeights::commutes() const {
  for (std::size_t m = 0; m + 1 < width_; ++m) {
    for (std::size_t n = 0; n + 1 < height_; ++n) {
      if (w1sq(m, n) * w2sq(m + 1, n) != w2sq(m, n) * w1sq(m, n + 1)) return false;
    }
  }
  return true;
}

bool ShiftWeights::all_positive() const {
  auto pos = [](const Rational& x) { return x > 0; };
  return std::all_of(w1sq_.begin(), w1sq_.end(), pos) && std::all_of(w2sq_.begin(), w2sq_.end(), pos);
}

Rational ShiftWeights::max_entry() const {
  Rational best = w1sq_.front();
  for (const auto& x : w1sq_) best = std::max(best, x);
  for (const auto& x : w2sq_) best = std::max(best, x);
  return best;
}

ShiftWeights shift_weights(const MomentPolynomial& g, std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw DimensionError("weight window must be at least 1x1");
  const Net2 gamma = gamma_net(g, width + 1, height + 1);
  for (const auto& v : gamma.values()) {
    if (v <= 0) throw PreconditionViolated("gamma is not positive on the window");
  }
  std::vector<Rational> w1, w2;
  w1.reserve(width * height);
  w2.reserve(width * height);
  for (std::size_t m = 0; m < width; ++m) {
    for (std::size_t n = 0; n < height; ++n) {
      w1.push_back(gamma(m + 1, n) / gamma(m, n));
      w2.push_back(gamma(m, n + 1) / gamma(m, n));
    }
  }
  return ShiftWeights(width, height, std::move(w1), std::move(w2));
}

ShiftWeights cauchy_dual_weights(const ShiftWeights& w) {
  auto invert = [](const std::vector<Rational>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& x : v) {
      if (x == 0) throw ParameterError("zero weight has no Cauchy dual");
      out.push_back(1 / x);
    }
    return out;
  };
  return ShiftWeights(w.width(), w.height(), invert(w.w1sq_values()), invert(w.w2sq_values()));
}

Net2 moment_net(const ShiftWeights& w, LatticePath path) {
  Net2 out(w.width(), w.height());
  for (std::size_t m = 0; m < w.width(); ++m) {
    for (std::size_t n = 0; n < w.height(); ++n) {
      Rational prod(1);
      if (path == LatticePath::first_then_second) {
        for (std::size_t i = 0; i < m; ++i) prod *= w.w1sq(i, 0);
        for (std::size_t j = 0; j < n; ++j) prod *= w.w2sq(m, j);
      } else {
        for (std::size_t j = 0; j < n; ++j) prod *= w.w2sq(0, j);
        for (std::size_t i = 0; i < m; ++i) prod *= w.w1sq(i, n);
      }
      out(m, n) = prod;
    }
  }
  return out;
}

Net2 gamma_net(const MomentPolynomial& g, std::size_t width, std::size_t height) {
  return net_from_function(
      [&](MultiIndex2 a) -> std::optional<Rational> {
        return g(static_cast<std::int64_t>(a.i), static_cast<std::int64_t>(a.j));
      },
      width, height);
}

namespace {

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

IsometryResult verify_toral_m_isometry(const LatticeFunction& gamma, std::size_t order, std::size_t width,
                                       std::size_t height) {
  if (order == 0 || order > std::min(width, height)) {
    throw DimensionError("isometry order " + std::to_string(order) + " needs 1 <= order <= min(width, height)");
  }
  IsometryResult out;
  for (std::size_t i = 0; i <= order; ++i) {
    const MultiIndex2 beta{i, order - i};
    for (std::size_t m = 0; m < width; ++m) {
      for (std::size_t n = 0; n < height; ++n) {
        Rational diff(0);
        for (std::size_t p = 0; p <= beta.i; ++p) {
          for (std::size_t q = 0; q <= beta.j; ++q) {
            Rational term = gamma(static_cast<std::int64_t>(m + p), static_cast<std::int64_t>(n + q));
            term *= binomial(beta.i, p) * binomial(beta.j, q);
            if ((beta.i - p + beta.j - q) % 2 == 1) {
              diff -= term;
            } else {
              diff += term;
            }
          }
        }
        if (diff != 0) {
          out.witness = DifferenceWitness{beta, {m, n}, diff};
          return out;
        }
      }
    }
  }
  out.holds = true;
  return out;
}

IsometryResult verify_toral_m_isometry(const MomentPolynomial& g, std::size_t order, std::size_t width,
                                       std::size_t height) {
  return verify_toral_m_isometry([&](std::int64_t m, std::int64_t n) { return g(m, n); }, order, width, height);
}

ExpansivityResult check_torally_expansive(const MomentPolynomial& g, std::size_t width, std::size_t height) {
  ExpansivityResult out;
  const RhoSet r = rho_from_gamma(g);
  auto d1 = [&](std::int64_t m, std::int64_t n) -> Rational { return r.rho10 + r.rho20 * m + r.rho11 * n; };
  auto d2 = [&](std::int64_t m, std::int64_t n) -> Rational { return r.rho01 + r.rho11 * m + r.rho02 * n; };
  for (std::size_t mi = 0; mi < width; ++mi) {
    for (std::size_t ni = 0; ni < height; ++ni) {
      const auto m = static_cast<std::int64_t>(mi);
      const auto n = static_cast<std::int64_t>(ni);
      for (int j = 1; j <= 2; ++j) {
        Rational d = j == 1 ? d1(m, n) : d2(m, n);
        if (d < 0) {
          out.point = GridPoint{m, n};
          out.direction = j;
          out.difference = d;
          return out;
        }
      }
    }
  }

  // Past the window only a negative slope can produce a violation, and the
  // first one along an axis is at floor(c / -slope) + 1.
  struct Candidate {
    GridPoint point;
    int direction;
  };
  std::vector<Candidate> found;
  auto axis = [&](const Rational& c, const Rational& slope, bool along_m, int j) {
    if (slope >= 0) return;
    const std::int64_t k = to_int64(floor_of(c / -slope)) + 1;
    found.push_back({along_m ? GridPoint{k, 0} : GridPoint{0, k}, j});
  };
  axis(r.rho10, r.rho20, true, 1);
  axis(r.rho10, r.rho11, false, 1);
  axis(r.rho01, r.rho11, true, 2);
  axis(r.rho01, r.rho02, false, 2);
  if (found.empty()) {
    out.expansive = true;
    return out;
  }
  auto best = std::min_element(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.point.m != b.point.m) return a.point.m < b.point.m;
    if (a.point.n != b.point.n) return a.point.n < b.point.n;
    return a.direction < b.direction;
  });
  out.point = best->point;
  out.direction = best->direction;
  out.difference = best->direction == 1 ? d1(best->point.m, best->point.n) : d2(best->point.m, best->point.n);
  out.beyond_window = true;
  return out;
}

bool is_coordinate_2_isometry(const MomentPolynomial& g, int j) {
  if (j == 1) return g.a2() == 0;
  if (j == 2) return g.c1() == 0;
  throw ParameterError("coordinate must be 1 or 2");
}

}  // namespace cdual
