#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cdual/netcore.hpp"
#include "cdual/positivity.hpp"
#include "cdual/rational.hpp"

namespace cdual {

// Differences of gamma at the origin: rho_ij = Delta_1^i Delta_2^j gamma (0).
struct RhoSet {
  Rational rho10, rho01, rho20, rho02, rho11;

  Rational rho1() const { return 2 * rho10 - rho20; }
  Rational rho2() const { return 2 * rho01 - rho02; }
  bool operator==(const RhoSet&) const = default;
};

// Raw coefficients of
//   gamma(m, n) = 1 + a1 m + a2 m^2 + (b1 m + b2) n + c1 n^2,
// not yet checked for positivity.
struct GammaCoefficients {
  Rational a1, a2, b1, b2, c1;
  bool operator==(const GammaCoefficients&) const = default;

  YQuadratic polynomial() const;
};

// Moment function gamma(alpha) = |W^alpha e0|^2 of a toral 3-isometric
// weighted 2-shift. Positive on Z_+^2 by construction, which forces a2 >= 0
// and c1 >= 0.
class MomentPolynomial {
 public:
  // Throws PreconditionViolated naming a grid point where gamma <= 0.
  explicit MomentPolynomial(GammaCoefficients c);
  MomentPolynomial(Rational a1, Rational a2, Rational b1, Rational b2, Rational c1);

  // Positivity verdict for raw coefficients, without throwing.
  static PositivityResult check(const GammaCoefficients& c);

  const GammaCoefficients& coefficients() const { return c_; }
  const Rational& a1() const { return c_.a1; }
  const Rational& a2() const { return c_.a2; }
  const Rational& b1() const { return c_.b1; }
  const Rational& b2() const { return c_.b2; }
  const Rational& c1() const { return c_.c1; }

  Rational operator()(const Rational& m, const Rational& n) const;
  Rational operator()(std::int64_t m, std::int64_t n) const;

  bool operator==(const MomentPolynomial&) const = default;

 private:
  GammaCoefficients c_;
};

GammaCoefficients coefficients_from_rho(const RhoSet& r);
// Throws PreconditionViolated when the resulting gamma is not positive.
MomentPolynomial gamma_from_rho(const RhoSet& r);
RhoSet rho_from_gamma(const MomentPolynomial& g);
RhoSet rho_from_coefficients(const GammaCoefficients& c);

// Squared weights on a width x height window:
//   w1sq(m, n) = gamma(m+1, n) / gamma(m, n),  w2sq(m, n) = gamma(m, n+1) / gamma(m, n).
// The real weights are their square roots; nothing here needs them.
class ShiftWeights {
 public:
  ShiftWeights(std::size_t width, std::size_t height, std::vector<Rational> w1sq, std::vector<Rational> w2sq);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  const Rational& w1sq(std::size_t m, std::size_t n) const { return w1sq_[m * height_ + n]; }
  const Rational& w2sq(std::size_t m, std::size_t n) const { return w2sq_[m * height_ + n]; }
  const std::vector<Rational>& w1sq_values() const { return w1sq_; }
  const std::vector<Rational>& w2sq_values() const { return w2sq_; }

  // w1sq(a) w2sq(a + e1) = w2sq(a) w1sq(a + e2) wherever both sides fit.
  bool commutes() const;
  bool all_positive() const;
  // Largest squared weight in either direction.
  Rational max_entry() const;

  bool operator==(const ShiftWeights&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Rational> w1sq_;
  std::vector<Rational> w2sq_;
};

// Throws DimensionError on an empty window.
ShiftWeights shift_weights(const MomentPolynomial& g, std::size_t width, std::size_t height);

// Entrywise reciprocal. Throws ParameterError on a zero weight.
ShiftWeights cauchy_dual_weights(const ShiftWeights& w);

enum class LatticePath { first_then_second, second_then_first };

// |W^alpha e0|^2 on the window as a telescoping product of squared weights,
// along (0,0) -> (m,0) -> (m,n) or (0,0) -> (0,n) -> (m,n).
Net2 moment_net(const ShiftWeights& w, LatticePath path = LatticePath::first_then_second);

// gamma itself on the window.
Net2 gamma_net(const MomentPolynomial& g, std::size_t width, std::size_t height);

struct DifferenceWitness {
  MultiIndex2 order;
  MultiIndex2 base;
  Rational value;
};

struct IsometryResult {
  bool holds = false;
  std::optional<DifferenceWitness> witness;
};

using LatticeFunction = std::function<Rational(std::int64_t, std::int64_t)>;

// On basis vectors the toral m-isometry identity reads
//   sum_{alpha <= beta} (-1)^|alpha| C(beta, alpha) gamma(delta + alpha) / gamma(delta) = 0,
// since |W^alpha e_delta|^2 = gamma(delta + alpha) / gamma(delta). Up to the
// sign (-1)^|beta| and the positive factor 1/gamma(delta) this is
// Delta^beta gamma (delta). Checked for every |beta| = order and every delta in
// the window; the first failure in (beta, delta) order is the witness.
// Throws DimensionError unless 1 <= order <= min(width, height).
IsometryResult verify_toral_m_isometry(const LatticeFunction& gamma, std::size_t order, std::size_t width,
                                       std::size_t height);
IsometryResult verify_toral_m_isometry(const MomentPolynomial& g, std::size_t order, std::size_t width,
                                       std::size_t height);

struct ExpansivityResult {
  bool expansive = false;
  // First (alpha, j) with gamma(alpha + e_j) < gamma(alpha).
  std::optional<GridPoint> point;
  int direction = 0;
  Rational difference;  // Delta_j gamma (alpha)
  bool beyond_window = false;
};

// Window scan plus the exact tail argument: Delta_1 gamma = rho10 + rho20 m +
// rho11 n and Delta_2 gamma = rho01 + rho11 m + rho02 n are affine, so they
// are nonnegative on Z_+^2 iff all five rho are. A violation past the window
// is located on the coordinate axes.
ExpansivityResult check_torally_expansive(const MomentPolynomial& g, std::size_t width = 12,
                                          std::size_t height = 12);

// j = 1: a2 = 0; j = 2: c1 = 0. Throws ParameterError for other j.
bool is_coordinate_2_isometry(const MomentPolynomial& g, int j);

}  // namespace cdual
