#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cdual/poly.hpp"
#include "cdual/rational.hpp"

namespace cdual {

// p(x, y) = q(x) + r(x) y + s y^2 with a constant leading coefficient s in y.
// Every two-variable family handled here (the (2,1) and (2,2) shapes and the
// moment polynomial of a toral 3-isometry) has this form.
struct YQuadratic {
  Poly q;
  Poly r;
  Rational s;

  Rational operator()(const Rational& x, const Rational& y) const { return q(x) + r(x) * y + s * y * y; }
  Rational operator()(std::int64_t x, std::int64_t y) const {
    return (*this)(Rational(Integer(static_cast<long>(x))), Rational(Integer(static_cast<long>(y))));
  }
};

struct GridPoint {
  std::int64_t m = 0;
  std::int64_t n = 0;
  bool operator==(const GridPoint&) const = default;
};

struct PositivityResult {
  bool positive = false;
  // A grid point with p <= 0, present exactly when positive is false.
  std::optional<GridPoint> witness;
  Rational witness_value;
  // Last m examined exhaustively; points beyond it were settled symbolically.
  std::int64_t scanned_through = 0;

  std::string describe() const;
};

// Decides p(m, n) > 0 for all (m, n) in Z_+^2, exactly.
//
// For fixed m the minimum over n in Z_+ sits at n = 0 when r(m) >= 0 and at
// the integer nearest the vertex v(m) = -r(m)/(2s) otherwise. Far out in m,
// the sign of r and of E = 4 s q - r^2 settles (root bounds), which reduces
// the infinite grid to a finite scan plus one univariate tail check. When E
// is constant the vertex fractional part is periodic in m, and one period is
// scanned.
PositivityResult decide_positivity(const YQuadratic& p);

}  // namespace cdual
