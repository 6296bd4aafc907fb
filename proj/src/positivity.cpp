#include "cdual/positivity.hpp"

#include <algorithm>

#include "cdual/errors.hpp"

namespace cdual {
namespace {

Rational at(std::int64_t m) { return Rational(Integer(static_cast<long>(m))); }

struct RowMin {
  std::int64_t n;
  Rational value;
};

// Minimum of p(m, .) over Z_+ for s > 0.
RowMin row_min(const YQuadratic& p, std::int64_t m) {
  const Rational x = at(m);
  const Rational vertex = -p.r(x) / (2 * p.s);
  if (sgn(vertex) <= 0) return {0, p.q(x)};
  const std::int64_t lo = to_int64(floor_of(vertex));
  const std::int64_t hi = to_int64(ceil_of(vertex));
  Rational v_lo = p(m, lo);
  Rational v_hi = p(m, hi);
  return v_hi < v_lo ? RowMin{hi, v_hi} : RowMin{lo, v_lo};
}

// Smallest n with p(m, n) <= 0, given that p(m, n_min) <= 0 and p(m, .) is
// nonincreasing on [0, n_min].
std::int64_t first_nonpositive_in_row(const YQuadratic& p, std::int64_t m, std::int64_t n_min) {
  std::int64_t lo = 0, hi = n_min;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (sgn(p(m, mid)) <= 0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

PositivityResult found(const YQuadratic& p, std::int64_t m, std::int64_t n, std::int64_t scanned) {
  PositivityResult out;
  out.positive = false;
  out.witness = GridPoint{m, n};
  out.witness_value = p(m, n);
  out.scanned_through = scanned;
  return out;
}

PositivityResult proven(std::int64_t scanned) {
  PositivityResult out;
  out.positive = true;
  out.scanned_through = scanned;
  return out;
}

void check_scan(std::int64_t limit) {
  if (limit > kMaxSignScan) {
    throw ParameterError("positivity scan bound " + std::to_string(limit) + " exceeds the exhaustive scan limit");
  }
}

PositivityResult scan_rows(const YQuadratic& p, std::int64_t limit) {
  check_scan(limit);
  for (std::int64_t m = 0; m <= limit; ++m) {
    RowMin best = row_min(p, m);
    if (sgn(best.value) <= 0) return found(p, m, first_nonpositive_in_row(p, m, best.n), m);
  }
  return proven(limit);
}

PositivityResult decide_linear_in_y(const YQuadratic& p) {
  // s = 0: positive on the grid iff q > 0 and r >= 0 on Z_+.
  auto q_bad = first_sign_violation(p.q, 0, /*strict=*/true);
  auto r_bad = first_sign_violation(p.r, 0, /*strict=*/false);
  const std::int64_t scanned = std::max(sign_stable_from(p.q), sign_stable_from(p.r));
  if (!q_bad && !r_bad) return proven(scanned);
  if (q_bad && (!r_bad || *q_bad <= *r_bad)) return found(p, *q_bad, 0, *q_bad);
  const std::int64_t m = *r_bad;
  const Rational x = at(m);
  // q(m) + r(m) n <= 0 once n >= q(m) / (-r(m)).
  Integer n = ceil_of(p.q(x) / (-p.r(x)));
  if (n < 0) n = 0;
  return found(p, m, to_int64(n), m);
}

Integer lcm_of_denominators(const Poly& poly) {
  Integer out = 1;
  for (const auto& c : poly.coefficients()) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), c.get_den_mpz_t());
  return out;
}

}  // namespace

std::string PositivityResult::describe() const {
  if (positive) return "positive on Z_+^2 (exhaustive through m = " + std::to_string(scanned_through) + ")";
  return "p(" + std::to_string(witness->m) + "," + std::to_string(witness->n) + ") = " + to_string(witness_value) +
         " <= 0";
}

PositivityResult decide_positivity(const YQuadratic& p) {
  if (sgn(p.s) < 0) {
    // p(0, n) -> -infinity.
    Poly column{p.q.coefficient(0), p.r.coefficient(0), p.s};
    auto n = first_sign_violation(column, 0, /*strict=*/true);
    return found(p, 0, *n, 0);
  }
  if (sgn(p.s) == 0) return decide_linear_in_y(p);

  const std::int64_t r_stable = sign_stable_from(p.r);
  if (sgn(p.r.leading()) >= 0) {
    // r >= 0 from r_stable on, so the row minimum there is q(m).
    PositivityResult head = r_stable > 0 ? scan_rows(p, r_stable - 1) : proven(0);
    if (!head.positive) return head;
    if (auto m = first_sign_violation(p.q, r_stable, /*strict=*/true)) return found(p, *m, 0, *m);
    return proven(std::max(r_stable, sign_stable_from(p.q)));
  }

  // r -> -infinity: the vertex drifts to +infinity and the row minimum is
  // E(m)/(4s) up to an additive s/4.
  const Poly e = p.q * (4 * p.s) - p.r * p.r;
  if (e.degree() >= 1 && sgn(e.leading()) > 0) return scan_rows(p, std::max(r_stable, sign_stable_from(e)));
  if (e.degree() >= 1) {
    // Some row minimum goes negative before (E + s^2)/(4s) does.
    const Poly upper = e + Poly{p.s * p.s};
    return scan_rows(p, std::max(r_stable, sign_stable_from(upper)));
  }
  if (sgn(e.coefficient(0)) > 0) return scan_rows(p, r_stable);
  // Constant E <= 0: the row minimum is s * dist(v(m), Z)^2 + E/(4s), periodic
  // in m once the vertex is positive.
  const Poly vertex = p.r * Rational(-1 / (2 * p.s));
  const Integer period = lcm_of_denominators(vertex);
  return scan_rows(p, r_stable + to_int64(period));
}

}  // namespace cdual
