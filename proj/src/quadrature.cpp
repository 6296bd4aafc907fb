#include "cdual/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace cdual {
namespace {

// Kronrod abscissae in [0,1] (descending) with weights; odd indices 1,3,5,7
// are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a, b, value, error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod_sum = fc * kWgk[7];
  double gauss_sum = fc * kWg[3];
  for (int k = 0; k < 7; ++k) {
    const double dx = half * kXgk[static_cast<std::size_t>(k)];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod_sum += kWgk[static_cast<std::size_t>(k)] * (f1 + f2);
    if (k % 2 == 1) gauss_sum += kWg[static_cast<std::size_t>(k / 2)] * (f1 + f2);
  }
  return {a, b, kronrod_sum * half, std::abs((kronrod_sum - gauss_sum) * half)};
}

double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  if (hi == lo) return 0.0;
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

constexpr long kEvalsPerPiece = 15;

}  // namespace

QuadratureResult AdaptiveIntegrator::integrate(const std::function<double(double)>& f, double a, double b,
                                               double abs_tol) {
  QuadratureResult out;
  const long start = used_;
  std::priority_queue<Piece> heap;
  heap.push(kronrod(f, a, b));
  used_ += kEvalsPerPiece;
  double total_error = heap.top().error;

  std::vector<Piece> done;
  while (!heap.empty()) {
    if (total_error <= abs_tol) {
      out.converged = true;
      break;
    }
    if (used_ + 2 * kEvalsPerPiece > budget_) break;
    Piece worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval cannot be split further in double precision.
      heap.pop();
      done.push_back(worst);
      continue;
    }
    heap.pop();
    Piece left = kronrod(f, worst.a, mid);
    Piece right = kronrod(f, mid, worst.b);
    used_ += 2 * kEvalsPerPiece;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  if (heap.empty() && total_error <= abs_tol) out.converged = true;

  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  std::sort(done.begin(), done.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
  std::vector<double> values, errors;
  for (const auto& p : done) {
    values.push_back(p.value);
    errors.push_back(p.error);
  }
  out.value = pairwise_sum(values, 0, values.size());
  out.error = pairwise_sum(errors, 0, errors.size());
  out.evaluations = used_ - start;
  return out;
}

QuadratureResult AdaptiveIntegrator::integrate_unit_square(const std::function<double(double, double)>& f,
                                                           double abs_tol) {
  const long start = used_;
  bool inner_ok = true;
  double inner_error = 0.0;
  // Inner error feeds into the outer integrand; keep it well below the target.
  const double inner_tol = abs_tol / 4.0;
  auto outer = [&](double y) {
    QuadratureResult r = integrate([&](double x) { return f(x, y); }, 0.0, 1.0, inner_tol);
    inner_ok = inner_ok && r.converged;
    inner_error = std::max(inner_error, r.error);
    return r.value;
  };
  QuadratureResult out = integrate(outer, 0.0, 1.0, abs_tol / 2.0);
  out.converged = out.converged && inner_ok;
  out.error += inner_error;
  out.evaluations = used_ - start;
  return out;
}

}  // namespace cdual
