#include "cdual/corpus.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "cdual/errors.hpp"
#include "cdual/measures.hpp"
#include "cdual/netcore.hpp"

namespace cdual {

Rational RationalSampler::uniform(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  const std::int64_t den = integer(1, max_den);
  return make_rational(integer(lo * den, hi * den), den);
}

Rational RationalSampler::positive(std::int64_t hi, std::int64_t max_den) {
  const std::int64_t den = integer(1, max_den);
  return make_rational(integer(1, hi * den), den);
}

std::int64_t RationalSampler::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

namespace {

Rational q(const char* text) { return parse_rational(text); }

Rational from_int(std::size_t k) { return Rational(Integer(static_cast<unsigned long>(k))); }

template <class Params>
Net2 reciprocal_net(const Params& p, std::size_t width, std::size_t height) {
  return net_from_function(
      [&](MultiIndex2 a) -> std::optional<Rational> {
        const Rational v = p(from_int(a.i), from_int(a.j));
        if (v == 0) return std::nullopt;
        return 1 / v;
      },
      width, height);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

template <class Params>
std::string describe(const Params& p) {
  std::ostringstream os;
  if constexpr (std::is_same_v<Params, BiDeg21Params>) {
    os << "(" << to_string(p.b0()) << "," << to_string(p.b1()) << "," << to_string(p.b2()) << "," << to_string(p.a0())
       << "," << to_string(p.a1()) << ")";
  } else {
    os << "(" << to_string(p.a0()) << "," << to_string(p.a1()) << "," << to_string(p.a2()) << "," << to_string(p.b0())
       << "," << to_string(p.b1()) << ")";
  }
  return os.str();
}

CriterionResult finish(CriterionResult r, const Stopwatch& sw, bool ok, std::string detail) {
  r.seconds = sw.seconds();
  r.detail = std::move(detail);
  r.passed = ok && r.seconds < r.time_limit;
  if (ok && !r.passed) r.diagnostics.push_back("exceeded the time limit");
  return r;
}

}  // namespace

std::vector<BiDeg21Params> bideg21_false_corpus() {
  const char* rows[][5] = {{"1", "1", "2", "1", "5"},   {"1", "2", "3", "1", "1"},   {"3", "1", "2", "1", "5"},
                           {"1", "2", "4", "1", "1"},   {"1", "1", "3", "1", "5"},   {"2", "1", "2", "1", "6"},
                           {"1", "3", "4", "1", "1"},   {"1", "1", "4", "2", "8"},   {"2", "2", "3", "1", "1/2"},
                           {"1", "3/2", "2", "1", "7"}};
  std::vector<BiDeg21Params> out;
  for (const auto& r : rows) out.emplace_back(q(r[0]), q(r[1]), q(r[2]), q(r[3]), q(r[4]));
  return out;
}

std::vector<BiDeg22Params> bideg22_false_corpus() {
  const char* rows[][5] = {{"1", "1", "2", "1", "1"},   {"1", "1", "2", "2", "1/2"}, {"1", "1", "2", "2", "3"},
                           {"1", "1", "2", "5/2", "4"}, {"1", "1", "3", "3", "1/2"}, {"1", "2", "3", "2", "1"},
                           {"1", "1", "1", "3", "5"},   {"1", "1", "5", "4", "8"},   {"1", "1", "4", "3", "6"},
                           {"1", "1", "2", "2", "11/10"}};
  std::vector<BiDeg22Params> out;
  for (const auto& r : rows) out.emplace_back(q(r[0]), q(r[1]), q(r[2]), q(r[3]), q(r[4]));
  return out;
}

BiDeg22Params bideg22_boundary_instance() { return BiDeg22Params(q("1"), q("1"), q("2"), q("2"), q("3/2")); }

BiDeg21Params random_bideg21(RationalSampler& s) {
  for (;;) {
    const Rational b0 = s.positive(4, 3);
    const Rational a0 = s.positive(4, 3);
    const Rational b1 = s.uniform(0, 4, 2);
    const Rational b2 = b1 + s.uniform(0, 4, 2);
    Rational a1;
    if (s.integer(0, 1) == 0) {
      a1 = b1 + (b2 - b1) * make_rational(s.integer(0, 4), 4);
    } else {
      a1 = s.positive(6, 2);
    }
    if (a1 == 0) continue;
    BiDeg21Params p(b0, b1, b2, a0, a1);
    if (decide_positivity(p.polynomial()).positive) return p;
  }
}

BiDeg22Params random_bideg22_true(RationalSampler& s) {
  const Rational a1 = s.positive(3, 2);
  const Rational b1 = a1 + s.uniform(0, 3, 2);
  const Rational a2 = b1 + s.uniform(0, 3, 2);
  const Rational b0 = s.positive(4, 2);
  Rational bound = b0 * b0 / 4;
  if (a2 != a1) bound = std::min<Rational>(bound, b0 * b0 * (b1 - a1) * (a2 - b1) / ((a2 - a1) * (a2 - a1)));
  Rational a0 = bound * make_rational(s.integer(1, 4), 4);
  if (a0 == 0) a0 = b0 * b0 / 8;  // b1 at an endpoint forces a0 = 0; keep the bi-degree
  BiDeg22Params p(a0, a1, a2, b0, b1);
  if (decide_bideg22_cm(p).verdict == Verdict::yes) return p;
  return random_bideg22_true(s);
}

BiDeg22Params random_bideg22(RationalSampler& s) {
  if (s.integer(0, 1) == 0) return random_bideg22_true(s);
  for (;;) {
    BiDeg22Params p(s.positive(4, 3), s.positive(4, 2), s.positive(4, 2), s.positive(4, 2), s.positive(4, 2));
    if (decide_positivity(p.polynomial()).positive) return p;
  }
}

BiDeg22Params random_bideg22_split(RationalSampler& s) {
  const Rational b0 = s.uniform(-6, 6, 3);
  if (b0 == 0) return random_bideg22_split(s);
  const Rational a0 = b0 * b0 / 4 * make_rational(s.integer(-4, 4), 5);
  if (a0 == 0) return random_bideg22_split(s);
  return BiDeg22Params(a0, s.uniform(-3, 3, 3), s.uniform(-3, 3, 3), b0, s.uniform(-3, 3, 3));
}

MomentPolynomial random_moment_polynomial(RationalSampler& s) {
  for (;;) {
    GammaCoefficients c{s.uniform(-1, 3, 2), s.uniform(0, 3, 2), s.uniform(-1, 3, 2), s.uniform(-1, 3, 2),
                        s.uniform(0, 3, 2)};
    if (MomentPolynomial::check(c).positive) return MomentPolynomial(c);
  }
}

RhoSet random_rho(RationalSampler& s) {
  return {s.uniform(0, 5, 2), s.uniform(0, 5, 2), s.uniform(0, 5, 2), s.uniform(0, 5, 2), s.uniform(0, 5, 2)};
}

std::vector<CdspExample> cdsp_examples() {
  auto r = [](int a, int b, int c, int d, int e) {
    return RhoSet{Rational(a), Rational(b), Rational(c), Rational(d), Rational(e)};
  };
  return {{"branch a at equality", r(1, 1, 0, 0, 1), CdspVerdict::subnormal, CdspBranch::a},
          {"b-ii subnormal", r(4, 1, 2, 0, 1), CdspVerdict::subnormal, CdspBranch::b_ii},
          {"b-ii not subnormal", r(4, 5, 2, 0, 1), CdspVerdict::not_subnormal, CdspBranch::b_ii},
          {"b-i subnormal", r(4, 0, 2, 0, 0), CdspVerdict::subnormal, CdspBranch::b_i}};
}

CriterionResult criterion_kernel_value(const AcceptanceOptions&) {
  CriterionResult r{1, "kernel K(-5) matches J0(2 sqrt 5) = -0.3268", false, 0, 1e-3, {}, {}};
  const KernelValue warm = kernel_eval(-5.0, 1e-9);
  constexpr int reps = 1000;
  Stopwatch sw;
  double sink = 0.0;
  for (int k = 0; k < reps; ++k) sink += kernel_eval(-5.0, 1e-9).value;
  r.seconds = sw.seconds() / reps;
  const bool ok = std::abs(warm.value - (-0.3268)) <= 1e-3 && sink != 0.0;
  std::ostringstream os;
  os << std::setprecision(10) << "K(-5) = " << warm.value << " with " << warm.terms_used << " terms";
  r.detail = os.str();
  r.passed = ok && r.seconds < r.time_limit;
  return r;
}

CriterionResult criterion_bideg21_agreement(const AcceptanceOptions& o) {
  CriterionResult r{2, "(2,1) decider agrees with the joint CM oracle", false, 0, 30.0, {}, {}};
  Stopwatch sw;
  RationalSampler s(o.seed);
  bool ok = true;
  int decided_true = 0;
  for (int k = 0; k < 200; ++k) {
    const BiDeg21Params p = random_bideg21(s);
    if (decide_bideg21_cm(p).verdict != Verdict::yes) continue;
    ++decided_true;
    const CmVerdict v = check_complete_monotone(reciprocal_net(p, 12, 12), 6, CmMode::joint, o.jobs);
    if (!v.passed) {
      ok = false;
      r.diagnostics.push_back("decider-true " + describe(p) + " failed: " + v.label());
    }
  }
  int witnesses = 0;
  const auto corpus = bideg21_false_corpus();
  for (const auto& p : corpus) {
    const bool decided_false = decide_bideg21_cm(p).verdict == Verdict::no;
    const CmVerdict v = check_complete_monotone(reciprocal_net(p, 32, 32), 8, CmMode::joint, o.jobs);
    if (decided_false && !v.passed) {
      ++witnesses;
    } else {
      ok = false;
      r.diagnostics.push_back(describe(p) + (decided_false ? " has no witness: " + v.label() : " is not decider-false"));
    }
  }
  return finish(r, sw, ok,
                std::to_string(decided_true) + " of 200 draws decider-true, all oracle-clean; " +
                    std::to_string(witnesses) + "/" + std::to_string(corpus.size()) + " false sets with witnesses");
}

CriterionResult criterion_bideg22_agreement(const AcceptanceOptions& o) {
  CriterionResult r{3, "(2,2) decider agrees with the joint CM oracle", false, 0, 60.0, {}, {}};
  Stopwatch sw;
  RationalSampler s(o.seed + 1);
  bool ok = true;
  int decided_true = 0;
  std::vector<BiDeg22Params> trues;
  for (int k = 0; k < 200; ++k) trues.push_back(random_bideg22(s));
  trues.push_back(bideg22_boundary_instance());
  for (const auto& p : trues) {
    if (decide_bideg22_cm(p).verdict != Verdict::yes) {
      if (p == bideg22_boundary_instance()) {
        ok = false;
        r.diagnostics.push_back("boundary instance (1,1,2,2,3/2) is not decider-true");
      }
      continue;
    }
    ++decided_true;
    const CmVerdict v = check_complete_monotone(reciprocal_net(p, 12, 12), 6, CmMode::joint, o.jobs);
    if (!v.passed) {
      ok = false;
      r.diagnostics.push_back("decider-true " + describe(p) + " failed: " + v.label());
    }
  }
  int witnesses = 0;
  const auto corpus = bideg22_false_corpus();
  for (const auto& p : corpus) {
    const bool decided_false = decide_bideg22_cm(p).verdict == Verdict::no;
    const CmVerdict v = check_complete_monotone(reciprocal_net(p, 32, 32), 8, CmMode::joint, o.jobs);
    if (decided_false && !v.passed) {
      ++witnesses;
      continue;
    }
    ok = false;
    if (!decided_false) {
      r.diagnostics.push_back(describe(p) + " is not decider-false");
      continue;
    }
    r.diagnostics.push_back(describe(p) + " has no witness within 32x32, order 8: " + v.label());
    const CmVerdict deeper = check_complete_monotone(reciprocal_net(p, 24, 24), 20, CmMode::joint, o.jobs);
    r.diagnostics.push_back(describe(p) + " at 24x24, order 20: " + deeper.label());
  }
  return finish(r, sw, ok,
                std::to_string(decided_true) + " of 201 sets decider-true (boundary included), all oracle-clean; " +
                    std::to_string(witnesses) + "/" + std::to_string(corpus.size()) + " false sets with witnesses");
}

CriterionResult criterion_cdsp_end_to_end(const AcceptanceOptions& o) {
  CriterionResult r{4, "Cauchy dual subnormality examples and cross-validation", false, 0, 10.0, {}, {}};
  Stopwatch sw;
  bool ok = true;
  int confirmed = 0;
  for (const auto& ex : cdsp_examples()) {
    const MomentPolynomial g = gamma_from_rho(ex.rho);
    const CdspDecision d = decide_cdsp(g);
    bool good = d.verdict == ex.verdict && d.branch == ex.branch;
    const CrossValidation cv = cross_validate(g, 12, 12, 6, o.jobs);
    good = good && cv.consistent &&
           (ex.verdict == CdspVerdict::subnormal ? cv.oracle.passed : cv.witness_found);
    if (good) {
      ++confirmed;
    } else {
      ok = false;
      r.diagnostics.push_back(ex.label + ": got " + to_string(d.verdict) + "/" +
                              (d.branch ? to_string(*d.branch) : std::string("none")) + ", oracle " +
                              cv.oracle.label());
    }
  }
  return finish(r, sw, ok, std::to_string(confirmed) + "/4 examples decided and confirmed by the oracle");
}

CriterionResult criterion_moment_reproduction(const AcceptanceOptions&) {
  CriterionResult r{5, "density moments reproduce 1/p", false, 0, 5.0, {}, {}};
  Stopwatch sw;
  bool ok = true;
  double worst = 0.0;
  const BiDeg21Params p21(q("1"), q("1"), q("2"), q("1"), q("1"));
  const BiDeg22Params p22(q("1/2"), q("1"), q("4"), q("2"), q("3/2"));
  for (std::int64_t m = 0; m <= 4; ++m) {
    for (std::int64_t n = 0; n <= 4; ++n) {
      const MomentReport rep = verify_moment_integral(p21, m, n, 1e-6);
      const double closed = 1.0 / static_cast<double>((m + 1) * (m + 2 + n));
      const bool good = rep.passed && std::abs(rep.integral - closed) < 1e-6;
      worst = std::max(worst, rep.residual);
      if (!good) {
        ok = false;
        r.diagnostics.push_back("(2,1) moment (" + std::to_string(m) + "," + std::to_string(n) + ") residual " +
                                std::to_string(rep.residual));
      }
    }
  }
  const LineDensity22 line(p22, 0);
  if (line.r1() != 2.0 || line.r2() != 1.0) {
    ok = false;
    r.diagnostics.push_back("line density exponents are not (2,1)");
  }
  for (std::int64_t n = 0; n <= 4; ++n) {
    const MomentReport rep = verify_moment_integral(p22, 0, n, 1e-6);
    const double closed = 1.0 / static_cast<double>((n + 1) * (n + 2));
    worst = std::max(worst, rep.residual);
    if (!(rep.passed && std::abs(rep.integral - closed) < 1e-6)) {
      ok = false;
      r.diagnostics.push_back("line moment " + std::to_string(n) + " residual " + std::to_string(rep.residual));
    }
  }
  std::ostringstream os;
  os << "30 moments, worst residual " << std::scientific << std::setprecision(2) << worst;
  return finish(r, sw, ok, os.str());
}

CriterionResult criterion_exact_identities(const AcceptanceOptions& o) {
  CriterionResult r{6, "exact identities hold with zero tolerance", false, 0, 10.0, {}, {}};
  Stopwatch sw;
  RationalSampler s(o.seed + 2);
  bool ok = true;

  int factored = 0;
  for (int k = 0; k < 100; ++k) {
    const BiDeg22Params p = random_bideg22_split(s);
    const Factorization22 f = factorize22(p);
    bool zero = true;
    for (const auto& c : factorization_residual(p, f)) zero = zero && c.sign() == 0;
    // Spot-check the identity at grid points as well.
    for (int m = 0; m < 3 && zero; ++m) {
      for (int n = 0; n < 3 && zero; ++n) {
        const Rational rm(m), rn(n);
        zero = (f.p1_at(rm, rn) * f.p2_at(rm, rn)).compare(p(rm, rn) + f.c2) == 0;
      }
    }
    if (zero) {
      ++factored;
    } else {
      ok = false;
      r.diagnostics.push_back("factorization residual nonzero for " + describe(p));
    }
  }

  int reciprocal = 0;
  std::vector<MomentPolynomial> gammas;
  for (const auto& ex : cdsp_examples()) gammas.push_back(gamma_from_rho(ex.rho));
  for (int k = 0; k < 6; ++k) gammas.push_back(random_moment_polynomial(s));
  for (const auto& g : gammas) {
    const ShiftWeights w = shift_weights(g, 12, 12);
    const Net2 dual = moment_net(cauchy_dual_weights(w));
    const Net2 other = moment_net(cauchy_dual_weights(w), LatticePath::second_then_first);
    const Net2 prod = dual.hadamard(gamma_net(g, 12, 12));
    bool one = dual == other && w.commutes();
    for (const auto& v : prod.values()) one = one && v == 1;
    if (one) {
      ++reciprocal;
    } else {
      ok = false;
      r.diagnostics.push_back("dual reciprocity failed");
    }
  }

  int isometries = 0;
  for (int k = 0; k < 100; ++k) {
    const MomentPolynomial g = random_moment_polynomial(s);
    if (verify_toral_m_isometry(g, 3, 12, 12).holds) {
      ++isometries;
    } else {
      ok = false;
      r.diagnostics.push_back("third differences do not vanish");
    }
  }

  int round_trips = 0;
  for (int k = 0; k < 100; ++k) {
    const RhoSet rho = random_rho(s);
    const MomentPolynomial g = random_moment_polynomial(s);
    if (rho_from_gamma(gamma_from_rho(rho)) == rho && gamma_from_rho(rho_from_gamma(g)) == g) {
      ++round_trips;
    } else {
      ok = false;
      r.diagnostics.push_back("rho/gamma round trip failed");
    }
  }
  return finish(r, sw, ok,
                std::to_string(factored) + "/100 factorizations, " + std::to_string(reciprocal) + "/" +
                    std::to_string(gammas.size()) + " reciprocity nets, " + std::to_string(isometries) +
                    "/100 third-difference checks, " + std::to_string(round_trips) + "/100 round trips");
}

CriterionResult criterion_line_restrictions(const AcceptanceOptions& o) {
  CriterionResult r{7, "line restrictions of decider-true (2,2) nets are CM", false, 0, 10.0, {}, {}};
  Stopwatch sw;
  RationalSampler s(o.seed + 3);
  bool ok = true;
  int passed = 0;
  for (int k = 0; k < 50; ++k) {
    const BiDeg22Params p = random_bideg22_true(s);
    const Rational slope = s.positive(4, 3);
    const Rational intercept = s.positive(4, 3);
    const auto seq = line_restriction_sequence(p, slope, intercept, 16);
    const SequenceCmVerdict v = check_sequence_complete_monotone(seq, 8);
    if (v.passed) {
      ++passed;
    } else {
      ok = false;
      r.diagnostics.push_back(describe(p) + " along slope " + to_string(slope) + ", intercept " +
                              to_string(intercept) + " fails at order " + std::to_string(v.order));
    }
  }
  return finish(r, sw, ok, std::to_string(passed) + "/50 sequences CM up to order 8");
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
  return {criterion_kernel_value(o),        criterion_bideg21_agreement(o), criterion_bideg22_agreement(o),
          criterion_cdsp_end_to_end(o),     criterion_moment_reproduction(o), criterion_exact_identities(o),
          criterion_line_restrictions(o)};
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  (" << std::fixed
     << std::setprecision(r.time_limit < 0.1 ? 6 : 2) << r.seconds << "s / " << r.time_limit << "s)  " << r.detail;
  return os.str();
}

}  // namespace cdual
