#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cdual/cdsp.hpp"
#include "cdual/deciders.hpp"
#include "cdual/shifts.hpp"

namespace cdual {

// Small random rationals num/den with num in [lo, hi] and den in [1, max_den].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational uniform(std::int64_t lo, std::int64_t hi, std::int64_t max_den);
  // Strictly positive, at most hi.
  Rational positive(std::int64_t hi, std::int64_t max_den);
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 rng_;
};

// Decider-false (2,1) parameter sets whose 1/p shows a joint CM violation
// within 32x32, order 8.
std::vector<BiDeg21Params> bideg21_false_corpus();
// Decider-false (2,2) sets; the last one is (1,1,2,2,11/10).
std::vector<BiDeg22Params> bideg22_false_corpus();
// (1,1,2,2,3/2), on the equality boundary of the decider.
BiDeg22Params bideg22_boundary_instance();

// (2,1) sets positive on Z_+^2; about half are drawn inside b1 <= a1 <= b2.
BiDeg21Params random_bideg21(RationalSampler& s);
// (2,2) sets positive on Z_+^2; biased towards the decider-true region.
BiDeg22Params random_bideg22(RationalSampler& s);
// Decider-true (2,2) sets.
BiDeg22Params random_bideg22_true(RationalSampler& s);
// b0^2 > 4 a0, otherwise unconstrained.
BiDeg22Params random_bideg22_split(RationalSampler& s);
// Valid (positive) moment polynomials.
MomentPolynomial random_moment_polynomial(RationalSampler& s);
RhoSet random_rho(RationalSampler& s);

struct CdspExample {
  std::string label;
  RhoSet rho;
  CdspVerdict verdict;
  CdspBranch branch;
};
std::vector<CdspExample> cdsp_examples();

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  double time_limit = 0.0;
  std::string detail;
  std::vector<std::string> diagnostics;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240607;
  unsigned jobs = 1;
};

CriterionResult criterion_kernel_value(const AcceptanceOptions& o);
CriterionResult criterion_bideg21_agreement(const AcceptanceOptions& o);
CriterionResult criterion_bideg22_agreement(const AcceptanceOptions& o);
CriterionResult criterion_cdsp_end_to_end(const AcceptanceOptions& o);
CriterionResult criterion_moment_reproduction(const AcceptanceOptions& o);
CriterionResult criterion_exact_identities(const AcceptanceOptions& o);
CriterionResult criterion_line_restrictions(const AcceptanceOptions& o);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o);

// "PASS|FAIL  <id>  <title>  (<seconds>s / <limit>s)  <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace cdual
