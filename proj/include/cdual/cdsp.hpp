#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "cdual/deciders.hpp"
#include "cdual/netcore.hpp"
#include "cdual/positivity.hpp"
#include "cdual/shifts.hpp"
#include "cdual/trace.hpp"

namespace cdual {

enum class CdspVerdict { subnormal, not_subnormal, precondition_violated };
enum class CdspBranch { a, b_i, b_ii, b_none, c_i, c_ii, c_none };

std::string to_string(CdspVerdict v);
std::string to_string(CdspBranch b);

struct CdspDecision {
  CdspVerdict verdict = CdspVerdict::precondition_violated;
  std::optional<CdspBranch> branch;  // absent when a hypothesis fails
  DecisionTrace trace;
  GammaCoefficients gamma;
  RhoSet rho;
  // "positivity", "expansivity" or "3-isometry" when a hypothesis fails.
  std::string failed_hypothesis;
  std::optional<GridPoint> witness;
};

// Subnormality of the toral Cauchy dual of the weighted 2-shift with moment
// function gamma. The hypotheses (gamma > 0, toral expansivity, toral
// 3-isometry) are verified first. Dispatch: rho20 = rho02 = 0 is branch a;
// rho20 > 0 is branch b even when rho02 > 0; branch c only for rho20 = 0 < rho02.
CdspDecision decide_cdsp(const MomentPolynomial& g);
CdspDecision decide_cdsp(const GammaCoefficients& c);
CdspDecision decide_cdsp_from_rho(const RhoSet& r);

// The branch b (resp. c) criterion applied regardless of dispatch; used to
// compare both readings when rho20 and rho02 are both positive.
CdspDecision evaluate_branch_b(const RhoSet& r);
CdspDecision evaluate_branch_c(const RhoSet& r);

// gamma in the (2,1) normal form b0 (x+b1)(x+b2) + a0 (x+a1) y, when c1 = 0,
// a2 > 0, b1 != 0, b2 != 0 and 1 + a1 x + a2 x^2 splits over Q.
std::optional<BiDeg21Params> to_bideg21(const MomentPolynomial& g);
// gamma / c1 in the (2,2) normal form, when c1 > 0, a2 > 0, b1 != 0 and
// 1 + a1 x + a2 x^2 splits over Q.
std::optional<BiDeg22Params> to_bideg22(const MomentPolynomial& g);

struct CrossValidation {
  CdspDecision decision;
  CmVerdict oracle;
  // False only when the decision says subnormal and the oracle found a
  // violation.
  bool consistent = false;
  bool witness_found = false;
  bool escalated = false;
  std::string status;
};

inline constexpr std::size_t kEscalatedWindow = 32;
inline constexpr std::size_t kEscalatedOrder = 8;

// Runs the joint CM oracle on the dual moment net 1/gamma. A not-subnormal
// decision without a witness at the requested size is retried at 32x32,
// order 8. Throws PreconditionViolated if a hypothesis fails.
CrossValidation cross_validate(const MomentPolynomial& g, std::size_t width, std::size_t height,
                               std::size_t max_order, unsigned jobs = 1);

// 1/gamma on the window, built from the dual weights.
Net2 dual_moment_net(const MomentPolynomial& g, std::size_t width, std::size_t height);

}  // namespace cdual
