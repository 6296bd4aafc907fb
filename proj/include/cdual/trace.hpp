#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cdual/rational.hpp"

namespace cdual {

enum class Verdict { yes, no, precondition_violated };

std::string to_string(Verdict v);

// One named inequality or equation. `value` is either the single quantity
// compared against zero or the (lhs, rhs) pair of a two-sided comparison.
struct Check {
  std::string name;
  std::variant<Rational, std::pair<Rational, Rational>> value;
  bool satisfied = false;
};

// Ordered audit trail of a decision. The verdict is yes iff every check is
// satisfied; precondition_violated carries a reason instead.
struct DecisionTrace {
  Verdict verdict = Verdict::no;
  std::vector<Check> checks;
  std::string note;

  // Records a check and returns whether it held.
  bool add(std::string name, Rational value, bool satisfied);
  bool add(std::string name, Rational lhs, Rational rhs, bool satisfied);

  bool all_satisfied() const;
  // Sets verdict from the recorded checks.
  DecisionTrace& conclude();
  const Check* find(const std::string& name) const;

  static DecisionTrace violated(std::string reason);
};

}  // namespace cdual
