#include "cdual/trace.hpp"

#include <algorithm>

namespace cdual {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "true";
    case Verdict::no:
      return "false";
    case Verdict::precondition_violated:
      return "precondition-violated";
  }
  return "false";
}

bool DecisionTrace::add(std::string name, Rational value, bool satisfied) {
  checks.push_back({std::move(name), std::move(value), satisfied});
  return satisfied;
}

bool DecisionTrace::add(std::string name, Rational lhs, Rational rhs, bool satisfied) {
  checks.push_back({std::move(name), std::make_pair(std::move(lhs), std::move(rhs)), satisfied});
  return satisfied;
}

bool DecisionTrace::all_satisfied() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.satisfied; });
}

DecisionTrace& DecisionTrace::conclude() {
  verdict = all_satisfied() ? Verdict::yes : Verdict::no;
  return *this;
}

const Check* DecisionTrace::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

DecisionTrace DecisionTrace::violated(std::string reason) {
  DecisionTrace t;
  t.verdict = Verdict::precondition_violated;
  t.note = std::move(reason);
  return t;
}

}  // namespace cdual
