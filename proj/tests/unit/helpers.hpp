#pragma once

#include "cdual/rational.hpp"

namespace testing {

inline cdual::Rational q(std::int64_t num, std::int64_t den = 1) { return cdual::make_rational(num, den); }

}  // namespace testing
