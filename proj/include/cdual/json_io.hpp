#pragma once

#include <json.hpp>
#include <string>

#include "cdual/cdsp.hpp"
#include "cdual/deciders.hpp"
#include "cdual/measures.hpp"
#include "cdual/netcore.hpp"
#include "cdual/shifts.hpp"
#include "cdual/trace.hpp"

namespace cdual {

// Insertion-ordered, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; integers are accepted on input. Every
// reader throws SchemaError with the JSON pointer of the offending node.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& pointer);

Json net_to_json(const Net2& net);
Net2 net_from_json(const Json& j, const std::string& pointer);

Json to_json(const BiDeg21Params& p);
Json to_json(const BiDeg22Params& p);
Json to_json(const Quadratic1D& p);
Json to_json(const GammaCoefficients& g);
Json to_json(const RhoSet& r);
BiDeg21Params bideg21_from_json(const Json& j, const std::string& pointer);
BiDeg22Params bideg22_from_json(const Json& j, const std::string& pointer);
Quadratic1D quadratic_from_json(const Json& j, const std::string& pointer);
GammaCoefficients gamma_from_json(const Json& j, const std::string& pointer);
RhoSet rho_from_json(const Json& j, const std::string& pointer);

Json to_json(const DecisionTrace& t);
Json to_json(const CmVerdict& v);
Json to_json(const CdspDecision& d);
Json to_json(const CrossValidation& c);
Json to_json(const MomentReport& r);

// gamma, rho, window metadata and the structural checks of the shift.
Json shift_bundle(const MomentPolynomial& g, std::size_t width, std::size_t height);

// Object member lookup with a schema error when absent.
const Json& require(const Json& j, const std::string& key, const std::string& pointer);

// Two grids "m,n,w1sq" and "m,n,w2sq".
std::string weights_csv(const ShiftWeights& w, int direction);

}  // namespace cdual
