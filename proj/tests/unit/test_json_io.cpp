#include <doctest.h>

#include <functional>

#include "cdual/errors.hpp"
#include "cdual/json_io.hpp"
#include "helpers.hpp"

using namespace cdual;
using testing::q;

namespace {

std::string pointer_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<no error>";
}

}  // namespace

TEST_SUITE("json_io") {
  TEST_CASE("rationals") {
    CHECK(rational_to_json(q(-3, 4)) == "-3/4");
    CHECK(rational_from_json(Json("6/4"), "") == q(3, 2));
    CHECK(rational_from_json(Json(7), "") == 7);
    CHECK(pointer_of([] { rational_from_json(Json(1.5), "/x"); }) == "/x");
    CHECK(pointer_of([] { rational_from_json(Json("1/0"), "/y"); }) == "/y");
  }

  TEST_CASE("round trips") {
    const BiDeg21Params p21{q(1), q(1, 2), q(3), q(1), q(3)};
    CHECK(bideg21_from_json(to_json(p21), "") == p21);
    const BiDeg22Params p22{q(1), q(1), q(2), q(2), q(3, 2)};
    CHECK(bideg22_from_json(to_json(p22), "") == p22);
    const GammaCoefficients g{q(3), q(1), q(1), q(1), q(0)};
    CHECK(gamma_from_json(to_json(g), "") == g);
    const RhoSet r{q(4), q(1), q(2), q(0), q(1)};
    CHECK(rho_from_json(to_json(r), "") == r);
    const Quadratic1D quad{q(2), q(3), q(1)};
    const Quadratic1D back = quadratic_from_json(to_json(quad), "");
    CHECK(back.a == quad.a);
    CHECK(back.c == quad.c);
    const Net2 net(2, 3, {q(1), q(1, 2), q(1, 3), q(1, 4), q(1, 5), q(1, 6)});
    CHECK(net_from_json(net_to_json(net), "/net") == net);
  }

  TEST_CASE("schema errors carry pointers") {
    Json g = to_json(GammaCoefficients{q(3), q(1), q(1), q(1), q(0)});
    g.erase("b2");
    CHECK(pointer_of([&] { gamma_from_json(g, "/gamma"); }) == "/gamma/b2");

    Json r = to_json(RhoSet{q(4), q(1), q(2), q(0), q(1)});
    r["rho1"] = "5";
    CHECK(pointer_of([&] { rho_from_json(r, "/rho"); }) == "/rho/rho1");

    Json net = net_to_json(Net2(2, 2));
    net["values"][3] = true;
    CHECK(pointer_of([&] { net_from_json(net, "/net"); }) == "/net/values/3");
    net["values"].erase(3);
    CHECK(pointer_of([&] { net_from_json(net, "/net"); }) == "/net/values");
    net["width"] = 0;
    CHECK(pointer_of([&] { net_from_json(net, "/net"); }) == "/net/width");
    CHECK(pointer_of([] { require(Json::array(), "x", "/p"); }) == "/p");
  }

  TEST_CASE("decision output") {
    const CdspDecision d = decide_cdsp_from_rho({q(1), q(1), q(0), q(0), q(1)});
    const Json j = to_json(d);
    CHECK(j["verdict"] == "subnormal");
    CHECK(j["branch"] == "a");
    CHECK(j["trace"]["checks"][0]["name"] == "rho11 <= rho10 rho01");
    CHECK(j["trace"]["checks"][0]["lhs"] == "1");
    CHECK(j["gamma"]["a1"] == "1");
    CHECK(j.dump() == to_json(decide_cdsp_from_rho({q(1), q(1), q(0), q(0), q(1)})).dump());
  }

  TEST_CASE("shift bundle") {
    const Json b = shift_bundle(MomentPolynomial(q(3), q(1), q(1), q(1), q(0)), 6, 6);
    CHECK(b["schema"] == "cdual.shift-bundle/1");
    CHECK(b["rho"]["rho10"] == "4");
    CHECK(b["toral_3_isometry"] == true);
    CHECK(b["torally_expansive"] == true);
    CHECK(b["coordinate_2_isometry"] == Json::array({false, true}));
    CHECK(b["weights"]["commutes"] == true);
    CHECK(rho_from_json(b["rho"], "/rho") == RhoSet{q(4), q(1), q(2), q(0), q(1)});
  }

  TEST_CASE("weights csv") {
    const ShiftWeights w = shift_weights(MomentPolynomial(q(1), q(0), q(1), q(1), q(0)), 2, 1);
    CHECK(weights_csv(w, 1) == "m,n,w1sq\n0,0,2\n1,0,3/2\n");
    CHECK(weights_csv(w, 2).rfind("m,n,w2sq\n", 0) == 0);
  }
}
