#include <doctest.h>

#include "cdual/errors.hpp"
#include "cdual/netcore.hpp"
#include "helpers.hpp"

using namespace cdual;
using testing::q;

namespace {

Net2 make(std::size_t w, std::size_t h, Rational (*f)(std::int64_t, std::int64_t)) {
  return net_from_function(
      [f](MultiIndex2 a) -> std::optional<Rational> {
        return f(static_cast<std::int64_t>(a.i), static_cast<std::int64_t>(a.j));
      },
      w, h);
}

Rational one(std::int64_t, std::int64_t) { return 1; }
Rational product(std::int64_t m, std::int64_t n) { return q(1, (1 + m) * (1 + n)); }
Rational bilinear(std::int64_t m, std::int64_t n) { return q(1 + m + n + 2 * m * n); }
Rational bilinear_inv(std::int64_t m, std::int64_t n) { return q(1, 1 + m + n + 2 * m * n); }
Rational square(std::int64_t m, std::int64_t) { return q(m * m); }

}  // namespace

TEST_SUITE("netcore") {
  TEST_CASE("construction") {
    const Net2 ones = make(4, 4, one);
    for (const auto& v : ones.values()) CHECK(v == 1);

    const Net2 p = make(3, 3, product);
    CHECK(p(1, 2) == q(1, 6));
    CHECK(p(2, 2) == q(1, 9));

    const Net2 b = make(2, 2, bilinear);
    CHECK(b == Net2(2, 2, {q(1), q(2), q(2), q(5)}));
  }

  TEST_CASE("undefined point is named") {
    auto pole = [](MultiIndex2 a) -> std::optional<Rational> {
      if (a.i == 1 && a.j == 2) return std::nullopt;
      return Rational(1);
    };
    try {
      net_from_function(pole, 3, 3);
      FAIL("expected ConstructionError");
    } catch (const ConstructionError& e) {
      CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    }
    CHECK_THROWS_AS(net_from_function(pole, 0, 3), DimensionError);
  }

  TEST_CASE("forward differences") {
    const Net2 d = forward_difference(make(4, 4, one), {1, 0});
    CHECK(d.width() == 3);
    for (const auto& v : d.values()) CHECK(v == 0);
    CHECK(forward_difference(make(3, 3, bilinear), {1, 1})(0, 0) == 2);
    CHECK(forward_difference(make(4, 1, square), {2, 0})(0, 0) == 2);
    CHECK_THROWS_AS(forward_difference(make(3, 3, one), {3, 0}), DimensionError);
  }

  TEST_CASE("binomial expansion agrees with iterated differences") {
    const Net2 a = make(8, 8, bilinear_inv);
    const Net2 d = forward_difference(a, {2, 3});
    // Delta^beta a(0,0) = sum (-1)^(|beta|-|k|) C(beta,k) a(k)
    const int c2[] = {1, 2, 1};
    const int c3[] = {1, 3, 3, 1};
    Rational expect(0);
    for (int i = 0; i <= 2; ++i) {
      for (int j = 0; j <= 3; ++j) {
        const Rational term = c2[i] * c3[j] * a(i, j);
        if ((5 - i - j) % 2) {
          expect -= term;
        } else {
          expect += term;
        }
      }
    }
    CHECK(d(0, 0) == expect);
  }

  TEST_CASE("differences commute") {
    const Net2 a = make(7, 7, bilinear_inv);
    CHECK(forward_difference(forward_difference(a, {1, 0}), {0, 2}) ==
          forward_difference(forward_difference(a, {0, 2}), {1, 0}));
  }

  TEST_CASE("oracle verdicts") {
    const CmVerdict p = check_complete_monotone(make(12, 12, product), 6, CmMode::joint);
    CHECK(p.passed);
    CHECK_FALSE(p.witness);

    const CmVerdict c = check_complete_monotone(make(5, 5, one), 4, CmMode::joint);
    CHECK(c.passed);
    CHECK_FALSE(c.witness);

    const CmVerdict b = check_complete_monotone(make(12, 12, bilinear_inv), 6, CmMode::joint);
    REQUIRE_FALSE(b.passed);
    REQUIRE(b.witness);
    CHECK(b.witness->order == MultiIndex2{3, 3});
    CHECK(b.witness->base == MultiIndex2{0, 0});
    CHECK(b.witness->value == q(-239, 42900));

    // Each row and column of 1/(1+m+n+2mn) is 1/(affine), so separate mode passes.
    CHECK(check_complete_monotone(make(12, 12, bilinear_inv), 6, CmMode::separate).passed);
    CHECK_THROWS_AS(check_complete_monotone(make(4, 4, one), 5, CmMode::joint), DimensionError);
  }

  TEST_CASE("verdict does not depend on jobs") {
    const Net2 b = make(12, 12, bilinear_inv);
    const CmVerdict one_job = check_complete_monotone(b, 6, CmMode::joint, 1);
    const CmVerdict many = check_complete_monotone(b, 6, CmMode::joint, 4);
    CHECK(one_job.witness->order == many.witness->order);
    CHECK(one_job.witness->base == many.witness->base);
  }

  TEST_CASE("shifted windows of a CM net stay CM") {
    const Net2 p = make(14, 14, product);
    CHECK(check_complete_monotone(p.window({2, 1}, 10, 10), 5, CmMode::joint).passed);
  }

  TEST_CASE("products of CM nets stay CM") {
    const Net2 p = make(10, 10, product);
    const Net2 r = net_from_function([](MultiIndex2 a) -> std::optional<Rational> {
      return q(1, 1 + static_cast<std::int64_t>(a.i + a.j));
    }, 10, 10);
    CHECK(check_complete_monotone(r, 6, CmMode::joint).passed);
    CHECK(check_complete_monotone(p.hadamard(r), 6, CmMode::joint).passed);
  }

  TEST_CASE("sequences") {
    std::vector<Rational> s;
    for (int k = 0; k < 10; ++k) s.push_back(q(1, (k + 1) * (k + 2)));
    CHECK(check_sequence_complete_monotone(s, 6).passed);
    std::vector<Rational> bad = {q(1), q(3, 4), q(1, 4)};
    const SequenceCmVerdict v = check_sequence_complete_monotone(bad, 2);
    REQUIRE_FALSE(v.passed);
    CHECK(v.order == 2);
    CHECK(v.index == 0);
  }

  TEST_CASE("csv") {
    const std::string csv = net_to_csv(make(2, 2, bilinear));
    CHECK(csv == "m,n,value\n0,0,1\n0,1,2\n1,0,2\n1,1,5\n");
  }
}
