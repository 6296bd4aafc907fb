#include <doctest.h>

#include <algorithm>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "cdual/corpus.hpp"
#include "cdual/errors.hpp"
#include "cdual/measures.hpp"
#include "helpers.hpp"

using namespace cdual;
using testing::q;

TEST_SUITE("measures") {
  TEST_CASE("kernel values") {
    const KernelValue zero = kernel_eval(0.0, 1e-15);
    CHECK(zero.value == 1.0);
    CHECK(zero.terms_used == 1);

    const KernelValue five = kernel_eval(-5.0, 1e-12);
    CHECK(std::abs(five.value - -0.3268) < 1e-3);
    CHECK(std::abs(five.value - -0.326875281823533910916605) < 1e-10);

    // J0(2) from a 30-digit partial-sum evaluation
    CHECK(std::abs(kernel_eval(-1.0, 1e-14).value - 0.223890779141235668051827) < 1e-12);

    CHECK_THROWS_AS(kernel_eval(NAN, 1e-12), DomainError);
    CHECK_THROWS_AS(kernel_eval(1.0, 0.0), DomainError);
  }

  TEST_CASE("kernel matches Bessel J0 and I0") {
    for (double x : {1.0, 4.0, 5.0}) {
      const double j0 = boost::math::cyl_bessel_j(0, 2 * std::sqrt(x));
      CHECK(std::abs(kernel_eval(-x, 1e-13).value - j0) < 1e-9);
    }
    const double i0 = boost::math::cyl_bessel_i(0, 2.0);
    CHECK(std::abs(kernel_eval(1.0, 1e-13).value - i0) < 1e-9);
  }

  TEST_CASE("kernel agrees with exact partial sums") {
    // sum_{k<=20} (-1)^k / (k!)^2 in exact arithmetic; the tail is below 1e-36.
    Rational sum(0), fact(1);
    for (int k = 0; k <= 20; ++k) {
      if (k > 0) fact *= k;
      const Rational term = 1 / (fact * fact);
      sum += (k % 2 ? -term : term);
    }
    CHECK(std::abs(kernel_eval(-1.0, 1e-15).value - sum.get_d()) < 1e-14);
  }

  TEST_CASE("(2,1) density closed form") {
    const BiDeg21Params p{q(1), q(1), q(2), q(1), q(1)};
    CHECK(weight21_eval(p, 0.3, 0.5) == doctest::Approx(1.0));
    CHECK(weight21_eval(p, 0.6, 0.5) == 0.0);
    CHECK_THROWS_AS(weight21_eval(p, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(weight21_eval(p, 0.3, 1.0), DomainError);
  }

  TEST_CASE("(2,1) density goes negative outside the interval") {
    const BiDeg21Params p{q(1), q(1), q(2), q(1), q(4)};
    const BiDeg21Density w(p);
    CHECK(w.c2() == doctest::Approx(6.0));
    const double t0 = 0.5;
    const double s0 = std::exp(-5.0 / (6.0 * std::log(2.0))) / 2.0;
    const BiDeg21Density::Parts parts = w.parts(std::log(s0), std::log(t0));
    CHECK(parts.inside);
    CHECK(parts.kernel == doctest::Approx(-0.3268752818));
    CHECK(w(s0, t0) < 0.0);
  }

  TEST_CASE("(2,1) density is nonnegative when the decider says yes") {
    RationalSampler s(7);
    int checked = 0;
    while (checked < 20) {
      const BiDeg21Params p = random_bideg21(s);
      if (decide_bideg21_cm(p).verdict != Verdict::yes) continue;
      ++checked;
      const BiDeg21Density w(p);
      for (int i = 0; i < 50; ++i) {
        for (int j = 0; j < 50; ++j) {
          const double v = w((i + 0.5) / 50, (j + 0.5) / 50);
          CHECK(v >= 0.0);
        }
      }
    }
  }

  TEST_CASE("(2,1) density preconditions") {
    CHECK_THROWS_AS(BiDeg21Density({q(1), q(1), q(2), q(0), q(1)}), ParameterError);
    CHECK_THROWS_AS(BiDeg21Density({q(1), q(-1), q(2), q(1), q(1)}), PreconditionViolated);
  }

  TEST_CASE("line density") {
    // p(0, y) = (y + 1)(y + 2)
    const BiDeg22Params p{q(1), q(1), q(2), q(3), q(1)};
    const LineDensity22 w(p, 0);
    CHECK(w.r1() == doctest::Approx(2.0));
    CHECK(w.r2() == doctest::Approx(1.0));
    for (double t : {0.1, 0.5, 0.9}) CHECK(w(t) == doctest::Approx(1.0 - t));
    for (std::int64_t m = 0; m < 6; ++m) {
      for (double t : {0.01, 0.3, 0.99}) CHECK(weight22_line_eval(p, m, t) >= 0.0);
    }
    const MomentReport r = verify_moment_integral(p, 0, 5, 1e-10);
    CHECK(r.expected == doctest::Approx(1.0 / 42));
    CHECK(r.residual < 1e-10);
    CHECK(r.passed);
  }

  TEST_CASE("line density errors") {
    for (std::int64_t m : {0, 3}) {
      CHECK_THROWS_AS(LineDensity22({q(1), q(2), q(2), q(2), q(2)}, m), DegenerateDensityError);
    }
    // b0^2 < 4 a0 keeps b(m)^2 < 4 a(m) at m = 0
    CHECK_THROWS_AS(LineDensity22({q(1), q(1), q(2), q(1), q(1)}, 0), PreconditionViolated);
  }

  TEST_CASE("factorization") {
    const BiDeg22Params p{q(1), q(1), q(2), q(3), q(3, 2)};
    const Factorization22 f = factorize22(p);
    CHECK(f.radicand == 5);
    CHECK(f.c0 == QuadExtScalar(q(0), q(1, 2), q(5)));
    CHECK(f.c1 == QuadExtScalar(q(0), q(3, 4), q(5)));
    CHECK(f.c2 == q(1, 4));
    const QuadExtScalar origin = f.p1_at(q(0), q(0)) * f.p2_at(q(0), q(0)) - QuadExtScalar::rational(f.c2, q(5));
    CHECK(origin == QuadExtScalar::rational(q(2), q(5)));
    for (const auto& c : factorization_residual(p, f)) CHECK(c.sign() == 0);
    CHECK(f.geometric_chain_holds());
    CHECK_THROWS_AS(factorize22({q(1), q(1), q(2), q(2), q(3, 2)}), WrongCaseError);
  }

  TEST_CASE("factorization with a0 != 1") {
    const BiDeg22Params p{q(2), q(1), q(3), q(3), q(2)};
    const Factorization22 f = factorize22(p);
    for (const auto& c : factorization_residual(p, f)) CHECK(c.sign() == 0);
    // -a0 (a0 (a2 - a1)^2 - b0^2 (b1 - a1)(a2 - b1)) / d with d = 1
    CHECK(f.c2 == -2 * (2 * 4 - 9 * 1 * 1));
  }

  TEST_CASE("geometric chain on sampled points") {
    RationalSampler s(11);
    int checked = 0;
    while (checked < 20) {
      const BiDeg22Params p = random_bideg22_true(s);
      if (p.b0() * p.b0() <= 4 * p.a0()) continue;
      ++checked;
      const Factorization22 f = factorize22(p);
      CHECK(f.c2 >= 0);
      CHECK(f.geometric_chain_holds());
      for (std::int64_t m = 0; m < 10; ++m) {
        for (std::int64_t n = 0; n < 10; ++n) {
          const Rational mm = q(m), nn = q(n);
          const QuadExtScalar prod = f.p1_at(mm, nn) * f.p2_at(mm, nn);
          CHECK(f.p1_at(mm, nn).sign() > 0);
          CHECK(prod.compare(f.c2) > 0);
        }
      }
    }
  }

  TEST_CASE("(2,1) moments") {
    const BiDeg21Params p{q(1), q(1), q(2), q(1), q(1)};
    const MomentReport origin = verify_moment_integral(p, 0, 0, 1e-8);
    CHECK(origin.expected == doctest::Approx(0.5));
    CHECK(origin.residual < 1e-8);
    const MomentReport r = verify_moment_integral(p, 3, 2, 1e-6);
    CHECK(r.expected == doctest::Approx(1.0 / 28));
    CHECK(r.passed);
  }

  TEST_CASE("(2,1) moments with a nonconstant kernel") {
    const BiDeg21Params p{q(1), q(1), q(3), q(1), q(2)};
    CHECK(p.c2() == -1);
    for (std::int64_t m = 0; m <= 2; ++m) {
      for (std::int64_t n = 0; n <= 2; ++n) CHECK(verify_moment_integral(p, m, n, 1e-6).passed);
    }
    const BiDeg21Params scaled{q(2), q(1, 2), q(3), q(3), q(2)};
    CHECK(verify_moment_integral(scaled, 1, 3, 1e-6).passed);
  }

  TEST_CASE("csv grids") {
    const BiDeg21Density w({q(1), q(1), q(2), q(1), q(1)});
    const std::string csv = density21_csv(w, 4);
    CHECK(csv.rfind("s,t,w\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
  }
}
