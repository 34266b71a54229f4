#include <cmath>
#include <stdexcept>

#include "dbubble/certificate.hpp"
#include "dbubble/construct.hpp"
#include "doctest.h"

using namespace dbubble;
using doctest::Approx;

TEST_CASE("ceiling-kept curves meet on y = x/2 at both quadratic roots") {
  // For n = 6000 the roots of 6x^2 - 538x + 12000 are x = 48 and x = 125/3.
  auto [hi48, lo48] = projected_curves(6000, 48.0);
  CHECK(hi48 == Approx(24.0).epsilon(1e-12));
  CHECK(lo48 == Approx(24.0).epsilon(1e-12));
  auto [hiL, loL] = projected_curves(6000, 125.0 / 3.0);
  CHECK(hiL == Approx(125.0 / 6.0).epsilon(1e-10));
  CHECK(loL == Approx(125.0 / 6.0).epsilon(1e-10));
  // strictly between the roots the band is open: y1 > y2
  auto [hi, lo] = projected_curves(6000, 45.0);
  CHECK(hi > lo);
  CHECK(hi == Approx(6120.0 / 268.0).epsilon(1e-12));
  CHECK(lo == Approx(5940.0 / 268.0).epsilon(1e-12));
}

TEST_CASE("curves invert back to the volume") {
  // If y1 solves n = (2x - y1) * D / 3 then n / (2x - y1) = D / 3 = n / (x + y2).
  double n = 6000, x = 45.0;
  auto [y1, y2] = projected_curves(n, x);
  double d1 = n / (2 * x - y1);
  double d2 = n / (x + y2);
  CHECK(d1 == Approx(d2).epsilon(1e-12));
  CHECK(d1 == Approx(268.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("curves blow up at the denominator pole") {
  // n = 2: the ceiling constant is 10, pole at x = 11/6.
  CHECK_THROWS_AS(projected_curves(2, 11.0 / 6.0), std::domain_error);
  CHECK_NOTHROW(projected_curves(2, 1.0));
}

TEST_CASE("shifted region for n = 6000") {
  auto rc = shifted_curves(6000);
  CHECK(rc.xRight == Approx(2.4813923873).epsilon(1e-9));
  CHECK(rc.xLeft == Approx(-2.9813923873).epsilon(1e-9));
  // curves meet at the corners and stay ordered inside
  CHECK(rc.y1(rc.xRight) == Approx(rc.y2(rc.xRight)).epsilon(1e-9));
  CHECK(rc.y1(rc.xLeft) == Approx(rc.y2(rc.xLeft)).epsilon(1e-9));
  for (double t = 0.1; t < 0.95; t += 0.1) {
    double x = rc.xLeft + t * (rc.xRight - rc.xLeft);
    CHECK(rc.y1(x) > rc.y2(x));
  }
  // midpoint height approaches 1/4 from below as n grows
  CHECK(rc.y1(0) > 0.2490);
  CHECK(rc.y1(0) < 0.2491);
  auto big = shifted_curves(1e12);
  CHECK(big.y1(0) == Approx(0.25).epsilon(1e-5));
}

TEST_CASE("upper curve is concave and lower curve is convex") {
  for (double n : {100.0, 6000.0}) {
    auto rc = shifted_curves(n);
    double a = rc.xLeft + 0.05, b = rc.xRight - 0.05;
    double step = (b - a) / 100;
    for (double x = a + step; x < b - step; x += step) {
      double d2y1 = rc.y1(x - step) - 2 * rc.y1(x) + rc.y1(x + step);
      double d2y2 = rc.y2(x - step) - 2 * rc.y2(x) + rc.y2(x + step);
      CHECK(d2y1 <= 1e-9);
      CHECK(d2y2 >= -1e-9);
    }
  }
}

TEST_CASE("regions are nested as the volume grows") {
  CHECK(region_monotone(6000, 6000, 5));
  CHECK(region_monotone(6000, 12000, 1000));
  CHECK(region_monotone(1, 2, 1000));
  CHECK(region_monotone(6000, 100000, 1000));
  CHECK_THROWS_AS(region_monotone(2, 1, 10), std::invalid_argument);
}

TEST_CASE("parallelogram certificate at n = 6000") {
  auto cert = parallelogram_certificate(6000);
  CHECK(cert.contained);
  CHECK(cert.margin == Approx(0.023674).epsilon(1e-2));
  CHECK(cert.margin > 0);
  CHECK(cert.hitsAllShifts);
  // the closed-edge clearance is identically zero: lattice points sit on the
  // parallelogram boundary for some translations
  CHECK(std::abs(cert.shiftClearance) < 1e-6);
  CHECK(cert.centerY == Approx(cert.centerX / 2).epsilon(1e-12));
}

TEST_CASE("parallelogram does not fit at small volumes") {
  CHECK(!parallelogram_certificate(10).contained);
  CHECK(!parallelogram_certificate(12).contained);
}

TEST_CASE("containment extends upward by monotonicity and directly") {
  for (double N : {7000.0, 10000.0, 100000.0}) {
    CHECK(parallelogram_certificate(N).contained);
  }
  CHECK(region_monotone(6000, 7000, 200));
}

TEST_CASE("equal volume construction exists on the certified range") {
  for (int i = 0; i < 100; ++i) {
    double V = 6001 + i * 40;
    auto c = construct_equal(V, 1);
    CHECK(c.has_value());
  }
}
