#include <cmath>
#include <stdexcept>
#include <string>

#include "dbubble/continuous.hpp"
#include "doctest.h"

using namespace dbubble;
using doctest::Approx;

TEST_CASE("threshold ratio constant") {
  CHECK(alpha0() == Approx(0.1872957155).epsilon(1e-9));
}

TEST_CASE("regime tags, boundaries go to the lower tag") {
  CHECK(regime(100, 18) == Regime::Low);
  CHECK(regime(100, 19) == Regime::Mid);
  // X a power of two so Y/X reproduces alpha0 exactly
  CHECK(regime(64, alpha0() * 64) == Regime::Low);
  CHECK(regime(2, 1) == Regime::Mid);
  CHECK(regime(100, 51) == Regime::High);
  CHECK(regime(1, 1) == Regime::High);
  CHECK_THROWS_AS(regime(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(regime(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(regime(-1, -2), std::invalid_argument);
}

TEST_CASE("pinned perimeter values") {
  CHECK(rho_cont(7, 4) == Approx(2 * std::sqrt(66.0)).epsilon(1e-12));
  CHECK(rho_cont(13, 13) == Approx(24.9799919935936).epsilon(1e-12));
  CHECK(rho_cont(9, 4) == Approx(12 + 4 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(rho_cont(20, 2) == Approx(21.5900901640399).epsilon(1e-12));
  CHECK(rho_cont(1, 1) == Approx(2 * std::sqrt(12.0)).epsilon(1e-12));
  CHECK(rho_cont(3, 3) == Approx(12.0).epsilon(1e-13));
}

TEST_CASE("value is continuous across both regime boundaries") {
  for (int i = 1; i <= 100; ++i) {
    double X = 1.0 + 37.0 * i;
    // At Y = alpha0*X the dispatcher takes the Low branch; the Mid closed
    // form must agree there.
    double Yl = alpha0() * X;
    double mid = 4 * std::sqrt(X) + 2 * std::sqrt(2 * Yl);
    CHECK(std::abs(rho_cont(X, Yl) - mid) < 1e-6);
    // At Y = X/2 the dispatcher takes Mid; the High closed form must agree.
    double Yh = X / 2;
    double high = 2 * std::sqrt(6 * (X + Yh));
    CHECK(std::abs(rho_cont(X, Yh) - high) < 1e-12 * high);
  }
}

TEST_CASE("value is monotone in each volume") {
  double prev = 0;
  for (int n = 1; n <= 400; ++n) {
    double v = rho_cont(n, 1);
    CHECK(v > prev);
    prev = v;
  }
  prev = 0;
  for (int m = 1; m <= 400; ++m) {
    double v = rho_cont(400, m);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("minimizing shapes have the stated sizes and volumes") {
  auto high = continuous_shape(3, 3);
  CHECK(high.regime == Regime::High);
  REQUIRE(high.shape.size() == 3);
  CHECK(high.shape[0] == Approx(1.5).epsilon(1e-12));
  CHECK(high.shape[1] == Approx(1.5).epsilon(1e-12));
  CHECK(high.shape[2] == Approx(2.0).epsilon(1e-12));
  // x*z = X and y*z = Y
  CHECK(high.shape[0] * high.shape[2] == Approx(3.0).epsilon(1e-12));

  auto low = continuous_shape(100, 18);
  CHECK(low.regime == Regime::Low);
  REQUIRE(low.shape.size() == 2);
  CHECK(low.shape[0] == Approx(std::sqrt(118.0)).epsilon(1e-12));
  CHECK(low.shape[1] == Approx(std::sqrt(18.0)).epsilon(1e-12));

  auto mid = continuous_shape(100, 19);
  CHECK(mid.regime == Regime::Mid);
  REQUIRE(mid.shape.size() == 3);
  CHECK(mid.shape[0] == Approx(10.0).epsilon(1e-12));
  // attached rectangle is twice as tall as wide and has area Y
  CHECK(mid.shape[1] * mid.shape[2] == Approx(19.0).epsilon(1e-12));
  CHECK(mid.shape[1] == Approx(2 * mid.shape[2]).epsilon(1e-12));
}

TEST_CASE("regime names are human readable") {
  CHECK(std::string(regime_name(Regime::Low)) == "low");
  CHECK(std::string(regime_name(Regime::Mid)) == "mid");
  CHECK(std::string(regime_name(Regime::High)) == "high");
}
