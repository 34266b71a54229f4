#include "dbubble/continuous.hpp"

#include <cmath>
#include <stdexcept>

namespace dbubble {

double alpha0() {
  static const double a0 = (688.0 - 480.0 * std::sqrt(2.0)) / 49.0;
  return a0;
}

namespace {
void check_domain(double X, double Y) {
  if (!(Y > 0.0)) throw std::invalid_argument("Y must be positive");
  if (Y > X) throw std::invalid_argument("need Y <= X");
}
}  // namespace

Regime regime(double X, double Y) {
  check_domain(X, Y);
  double alpha = Y / X;
  if (alpha <= alpha0()) return Regime::Low;
  if (alpha <= 0.5) return Regime::Mid;
  return Regime::High;
}

double rho_cont(double X, double Y) {
  switch (regime(X, Y)) {
    case Regime::Low:
      return 4.0 * std::sqrt(X + Y) + 2.0 * std::sqrt(Y);
    case Regime::Mid:
      return 4.0 * std::sqrt(X) + 2.0 * std::sqrt(2.0 * Y);
    case Regime::High:
    default:
      return 2.0 * std::sqrt(6.0 * (X + Y));
  }
}

ContinuousSolution continuous_shape(double X, double Y) {
  ContinuousSolution sol;
  sol.regime = regime(X, Y);
  sol.value = rho_cont(X, Y);
  switch (sol.regime) {
    case Regime::Low:
      // Outer square of area X+Y with a square of area Y in one corner.
      sol.shape = {std::sqrt(X + Y), std::sqrt(Y)};
      break;
    case Regime::Mid:
      // Square of area X; B is a rectangle twice as tall as it is wide,
      // area Y, attached flush to one side.
      sol.shape = {std::sqrt(X), std::sqrt(2.0 * Y), std::sqrt(2.0 * Y) / 2.0};
      break;
    case Regime::High:
    default: {
      double z = std::sqrt(2.0 * (X + Y) / 3.0);
      double s = std::sqrt(3.0 / (2.0 * (X + Y)));
      sol.shape = {X * s, Y * s, z};  // xz = X, yz = Y, 3z + 2(x+y) = value
      break;
    }
  }
  return sol;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Low: return "low";
    case Regime::Mid: return "mid";
    case Regime::High: default: return "high";
  }
}

}  // namespace dbubble
