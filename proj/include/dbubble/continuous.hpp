#pragma once

#include <vector>

namespace dbubble {

// Volume-ratio regimes of the continuous minimizer. Boundaries belong to the
// lower tag; the perimeter value is continuous across them either way.
enum class Regime { Low, Mid, High };

// Threshold ratio between Low and Mid, (688 - 480*sqrt(2))/49, about 0.18730.
double alpha0();

struct ContinuousSolution {
  Regime regime;
  double value;  // minimal continuous double-bubble perimeter
  // Side lengths of the minimizing shapes, by regime:
  //   Low:  {outer square side, corner square side}
  //   Mid:  {square side, attached rectangle height, attached rectangle width}
  //   High: {x, y, z} with A = x-by-z, B = y-by-z sharing the z side
  std::vector<double> shape;
};

// Regime tag for volumes X >= Y > 0 (alpha = Y/X). Throws std::invalid_argument
// for Y <= 0 or Y > X.
Regime regime(double X, double Y);

// Minimal continuous double-bubble perimeter enclosing areas X and Y.
double rho_cont(double X, double Y);

// Value plus the minimizing side lengths.
ContinuousSolution continuous_shape(double X, double Y);

const char* regime_name(Regime r);

}  // namespace dbubble
