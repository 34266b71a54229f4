#pragma once

#include <functional>
#include <utility>

namespace dbubble {

// Region between the transformed-and-shifted perimeter curves for volume n.
// The curves drop the ceiling that the exact count carries, so the region is
// a conservative (smaller) version of the true one.
struct RegionCurves {
  double n = 0;
  double xLeft = 0, xRight = 0;  // corner abscissae; curves meet there
  std::function<double(double)> y1;  // upper curve
  std::function<double(double)> y2;  // lower curve
};

struct Certificate {
  double n = 0;
  // Center of the best translated parallelogram, kept on y = x/2.
  double centerX = 0, centerY = 0;
  bool contained = false;      // all four corners strictly between the curves
  bool hitsAllShifts = false;  // every sampled translation meets all 3 lattices
  double margin = 0;           // best min corner clearance over the scan
  double shiftClearance = 0;   // worst closed-edge clearance over hits
};

// Ceiling-kept curves; throws std::domain_error at the denominator pole.
std::pair<double, double> projected_curves(double n, double x);

RegionCurves shifted_curves(double n);

// True iff the region for N encloses the region for n on a sampled grid,
// corners grow, and xRight(n) stays left of sqrt(n/3) - 1/6.
bool region_monotone(double n, double N, int samples);

// Searches translations of the parallelogram spanned by (2/3,2/3) and (2,1)
// along y = x/2 for one inside the region, and checks that every translation
// in one lattice period contains a point of each shifted integer lattice.
Certificate parallelogram_certificate(double n);

}  // namespace dbubble
