#include "dbubble/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dbubble {

namespace {

constexpr double kPoleTol = 1e-12;

double shifted_y1(double s, double x) {
  double denom = 4.0 * s - 12.0 * x - 2.0;
  if (std::abs(denom) < kPoleTol)
    throw std::domain_error("shifted curve pole");
  return (s * (1.0 + 2.0 * x) - 1.0 - 10.0 * x - 24.0 * x * x) / denom;
}

double shifted_y2(double s, double x) {
  double denom = 4.0 * s - 12.0 * x - 2.0;
  if (std::abs(denom) < kPoleTol)
    throw std::domain_error("shifted curve pole");
  return (s * (-1.0 + 2.0 * x) + 1.0 + 8.0 * x + 12.0 * x * x) / denom;
}

}  // namespace

std::pair<double, double> projected_curves(double n, double x) {
  if (n < 1) throw std::invalid_argument("projected_curves: n must be >= 1");
  double C = std::ceil(2.0 * std::sqrt(12.0 * n));
  double D = C - 6.0 * x + 1.0;
  if (std::abs(D) < kPoleTol) throw std::domain_error("projected curve pole");
  double y1 = (2.0 * x * D - 3.0 * n) / D;
  double y2 = (x * (-D) + 3.0 * n) / D;
  return {y1, y2};
}

RegionCurves shifted_curves(double n) {
  if (n < 1) throw std::invalid_argument("shifted_curves: n must be >= 1");
  double s = std::sqrt(3.0 * n);
  double r = std::sqrt(1.0 + 8.0 * s);
  RegionCurves rc;
  rc.n = n;
  rc.xRight = (r - 3.0) / 12.0;
  rc.xLeft = (-r - 3.0) / 12.0;
  rc.y1 = [s](double x) { return shifted_y1(s, x); };
  rc.y2 = [s](double x) { return shifted_y2(s, x); };
  return rc;
}

bool region_monotone(double n, double N, int samples) {
  if (!(1.0 <= n && n <= N)) throw std::invalid_argument("region_monotone: need 1 <= n <= N");
  if (samples < 1) throw std::invalid_argument("region_monotone: samples must be >= 1");
  constexpr double tol = 1e-9;
  RegionCurves small = shifted_curves(n);
  RegionCurves big = shifted_curves(N);
  if (big.xRight < small.xRight - tol) return false;
  if (big.xLeft > small.xLeft + tol) return false;
  if (small.xRight > std::sqrt(n / 3.0) - 1.0 / 6.0 + tol) return false;
  double span = small.xRight - small.xLeft;
  for (int i = 0; i < samples; ++i) {
    double x = samples == 1 ? small.xLeft + span / 2.0
                            : small.xLeft + span * i / (samples - 1);
    if (big.y1(x) < small.y1(x) - tol) return false;
    if (big.y2(x) > small.y2(x) + tol) return false;
  }
  return true;
}

namespace {

// Parallelogram spanned by u = (2/3, 2/3) and v = (2, 1) about a center:
// corners sit at center +- (u+v)/2 and center +- (u-v)/2.
constexpr double kHalfDiag1X = 4.0 / 3.0, kHalfDiag1Y = 5.0 / 6.0;
constexpr double kHalfDiag2X = -2.0 / 3.0, kHalfDiag2Y = -1.0 / 6.0;

// Basis coordinates: a(u) = 1, a(v) = 0, b(u) = 0, b(v) = 1. A point lies in
// the parallelogram iff both coordinates of the offset are within [-1/2, 1/2].
double coord_a(double wx, double wy) { return -1.5 * wx + 3.0 * wy; }
double coord_b(double wx, double wy) { return wx - wy; }

// Signed distance of a corner to the region, min over both curves; negative
// when outside. Past the pole the region has ended, treat as far outside.
double corner_clearance(double s, double x, double y) {
  double denom = 4.0 * s - 12.0 * x - 2.0;
  if (denom < 1e-9) return -1e9;
  return std::min(shifted_y1(s, x) - y, y - shifted_y2(s, x));
}

double center_clearance(double s, double t) {
  double cx = t, cy = t / 2.0;
  double c = 1e9;
  c = std::min(c, corner_clearance(s, cx + kHalfDiag1X, cy + kHalfDiag1Y));
  c = std::min(c, corner_clearance(s, cx - kHalfDiag1X, cy - kHalfDiag1Y));
  c = std::min(c, corner_clearance(s, cx + kHalfDiag2X, cy + kHalfDiag2Y));
  c = std::min(c, corner_clearance(s, cx - kHalfDiag2X, cy - kHalfDiag2Y));
  return c;
}

}  // namespace

Certificate parallelogram_certificate(double n) {
  if (n < 1) throw std::invalid_argument("parallelogram_certificate: n must be >= 1");
  double s = std::sqrt(3.0 * n);
  RegionCurves rc = shifted_curves(n);
  constexpr double step = 1e-3;

  Certificate cert;
  cert.n = n;

  // Containment: slide the center along y = x/2, keep the best clearance.
  double lo = rc.xLeft + kHalfDiag1X;
  double hi = rc.xRight - kHalfDiag1X;
  double bestT = (rc.xLeft + rc.xRight) / 2.0;
  double bestClear = center_clearance(s, bestT);
  for (double t = lo; t <= hi; t += step) {
    double c = center_clearance(s, t);
    if (c > bestClear) {
      bestClear = c;
      bestT = t;
    }
  }
  cert.centerX = bestT;
  cert.centerY = bestT / 2.0;
  cert.margin = bestClear;
  cert.contained = bestClear > 1e-9;

  // Lattice coverage: the translation by (2,1) maps every shifted lattice to
  // itself, so centers (t, t/2) repeat with period 2 in t. Sample one period
  // and demand a lattice point of each shift inside the closed parallelogram.
  const double shifts[3][2] = {{0.0, 0.0}, {1.0 / 3.0, -2.0 / 3.0}, {2.0 / 3.0, -4.0 / 3.0}};
  bool allHit = true;
  double worstBest = 1e9;
  for (double t = 0.0; t < 2.0; t += step) {
    double cx = t, cy = t / 2.0;
    for (const auto& sh : shifts) {
      double best = -1e9;
      long long i0 = llround(cx - sh[0]), j0 = llround(cy - sh[1]);
      for (long long i = i0 - 3; i <= i0 + 3; ++i) {
        for (long long j = j0 - 3; j <= j0 + 3; ++j) {
          double wx = sh[0] + static_cast<double>(i) - cx;
          double wy = sh[1] + static_cast<double>(j) - cy;
          double edge = std::min(0.5 - std::abs(coord_a(wx, wy)),
                                 0.5 - std::abs(coord_b(wx, wy)));
          best = std::max(best, edge);
        }
      }
      if (best < -1e-9) allHit = false;
      worstBest = std::min(worstBest, best);
    }
  }
  cert.hitsAllShifts = allHit;
  cert.shiftClearance = worstBest;
  return cert;
}

}  // namespace dbubble
