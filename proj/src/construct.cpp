#include "dbubble/construct.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dbubble/intmath.hpp"

namespace dbubble {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Lem2_5: return "low-ratio corner layout";
    case Provenance::Lem2_7: return "mid-ratio side layout";
    case Provenance::Thm3_1: return "equal-volume triple search";
    case Provenance::CorHigh: default: return "high-ratio wall shift";
  }
}

RectDims round_square(long long V) {
  if (V < 1) throw std::invalid_argument("round_square: volume must be >= 1");
  long long s = static_cast<long long>(isqrt(static_cast<std::uint64_t>(V)));
  if (V == s * s) return {s, s};
  if (V <= s * s + s) return {s + 1, s};  // fractional part below one half
  return {s + 1, s + 1};
}

namespace {

std::vector<Cell> rect_cells(long long x0, long long y0, long long w, long long h) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(w * h));
  for (long long x = x0; x < x0 + w; ++x)
    for (long long y = y0; y < y0 + h; ++y)
      cells.push_back({static_cast<int>(x), static_cast<int>(y)});
  return cells;
}

std::vector<Cell> mirror_x(std::vector<Cell> cells) {
  for (Cell& c : cells) c.x = -c.x;
  return cells;
}

}  // namespace

std::vector<Cell> trim_to_volume(std::vector<Cell> shape, long long target,
                                 const std::vector<Cell>& protectedCells,
                                 TrimSide side) {
  if (target > static_cast<long long>(shape.size()))
    throw std::invalid_argument("trim_to_volume: target exceeds volume");
  if (side == TrimSide::Right)
    return mirror_x(trim_to_volume(mirror_x(std::move(shape)), target,
                                   mirror_x(protectedCells), TrimSide::Left));
  // Ascending (x, y) order is exactly "leftmost column first, bottom up", so
  // the iterative one-cell-at-a-time removal collapses to taking a prefix.
  std::sort(shape.begin(), shape.end());
  std::set<Cell> keep(protectedCells.begin(), protectedCells.end());
  long long excess = static_cast<long long>(shape.size()) - target;
  std::vector<Cell> out;
  out.reserve(shape.size());
  for (const Cell& c : shape) {
    if (excess > 0 && !keep.count(c)) {
      --excess;
      continue;
    }
    out.push_back(c);
  }
  if (excess > 0)
    throw std::invalid_argument("trim_to_volume: protected cells block the target");
  return out;
}

namespace {

Construction measured(LatticeConfig config, long long n, long long m, int slack,
                      Provenance prov, bool guarantee,
                      std::optional<EqualTriple> triple = std::nullopt) {
  Construction c;
  c.rhoDB = db_perimeter(config).rhoDB;  // also re-validates
  c.config = std::move(config);
  c.bound = ceil_rho_cont_int(n, m) + slack;
  c.slack = slack;
  c.provenance = prov;
  c.guaranteeApplies = guarantee;
  c.triple = triple;
  if (static_cast<long long>(c.config.cellsA.size()) != n ||
      static_cast<long long>(c.config.cellsB.size()) != m)
    throw std::logic_error("construction volume mismatch");
  return c;
}

}  // namespace

Construction construct_low_alpha(long long n, long long m) {
  if (m < 1 || !ratio_le_alpha0(n, m))
    throw std::invalid_argument("construct_low_alpha: need m/n <= alpha0");
  RectDims outer = round_square(n + m);
  RectDims inner = round_square(m);
  // The ratio bound keeps the corner square strictly inside the outer one.
  if (inner.w > outer.w || inner.h > outer.h)
    throw std::logic_error("corner square does not fit");
  auto b0 = rect_cells(outer.w - inner.w, outer.h - inner.h, inner.w, inner.h);
  auto b = trim_to_volume(std::move(b0), m);  // freed cells fall back to A
  auto whole = trim_to_volume(rect_cells(0, 0, outer.w, outer.h), n + m, b);
  std::vector<Cell> a;
  std::set<Cell> inB(b.begin(), b.end());
  for (const Cell& c : whole)
    if (!inB.count(c)) a.push_back(c);
  return measured({std::move(a), std::move(b)}, n, m, 2, Provenance::Lem2_5, true);
}

Construction construct_mid_alpha(long long n, long long m) {
  if (m < 1 || ratio_le_alpha0(n, m) || !ratio_le_half(n, m))
    throw std::invalid_argument("construct_mid_alpha: need alpha0 < m/n <= 1/2");
  // A near-square with its rounded-up side vertical: that side carries the
  // shared wall, and widening it is what keeps the bound tight.
  RectDims rs = round_square(n);
  long long wA = rs.h, hA = rs.w;
  auto a = trim_to_volume(rect_cells(0, 0, wA, hA), n);

  // B dimensions split on the parity of k = floor(sqrt(2m)) and on whether
  // the fractional part of sqrt(2m) reaches one half (2m > k^2+k).
  long long k = static_cast<long long>(isqrt(static_cast<std::uint64_t>(2 * m)));
  bool fracHigh = 2 * m > k * k + k;
  long long ceilS = static_cast<long long>(ceil_sqrt(static_cast<std::uint64_t>(2 * m)));
  long long h, w;
  if (k % 2 != 0) {
    h = fracHigh ? ceilS : k;
    w = ceil_sqrt_half(m);
  } else if (fracHigh) {
    h = k;
    w = ceil_sqrt_half(m);
  } else {
    h = ceilS;
    w = floor_sqrt_half(m);
  }
  if (w * h < m) throw std::logic_error("B rectangle too small");
  if (h > hA) throw std::logic_error("B taller than the shared side");
  long long oy = (hA - h) / 2;  // centered, shifted down to integer rows
  auto b = trim_to_volume(rect_cells(wA, oy, w, h), m, {}, TrimSide::Right);
  return measured({std::move(a), std::move(b)}, n, m, 2, Provenance::Lem2_7, true);
}

std::optional<EqualTriple> equal_triple_search(double V, int budgetSlack) {
  if (!(V > 0)) throw std::invalid_argument("equal_triple_search: V must be positive");
  long long V48 = std::llround(48.0 * V);
  long long V2 = std::llround(2.0 * V);
  long long budget =
      static_cast<long long>(ceil_sqrt(static_cast<std::uint64_t>(V48))) + budgetSlack;

  EqualTriple best;
  bool have = false;
  auto try_z = [&](long long z) {
    if (z < 1) return;
    long long x = (V2 + 2 * z - 1) / (2 * z);  // smallest x with xz >= V
    long long obj = 3 * z + 4 * x;
    if (!have || obj < best.objective) {
      best = {x, x, z, obj};
      have = true;
    }
  };
  // The continuous optimum sits at z = sqrt(4V/3); scan a window around it,
  // then every z the budget allows, which makes the search exhaustive.
  long long zc = static_cast<long long>(std::sqrt(4.0 * V / 3.0));
  for (long long z = std::max(1LL, zc - 3); z <= zc + 4; ++z) try_z(z);
  for (long long z = 1; 3 * z <= budget; ++z) try_z(z);

  if (!have || best.objective > budget) return std::nullopt;
  return best;
}

std::optional<Construction> construct_equal(double V, int budgetSlack) {
  auto triple = equal_triple_search(V, budgetSlack);
  if (!triple) return std::nullopt;
  long long V2 = std::llround(2.0 * V);
  long long target = (V2 + 1) / 2;  // ceil(V)
  auto a = trim_to_volume(rect_cells(0, 0, triple->x, triple->z), target);
  auto b = trim_to_volume(rect_cells(triple->x, 0, triple->y, triple->z), target,
                          {}, TrimSide::Right);
  Construction c = measured({std::move(a), std::move(b)}, target, target,
                            budgetSlack, Provenance::Thm3_1,
                            V > 6000 && budgetSlack <= 1, triple);
  // The bound tracks the search budget ceil(2*sqrt(12V)) + slack, which for
  // integer V coincides with ceil(rho_cont(V, V)) + slack.
  long long V48 = std::llround(48.0 * V);
  c.bound = static_cast<long long>(ceil_sqrt(static_cast<std::uint64_t>(V48))) +
            budgetSlack;
  return c;
}

Construction construct_high_alpha(long long n, long long m) {
  if (!(2 * m > n && m < n))
    throw std::invalid_argument("construct_high_alpha: need 1/2 < m/n < 1");
  double V = static_cast<double>(n + m) / 2.0;
  for (int slack = 1; slack <= 16; ++slack) {
    auto t = equal_triple_search(V, slack);
    if (!t) continue;
    long long x = t->x, z = t->z;
    long long c = (n + z - 1) / z;  // wall column: A spans [0, c)
    if (c > 2 * x - 1) c = 2 * x - 1;
    if (c * z < n) continue;
    long long volB = (2 * x - c) * z;
    std::vector<Cell> a = rect_cells(0, 0, c, z);
    std::vector<Cell> b = rect_cells(c, 0, 2 * x - c, z);
    if (volB < m) {
      long long d = m - volB;  // deficit, strictly below z by choice of c
      if (d > z - 1) continue;
      // Corner notch: hand B the bottom d cells of A's wall column. The wall
      // gains one horizontal edge, so rhoDB grows by at most 1.
      for (long long r = 0; r < d; ++r) {
        Cell moved{static_cast<int>(c - 1), static_cast<int>(r)};
        a.erase(std::find(a.begin(), a.end(), moved));
        b.push_back(moved);
      }
      a = trim_to_volume(std::move(a), n);
    } else {
      b = trim_to_volume(std::move(b), m, {}, TrimSide::Right);
      a = trim_to_volume(std::move(a), n);
    }
    LatticeConfig config{std::move(a), std::move(b)};
    if (!validate(config).empty()) continue;
    return measured(std::move(config), n, m, 2, Provenance::CorHigh, n > 8000, t);
  }
  throw std::logic_error("construct_high_alpha: no layout found");
}

Construction construct(long long n, long long m) {
  if (m < 1 || m > n) throw std::invalid_argument("construct: need 1 <= m <= n");
  if (ratio_le_alpha0(n, m)) return construct_low_alpha(n, m);
  if (ratio_le_half(n, m)) return construct_mid_alpha(n, m);
  if (m == n) {
    for (int slack = 1; slack <= 16; ++slack) {
      auto c = construct_equal(static_cast<double>(n), slack);
      if (c) {
        c->guaranteeApplies = n > 6000;
        return std::move(*c);
      }
    }
    throw std::logic_error("construct: equal search exhausted its budget");
  }
  return construct_high_alpha(n, m);
}

std::string to_text_with_provenance(const Construction& c) {
  std::ostringstream out;
  out << "# provenance=" << provenance_name(c.provenance) << " rhoDB=" << c.rhoDB
      << " bound=" << c.bound << " slack=" << c.slack
      << " guaranteed=" << (c.guaranteeApplies ? 1 : 0) << "\n";
  out << to_text(c.config);
  return out.str();
}

}  // namespace dbubble
