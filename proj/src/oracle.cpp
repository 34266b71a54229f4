#include "dbubble/oracle.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>
#include <vector>

#include "dbubble/construct.hpp"
#include "dbubble/intmath.hpp"

namespace dbubble {

namespace {

constexpr std::uint8_t kInA = 1;
constexpr std::uint8_t kInB = 2;
constexpr std::uint8_t kSeenA = 4;  // already offered to the A enumeration
constexpr std::uint8_t kSeenB = 8;
constexpr std::uint8_t kUniverse = 16;  // within reach of B
constexpr std::uint8_t kBanned = 32;    // seed handled by an earlier root
constexpr std::uint8_t kWall = 64;      // grid margin
constexpr std::uint8_t kFlood = 128;

struct BBox {
  int minx = INT_MAX, maxx = INT_MIN, miny = INT_MAX, maxy = INT_MIN;
  void add(int x, int y) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  long long halfPeri() const { return (maxx - minx + 1) + (maxy - miny + 1); }
};

// Canonical enumeration of fixed polyominoes: the root is forced to be the
// least cell in (y, x) order, every other cell must sit strictly after it,
// and cells popped from the untried list stay excluded for their subtree.
// The same machinery counts polyominoes and, in minimize mode, runs a
// branch-and-bound over the second bubble for each first one.
class Search {
 public:
  enum class Mode { Count, CountHoleFree, Minimize };

  Search(int n, int m, Mode mode, long long nodeBudget, long long incumbent,
         long long lowerBound)
      : n_(n), m_(m), mode_(mode), budget_(nodeBudget),
        incumbent_(incumbent), lowerBound_(lowerBound) {
    GW_ = 2 * (n + m) + 5;
    GH_ = n + 2 * m + 5;
    ox_ = n + m + 2;
    oy_ = m + 2;
    grid_.assign(static_cast<size_t>(GW_) * GH_, 0);
    for (int x = 0; x < GW_; ++x) {
      grid_[idx(x, 0)] = kWall;
      grid_[idx(x, GH_ - 1)] = kWall;
    }
    for (int y = 0; y < GH_; ++y) {
      grid_[idx(0, y)] = kWall;
      grid_[idx(GW_ - 1, y)] = kWall;
    }
  }

  void run() {
    int root = idx(ox_, oy_);
    grid_[root] |= kSeenA;
    growA({root}, 0);
    grid_[root] &= ~kSeenA;
  }

  long long count() const { return count_; }
  long long nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }
  bool improved() const { return !bestA_.empty(); }
  long long bestValue() const { return incumbent_; }

  LatticeConfig bestConfig() const {
    LatticeConfig cfg;
    for (int c : bestA_) cfg.cellsA.push_back(cell(c));
    for (int c : bestB_) cfg.cellsB.push_back(cell(c));
    return cfg;
  }

 private:
  int idx(int x, int y) const { return y * GW_ + x; }
  Cell cell(int c) const { return {c % GW_ - ox_, c / GW_ - oy_}; }

  bool stop() {
    if (done_) return true;
    if (nodes_ > budget_) {
      aborted_ = true;
      return true;
    }
    return false;
  }

  bool allowedA(int c) const {
    int x = c % GW_, y = c / GW_;
    return y > oy_ || (y == oy_ && x >= ox_);
  }

  long long aBound() const { return 2 * abox_.back().halfPeri() + 1; }
  long long bBound() const {
    return 2 * ubox_.back().halfPeri() + std::max(1LL, shared_);
  }

  long long perimeterOf(const std::vector<int>& cells, std::uint8_t flag) {
    long long p = 0;
    for (int c : cells)
      for (int nb : {c + 1, c - 1, c + GW_, c - GW_})
        if (!(grid_[nb] & flag)) ++p;
    return p;
  }

  // A bubble has a hole when some cell of its complement, within the box one
  // ring beyond its bounding box, cannot be reached from that ring. Cells of
  // the other bubble count as open space here.
  bool hasHole(const std::vector<int>& cells, std::uint8_t flag) {
    BBox box;
    for (int c : cells) box.add(c % GW_, c / GW_);
    int x0 = box.minx - 1, x1 = box.maxx + 1, y0 = box.miny - 1, y1 = box.maxy + 1;
    long long total =
        static_cast<long long>(x1 - x0 + 1) * (y1 - y0 + 1) -
        static_cast<long long>(cells.size());
    std::vector<int> visited;
    int start = idx(x0, y0);
    grid_[start] |= kFlood;
    visited.push_back(start);
    for (size_t head = 0; head < visited.size(); ++head) {
      int c = visited[head];
      int cx = c % GW_, cy = c / GW_;
      const int nbs[4] = {c + 1, c - 1, c + GW_, c - GW_};
      const int nx[4] = {cx + 1, cx - 1, cx, cx};
      const int ny[4] = {cy, cy, cy + 1, cy - 1};
      for (int k = 0; k < 4; ++k) {
        if (nx[k] < x0 || nx[k] > x1 || ny[k] < y0 || ny[k] > y1) continue;
        if (grid_[nbs[k]] & (flag | kFlood)) continue;
        grid_[nbs[k]] |= kFlood;
        visited.push_back(nbs[k]);
      }
    }
    for (int c : visited) grid_[c] &= ~kFlood;
    return static_cast<long long>(visited.size()) != total;
  }

  void includeA(int c) {
    grid_[c] |= kInA;
    acells_.push_back(c);
    BBox b = abox_.empty() ? BBox{} : abox_.back();
    b.add(c % GW_, c / GW_);
    abox_.push_back(b);
    ++nodes_;
  }
  void excludeA(int c) {
    grid_[c] &= ~kInA;
    acells_.pop_back();
    abox_.pop_back();
  }

  void growA(std::vector<int> untried, int size) {
    while (!untried.empty()) {
      if (stop()) return;
      int c = untried.back();
      untried.pop_back();
      includeA(c);
      if (size + 1 == n_) {
        completeA();
      } else if (aBound() < incumbent_) {
        int added[4];
        int na = 0;
        for (int nb : {c + 1, c - 1, c + GW_, c - GW_}) {
          if (grid_[nb] & (kInA | kSeenA | kWall)) continue;
          if (!allowedA(nb)) continue;
          grid_[nb] |= kSeenA;
          added[na++] = nb;
        }
        std::vector<int> next = untried;
        next.insert(next.end(), added, added + na);
        growA(std::move(next), size + 1);
        for (int i = 0; i < na; ++i) grid_[added[i]] &= ~kSeenA;
      }
      excludeA(c);
    }
  }

  void completeA() {
    if (mode_ == Mode::Count) {
      ++count_;
      return;
    }
    if (mode_ == Mode::CountHoleFree) {
      if (!hasHole(acells_, kInA)) ++count_;
      return;
    }
    if (aBound() >= incumbent_) return;
    if (hasHole(acells_, kInA)) return;
    rhoA_ = perimeterOf(acells_, kInA);

    // Seeds: empty neighbors of A in id order. Each candidate B is counted
    // once, at its least contained seed, by banning all earlier seeds.
    std::vector<int> seeds;
    for (int c : acells_)
      for (int nb : {c + 1, c - 1, c + GW_, c - GW_})
        if (!(grid_[nb] & (kInA | kWall | kFlood))) {
          grid_[nb] |= kFlood;
          seeds.push_back(nb);
        }
    for (int c : seeds) grid_[c] &= ~kFlood;
    std::sort(seeds.begin(), seeds.end());

    // Universe: every cell within m-1 steps of a seed through open space.
    std::vector<int> universe = seeds;
    for (int c : universe) grid_[c] |= kUniverse;
    size_t layerEnd = universe.size();
    for (int depth = 1; depth < m_; ++depth) {
      size_t layerBegin = depth == 1 ? 0 : layerEnd;
      layerEnd = universe.size();
      for (size_t i = layerBegin; i < layerEnd; ++i)
        for (int nb : {universe[i] + 1, universe[i] - 1, universe[i] + GW_,
                       universe[i] - GW_})
          if (!(grid_[nb] & (kInA | kWall | kUniverse))) {
            grid_[nb] |= kUniverse;
            universe.push_back(nb);
          }
    }

    ubox_.assign(1, abox_.back());
    shared_ = 0;
    size_t bannedCount = 0;
    for (size_t i = 0; i < seeds.size() && !stop(); ++i) {
      int root = seeds[i];
      grid_[root] |= kSeenB;
      growB({root}, 0);
      grid_[root] &= ~kSeenB;
      grid_[root] |= kBanned;
      ++bannedCount;
    }
    for (size_t i = 0; i < bannedCount; ++i) grid_[seeds[i]] &= ~kBanned;
    for (int c : universe) grid_[c] &= ~kUniverse;
  }

  int sharedWith(int c) const {
    int s = 0;
    for (int nb : {c + 1, c - 1, c + GW_, c - GW_})
      if (grid_[nb] & kInA) ++s;
    return s;
  }

  void includeB(int c) {
    grid_[c] |= kInB;
    bcells_.push_back(c);
    BBox b = ubox_.back();
    b.add(c % GW_, c / GW_);
    ubox_.push_back(b);
    shared_ += sharedWith(c);
    ++nodes_;
  }
  void excludeB(int c) {
    grid_[c] &= ~kInB;
    bcells_.pop_back();
    ubox_.pop_back();
    shared_ -= sharedWith(c);
  }

  void growB(std::vector<int> untried, int size) {
    while (!untried.empty()) {
      if (stop()) return;
      int c = untried.back();
      untried.pop_back();
      includeB(c);
      if (size + 1 == m_) {
        completeB();
      } else if (bBound() < incumbent_) {
        int added[4];
        int na = 0;
        for (int nb : {c + 1, c - 1, c + GW_, c - GW_}) {
          if (!(grid_[nb] & kUniverse)) continue;
          if (grid_[nb] & (kInB | kSeenB | kBanned)) continue;
          grid_[nb] |= kSeenB;
          added[na++] = nb;
        }
        std::vector<int> next = untried;
        next.insert(next.end(), added, added + na);
        growB(std::move(next), size + 1);
        for (int i = 0; i < na; ++i) grid_[added[i]] &= ~kSeenB;
      }
      excludeB(c);
    }
  }

  void completeB() {
    if (bBound() >= incumbent_) return;
    if (hasHole(bcells_, kInB)) return;
    long long rhoB = perimeterOf(bcells_, kInB);
    long long value = rhoA_ + rhoB - shared_;
    if (value < incumbent_) {
      incumbent_ = value;
      bestA_ = acells_;
      bestB_ = bcells_;
      if (incumbent_ <= lowerBound_) done_ = true;
    }
  }

  int n_, m_;
  Mode mode_;
  long long budget_;
  long long incumbent_;
  long long lowerBound_;
  int GW_ = 0, GH_ = 0, ox_ = 0, oy_ = 0;
  std::vector<std::uint8_t> grid_;
  std::vector<int> acells_, bcells_;
  std::vector<BBox> abox_, ubox_;
  long long shared_ = 0;
  long long rhoA_ = 0;
  long long count_ = 0;
  long long nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
  std::vector<int> bestA_, bestB_;
};

std::vector<Cell> rect_cells(long long x0, long long y0, long long w, long long h) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(w * h));
  for (long long x = x0; x < x0 + w; ++x)
    for (long long y = y0; y < y0 + h; ++y)
      cells.push_back({static_cast<int>(x), static_cast<int>(y)});
  return cells;
}

// Two trimmed near-squares far enough apart to share nothing: this meets the
// separated-case lower bound exactly, so enumeration needs only touching
// pairs.
LatticeConfig separated_config(long long n, long long m) {
  RectDims ra = round_square(n), rb = round_square(m);
  auto a = trim_to_volume(rect_cells(0, 0, ra.w, ra.h), n);
  auto b = trim_to_volume(rect_cells(ra.w + 2, 0, rb.w, rb.h), m);
  return {std::move(a), std::move(b)};
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

OracleResult exact_min(long long n, long long m, long long nodeBudget) {
  if (n < 1 || m < 1) throw std::invalid_argument("exact_min: volumes must be >= 1");
  long long origN = n, origM = m;
  bool swapped = m > n;
  if (swapped) std::swap(n, m);
  if (n + m > 512)
    throw std::invalid_argument("exact_min: volumes too large to enumerate");

  Construction attached = construct(n, m);
  LatticeConfig sep = separated_config(n, m);
  long long sepVal = db_perimeter(sep).rhoDB;
  long long best = attached.rhoDB;
  LatticeConfig bestCfg = attached.config;
  if (sepVal < best) {
    best = sepVal;
    bestCfg = sep;
  }

  // Touching configs obey rho >= union minimum + 1; separated ones cannot
  // beat the seed above. Equality means the seed already is the optimum.
  long long lbTouch =
      2 * static_cast<long long>(ceil_sqrt(static_cast<std::uint64_t>(4 * (n + m)))) + 1;
  long long lbSep =
      2 * static_cast<long long>(ceil_sqrt(static_cast<std::uint64_t>(4 * n))) +
      2 * static_cast<long long>(ceil_sqrt(static_cast<std::uint64_t>(4 * m)));
  long long lbGlobal = std::min(lbTouch, lbSep);

  OracleResult r;
  r.n = origN;
  r.m = origM;
  r.exact = true;
  if (best > lbGlobal) {
    Search s(static_cast<int>(n), static_cast<int>(m), Search::Mode::Minimize,
             nodeBudget, best, lbGlobal);
    s.run();
    r.nodesExplored = s.nodes();
    r.exact = !s.aborted();
    if (s.improved()) {
      best = s.bestValue();
      bestCfg = s.bestConfig();
    }
  }
  if (swapped) std::swap(bestCfg.cellsA, bestCfg.cellsB);
  r.value = best;
  r.config = canonical_form(bestCfg);
  if (db_perimeter(r.config).rhoDB != r.value)
    throw std::logic_error("exact_min: witness does not measure to its value");
  return r;
}

OracleResult family_min(long long n, long long m) {
  if (n < 1 || m < 1) throw std::invalid_argument("family_min: volumes must be >= 1");
  long long origN = n, origM = m;
  bool swapped = m > n;
  if (swapped) std::swap(n, m);

  Construction base = construct(n, m);
  const long long B0 = base.rhoDB;  // family contains this layout
  long long best = LLONG_MAX;
  LatticeConfig bestCfg;
  long long tried = 0;

  auto consider = [&](std::vector<Cell> a, std::vector<Cell> b) {
    ++tried;
    LatticeConfig cfg{std::move(a), std::move(b)};
    if (!validate(cfg).empty()) return;
    long long v = db_perimeter(cfg).rhoDB;
    if (v < best) {
      best = v;
      bestCfg = std::move(cfg);
    }
  };
  auto shift_y = [](std::vector<Cell> cells, int dy) {
    for (Cell& c : cells) c.y += dy;
    return cells;
  };

  // Widths are always minimal for the height: trimming removes whole leading
  // columns first, so a wider start collapses to the same shape.

  // Nested: B in the outer top right corner, outer trimmed around it.
  for (long long H = 1; H <= B0; ++H) {
    long long W = ceil_div(n + m, H);
    if (2 * (W + H) + 1 > B0) continue;
    for (long long h = 1; h <= H; ++h) {
      long long w = ceil_div(m, h);
      if (w > W) continue;
      try {
        auto b = trim_to_volume(rect_cells(W - w, H - h, w, h), m);
        auto whole = trim_to_volume(rect_cells(0, 0, W, H), n + m, b);
        std::set<Cell> inB(b.begin(), b.end());
        std::vector<Cell> a;
        for (const Cell& c : whole)
          if (!inB.count(c)) a.push_back(c);
        consider(std::move(a), std::move(b));
      } catch (const std::invalid_argument&) {
      }
    }
  }

  // Side-attached: B against A's right wall at every vertical offset.
  for (long long Ha = 1; Ha <= B0; ++Ha) {
    long long Wa = ceil_div(n, Ha);
    if (2 * (Wa + Ha) + 1 > B0) continue;
    auto a = trim_to_volume(rect_cells(0, 0, Wa, Ha), n);
    for (long long Hb = 1; Hb <= B0; ++Hb) {
      long long Wb = ceil_div(m, Hb);
      if (2 * (Wa + Ha) + 2 * (Wb + Hb) - std::min(Ha, Hb) > B0) continue;
      auto b = trim_to_volume(rect_cells(Wa, 0, Wb, Hb), m, {}, TrimSide::Right);
      for (long long o = 1 - Hb; o <= Ha - 1; ++o)
        consider(a, shift_y(b, static_cast<int>(o)));
    }
  }

  // Side-by-side columns of equal height with a wall notch handed to B.
  for (long long z = 1; z <= B0; ++z) {
    for (long long d = 0; d < z; ++d) {
      long long wa = ceil_div(n + d, z);
      long long wb = std::max(1LL, ceil_div(std::max(0LL, m - d), z));
      if (2 * (wa + wb + z) + 1 > B0) continue;
      auto a0 = rect_cells(0, 0, wa, z);
      auto b0 = rect_cells(wa, 0, wb, z);
      for (long long r = 0; r < d; ++r) {
        Cell moved{static_cast<int>(wa - 1), static_cast<int>(r)};
        a0.erase(std::find(a0.begin(), a0.end(), moved));
        b0.push_back(moved);
      }
      try {
        auto a = trim_to_volume(std::move(a0), n);
        auto b = trim_to_volume(std::move(b0), m, {}, TrimSide::Right);
        consider(std::move(a), std::move(b));
      } catch (const std::invalid_argument&) {
      }
    }
  }

  if (best > B0) {
    best = B0;
    bestCfg = base.config;
  }
  if (swapped) std::swap(bestCfg.cellsA, bestCfg.cellsB);

  OracleResult r;
  r.n = origN;
  r.m = origM;
  r.value = best;
  r.config = canonical_form(bestCfg);
  r.exact = false;
  r.nodesExplored = tried;
  if (db_perimeter(r.config).rhoDB != r.value)
    throw std::logic_error("family_min: witness does not measure to its value");
  return r;
}

GapResult gap(long long n, long long m, long long nodeBudget) {
  if (n < 1 || m < 1) throw std::invalid_argument("gap: volumes must be >= 1");
  if (m > n) std::swap(n, m);
  GapResult g;
  g.ceilCont = ceil_rho_cont_int(n, m);
  if (n + m <= kExactLimit) {
    OracleResult r = exact_min(n, m, nodeBudget);
    g.bestKnown = r.value;
    g.certifiedExact = r.exact;
  } else {
    OracleResult f = family_min(n, m);
    g.bestKnown = std::min(f.value, construct(n, m).rhoDB);
    g.certifiedExact = false;
  }
  long long d = g.bestKnown - g.ceilCont;
  if (d >= 0 && d <= 2) g.gap = static_cast<int>(d);
  return g;
}

long long count_fixed_polyominoes(int k) {
  if (k < 1 || k > 16) throw std::invalid_argument("count_fixed_polyominoes: k out of range");
  Search s(k, 0, Search::Mode::Count, LLONG_MAX, LLONG_MAX, 0);
  s.run();
  return s.count();
}

long long count_hole_free_fixed_polyominoes(int k) {
  if (k < 1 || k > 16) throw std::invalid_argument("count_hole_free_fixed_polyominoes: k out of range");
  Search s(k, 0, Search::Mode::CountHoleFree, LLONG_MAX, LLONG_MAX, 0);
  s.run();
  return s.count();
}

}  // namespace dbubble
