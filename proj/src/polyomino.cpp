#include "dbubble/polyomino.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dbubble {

namespace {

// Dense occupancy grid over the bounding box plus a one-cell margin, so
// neighbor lookups and flood fills need no hashing.
struct Grid {
  int x0 = 0, y0 = 0, W = 0, H = 0;  // interior box; storage adds the margin
  std::vector<std::uint8_t> v;       // (W+2) * (H+2), 0 = empty

  static Grid over(const std::vector<const std::vector<Cell>*>& sets) {
    Grid g;
    int xmin = std::numeric_limits<int>::max(), xmax = std::numeric_limits<int>::min();
    int ymin = xmin, ymax = xmax;
    for (const auto* s : sets)
      for (const Cell& c : *s) {
        xmin = std::min(xmin, c.x); xmax = std::max(xmax, c.x);
        ymin = std::min(ymin, c.y); ymax = std::max(ymax, c.y);
      }
    g.x0 = xmin; g.y0 = ymin;
    g.W = xmax - xmin + 1; g.H = ymax - ymin + 1;
    g.v.assign(static_cast<size_t>(g.W + 2) * (g.H + 2), 0);
    return g;
  }

  std::uint8_t& at(int x, int y) {
    return v[static_cast<size_t>(y - y0 + 1) * (W + 2) + (x - x0 + 1)];
  }
  std::uint8_t get(int x, int y) const {
    if (x < x0 - 1 || x > x0 + W || y < y0 - 1 || y > y0 + H) return 0;
    return v[static_cast<size_t>(y - y0 + 1) * (W + 2) + (x - x0 + 1)];
  }
};

constexpr int kDx[4] = {1, -1, 0, 0};
constexpr int kDy[4] = {0, 0, 1, -1};

// Flood fill over cells with grid value `want`, starting from `start`,
// marking visited with `mark`. Returns number of cells marked.
long long flood(Grid& g, Cell start, std::uint8_t want, std::uint8_t mark) {
  if (g.get(start.x, start.y) != want) return 0;
  std::queue<Cell> q;
  g.at(start.x, start.y) = mark;
  q.push(start);
  long long count = 1;
  while (!q.empty()) {
    Cell c = q.front(); q.pop();
    for (int d = 0; d < 4; ++d) {
      int nx = c.x + kDx[d], ny = c.y + kDy[d];
      if (nx < g.x0 - 1 || nx > g.x0 + g.W || ny < g.y0 - 1 || ny > g.y0 + g.H) continue;
      if (g.get(nx, ny) != want) continue;
      g.at(nx, ny) = mark;
      q.push({nx, ny});
      ++count;
    }
  }
  return count;
}

// Connectivity and hole check for one bubble, reporting a witness cell.
// Holes: flood the complement from outside the bounding box; any empty cell
// left unreached is enclosed.
void check_bubble(const std::vector<Cell>& cells, const char* label,
                  std::vector<Violation>& out) {
  if (cells.empty()) {
    out.push_back({std::string(label) + " empty", {}});
    return;
  }
  Grid g = Grid::over({&cells});
  for (const Cell& c : cells) {
    if (g.at(c.x, c.y) == 1) {
      out.push_back({std::string("duplicate cell in ") + label, c});
      return;
    }
    g.at(c.x, c.y) = 1;
  }
  long long reached = flood(g, cells.front(), 1, 2);
  if (reached != static_cast<long long>(cells.size())) {
    for (const Cell& c : cells)
      if (g.get(c.x, c.y) == 1) {
        out.push_back({std::string(label) + " not edge-connected", c});
        break;
      }
    return;  // hole detection on a disconnected set would be noise
  }
  flood(g, {g.x0 - 1, g.y0 - 1}, 0, 3);  // outside region
  for (int y = g.y0; y < g.y0 + g.H; ++y)
    for (int x = g.x0; x < g.x0 + g.W; ++x)
      if (g.get(x, y) == 0) {
        out.push_back({std::string(label) + " not simply connected (hole)", {x, y}});
        return;
      }
}

std::vector<Cell> sorted_unique(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

}  // namespace

bool is_valid_bubble(const std::vector<Cell>& cells) {
  std::vector<Violation> v;
  check_bubble(cells, "bubble", v);
  return v.empty();
}

std::vector<Violation> validate(const LatticeConfig& config) {
  std::vector<Violation> out;
  check_bubble(config.cellsA, "A", out);
  check_bubble(config.cellsB, "B", out);
  if (!config.cellsA.empty() && !config.cellsB.empty()) {
    auto a = sorted_unique(config.cellsA);
    auto b = sorted_unique(config.cellsB);
    std::vector<Cell> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(both));
    if (!both.empty()) out.push_back({"A and B overlap", both.front()});
  }
  return out;
}

long long cell_set_perimeter(const std::vector<Cell>& cells) {
  if (cells.empty()) return 0;
  Grid g = Grid::over({&cells});
  for (const Cell& c : cells) g.at(c.x, c.y) = 1;
  long long p = 0;
  for (const Cell& c : cells)
    for (int d = 0; d < 4; ++d)
      if (g.get(c.x + kDx[d], c.y + kDy[d]) != 1) ++p;
  return p;
}

PerimeterReport db_perimeter(const LatticeConfig& config) {
  auto violations = validate(config);
  if (!violations.empty())
    throw std::invalid_argument("inadmissible config: " + violations.front().invariant);
  Grid g = Grid::over({&config.cellsA, &config.cellsB});
  for (const Cell& c : config.cellsA) g.at(c.x, c.y) = 1;
  for (const Cell& c : config.cellsB) g.at(c.x, c.y) = 2;
  PerimeterReport r;
  for (const Cell& c : config.cellsA)
    for (int d = 0; d < 4; ++d) {
      std::uint8_t t = g.get(c.x + kDx[d], c.y + kDy[d]);
      if (t != 1) ++r.rhoA;
      if (t == 2) ++r.shared;
    }
  for (const Cell& c : config.cellsB)
    for (int d = 0; d < 4; ++d)
      if (g.get(c.x + kDx[d], c.y + kDy[d]) != 2) ++r.rhoB;
  r.rhoDB = r.rhoA + r.rhoB - r.shared;
  return r;
}

namespace {

std::vector<Cell> transform(const std::vector<Cell>& cells, int sym) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const Cell& c : cells) {
    int x = c.x, y = c.y;
    if (sym & 4) x = -x;                       // reflection
    int rx = x, ry = y;
    switch (sym & 3) {                         // rotation
      case 0: break;
      case 1: rx = -y; ry = x; break;
      case 2: rx = -x; ry = -y; break;
      case 3: rx = y; ry = -x; break;
    }
    out.push_back({rx, ry});
  }
  return out;
}

// Shift so the union bounding box starts at (0,0); sort both sets.
LatticeConfig normalized(std::vector<Cell> a, std::vector<Cell> b) {
  int xmin = std::numeric_limits<int>::max(), ymin = xmin;
  for (const Cell& c : a) { xmin = std::min(xmin, c.x); ymin = std::min(ymin, c.y); }
  for (const Cell& c : b) { xmin = std::min(xmin, c.x); ymin = std::min(ymin, c.y); }
  for (Cell& c : a) { c.x -= xmin; c.y -= ymin; }
  for (Cell& c : b) { c.x -= xmin; c.y -= ymin; }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {std::move(a), std::move(b)};
}

bool config_less(const LatticeConfig& lhs, const LatticeConfig& rhs) {
  if (lhs.cellsA != rhs.cellsA) return lhs.cellsA < rhs.cellsA;
  return lhs.cellsB < rhs.cellsB;
}

}  // namespace

LatticeConfig canonical_form(const LatticeConfig& config) {
  bool swappable = config.cellsA.size() == config.cellsB.size();
  LatticeConfig best;
  bool have = false;
  for (int sym = 0; sym < 8; ++sym) {
    auto ta = transform(config.cellsA, sym);
    auto tb = transform(config.cellsB, sym);
    for (int swap = 0; swap < (swappable ? 2 : 1); ++swap) {
      LatticeConfig cand = swap ? normalized(tb, ta) : normalized(ta, tb);
      if (!have || config_less(cand, best)) {
        best = std::move(cand);
        have = true;
      }
    }
  }
  return best;
}

std::string render_ascii(const LatticeConfig& config) {
  Grid g = Grid::over({&config.cellsA, &config.cellsB});
  for (const Cell& c : config.cellsA) g.at(c.x, c.y) = 1;
  for (const Cell& c : config.cellsB) g.at(c.x, c.y) = 2;
  std::string out;
  out.reserve(static_cast<size_t>(g.W + 1) * g.H);
  for (int y = g.y0 + g.H - 1; y >= g.y0; --y) {
    for (int x = g.x0; x < g.x0 + g.W; ++x) {
      std::uint8_t t = g.get(x, y);
      out += t == 1 ? 'A' : t == 2 ? 'B' : '.';
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const LatticeConfig& config) {
  Grid g = Grid::over({&config.cellsA, &config.cellsB});
  const int s = 20;  // pixels per cell
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g.W * s
      << "\" height=\"" << g.H * s << "\" viewBox=\"0 0 " << g.W * s << " "
      << g.H * s << "\">\n";
  auto emit = [&](const std::vector<Cell>& cells, const char* fill) {
    auto sorted = sorted_unique(cells);
    for (const Cell& c : sorted) {
      int px = (c.x - g.x0) * s;
      int py = (g.y0 + g.H - 1 - c.y) * s;  // svg y axis points down
      svg << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << s
          << "\" height=\"" << s << "\" fill=\"" << fill
          << "\" stroke=\"#1a1a1a\" stroke-width=\"1\"/>\n";
    }
  };
  emit(config.cellsA, "#5b8dd9");
  emit(config.cellsB, "#e3a04c");
  svg << "</svg>\n";
  return svg.str();
}

std::string to_text(const LatticeConfig& config) {
  auto a = sorted_unique(config.cellsA);
  auto b = sorted_unique(config.cellsB);
  std::ostringstream out;
  out << a.size() << " " << b.size() << "\n";
  for (const Cell& c : a) out << "A " << c.x << " " << c.y << "\n";
  for (const Cell& c : b) out << "B " << c.x << " " << c.y << "\n";
  return out.str();
}

LatticeConfig from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  LatticeConfig config;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m)) throw std::invalid_argument("bad header line: " + line);
      continue;
    }
    char label;
    Cell c;
    if (!(ls >> label >> c.x >> c.y)) throw std::invalid_argument("bad cell line: " + line);
    if (label == 'A') config.cellsA.push_back(c);
    else if (label == 'B') config.cellsB.push_back(c);
    else throw std::invalid_argument("bad cell label: " + line);
  }
  if (n < 0) throw std::invalid_argument("missing header line");
  if (static_cast<long long>(config.cellsA.size()) != n ||
      static_cast<long long>(config.cellsB.size()) != m)
    throw std::invalid_argument("cell count does not match header");
  return config;
}

}  // namespace dbubble
