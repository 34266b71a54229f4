#include "dbubble/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "dbubble/construct.hpp"
#include "dbubble/continuous.hpp"
#include "dbubble/intmath.hpp"

namespace dbubble {

namespace {

SweepRow compute_row(long long n, long long m,
                     const std::optional<CacheEntry>& cached,
                     const SweepOptions& options, bool* fresh) {
  SweepRow row;
  row.n = n;
  row.m = m;
  row.rhoCont = rho_cont(static_cast<double>(n), static_cast<double>(m));
  row.ceil = ceil_rho_cont_int(n, m);
  row.constructed = construct(n, m).rhoDB;
  *fresh = false;
  if (options.withOracle) {
    if (cached) {
      row.oracleValue = cached->value;
      row.exact = cached->exact;
    } else if (n + m <= kExactLimit) {
      OracleResult r = exact_min(n, m, options.nodeBudget);
      row.oracleValue = r.value;
      row.exact = r.exact;
      *fresh = true;
    } else {
      row.oracleValue = family_min(n, m).value;
      row.exact = false;
      *fresh = true;
    }
  }
  long long best = row.constructed;
  if (row.oracleValue) best = std::min(best, *row.oracleValue);
  long long d = best - row.ceil;
  if (d >= 0 && d <= 2) row.gap = static_cast<int>(d);
  return row;
}

std::vector<SweepRow> run_sweep(long long nMax, long long mMax,
                                const SweepOptions& options, bool parallel) {
  if (nMax < 1 || mMax < 1)
    throw std::invalid_argument("sweep: bounds must be >= 1");
  std::vector<std::pair<long long, long long>> cells;
  for (long long n = 1; n <= nMax; ++n)
    for (long long m = 1; m <= std::min(n, mMax); ++m)
      cells.push_back({n, m});

  // The cache is not safe for concurrent use: read everything up front,
  // compute cells independently, then write back in one thread.
  std::vector<std::optional<CacheEntry>> cached(cells.size());
  if (options.cache)
    for (size_t i = 0; i < cells.size(); ++i)
      cached[i] = options.cache->lookup(cells[i].first, cells[i].second);

  std::vector<SweepRow> rows(cells.size());
  std::vector<char> fresh(cells.size(), 0);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
      bool f = false;
      rows[i] = compute_row(cells[i].first, cells[i].second, cached[i], options, &f);
      fresh[i] = f ? 1 : 0;
    }
  } else {
    for (size_t i = 0; i < cells.size(); ++i) {
      bool f = false;
      rows[i] = compute_row(cells[i].first, cells[i].second, cached[i], options, &f);
      fresh[i] = f ? 1 : 0;
    }
  }

  if (options.cache) {
    for (size_t i = 0; i < rows.size(); ++i)
      if (fresh[i] && rows[i].oracleValue)
        options.cache->store(rows[i].n, rows[i].m, *rows[i].oracleValue,
                             rows[i].exact);
    options.cache->save();
  }
  return rows;  // cells were generated in (n, m) order
}

}  // namespace

std::vector<SweepRow> sweep_cells(long long nMax, long long mMax,
                                  const SweepOptions& options) {
  return run_sweep(nMax, mMax, options, options.parallel);
}

std::vector<SweepRow> sweep_cells_serial(long long nMax, long long mMax,
                                         const SweepOptions& options) {
  return run_sweep(nMax, mMax, options, false);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,m,rho_cont,ceil,constructed,oracle_value,exact,gap\n";
  char buf[32];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.rhoCont);
    out << r.n << "," << r.m << "," << buf << "," << r.ceil << ","
        << r.constructed << ",";
    if (r.oracleValue) out << *r.oracleValue;
    out << "," << (r.exact ? 1 : 0) << ",";
    if (r.gap) out << *r.gap;
    out << "\n";
  }
  return out.str();
}

std::string heatmap_svg(const std::vector<SweepRow>& rows) {
  long long nMax = 1, mMax = 1;
  for (const SweepRow& r : rows) {
    nMax = std::max(nMax, r.n);
    mMax = std::max(mMax, r.m);
  }
  const int s = 20;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << nMax * s
      << "\" height=\"" << mMax * s << "\" viewBox=\"0 0 " << nMax * s << " "
      << mMax * s << "\">\n";
  for (const SweepRow& r : rows) {
    const char* color = "#808080";  // unknown
    if (r.gap) {
      switch (*r.gap) {
        case 0: color = "#440154"; break;
        case 1: color = "#21918c"; break;
        default: color = "#fde725"; break;
      }
    }
    long long x = (r.n - 1) * s;
    long long y = (mMax - r.m) * s;
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << s
        << "\" height=\"" << s << "\" fill=\"" << color
        << "\" stroke=\"#1a1a1a\" stroke-width=\"1\"><title>n=" << r.n
        << " m=" << r.m << "</title></rect>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dbubble
