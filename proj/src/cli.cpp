#include "dbubble/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dbubble/cache.hpp"
#include "dbubble/certificate.hpp"
#include "dbubble/construct.hpp"
#include "dbubble/continuous.hpp"
#include "dbubble/intmath.hpp"
#include "dbubble/sweep.hpp"

namespace dbubble {

namespace {

std::string fmt6(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.6f", v);
  return b;
}

std::string fmt9(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.9f", v);
  return b;
}

std::filesystem::path cache_path(const CliOptions& opt) {
  if (!opt.cachePath.empty()) return opt.cachePath;
  return ResultCache::default_path();
}

std::filesystem::path out_file(const CliOptions& opt, const std::string& name) {
  std::filesystem::path dir = opt.outDir.empty() ? "." : opt.outDir;
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << content;
}

void render_config(const LatticeConfig& config, const std::string& label,
                   const CliOptions& opt, const std::string& svgName,
                   std::ostream& out) {
  if (opt.render == "ascii") {
    out << "config (" << label << "):\n" << render_ascii(config);
  } else if (opt.render == "svg") {
    if (!opt.outDir.empty()) {
      auto p = out_file(opt, svgName);
      write_file(p, render_svg(config));
      out << "svg = " << p.string() << "\n";
    } else {
      out << render_svg(config);
    }
  }
}

}  // namespace

int cmd_show(long long n, long long m, const CliOptions& opt, std::ostream& out) {
  if (m < 1 || m > n) throw std::invalid_argument("show: need 1 <= m <= n");
  Construction c = construct(n, m);
  long long ceil = ceil_rho_cont_int(n, m);
  out << "n=" << n << " m=" << m << "\n";
  out << "rho_cont = "
      << fmt6(rho_cont(static_cast<double>(n), static_cast<double>(m)))
      << " (" << regime_name(regime(static_cast<double>(n), static_cast<double>(m)))
      << ")\n";
  out << "ceil = " << ceil << "\n";
  out << "constructed rhoDB = " << c.rhoDB << " (bound " << c.bound << ", slack "
      << c.slack << ", " << provenance_name(c.provenance) << ", guaranteed "
      << (c.guaranteeApplies ? "yes" : "no") << ")\n";

  std::optional<long long> oracleValue;
  bool exact = false;
  LatticeConfig witness = c.config;
  std::string witnessLabel = "constructed";
  ResultCache cache(cache_path(opt));
  if (!opt.noCache) {
    cache.load();
    if (auto e = cache.lookup(n, m)) {
      oracleValue = e->value;
      exact = e->exact;
      if (auto w = cache.load_witness(n, m)) {
        witness = *w;
        witnessLabel = "oracle witness";
      }
    }
  }
  if (!oracleValue && n + m <= kExactLimit) {
    OracleResult r = exact_min(n, m, opt.nodeBudget);
    oracleValue = r.value;
    exact = r.exact;
    if (r.value <= c.rhoDB) {
      witness = r.config;
      witnessLabel = "oracle witness";
    }
    if (!opt.noCache) {
      cache.store(n, m, r.value, r.exact);
      cache.save();
    }
  }
  if (oracleValue)
    out << "oracle value = " << *oracleValue
        << (exact ? " (exact)" : " (upper bound)") << "\n";

  long long best = std::min(c.rhoDB, oracleValue.value_or(c.rhoDB));
  long long g = best - ceil;
  if (oracleValue && exact)
    out << "gap = " << g << " (exact)\n";
  else
    out << "gap <= " << g << " (upper bound)\n";

  std::ostringstream svgName;
  svgName << "show_" << n << "_" << m << ".svg";
  render_config(witness, witnessLabel, opt, svgName.str(), out);
  return 0;
}

int cmd_sweep(long long nMax, long long mMax, const CliOptions& opt,
              std::ostream& out) {
  if (nMax < 1 || mMax < 1)
    throw std::invalid_argument("sweep: bounds must be >= 1");
  ResultCache cache(cache_path(opt));
  SweepOptions so;
  so.nodeBudget = opt.nodeBudget;
  if (!opt.noCache) {
    cache.load();
    so.cache = &cache;
  }
  auto rows = sweep_cells(nMax, mMax, so);
  auto csvPath = out_file(opt, "sweep.csv");
  write_file(csvPath, sweep_csv(rows));
  auto svgPath = out_file(opt, "heatmap.svg");
  write_file(svgPath, heatmap_svg(rows));
  out << "rows = " << rows.size() << "\n";
  out << "csv = " << csvPath.string() << "\n";
  out << "heatmap = " << svgPath.string() << "\n";
  return 0;
}

int cmd_certify(double n, const CliOptions&, std::ostream& out) {
  if (n < 1) throw std::invalid_argument("certify: need n >= 1");
  RegionCurves rc = shifted_curves(n);
  Certificate cert = parallelogram_certificate(n);
  out << "n = " << fmt6(n) << "\n";
  out << "xLeft = " << fmt6(rc.xLeft) << " xRight = " << fmt6(rc.xRight) << "\n";
  out << "contained = " << (cert.contained ? "true" : "false") << "\n";
  out << "margin = " << fmt6(cert.margin) << "\n";
  out << "center = (" << fmt6(cert.centerX) << ", " << fmt6(cert.centerY)
      << ")\n";
  out << "hitsAllShifts = " << (cert.hitsAllShifts ? "true" : "false") << "\n";
  out << "shiftClearance = " << fmt6(cert.shiftClearance) << "\n";
  if (n > 6000)
    out << "monotone from 6000 = "
        << (region_monotone(6000, n, 1000) ? "true" : "false") << "\n";
  auto c = construct_equal(n, 1);
  if (c && c->triple)
    out << "triple = (" << c->triple->x << ", " << c->triple->y << ", "
        << c->triple->z << ") objective = " << c->triple->objective
        << " rhoDB = " << c->rhoDB << "\n";
  else
    out << "triple = none within budget slack 1\n";
  return 0;
}

int cmd_curves(double n, int samples, const CliOptions& opt, std::ostream& out) {
  if (n < 1) throw std::invalid_argument("curves: need n >= 1");
  if (samples < 2) throw std::invalid_argument("curves: need samples >= 2");
  RegionCurves rc = shifted_curves(n);
  std::ostringstream csv;
  csv << "x,y1,y2\n";
  for (int i = 0; i < samples; ++i) {
    double x = rc.xLeft + (rc.xRight - rc.xLeft) * i / (samples - 1);
    csv << fmt9(x) << "," << fmt9(rc.y1(x)) << "," << fmt9(rc.y2(x)) << "\n";
  }
  if (!opt.outDir.empty()) {
    auto p = out_file(opt, "curves.csv");
    write_file(p, csv.str());
    out << "csv = " << p.string() << "\n";
  } else {
    out << csv.str();
  }
  return 0;
}

int cmd_oracle(long long n, long long m, const CliOptions& opt,
               std::ostream& out) {
  if (n < 1 || m < 1 || m > n)
    throw std::invalid_argument("oracle: need 1 <= m <= n");
  OracleResult r = exact_min(n, m, opt.nodeBudget);
  out << "value = " << r.value << "\n";
  out << "exact = " << (r.exact ? "true" : "false") << "\n";
  out << "nodes = " << r.nodesExplored << "\n";
  if (!opt.noCache) {
    ResultCache cache(cache_path(opt));
    cache.load();
    cache.store(n, m, r.value, r.exact, &r.config);
    cache.save();
    out << "cached = " << cache.path().string() << "\n";
  }
  out << render_ascii(r.config);
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"discrete double bubble perimeters: constructions, oracle, certificate"};
  app.require_subcommand(1);
  CliOptions opt;
  app.add_option("--out", opt.outDir, "directory for generated files");
  app.add_option("--render", opt.render, "emit the witness configuration")
      ->check(CLI::IsMember({"ascii", "svg"}));
  app.add_option("--node-budget", opt.nodeBudget,
                 "node budget for the exhaustive search");
  app.add_flag("--no-cache", opt.noCache, "bypass the result cache");

  long long n = 0, m = 0, nMax = 0, mMax = 0;
  double nReal = 0;
  int samples = 100;

  auto* show = app.add_subcommand("show", "report one volume pair");
  show->add_option("n", n, "larger volume")->required();
  show->add_option("m", m, "smaller volume")->required();
  show->fallthrough();

  auto* sweep = app.add_subcommand("sweep", "tabulate gaps over a grid");
  sweep->add_option("nMax", nMax, "largest n")->required();
  sweep->add_option("mMax", mMax, "largest m")->required();
  sweep->fallthrough();

  auto* certify =
      app.add_subcommand("certify", "verify the lattice containment argument");
  certify->add_option("n", nReal, "volume")->required();
  certify->fallthrough();

  auto* curves = app.add_subcommand("curves", "sample the region curves");
  curves->add_option("n", nReal, "volume")->required();
  curves->add_option("samples", samples, "row count");
  curves->fallthrough();

  auto* oracle =
      app.add_subcommand("oracle", "force the exhaustive search and cache it");
  oracle->add_option("n", n, "larger volume")->required();
  oracle->add_option("m", m, "smaller volume")->required();
  oracle->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (show->parsed()) return cmd_show(n, m, opt, out);
    if (sweep->parsed()) return cmd_sweep(nMax, mMax, opt, out);
    if (certify->parsed()) return cmd_certify(nReal, opt, out);
    if (curves->parsed()) return cmd_curves(nReal, samples, opt, out);
    if (oracle->parsed()) return cmd_oracle(n, m, opt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace dbubble
