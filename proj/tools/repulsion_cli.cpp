// repulsion: command-line front end.
//
// Exit status: 0 success, 1 certification or invariant failure, 2 usage error.

#include "repulsion/partition.hpp"
#include "repulsion/pell.hpp"
#include "repulsion/quasipoly.hpp"
#include "repulsion/report.hpp"
#include "repulsion/reproduce.hpp"
#include "repulsion/repulsion.hpp"
#include "repulsion/shift.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

namespace fs = std::filesystem;
using namespace repulsion;
using report::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::string cache_dir;
  bool no_cache = false;

  unsigned B = 0;
  unsigned k = 2;
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  std::string d = "0";
  unsigned r = 0;
  std::size_t count = 1;
  std::uint64_t min_base = 0;
  std::size_t chunk = 4096;
  std::optional<std::uint64_t> residue;
  std::string b0 = "1";
  std::string poly;
  std::string xmax = "0";
  std::optional<std::string> only;
};

fs::path cache_dir(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("REPULSION_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "repulsion";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "repulsion";
  return ".repulsion-cache";
}

PartitionTable table_for(const RunConfig& cfg, unsigned bound, std::size_t max_index) {
  if (cfg.no_cache) return PartitionTable::build(bound, max_index);
  return load_or_build(bound, max_index, cache_dir(cfg));
}

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

BigInt parse_bigint(const std::string& text, const char* flag) {
  BigInt v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError(std::string(flag) + ": not an integer: '" + text + "'");
  return v;
}

int cmd_pb(const RunConfig& cfg) {
  const PartitionTable table = table_for(cfg, cfg.B, cfg.n);
  const BigInt& p = table[cfg.n];
  if (format_or(cfg, "plain") == "json")
    std::cout << json{{"B", cfg.B}, {"n", std::to_string(cfg.n)}, {"p", p.get_str()}}.dump() << '\n';
  else
    std::cout << p.get_str() << '\n';
  return 0;
}

int cmd_quasi(const RunConfig& cfg) {
  const Quasipoly q = extract(cfg.B, cfg.workers);
  if (format_or(cfg, "json") == "plain") {
    std::cout << "B=" << q.bound << " L=" << q.period << " alpha=" << q.alpha.get_str() << '\n';
    for (std::size_t r = 0; r < q.components.size(); ++r) std::cout << "Q_" << r << "(t) = " << q.components[r].to_string("t") << '\n';
  } else {
    std::cout << report::quasi_json(q).dump() << '\n';
  }
  return 0;
}

int cmd_pell(const RunConfig& cfg) {
  const auto sols = pell::family(cfg.r, cfg.count);
  if (format_or(cfg, "json") == "plain") {
    for (const auto& s : sols) std::cout << "t=" << s.t << " n=" << s.n << " m=" << s.m << " x=" << s.x << '\n';
  } else {
    std::cout << report::pell_json(sols).dump() << '\n';
  }
  return 0;
}

int cmd_delta(const RunConfig& cfg) {
  const PartitionTable table = table_for(cfg, cfg.B, cfg.n);
  const Hit h = delta(table, cfg.k, cfg.n);
  const std::string fmt = format_or(cfg, "json");
  if (fmt == "csv")
    std::cout << report::hits_csv(std::span(&h, 1));
  else if (fmt == "plain")
    std::cout << report::hits_plain(std::span(&h, 1));
  else
    std::cout << report::hit_json(h).dump() << '\n';
  return 0;
}

int cmd_scan(const RunConfig& cfg) {
  const BigInt d = parse_bigint(cfg.d, "--d");
  if (sgn(d) < 0) throw UsageError("--d must be >= 0");
  const PartitionTable table = table_for(cfg, cfg.B, cfg.N);
  const auto hits = scan(table, cfg.k, cfg.N, d, {.workers = cfg.workers, .chunk = cfg.chunk, .min_base = cfg.min_base});
  const std::string fmt = format_or(cfg, "json");
  if (fmt == "csv")
    std::cout << report::hits_csv(hits);
  else if (fmt == "plain")
    std::cout << report::hits_plain(hits);
  else
    std::cout << report::hits_json(hits).dump() << '\n';
  return 0;
}

int cmd_classify(const RunConfig& cfg) {
  const BigInt d = parse_bigint(cfg.d, "--d");
  if (sgn(d) < 0 || !d.fits_ulong_p()) throw UsageError("--d must be a small nonnegative integer");
  const auto rep = classify_progression(cfg.B, cfg.k, d.get_ui(), cfg.residue, cfg.workers);
  if (format_or(cfg, "json") == "plain")
    std::cout << report::classify_plain(rep);
  else
    std::cout << report::classify_json(rep).dump() << '\n';
  return 0;
}

int cmd_curve_points(const RunConfig& cfg) {
  json parsed;
  try {
    parsed = json::parse(cfg.poly);
  } catch (const json::exception& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
  Poly f;
  try {
    f = report::poly_from_json(parsed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
  const auto pts = bounded_points(parse_bigint(cfg.b0, "--b0"), f, cfg.k, parse_bigint(cfg.xmax, "--xmax"));
  if (format_or(cfg, "json") == "plain") {
    for (const auto& p : pts) std::cout << p.X << ' ' << p.Y << '\n';
  } else {
    std::cout << report::points_json(pts).dump() << '\n';
  }
  return 0;
}

int cmd_reproduce(const RunConfig& cfg) {
  const auto results = run_claims({.only = cfg.only, .workers = cfg.workers});
  bool ok = true;
  for (const auto& r : results) {
    std::cout << format_claim(r) << '\n';
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all claims PASS" : "some claims FAIL") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted partition functions, their quasipolynomials, and distances to perfect powers"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--workers", cfg.workers, "Worker threads for scan/classify")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Partition table cache (default: $REPULSION_CACHE_DIR)");
  app.add_flag("--no-cache", cfg.no_cache, "Do not read or write table cache files");

  auto fmt = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->fallthrough();
  };

  auto* pb = app.add_subcommand("pb", "p_B(n)");
  pb->add_option("--B", cfg.B)->required()->check(CLI::Range(1U, 100000U));
  pb->add_option("--n", cfg.n)->required();
  fmt(pb);

  auto* quasi = app.add_subcommand("quasi", "Quasipolynomial components of p_B");
  quasi->add_option("--B", cfg.B)->required()->check(CLI::Range(2U, 8U));
  fmt(quasi);

  auto* pell_cmd = app.add_subcommand("pell", "Square values of p_3 from Pell families");
  pell_cmd->add_option("--r", cfg.r)->required()->check(CLI::IsMember({0U, 1U, 4U, 5U}));
  pell_cmd->add_option("--count", cfg.count)->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  fmt(pell_cmd);

  auto* delta_cmd = app.add_subcommand("delta", "Distance from p_B(n) to the nearest k-th power");
  delta_cmd->add_option("--B", cfg.B)->required()->check(CLI::Range(1U, 100000U));
  delta_cmd->add_option("--k", cfg.k)->required()->check(CLI::Range(2U, 100000U));
  delta_cmd->add_option("--n", cfg.n)->required();
  fmt(delta_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Indices n <= N with distance at most d");
  scan_cmd->add_option("--B", cfg.B)->required()->check(CLI::Range(1U, 100000U));
  scan_cmd->add_option("--k", cfg.k)->required()->check(CLI::Range(2U, 100000U));
  scan_cmd->add_option("--N", cfg.N)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--d", cfg.d)->required();
  scan_cmd->add_option("--min-base", cfg.min_base, "Report only bases m >= this");
  scan_cmd->add_option("--chunk", cfg.chunk)->check(CLI::PositiveNumber);
  fmt(scan_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Classify Q_r(x) - t for |t| <= d");
  classify_cmd->add_option("--B", cfg.B)->required()->check(CLI::Range(2U, 8U));
  classify_cmd->add_option("--k", cfg.k)->required()->check(CLI::Range(2U, 100000U));
  classify_cmd->add_option("--d", cfg.d)->required();
  classify_cmd->add_option("--residue", cfg.residue);
  fmt(classify_cmd);

  auto* curve = app.add_subcommand("curve-points", "Integral points of b0 Y^k = f(X), |X| <= xmax");
  curve->add_option("--b0", cfg.b0)->required();
  curve->add_option("--poly", cfg.poly, "JSON array of coefficients, constant first")->required();
  curve->add_option("--k", cfg.k)->required()->check(CLI::Range(2U, 100000U));
  curve->add_option("--xmax", cfg.xmax)->required();
  fmt(curve);

  auto* repro = app.add_subcommand("reproduce", "Re-check every numerical claim");
  repro->add_option("--only", cfg.only, "Run one claim group")->check(CLI::IsMember(claim_groups()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*pb) return cmd_pb(cfg);
    if (*quasi) return cmd_quasi(cfg);
    if (*pell_cmd) return cmd_pell(cfg);
    if (*delta_cmd) return cmd_delta(cfg);
    if (*scan_cmd) return cmd_scan(cfg);
    if (*classify_cmd) return cmd_classify(cfg);
    if (*curve) return cmd_curve_points(cfg);
    if (*repro) return cmd_reproduce(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
