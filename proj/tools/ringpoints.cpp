#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "ringpoints/cache.hpp"
#include "ringpoints/cliquegraph.hpp"
#include "ringpoints/dimacs.hpp"
#include "ringpoints/errors.hpp"
#include "ringpoints/orderly.hpp"
#include "ringpoints/reductions.hpp"
#include "ringpoints/tables.hpp"
#include "ringpoints/version.hpp"

using namespace ringpoints;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_incomplete = 2;
constexpr int exit_mismatch = 3;

struct Common {
  std::optional<std::string> cache;
  bool no_cache = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  double budget_s = 0;

  std::chrono::milliseconds budget() const { return std::chrono::milliseconds(static_cast<std::int64_t>(budget_s * 1000)); }
};

std::string points_text(const std::vector<Point>& pts) {
  std::string s;
  for (const auto& p : pts)
    s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

Strategy parse_strategy(const std::string& v) {
  if (v == "full")
    return Strategy::full;
  if (v == "rooted")
    return Strategy::rooted;
  if (v == "delta")
    return Strategy::delta_family;
  throw invalid_input("unknown variant '" + v + "'");
}

class Cache {
public:
  explicit Cache(const Common& c) : enabled_(!c.no_cache), cache_(cache_path(c.cache)) {
    if (enabled_)
      cache_.load();
  }

  std::optional<ResultRecord> find(std::uint32_t n, int m, const std::string& mode) const {
    if (!enabled_)
      return std::nullopt;
    auto r = cache_.find(n, m, mode);
    if (r && r->exact)
      return r;
    return std::nullopt;
  }

  void store(const ResultRecord& r) {
    if (enabled_ && cache_.store(r))
      cache_.save();
  }

private:
  bool enabled_;
  ResultCache cache_;
};

struct ValueRequest {
  std::uint32_t n = 1;
  int m = 2;
  std::string mode = "I";
  std::string variant = "rooted";
  std::string circle_rule = "center";
  bool cartesian = true;
  std::string dump_dir;
};

ResultRecord compute(const ValueRequest& q, const Common& c) {
  ResultRecord r;
  r.n = q.n;
  r.m = q.m;
  r.mode = q.mode;
  r.version = version;
  if (q.mode == "I") {
    IOptions opt;
    opt.strategy = parse_strategy(q.variant);
    opt.cartesian = q.cartesian;
    opt.solver.threads = c.threads;
    opt.solver.budget = c.budget();
    auto v = I_of(q.n, q.m, opt);
    r.value = v.value;
    r.exact = v.exact;
    r.witness = v.witness;
    r.elapsed_ms = v.elapsed.count();
    r.variant = v.method;
    return r;
  }
  if (q.m != 2)
    throw invalid_input("position modes are defined for m = 2 only");
  OrderlyOptions opt;
  opt.threads = c.threads;
  opt.budget = c.budget();
  opt.circle_rule = parse_circle_rule(q.circle_rule);
  if (!q.dump_dir.empty()) {
    std::filesystem::create_directories(q.dump_dir);
    opt.on_level = [&](const Level& level) {
      auto file = std::filesystem::path(q.dump_dir) /
                  ("level-" + std::to_string(q.n) + "-" + q.mode + "-" + std::to_string(level.order()) + ".txt");
      std::ofstream out(file);
      write_level(out, level, q.n);
    };
  }
  auto res = max_cardinality(q.n, parse_position_mode(q.mode), opt);
  r.value = res.value;
  r.exact = res.exact;
  r.witness = res.witness;
  r.elapsed_ms = res.elapsed.count();
  r.variant = "orderly";
  if (opt.circle_rule == CircleRule::radius)
    r.variant += "-radius";
  return r;
}

/// Cached unless the request deviates from the default semantics.
bool cacheable(const ValueRequest& q) { return q.circle_rule == "center"; }

ResultRecord value_of(const ValueRequest& q, const Common& c, Cache& cache) {
  if (cacheable(q))
    if (auto hit = cache.find(q.n, q.m, q.mode))
      return *hit;
  auto r = compute(q, c);
  if (cacheable(q))
    cache.store(r);
  return r;
}

std::string shown(const ResultRecord& r) { return (r.exact ? "" : ">= ") + std::to_string(r.value); }

std::string label(const std::string& mode, std::uint32_t n, int m) {
  std::string f = mode == "I" ? "I" : mode == "semi-general" ? "I_semi" : "I_gen";
  return f + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

int cmd_value(const ValueRequest& q, const Common& c, bool as_json) {
  Cache cache(c);
  auto r = value_of(q, c, cache);
  if (as_json) {
    std::cout << to_json(r).dump() << '\n';
  } else {
    std::cout << label(q.mode, q.n, q.m) << (r.exact ? " = " : " >= ") << r.value << '\n';
    if (!r.witness.empty())
      std::cout << "witness: " << points_text(r.witness) << '\n';
  }
  return r.exact ? exit_ok : exit_incomplete;
}

int cmd_table(int which, std::uint32_t max_n, int max_m, const Common& c) {
  if (which < 1 || which > 3)
    throw invalid_input("--which must be 1, 2 or 3");
  auto expected = load_expected(data_dir() / ("table" + std::to_string(which) + ".txt"));
  const std::string mode = which == 1 ? "I" : which == 2 ? "semi-general" : "general";
  Cache cache(c);
  int mismatches = 0, incomplete = 0, rows = 0;
  std::cout << "n\tm\tcomputed\texpected\tstatus\n";
  for (const auto& cell : expected) {
    if (cell.n > max_n || cell.m > max_m)
      continue;
    ValueRequest q;
    q.n = cell.n;
    q.m = cell.m;
    q.mode = mode;
    auto r = value_of(q, c, cache);
    ++rows;
    std::string status = "ok";
    if (!r.exact) {
      ++incomplete;
      status = "incomplete";
      if (!cell.lower_bound && r.value > cell.value) {
        status = "MISMATCH";
        ++mismatches;
      }
    } else if (cell.lower_bound ? r.value < cell.value : r.value != cell.value) {
      status = "MISMATCH";
      ++mismatches;
    } else if (cell.lower_bound) {
      status = "ok (bound)";
    }
    std::cout << cell.n << '\t' << cell.m << '\t' << shown(r) << '\t' << (cell.lower_bound ? ">= " : "")
              << cell.value << '\t' << status << '\n';
  }
  std::cout << rows << " rows, " << mismatches << " mismatches, " << incomplete << " incomplete\n";
  if (mismatches)
    return exit_mismatch;
  return incomplete ? exit_incomplete : exit_ok;
}

int verify_conjecture_cmd(std::uint32_t max_n, const Common& c) {
  IOptions opt;
  opt.solver.threads = c.threads;
  opt.solver.budget = c.budget();
  auto report = verify_conjecture(max_n, opt);
  for (const auto& e : report.entries)
    std::cout << "n=" << e.n << " I(n,2)=" << (e.verified ? "" : ">= ") << e.exact << " conjectured=" << e.conjectured
              << (e.holds() ? " tight" : e.verified ? " COUNTEREXAMPLE" : " unverified") << '\n';
  auto bad = report.counterexamples();
  auto open = report.unverified();
  std::cout << "conjecture up to " << max_n << ": " << bad.size() << " counterexamples, " << open.size()
            << " unverified\n";
  if (!bad.empty())
    return exit_mismatch;
  return open.empty() ? exit_ok : exit_incomplete;
}

int verify_theorems_cmd(const Common& c) {
  Cache cache(c);
  int failed = 0, incomplete = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
    failed += !ok;
  };
  auto get = [&](std::uint32_t n, int m, const std::string& mode = "I", bool cartesian = true) {
    ValueRequest q;
    q.n = n;
    q.m = m;
    q.mode = mode;
    q.cartesian = cartesian;
    auto r = cartesian ? value_of(q, c, cache) : compute(q, c);
    incomplete += !r.exact;
    return r.value;
  };

  for (std::uint32_t a = 2; a <= 40; ++a)
    for (std::uint32_t b = a + 1; a * b <= 40; ++b)
      if (gcd(a, b) == 1) {
        auto ab = get(a * b, 2, "I", false), pa = get(a, 2), pb = get(b, 2);
        check(ab == pa * pb, "I(" + std::to_string(a * b) + ",2) = " + std::to_string(ab) + " = I(" +
                                 std::to_string(a) + ",2) I(" + std::to_string(b) + ",2)");
      }
  {
    auto i8 = get(8, 3), i2 = get(2, 3), i4 = get(4, 3);
    check(i8 == 64 && i2 * i4 == 128,
          "non-coprime factors: I(8,3) = " + std::to_string(i8) + " differs from I(2,3) I(4,3) = " +
              std::to_string(i2 * i4));
  }
  for (std::uint32_t n = 1; n <= 8; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto v = get(2 * n, m);
      check(v % (std::uint64_t{1} << m) == 0,
            "2^" + std::to_string(m) + " divides I(" + std::to_string(2 * n) + "," + std::to_string(m) + ") = " +
                std::to_string(v));
    }
  for (std::uint32_t p : {7, 11, 19, 23}) {
    auto v = get(p, 2, "semi-general");
    check(v == (p + 1) / 2, label("semi-general", p, 2) + " = " + std::to_string(v) + " = (p+1)/2");
  }
  for (std::uint32_t p : {3, 5, 7}) {
    auto v = get(p, 2);
    check(v == p, "I(" + std::to_string(p) + ",2) = " + std::to_string(v));
  }
  for (std::uint32_t p : {3, 5}) {
    auto v = get(p * p, 2);
    check(v == std::uint64_t{p} * p * p, "I(" + std::to_string(p * p) + ",2) = " + std::to_string(v));
  }
  std::cout << failed << " failed, " << incomplete << " incomplete\n";
  if (failed)
    return exit_mismatch;
  return incomplete ? exit_incomplete : exit_ok;
}

DistanceGraph export_graph(std::uint32_t n, int m, const std::string& variant, std::uint32_t cls) {
  if (variant == "full")
    return build_full(n, m);
  if (variant == "rooted")
    return build_rooted(n, m);
  if (variant == "delta") {
    auto order = delta_family_order(n, m);
    if (cls >= order.size())
      throw invalid_input("class index out of range, " + std::to_string(order.size()) + " classes");
    return build_delta_graph(n, m, order, cls);
  }
  if (variant == "even")
    return even_reduction_graph(n, m);
  if (variant == "hamming") {
    if (n != 3)
      throw invalid_input("the Hamming graph is defined for n = 3");
    return hamming_graph_I3(m);
  }
  throw invalid_input("unknown variant '" + variant + "'");
}

int cmd_export(std::uint32_t n, int m, const std::string& variant, std::uint32_t cls, const std::string& out_path) {
  auto g = export_graph(n, m, variant, cls);
  std::ofstream out(out_path);
  if (!out)
    throw invalid_input("cannot write " + out_path);
  write_dimacs(out, g);
  std::ofstream map(out_path + ".map");
  if (!map)
    throw invalid_input("cannot write " + out_path + ".map");
  write_vertex_map(map, g);
  std::cout << "p edge " << g.graph.size() << ' ' << g.graph.edge_count() << " -> " << out_path << '\n';
  return exit_ok;
}

void print_grid(const std::vector<Point>& pts, std::uint32_t n) {
  std::vector<std::string> rows(n, std::string(n, '.'));
  for (const auto& p : pts)
    rows[p[1]][p[0]] = '#';
  for (std::uint32_t y = n; y-- > 0;)
    std::cout << rows[y] << '\n';
}

int cmd_construct(std::uint32_t n, const std::string& lemma, bool grid) {
  std::vector<Point> pts;
  std::string source;
  if (lemma == "1") {
    auto c = lemma1_points(n);
    pts = c.points;
    source = c.source;
  } else if (lemma == "2") {
    auto c = lemma2_points(n);
    pts = c.points;
    source = c.source;
  } else if (lemma == "ilig") {
    pts = ilig_set(n);
    source = "ilig";
  } else if (lemma == "auto") {
    auto c = lemma1_points(n);
    if (n % 4 == 2) {
      auto d = lemma2_points(n);
      if (d.points.size() > c.points.size())
        c = d;
    }
    pts = c.points;
    source = c.source;
  } else {
    throw invalid_input("unknown lemma '" + lemma + "'");
  }
  Space space(n, 2);
  if (!space.is_integral_set(pts))
    throw invalid_input("construction is not integral");
  std::cout << source << ": " << pts.size() << " points, pairwise integral\n";
  std::cout << points_text(pts) << '\n';
  if (grid)
    print_grid(pts, n);
  return exit_ok;
}

void add_common(CLI::App* cmd, Common& c, bool with_cache = true) {
  cmd->add_option("--threads", c.threads, "worker threads");
  cmd->add_option("--budget", c.budget_s, "wall-clock budget in seconds per computation (0 = unlimited)");
  if (with_cache) {
    cmd->add_option("--cache", c.cache, "cache file (default $RINGPOINTS_CACHE or ./ringpoints-cache.json)");
    cmd->add_flag("--no-cache", c.no_cache, "neither read nor write the cache");
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral point sets over Z_n^m"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);
  Common common;

  ValueRequest vq;
  bool as_json = false;
  auto* value = app.add_subcommand("value", "maximum cardinality of an integral point set");
  value->add_option("--n", vq.n, "modulus")->required()->check(CLI::Range(1u, 65536u));
  value->add_option("--m", vq.m, "dimension")->check(CLI::Range(1, 8));
  value->add_option("--mode", vq.mode, "I, semi-general or general")
      ->check(CLI::IsMember({"I", "semi-general", "general"}));
  value->add_option("--variant", vq.variant, "clique graph: full, rooted or delta")
      ->check(CLI::IsMember({"full", "rooted", "delta"}));
  value->add_option("--circle-rule", vq.circle_rule, "general position: center or radius")
      ->check(CLI::IsMember({"center", "radius"}));
  value->add_flag("!--no-cartesian", vq.cartesian, "do not split n into coprime factors");
  value->add_option("--dump-levels", vq.dump_dir, "write every orderly level to this directory");
  value->add_flag("--json", as_json, "print the result record as JSON");
  add_common(value, common);

  int which = 1;
  std::uint32_t max_n = 30;
  int max_m = 3;
  auto* table = app.add_subcommand("table", "recompute a table of published values and diff it");
  table->add_option("--which", which, "1: I(n,m), 2: semi-general, 3: general")->required()->check(CLI::Range(1, 3));
  table->add_option("--max-n", max_n, "largest n");
  table->add_option("--max-m", max_m, "largest m (table 1)");
  add_common(table, common);

  bool conjecture = false, theorems = false;
  std::uint32_t conj_max = 30;
  auto* verify = app.add_subcommand("verify", "check the construction conjecture or the theorem oracles");
  verify->add_flag("--conjecture", conjecture, "I(n,2) against the construction bounds");
  verify->add_flag("--theorems", theorems, "multiplicativity, divisibility and prime values");
  verify->add_option("--max-n", conj_max, "largest n for --conjecture");
  add_common(verify, common);

  std::uint32_t en = 1, ecls = 0;
  int em = 2;
  std::string evariant = "full", eout;
  auto* exp = app.add_subcommand("export-dimacs", "write a clique graph in DIMACS format");
  exp->add_option("--n", en, "modulus")->required()->check(CLI::Range(1u, 65536u));
  exp->add_option("--m", em, "dimension")->check(CLI::Range(1, 8));
  exp->add_option("--variant", evariant, "full, rooted, delta, even or hamming")
      ->check(CLI::IsMember({"full", "rooted", "delta", "even", "hamming"}));
  exp->add_option("--class", ecls, "anchor class index for --variant delta");
  exp->add_option("--out", eout, "output file; the vertex map goes to <out>.map")->required();

  std::uint32_t cn = 1;
  std::string lemma = "auto";
  bool grid = false;
  auto* con = app.add_subcommand("construct", "print a known large integral point set over Z_n^2");
  con->add_option("--n", cn, "modulus")->required()->check(CLI::Range(1u, 65536u));
  con->add_option("--lemma", lemma, "1, 2, ilig or auto")->check(CLI::IsMember({"1", "2", "ilig", "auto"}));
  con->add_flag("--grid", grid, "draw the points on an n x n grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    auto code = app.exit(e);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*value)
      return cmd_value(vq, common, as_json);
    if (*table)
      return cmd_table(which, max_n, max_m, common);
    if (*verify) {
      if (!conjecture && !theorems)
        throw invalid_input("verify needs --conjecture and/or --theorems");
      int rc = exit_ok;
      if (conjecture)
        rc = std::max(rc, verify_conjecture_cmd(conj_max, common));
      if (theorems)
        rc = std::max(rc, verify_theorems_cmd(common));
      return rc;
    }
    if (*exp)
      return cmd_export(en, em, evariant, ecls, eout);
    if (*con)
      return cmd_construct(cn, lemma, grid);
  } catch (const not_applicable& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return exit_invalid;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}
