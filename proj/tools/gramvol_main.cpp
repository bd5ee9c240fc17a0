// gramvol: classify geodesic simplices of pseudo-hyperbolic space by their
// Gram graphs and decide whether their convex hulls have finite volume.
//
// Exit codes: 0 success, 1 analysis rejection (input is well-formed but not
// a valid simplex / fails a precondition), 2 I/O or format error.

#include "gramvol/census.hpp"
#include "gramvol/json_io.hpp"
#include "gramvol/volume.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gramvol;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitFormat = 2;

struct rejection : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct format_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw format_failure("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw format_failure(std::string("malformed JSON: ") + e.what());
  }
}

MarkedSimplex load_simplex(const std::string& path) {
  const Json j = read_json_input(path);
  try {
    return simplex_from_json(j);
  } catch (const json_format_error& e) {
    throw format_failure(e.what());
  } catch (const std::invalid_argument& e) {
    throw rejection(e.what());
  }
}

void emit(const Json& j, bool json_mode, const std::string& text) {
  if (json_mode)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string signature_text(const Signature& s) {
  std::string out = "(" + std::to_string(s.pos) + ", " + std::to_string(s.neg);
  if (s.nul > 0) out += "; null " + std::to_string(s.nul);
  return out + ")";
}

int run_analyze(const std::string& path, bool json_mode, bool exact_only, int threads) {
  MarkedSimplex s = load_simplex(path);
  const Graph graph = s.graph();
  const Signature sig = signature(s.gram());
  auto lift = find_positive_lift(s.base());
  const VolumeVerdict verdict = decide_finiteness(s);

  Json out{{"n", s.n()},
           {"p", s.p()},
           {"q", s.q()},
           {"graph", graph_to_json(graph)},
           {"signature", signature_to_json(sig)},
           {"ideal", s.ideal()},
           {"convex_hulls", convex_hull_count(s.base())},
           {"verdict", verdict_to_json(verdict)}};
  if (lift) out["positive_lift"] = std::vector<int>(lift->begin() + 1, lift->end());

  std::ostringstream text;
  text << "vertices:      " << s.n() << "  (H^{" << s.p() << "," << s.q() << "})\n";
  text << "signature:     " << signature_text(sig) << "\n";
  text << "ideal:         " << (s.ideal() ? "yes" : "no") << "\n";
  text << "convex hulls:  " << convex_hull_count(s.base()) << "\n";
  text << "volume:        " << (verdict.finite ? "finite" : "infinite") << "\n";
  if (verdict.stable) {
    text << "  stable set I =";
    for (int v : verdict.stable->inner) text << " " << v;
    text << "  |boundary| = " << verdict.stable->boundary.size() << "\n";
  }

  if (!exact_only) {
    const VolumeEstimate est = mc_volume_estimate(s, 8.0, 100000, 0, threads);
    out["estimate"] = estimate_to_json(est);
    text << "mc estimate:   " << est.estimate << " +- " << est.std_error
         << "  (R=8, 1e5 samples)\n";
  }
  emit(out, json_mode, text.str());
  return kExitOk;
}

int run_estimate(const std::string& path, double radius, std::uint64_t samples,
                 std::uint64_t seed, const std::string& region, double exp_lower,
                 bool json_mode, int threads) {
  MarkedSimplex s = load_simplex(path);
  VolumeEstimate est;
  try {
    if (region == "f")
      est = mc_volume_estimate(s, radius, samples, seed, threads);
    else if (region == "delta")
      est = delta_region_estimate(s, radius, samples, seed, threads);
    else if (region == "exp")
      est = delta_exponential_estimate(s.graph(), exp_lower, radius, samples, seed, threads);
    else
      throw rejection("unknown region '" + region + "'");
  } catch (const std::invalid_argument& e) {
    throw rejection(e.what());
  }
  std::ostringstream text;
  text << "estimate: " << est.estimate << " +- " << est.std_error << "  (R=" << radius
       << ", samples=" << samples << ", seed=" << seed << ")\n";
  emit(estimate_to_json(est), json_mode, text.str());
  return kExitOk;
}

int run_isometric(const std::string& a_path, const std::string& b_path, bool json_mode) {
  MarkedSimplex a = load_simplex(a_path);
  MarkedSimplex b = load_simplex(b_path);
  auto res = isometric(a, b);
  Json out{{"isometric", res.isometric}};
  out["witness"] = res.witness ? witness_to_json(*res.witness) : Json(nullptr);
  emit(out, json_mode,
       res.isometric ? "isometric (gauge witness available)\n" : "not isometric\n");
  return kExitOk;
}

int run_example(const std::string& name, bool json_mode) {
  MarkedSimplex s = [&] {
    try {
      return named_example(name);
    } catch (const std::invalid_argument& e) {
      throw rejection(e.what());
    }
  }();
  // Examples always emit JSON; they exist to be piped into analyze.
  (void)json_mode;
  std::cout << simplex_to_json(s).dump(2) << "\n";
  return kExitOk;
}

int cmd_census(int n, bool loopless, bool json_mode, int threads) {
  std::vector<CensusRow> rows = [&] {
    try {
      return run_census(n, loopless, threads);
    } catch (const capacity_error& e) {
      throw rejection(e.what());
    }
  }();
  std::uint64_t finite = 0, infinite = 0, with_perm = 0;
  for (const CensusRow& row : rows) {
    std::cout << census_row_to_json(row).dump() << "\n";
    (row.verdict.finite ? finite : infinite)++;
    if (row.perm_even_exists || row.perm_odd_exists) ++with_perm;
  }
  std::cerr << "census n=" << n << (loopless ? " loopless" : " with loops") << ": "
            << rows.size() << " graphs, " << finite << " finite, " << infinite
            << " infinite, " << with_perm << " with adjacency permutation\n";
  (void)json_mode;
  return kExitOk;
}

int run_h22(bool json_mode) {
  H22CensusReport report = h22_ideal_census();
  std::ostringstream text;
  text << report.total << " loopless graphs on 5 vertices; "
       << report.five_cycle_count
       << " admit an even fixed-point-free adjacency permutation; "
       << report.counterexamples.size() << " infinite-volume counterexamples\n";
  emit(h22_report_to_json(report), json_mode, text.str());
  return report.counterexamples.empty() ? kExitOk : kExitRejected;
}

int run_cycles(int n, bool json_mode) {
  CycleClassTable t = [&] {
    try {
      return cycle_class_table(n);
    } catch (const std::invalid_argument& e) {
      throw rejection(e.what());
    }
  }();
  std::ostringstream text;
  text << "C_" << n << ": dim H^1 = " << t.h1_dim << "\n";
  for (const auto& stratum : t.strata)
    text << "  " << stratum.label << " -> " << signature_text(stratum.sig) << "\n";
  emit(cycle_table_to_json(t), json_mode, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gram-graph classification and volume finiteness for geodesic "
               "simplices of pseudo-hyperbolic space"};
  app.require_subcommand(1);

  bool json_mode = false;
  bool exact_only = false;
  int threads = 1;
  app.add_flag("--json", json_mode, "machine-readable JSON output");
  app.add_flag("--exact-only", exact_only, "skip Monte Carlo corroboration");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "classify a simplex from JSON");
  std::string analyze_path = "-";
  analyze->add_option("input", analyze_path, "simplex JSON file, or - for stdin");

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo volume estimate");
  std::string estimate_path = "-";
  double radius = 8.0, exp_lower = 16.0;
  std::uint64_t samples = 1000000, seed = 0;
  std::string region = "f";
  estimate->add_option("input", estimate_path, "simplex JSON file, or - for stdin");
  estimate->add_option("--radius", radius, "box truncation radius");
  estimate->add_option("--samples", samples, "sample count");
  estimate->add_option("--seed", seed, "RNG seed");
  estimate->add_option("--region", region, "f | delta | exp");
  estimate->add_option("--exp-lower", exp_lower, "lower box extent for --region exp");

  auto* isom = app.add_subcommand("isometric", "decide marked isometry of two simplices");
  std::string a_path, b_path;
  isom->add_option("a", a_path, "first simplex JSON")->required();
  isom->add_option("b", b_path, "second simplex JSON")->required();

  auto* example = app.add_subcommand("example", "emit a named example simplex as JSON");
  std::string example_name;
  example->add_option("name", example_name,
                      "pentagon | crown:<p> | ideal-hp:<p> | h22-nonideal")
      ->required();

  auto* census = app.add_subcommand("census", "labelled-graph census as JSON lines");
  int census_n = 4;
  bool loopless = false;
  census->add_option("--n", census_n, "vertex count")->required();
  census->add_flag("--loopless", loopless, "exclude loops (required for n = 6)");

  app.add_subcommand("h22-census", "verify the five-vertex ideal census");

  auto* cycles = app.add_subcommand("cycles", "cycle cohomology classification");
  int cycles_n = 5;
  cycles->add_option("--n", cycles_n, "cycle length")->required();

  // Let the global flags (--json, --threads, ...) appear after a subcommand.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitFormat;
  }

  try {
    if (app.got_subcommand("analyze"))
      return run_analyze(analyze_path, json_mode, exact_only, threads);
    if (app.got_subcommand("estimate"))
      return run_estimate(estimate_path, radius, samples, seed, region, exp_lower,
                          json_mode, threads);
    if (app.got_subcommand("isometric")) return run_isometric(a_path, b_path, json_mode);
    if (app.got_subcommand("example")) return run_example(example_name, json_mode);
    if (app.got_subcommand("census"))
      return cmd_census(census_n, loopless, json_mode, threads);
    if (app.got_subcommand("h22-census")) return run_h22(json_mode);
    if (app.got_subcommand("cycles")) return run_cycles(cycles_n, json_mode);
  } catch (const rejection& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const format_failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const json_format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const capacity_error& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitFormat;
}
