// circis: command line front end for the circulant CIS toolkit.
//
//   circis build "12:2,3,6,9,10" --format graph6
//   circis analyze "C(36;2,2;3,3)"
//   circis decompose "C(210;35,2;1,5)"
//   circis census --range 2..20 --filter connected,cis --jobs 4
//   circis verify two-paired --lcm-max 60
//   circis fixtures
//
// Exit codes: 0 ok, 1 verification failure / counterexample, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "circis/census.hpp"
#include "circis/circulant.hpp"
#include "circis/cis.hpp"
#include "circis/error.hpp"
#include "circis/graph_io.hpp"
#include "circis/paired.hpp"
#include "circis/verify.hpp"

namespace {

using circis::i64;

// Accepts both spec syntaxes: "C(n;a1,b1;...)" paired, else "n:d1,d2,..."
struct Input {
  circis::Circulant g;
  std::optional<circis::PairedSpec> spec;
};

Input parse_input(const std::string& text) {
  if (text.rfind("C(", 0) == 0) {
    circis::PairedSpec spec = circis::parse_paired(text);
    circis::Circulant g = circis::realize(spec);
    return Input{std::move(g), std::move(spec)};
  }
  return Input{circis::parse_circulant(text), std::nullopt};
}

std::pair<i64, i64> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw circis::Error(circis::Errc::parse_error,
                        "range must look like A..B, got '" + text + "'");
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    i64 v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size())
      throw circis::Error(circis::Errc::parse_error,
                          "bad integer '" + s + "' in range '" + text + "'");
    return v;
  };
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

void write_out(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << data;
}

int cmd_build(const std::string& spec_text, const std::string& format,
              const std::string& out) {
  Input in = parse_input(spec_text);
  std::string data;
  if (format == "graph6") {
    data = circis::to_graph6(circis::to_graph(in.g)) + "\n";
  } else if (format == "edge-list") {
    data = circis::to_edge_list(circis::to_graph(in.g));
  } else {  // distances
    data = circis::format_circulant(in.g) + "\n";
  }
  write_out(out, data);
  return 0;
}

int cmd_analyze(const std::string& spec_text, const std::string& out) {
  Input in = parse_input(spec_text);
  circis::CISReport r = circis::is_cis_circulant(in.g);
  write_out(out, circis::cis_report_json(in.g, r) + "\n");
  return 0;
}

// Mirrors the is_p4_free_paired recursion step by step so the trace is the
// actual certificate: atoms are C(1;), disconnected specs reduce to one
// component, the first a_ell = 1 pair peels a K_b layer, anything else is
// stuck (not P4-free).
int cmd_decompose(const std::string& spec_text, int k_max,
                  const std::string& out) {
  Input in = parse_input(spec_text);
  std::optional<circis::PairedSpec> spec = in.spec;
  if (!spec) spec = circis::recognize_paired(in.g, k_max);

  nlohmann::ordered_json doc;
  doc["input"] = spec_text;
  if (!spec) {
    doc["spec"] = nullptr;
    // no paired handle; only test the graph directly when that is sane
    if (in.g.n <= 4096)
      doc["p4_free"] = circis::is_p4_free(circis::to_graph(in.g));
    else
      doc["p4_free"] = nullptr;
    doc["steps"] = nlohmann::ordered_json::array();
    write_out(out, doc.dump() + "\n");
    return 0;
  }

  doc["spec"] = circis::format_paired(*spec);
  doc["n"] = spec->n;
  doc["connected"] = circis::paired_component_count(*spec) == 1;
  doc["co_connected"] = circis::paired_is_co_connected(*spec);

  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  circis::PairedSpec cur = *spec;
  bool p4 = false;
  while (true) {
    if (cur.n == 1) {
      steps.push_back({{"op", "atom"}, {"spec", circis::format_paired(cur)}});
      p4 = true;
      break;
    }
    i64 c = circis::paired_component_count(cur);
    if (c > 1) {
      circis::PairedSpec next = circis::reduce_connected(cur);
      steps.push_back({{"op", "reduce_connected"},
                       {"components", c},
                       {"from", circis::format_paired(cur)},
                       {"to", circis::format_paired(next)}});
      cur = std::move(next);
      continue;
    }
    std::size_t ell = 0;
    while (ell < cur.pairs.size() && cur.pairs[ell].first != 1) ++ell;
    if (ell == cur.pairs.size()) {
      steps.push_back({{"op", "stuck"}, {"spec", circis::format_paired(cur)}});
      p4 = false;
      break;
    }
    circis::CoReduction red = circis::co_reduce(cur, ell);
    steps.push_back({{"op", "co_reduce"},
                     {"index", ell},
                     {"clique", red.clique_size},
                     {"from", circis::format_paired(cur)},
                     {"to", circis::format_paired(red.core)}});
    cur = std::move(red.core);
  }
  doc["p4_free"] = p4;
  doc["steps"] = std::move(steps);
  write_out(out, doc.dump() + "\n");
  return 0;
}

int cmd_census(std::optional<i64> order, const std::string& range,
               const std::string& filter_csv, int jobs,
               const std::string& checkpoint, const std::string& out,
               int k_max, bool multiplier_canonical, long long max_blocks) {
  circis::CensusOptions opts;
  if (order && !range.empty())
    throw circis::Error(circis::Errc::parse_error,
                        "give only one of --order / --range");
  if (!order && range.empty())
    throw circis::Error(circis::Errc::parse_error,
                        "census needs --order N or --range A..B");
  if (order) {
    opts.n_min = opts.n_max = *order;
  } else {
    auto [lo, hi] = parse_range(range);
    opts.n_min = lo;
    opts.n_max = hi;
  }
  opts.filter = circis::parse_filter(filter_csv);
  opts.jobs = jobs;
  opts.checkpoint_path = checkpoint;
  opts.k_max = k_max;
  opts.multiplier_canonical = multiplier_canonical;
  opts.max_blocks = max_blocks;

  circis::CensusResult res = circis::census(opts);
  if (!res.complete) {
    std::cerr << "census: stopped after " << max_blocks
              << " block(s); rerun with the same --checkpoint to resume\n";
    return 0;
  }
  std::string data;
  for (const circis::CensusRecord& r : res.records)
    data += circis::census_record_json(r) + "\n";
  write_out(out, data);
  return 0;
}

int print_suite(const circis::SuiteResult& res) {
  for (const std::string& line : res.lines) std::cout << line << "\n";
  std::cout << (res.passed ? "PASSED" : "FAILED") << " " << res.name << "\n";
  return res.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circulant CIS toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // build
  std::string build_spec, build_format = "edge-list", build_out;
  CLI::App* build = app.add_subcommand("build", "realize a spec and write the graph");
  build->add_option("spec", build_spec,
                    "circulant \"n:d1,d2,...\" or paired \"C(n;a1,b1;...)\"")
      ->required();
  build->add_option("--format", build_format, "output format")
      ->check(CLI::IsMember({"graph6", "edge-list", "distances"}))
      ->capture_default_str();
  build->add_option("--out", build_out, "write to file instead of stdout");
  build->callback([&] { rc = cmd_build(build_spec, build_format, build_out); });

  // analyze
  std::string analyze_spec, analyze_out;
  CLI::App* analyze =
      app.add_subcommand("analyze", "CIS report (alpha, omega, witness) as JSON");
  analyze->add_option("spec", analyze_spec, "circulant or paired spec")->required();
  analyze->add_option("--out", analyze_out, "write to file instead of stdout");
  analyze->callback([&] { rc = cmd_analyze(analyze_spec, analyze_out); });

  // decompose
  std::string dec_spec, dec_out;
  int dec_k_max = 3;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "paired decomposition trace of the P4-free recognizer");
  decompose->add_option("spec", dec_spec, "circulant or paired spec")->required();
  decompose->add_option("--k-max", dec_k_max, "recognition cap for circulant input")
      ->capture_default_str();
  decompose->add_option("--out", dec_out, "write to file instead of stdout");
  decompose->callback([&] { rc = cmd_decompose(dec_spec, dec_k_max, dec_out); });

  // census
  std::optional<i64> cen_order;
  std::string cen_range, cen_filter, cen_checkpoint, cen_out;
  int cen_jobs = 1, cen_k_max = 3;
  bool cen_mult = false;
  long long cen_max_blocks = 0;
  CLI::App* census =
      app.add_subcommand("census", "exhaustive sweep over circulants, JSONL out");
  census->add_option("--order", cen_order, "single order N");
  census->add_option("--range", cen_range, "order range A..B");
  census->add_option("--filter", cen_filter,
                     "comma list of connected, co-connected, cis, p4-free");
  census->add_option("--jobs", cen_jobs, "worker threads")->capture_default_str();
  census->add_option("--checkpoint", cen_checkpoint, "checkpoint file path");
  census->add_option("--out", cen_out, "write records to file instead of stdout");
  census->add_option("--k-max", cen_k_max, "paired recognition cap")
      ->capture_default_str();
  census->add_flag("--multiplier-canonical", cen_mult,
                   "keep only multiplier-canonical distance sets (square-free n)");
  census->add_option("--max-blocks", cen_max_blocks,
                     "stop after N new blocks (0 = run to completion)");
  census->callback([&] {
    rc = cmd_census(cen_order, cen_range, cen_filter, cen_jobs, cen_checkpoint,
                    cen_out, cen_k_max, cen_mult, cen_max_blocks);
  });

  // verify
  std::string suite;
  circis::VerifyBounds bounds;
  std::string suites_help;
  for (const std::string& s : circis::suite_names())
    suites_help += (suites_help.empty() ? "" : ", ") + s;
  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite (" + suites_help + ")");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--n-max", bounds.n_max, "order cap (0 = suite default)");
  verify->add_option("--lcm-max", bounds.lcm_max, "lcm cap (0 = suite default)");
  verify->add_option("--seed", bounds.seed, "rng seed for randomized checks");
  verify->callback([&] { rc = print_suite(circis::run_suite(suite, bounds)); });

  // fixtures
  CLI::App* fixtures =
      app.add_subcommand("fixtures", "re-check the paper's worked examples");
  fixtures->callback([&] { rc = print_suite(circis::run_fixtures()); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const circis::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
