// Release gate: the ten acceptance criteria, one PASS/FAIL line each.
// Usage: circis_acceptance <path-to-circis-cli>
// Exit 0 iff every criterion passes. Zero tolerance: any mismatch fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "circis/census.hpp"
#include "circis/circulant.hpp"
#include "circis/enumerate.hpp"
#include "circis/error.hpp"
#include "circis/paired.hpp"
#include "circis/simple_graph.hpp"
#include "circis/verify.hpp"

using namespace circis;
namespace fs = std::filesystem;

namespace {

int failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int idx, bool ok, const std::string& what, double secs) {
  std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", idx,
              what.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

void print_failures(const SuiteResult& res) {
  for (const std::string& line : res.lines)
    if (line.rfind("FAIL", 0) == 0) std::printf("  %s\n", line.c_str());
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void criterion_suite(int idx, const std::string& name, const VerifyBounds& bounds,
                     const std::string& what, double budget) {
  Timer t;
  SuiteResult res = run_suite(name, bounds);
  double secs = t.seconds();
  bool ok = res.passed && (budget <= 0 || secs <= budget);
  report(idx, ok, what, secs);
  if (!res.passed) print_failures(res);
}

void criterion_1() {
  Timer t;
  SuiteResult res = run_fixtures();
  double secs = t.seconds();
  report(1, res.passed && secs < 120.0, "fixtures reproduce all five worked examples",
         secs);
  if (!res.passed) print_failures(res);
}

void criterion_2() {
  Timer t;
  CensusOptions below;
  below.n_min = 2;
  below.n_max = 35;
  below.filter = parse_filter("connected,co-connected,cis");
  below.jobs = 8;
  CensusResult sweep = census(below);
  bool empty_below = sweep.complete && sweep.records.empty();

  CensusOptions at36 = below;
  at36.n_min = at36.n_max = 36;
  CensusResult r36 = census(at36);
  const std::vector<i64> target = {2,  3,  6,  10, 12, 14, 15, 18,
                                   21, 22, 24, 26, 30, 33, 34};
  bool found = false;
  for (const CensusRecord& rec : r36.records)
    if (rec.D == target && rec.cis) found = true;

  double secs = t.seconds();
  bool ok = empty_below && found && secs <= 7200.0;
  report(2, ok,
         "census: no connected co-connected CIS circulant below order 36, found at 36",
         secs);
  if (!empty_below && sweep.complete)
    for (const CensusRecord& rec : sweep.records)
      std::printf("  unexpected CIS record: %s\n", census_record_json(rec).c_str());
}

void criterion_6() {
  Timer t;
  std::vector<std::pair<i64, i64>> options;
  for (i64 a = 1; a <= 48; ++a)
    for (i64 b = 1; a * b <= 48; ++b) options.push_back({a, b});

  long long qualifying = 0;
  bool ok = true;
  for (std::size_t i = 0; i < options.size() && ok; ++i) {
    for (std::size_t j = i; j < options.size() && ok; ++j) {
      i64 n = std::lcm(options[i].first * options[i].second,
                       options[j].first * options[j].second);
      if (n > 48) continue;
      PairedSpec spec = make_paired(n, {options[i], options[j]});
      std::vector<i64> triple;
      try {
        triple = blocking_stable_triple(spec);
      } catch (const Error& e) {
        if (e.code() != Errc::precondition_violated) throw;
        continue;
      }
      ++qualifying;
      SimpleGraph g = to_graph(realize(spec));
      for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = x + 1; y < 3; ++y)
          if (g.has_edge((int)triple[x], (int)triple[y])) ok = false;
      i64 a1a2 = spec.pairs[0].first * spec.pairs[1].first;
      SimpleGraph co = g.complement();
      for_each_maximal_clique_containing_set(
          co, {(int)triple[0], (int)triple[1], (int)triple[2]},
          [&](const std::vector<int>& s) {
            if ((i64)s.size() >= a1a2) ok = false;
            return ok;
          });
      if (!ok)
        std::printf("  blocking triple fails for %s\n", format_paired(spec).c_str());
    }
  }
  report(6, ok && qualifying > 0,
         "blocking stable triples block every qualifying 2-pair spec, lcm <= 48 (" +
             std::to_string(qualifying) + " specs)",
         t.seconds());
}

void criterion_10(const std::string& cli) {
  Timer t;
  fs::path dir = fs::temp_directory_path() / "circis_acceptance";
  std::error_code ec;
  fs::remove_all(dir, ec);
  fs::create_directories(dir);
  auto run = [&](const std::string& args) {
    std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
    return std::system(cmd.c_str());
  };

  fs::path j1 = dir / "j1.jsonl", j8 = dir / "j8.jsonl";
  bool jobs_ok = run("census --range 2..18 --jobs 1 --out " + j1.string()) == 0 &&
                 run("census --range 2..18 --jobs 8 --out " + j8.string()) == 0;
  std::string a = slurp(j1), b = slurp(j8);
  jobs_ok = jobs_ok && !a.empty() && a == b;

  fs::path ck = dir / "ck.jsonl";
  fs::path resumed = dir / "resumed.jsonl", straight = dir / "straight.jsonl";
  std::string base = "census --range 30..34 --filter connected,cis ";
  bool ck_ok =
      run(base + "--checkpoint " + ck.string() + " --max-blocks 3") == 0 &&
      run(base + "--checkpoint " + ck.string() + " --out " + resumed.string()) == 0 &&
      run(base + "--out " + straight.string()) == 0;
  std::string r = slurp(resumed), s = slurp(straight);
  ck_ok = ck_ok && !r.empty() && r == s;

  report(10, jobs_ok && ck_ok,
         "census output is byte-identical across jobs and checkpoint resume",
         t.seconds());
  if (!jobs_ok) std::printf("  jobs 1 vs 8 outputs differ or runs failed\n");
  if (!ck_ok) std::printf("  interrupted+resumed output differs from straight run\n");
  fs::remove_all(dir, ec);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-circis-cli>\n", argv[0]);
    return 2;
  }

  criterion_1();
  criterion_2();
  criterion_suite(3, "theorem-2-1", {.n_max = 18},
                  "is_cis_circulant equals brute force on every circulant, n <= 18",
                  900.0);
  criterion_suite(4, "two-paired", {.lcm_max = 60},
                  "2-paired CIS iff gcd(a1 b1, a2 b2) = 1, lcm <= 60", 0);
  criterion_suite(5, "clique-formulas", {.lcm_max = 48},
                  "clique size formulas and stable set bounds exact, lcm <= 48", 0);
  criterion_6();
  criterion_suite(7, "alpha-omega", {.n_max = 14},
                  "alpha*omega <= n for every circulant, n <= 14", 0);
  criterion_suite(8, "p4-free", {},
                  "1-paired always P4-free+CIS; P4-free circulants recognized; gn(2)",
                  0);
  criterion_suite(9, "appendix", {},
                  "Holzman, bull, P4 witness, settled combs, extensions, WZZ", 0);
  criterion_10(argv[1]);

  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
