#include "circis/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "circis/cis.hpp"
#include "circis/enumerate.hpp"
#include "circis/error.hpp"
#include "circis/paired.hpp"

namespace circis {

namespace {

constexpr std::uint64_t kBlockSize = 1ull << 16;

using json = nlohmann::ordered_json;

std::vector<i64> mask_to_distances(i64 n, std::uint64_t mask) {
  std::vector<i64> ds;
  int half = (int)(n / 2);
  for (int i = 0; i < half; ++i) {
    if (!(mask >> i & 1)) continue;
    i64 d = i + 1;
    ds.push_back(d);
    if (n - d != d) ds.push_back(n - d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// greedy maximal clique through 0; equals omega when the graph is CIS
i64 greedy_from_zero(const SimpleGraph& g) {
  Bitset cand = g.neighbors(0);
  i64 size = 1;
  while (cand.any()) {
    auto v = cand.find_first();
    ++size;
    cand &= g.neighbors((int)v);
  }
  return size;
}

bool multiplier_canonical(i64 n, const DistanceSet& d) {
  if (!is_square_free(n)) return true;
  const auto& ds = d.values();
  for (i64 q = 2; q < n; ++q) {
    if (std::gcd(q, n) != 1) continue;
    std::vector<i64> mapped;
    mapped.reserve(ds.size());
    for (i64 x : ds) mapped.push_back(mod_norm(q * x, n));
    std::sort(mapped.begin(), mapped.end());
    if (mapped < ds) return false;
  }
  return true;
}

struct Job {
  i64 n = 0;
  i64 block = 0;
  std::uint64_t mask_begin = 0, mask_end = 0;
};

std::vector<CensusRecord> compute_block(const Job& job, const CensusOptions& opts) {
  std::vector<CensusRecord> out;
  for (std::uint64_t mask = job.mask_begin; mask < job.mask_end; ++mask) {
    Circulant g{job.n, DistanceSet::full(job.n, mask_to_distances(job.n, mask))};
    bool connected = component_count(g) == 1;
    if (opts.filter.connected && !connected) continue;
    bool co_connected = component_count(complement_circulant(g)) == 1;
    if (opts.filter.co_connected && !co_connected) continue;
    if (opts.multiplier_canonical && !multiplier_canonical(g.n, g.distances)) continue;
    SimpleGraph realized = to_graph(g);
    std::optional<bool> p4;
    if (opts.filter.p4_free) {
      p4 = is_p4_free(realized);
      if (!*p4) continue;
    }
    std::optional<CISReport> rep;
    if (opts.filter.cis) {
      // cheap necessary screen: in a CIS graph any greedy maximal clique hits
      // size omega, so the product of the two greedy sizes must be exactly n
      if (greedy_from_zero(realized) * greedy_from_zero(realized.complement()) != g.n) continue;
      rep = is_cis_circulant(g);
      if (!rep->is_cis) continue;
    }
    if (!rep) rep = is_cis_circulant(g);
    if (!p4) p4 = is_p4_free(realized);
    CensusRecord r;
    r.n = g.n;
    r.D = g.distances.values();
    r.connected = connected;
    r.co_connected = co_connected;
    r.p4_free = *p4;
    r.cis = rep->is_cis;
    r.well_covered = rep->well_covered;
    r.co_well_covered = rep->co_well_covered;
    r.alpha = rep->alpha;
    r.omega = rep->omega;
    if (auto spec = recognize_paired(g, opts.k_max)) r.paired = format_paired(*spec);
    out.push_back(std::move(r));
  }
  return out;
}

json header_json(const CensusOptions& opts) {
  json j;
  j["kind"] = "header";
  j["n_min"] = opts.n_min;
  j["n_max"] = opts.n_max;
  j["filter"] = format_filter(opts.filter);
  j["k_max"] = opts.k_max;
  j["multiplier_canonical"] = opts.multiplier_canonical;
  return j;
}

json record_to_json(const CensusRecord& r) {
  json j;
  j["n"] = r.n;
  j["D"] = r.D;
  j["connected"] = r.connected;
  j["co_connected"] = r.co_connected;
  j["p4_free"] = r.p4_free;
  j["cis"] = r.cis;
  j["well_covered"] = r.well_covered;
  j["co_well_covered"] = r.co_well_covered;
  j["alpha"] = r.alpha;
  j["omega"] = r.omega;
  if (r.paired)
    j["paired"] = *r.paired;
  else
    j["paired"] = nullptr;
  return j;
}

CensusRecord record_from_json(const json& j) {
  CensusRecord r;
  r.n = j.at("n").get<i64>();
  r.D = j.at("D").get<std::vector<i64>>();
  r.connected = j.at("connected").get<bool>();
  r.co_connected = j.at("co_connected").get<bool>();
  r.p4_free = j.at("p4_free").get<bool>();
  r.cis = j.at("cis").get<bool>();
  r.well_covered = j.at("well_covered").get<bool>();
  r.co_well_covered = j.at("co_well_covered").get<bool>();
  r.alpha = j.at("alpha").get<i64>();
  r.omega = j.at("omega").get<i64>();
  if (!j.at("paired").is_null()) r.paired = j.at("paired").get<std::string>();
  return r;
}

}  // namespace

CensusFilter parse_filter(const std::string& csv) {
  CensusFilter f;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "connected")
      f.connected = true;
    else if (tok == "co-connected")
      f.co_connected = true;
    else if (tok == "cis")
      f.cis = true;
    else if (tok == "p4-free")
      f.p4_free = true;
    else
      throw Error(Errc::parse_error, "unknown filter '" + tok + "'");
  }
  return f;
}

std::string format_filter(const CensusFilter& f) {
  std::string s;
  auto add = [&](const char* name) {
    if (!s.empty()) s += ",";
    s += name;
  };
  if (f.connected) add("connected");
  if (f.co_connected) add("co-connected");
  if (f.cis) add("cis");
  if (f.p4_free) add("p4-free");
  return s;
}

CensusResult census(const CensusOptions& opts) {
  if (opts.n_min < 1 || opts.n_min > opts.n_max)
    throw Error(Errc::out_of_range, "census needs 1 <= n_min <= n_max");
  if (opts.n_max > opts.hard_cap)
    throw Error(Errc::cap_exceeded, "census capped at order " + std::to_string(opts.hard_cap));

  std::vector<Job> jobs;
  for (i64 n = opts.n_min; n <= opts.n_max; ++n) {
    std::uint64_t total = 1ull << (n / 2);
    i64 nblocks = (i64)((total + kBlockSize - 1) / kBlockSize);
    for (i64 b = 0; b < nblocks; ++b)
      jobs.push_back(Job{n, b, (std::uint64_t)b * kBlockSize,
                         std::min(total, ((std::uint64_t)b + 1) * kBlockSize)});
  }

  std::map<std::pair<i64, i64>, std::vector<CensusRecord>> done;
  std::ofstream ck_out;
  if (!opts.checkpoint_path.empty()) {
    std::string expected_header = header_json(opts).dump();
    if (std::filesystem::exists(opts.checkpoint_path)) {
      std::ifstream in(opts.checkpoint_path);
      std::vector<std::string> lines;
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
      if (lines.empty() || lines[0] != expected_header)
        throw Error(Errc::precondition_violated,
                    "checkpoint was written with different census parameters");
      for (std::size_t i = 1; i < lines.size(); ++i) {
        json j = json::parse(lines[i], nullptr, false);
        bool ok = !j.is_discarded();
        if (ok) {
          try {
            if (j.at("kind").get<std::string>() != "block") throw Error(Errc::parse_error, "");
            std::vector<CensusRecord> recs;
            for (const auto& rj : j.at("records")) recs.push_back(record_from_json(rj));
            done[{j.at("n").get<i64>(), j.at("block").get<i64>()}] = std::move(recs);
          } catch (const std::exception&) {
            ok = false;
          }
        }
        if (!ok) {
          if (i + 1 == lines.size()) break;  // torn trailing write, recompute that block
          throw Error(Errc::parse_error, "corrupt checkpoint line " + std::to_string(i + 1));
        }
      }
      ck_out.open(opts.checkpoint_path, std::ios::app);
    } else {
      ck_out.open(opts.checkpoint_path);
      ck_out << expected_header << "\n" << std::flush;
    }
  }

  std::vector<const Job*> pending;
  for (const auto& j : jobs)
    if (!done.count({j.n, j.block})) pending.push_back(&j);

  std::atomic<std::size_t> next{0};
  std::atomic<long long> budget{0};
  std::mutex mu;
  auto worker = [&]() {
    while (true) {
      if (opts.max_blocks > 0 && budget.fetch_add(1) >= opts.max_blocks) return;
      std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      const Job& job = *pending[i];
      auto recs = compute_block(job, opts);
      std::lock_guard<std::mutex> lk(mu);
      if (ck_out.is_open()) {
        json j;
        j["kind"] = "block";
        j["n"] = job.n;
        j["block"] = job.block;
        json arr = json::array();
        for (const auto& r : recs) arr.push_back(record_to_json(r));
        j["records"] = std::move(arr);
        ck_out << j.dump() << "\n" << std::flush;
      }
      done[{job.n, job.block}] = std::move(recs);
    }
  };

  int nthreads = std::max(1, opts.jobs);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CensusResult result;
  result.complete = true;
  for (const auto& j : jobs)
    if (!done.count({j.n, j.block})) {
      result.complete = false;
      break;
    }
  if (!result.complete) return result;
  for (auto& [key, recs] : done)
    for (auto& r : recs) result.records.push_back(std::move(r));
  std::sort(result.records.begin(), result.records.end(),
            [](const CensusRecord& a, const CensusRecord& b) {
              return a.n != b.n ? a.n < b.n : a.D < b.D;
            });
  return result;
}

std::string census_record_json(const CensusRecord& r) { return record_to_json(r).dump(); }

CensusRecord census_record_from_json(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::parse_error, "bad census record JSON");
  try {
    return record_from_json(j);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad census record: ") + e.what());
  }
}

}  // namespace circis
