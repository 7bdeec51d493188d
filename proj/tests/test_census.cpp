#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "circis/census.hpp"
#include "circis/circulant.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circis;

namespace {

std::vector<std::string> to_lines(const CensusResult& r) {
  std::vector<std::string> lines;
  for (const CensusRecord& rec : r.records) lines.push_back(census_record_json(rec));
  return lines;
}

struct TempPath {
  std::filesystem::path p;
  explicit TempPath(const char* name)
      : p(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(p);
  }
  ~TempPath() { std::filesystem::remove(p); }
};

}  // namespace

TEST_CASE("census of K1") {
  CensusOptions opts;
  opts.n_min = opts.n_max = 1;
  CensusResult r = census(opts);
  CHECK(r.complete);
  REQUIRE(r.records.size() == 1);
  const CensusRecord& k1 = r.records[0];
  CHECK(k1.n == 1);
  CHECK(k1.D.empty());
  CHECK(k1.cis);
  CHECK(k1.connected);
  CHECK(k1.co_connected);
  CHECK(k1.p4_free);
  CHECK(k1.alpha == 1);
  CHECK(k1.omega == 1);
  CHECK(k1.paired == std::string("C(1;)"));
}

TEST_CASE("census flags match the module outputs") {
  CensusOptions opts;
  opts.n_min = opts.n_max = 12;
  CensusResult r = census(opts);
  CHECK(r.complete);
  CHECK(r.records.size() == 64);  // 2^6 half-sets

  bool found_ex1 = false;
  for (const CensusRecord& rec : r.records) {
    if (rec.D == std::vector<i64>{2, 3, 6, 9, 10}) {
      found_ex1 = true;
      CHECK(rec.connected);
      CHECK(rec.co_connected);
      CHECK_FALSE(rec.cis);
      CHECK_FALSE(rec.p4_free);
      CHECK(rec.well_covered);  // all maximal stable sets have size 3
      CHECK_FALSE(rec.co_well_covered);
      CHECK(rec.alpha == 3);
      CHECK(rec.omega == 4);
      CHECK(rec.paired == std::string("C(12;2,2;3,2)"));
    }
  }
  CHECK(found_ex1);

  // k_max caps recognition: example 1 needs two pairs
  opts.k_max = 1;
  for (const CensusRecord& rec : census(opts).records)
    if (rec.D == std::vector<i64>{2, 3, 6, 9, 10}) CHECK_FALSE(rec.paired.has_value());
}

TEST_CASE("census cis filter at order 8") {
  CensusOptions opts;
  opts.n_min = opts.n_max = 8;
  opts.filter = parse_filter("cis");
  CensusResult r = census(opts);
  CHECK(r.records.size() == 8);
  bool found_k8 = false;
  for (const CensusRecord& rec : r.records) {
    CHECK(rec.cis);
    CHECK(rec.alpha * rec.omega == 8);
    if (rec.D.size() == 7) found_k8 = true;
  }
  CHECK(found_k8);
}

TEST_CASE("filter parsing") {
  CensusFilter f = parse_filter("connected,co-connected");
  CHECK(f.connected);
  CHECK(f.co_connected);
  CHECK_FALSE(f.cis);
  CHECK_FALSE(f.p4_free);
  CHECK(format_filter(f) == "connected,co-connected");
  CHECK(format_filter(parse_filter("")) == "");
  CHECK(parse_filter("p4-free").p4_free);
  oracle::expect_errc(Errc::parse_error, [] { parse_filter("connected,bogus"); });
}

TEST_CASE("census record json round trip") {
  CensusOptions opts;
  opts.n_min = opts.n_max = 12;
  for (const CensusRecord& rec : census(opts).records) {
    CensusRecord back = census_record_from_json(census_record_json(rec));
    CHECK(census_record_json(back) == census_record_json(rec));
  }
  oracle::expect_errc(Errc::parse_error, [] { census_record_from_json("{oops"); });
}

TEST_CASE("census is deterministic across jobs") {
  CensusOptions a, b;
  a.n_min = b.n_min = 2;
  a.n_max = b.n_max = 12;
  a.jobs = 1;
  b.jobs = 4;
  CHECK(to_lines(census(a)) == to_lines(census(b)));
}

TEST_CASE("census checkpoint interrupt and resume") {
  TempPath ck("circis_test_ck.jsonl");
  CensusOptions opts;
  opts.n_min = 2;
  opts.n_max = 14;
  opts.filter = parse_filter("connected,cis");
  opts.checkpoint_path = ck.p.string();

  CensusOptions interrupted = opts;
  interrupted.max_blocks = 3;  // orders <= 2^16 masks are one block each
  CensusResult part = census(interrupted);
  CHECK_FALSE(part.complete);
  CHECK(part.records.empty());

  CensusResult resumed = census(opts);
  CHECK(resumed.complete);

  CensusOptions straight = opts;
  straight.checkpoint_path.clear();
  CHECK(to_lines(resumed) == to_lines(census(straight)));

  // same checkpoint, different parameters: refused
  CensusOptions other = opts;
  other.filter = parse_filter("cis");
  oracle::expect_errc(Errc::precondition_violated, [&] { census(other); });
}

TEST_CASE("census caps and bad ranges") {
  CensusOptions opts;
  opts.n_min = 2;
  opts.n_max = 41;
  oracle::expect_errc(Errc::cap_exceeded, [&] { census(opts); });
  opts.n_min = 0;
  opts.n_max = 5;
  oracle::expect_errc(Errc::out_of_range, [&] { census(opts); });
  opts.n_min = 6;
  oracle::expect_errc(Errc::out_of_range, [&] { census(opts); });
}

TEST_CASE("multiplier-canonical filtering") {
  CensusOptions full, canon;
  full.n_min = canon.n_min = 15;
  full.n_max = canon.n_max = 15;
  canon.multiplier_canonical = true;
  CensusResult all = census(full);
  CensusResult reps = census(canon);
  CHECK(reps.records.size() < all.records.size());
  // every kept record is the q-orbit minimum of its distance set
  for (const CensusRecord& rec : reps.records) {
    for (i64 q = 2; q < 15; ++q) {
      if (std::gcd(q, i64{15}) != 1) continue;
      std::vector<i64> mapped;
      for (i64 d : rec.D) mapped.push_back(q * d % 15);
      std::sort(mapped.begin(), mapped.end());
      CHECK(rec.D <= mapped);
    }
  }
}
