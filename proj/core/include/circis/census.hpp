#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circis/circulant.hpp"

namespace circis {

struct CensusFilter {
  bool connected = false;
  bool co_connected = false;
  bool cis = false;
  bool p4_free = false;
};

// Comma list using the CLI names: connected, co-connected, cis, p4-free.
// Empty string selects nothing (no filtering). Unknown names: ParseError.
CensusFilter parse_filter(const std::string& csv);
std::string format_filter(const CensusFilter& f);

struct CensusRecord {
  i64 n = 0;
  std::vector<i64> D;  // sorted full distance set
  bool connected = false;
  bool co_connected = false;
  bool p4_free = false;
  bool cis = false;
  bool well_covered = false;
  bool co_well_covered = false;
  i64 alpha = 0;
  i64 omega = 0;
  std::optional<std::string> paired;  // spec text when recognized with k <= k_max
};

struct CensusOptions {
  i64 n_min = 1;
  i64 n_max = 1;
  CensusFilter filter;
  int jobs = 1;
  std::string checkpoint_path;  // empty = no checkpointing
  int k_max = 3;                // recognition cap for the paired field
  bool multiplier_canonical = false;
  // stop after this many newly computed blocks (0 = no limit); progress stays
  // in the checkpoint so a rerun resumes where it stopped
  long long max_blocks = 0;
  i64 hard_cap = 40;
};

struct CensusResult {
  bool complete = false;
  std::vector<CensusRecord> records;  // sorted by (n, D); empty unless complete
};

// Exhaustive sweep over all symmetric distance sets of each order in
// [n_min, n_max] (2^(n/2) half-set masks per order), partitioned into blocks
// of 2^16 masks. Deterministic output for fixed inputs regardless of the
// number of jobs or checkpoint interruptions.
CensusResult census(const CensusOptions& opts);

// {"n":...,"D":[...],"connected":...,"co_connected":...,"p4_free":...,
//  "cis":...,"well_covered":...,"co_well_covered":...,"alpha":...,
//  "omega":...,"paired":"C(...)"|null}
std::string census_record_json(const CensusRecord& r);
CensusRecord census_record_from_json(const std::string& line);

}  // namespace circis
