#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circis/circulant.hpp"
#include "circis/simple_graph.hpp"

namespace circis {

struct CISWitness {
  std::vector<int> clique;  // maximal clique
  std::vector<int> stable;  // maximal stable set, disjoint from clique
};

struct CISReport {
  bool is_cis = false;
  int alpha = 0;
  int omega = 0;
  bool well_covered = false;
  bool co_well_covered = false;
  std::optional<CISWitness> witness;  // present iff not is_cis
};

// Exhaustive pairwise intersection check with early exit on the first
// disjoint (maximal clique, maximal stable set) pair. Throws EmptyGraph.
CISReport is_cis_bruteforce(const SimpleGraph& g);

// Theorem 2.1 fast path: by rotation symmetry only cliques/stable sets
// containing vertex 0 are enumerated for the size conditions; CIS iff
// well-covered, co-well-covered and alpha*omega == n. Witness search (only
// when not CIS) rotates a disjoint pair so the clique contains 0.
CISReport is_cis_circulant(const Circulant& g);

// alpha*omega <= n; holds for every circulant (asserted, never assumed).
bool alpha_omega_bound(const Circulant& g);

struct AlmostCISReport {
  bool almost_cis = false;
  long long disjoint_pairs = 0;
  std::optional<CISWitness> unique_pair;  // present iff disjoint_pairs == 1
};

// Counts disjoint (maximal clique, maximal stable set) pairs; almost CIS
// means exactly one. Throws EmptyGraph.
AlmostCISReport almost_cis(const SimpleGraph& g);

// Split graph with a unique split partition (V = C u S, C clique, S stable;
// counting distinct unordered vertex partitions, i.e. choices of C).
// The WZZ theorem says this coincides with almost CIS. Throws EmptyGraph.
bool is_split_with_unique_partition(const SimpleGraph& g);

// {"n":..., "D":[...], "cis":..., "alpha":..., "omega":..., "wc":...,
//  "cowc":..., "witness":{"C":[...],"S":[...]}|null}
std::string cis_report_json(const Circulant& g, const CISReport& r);

}  // namespace circis
