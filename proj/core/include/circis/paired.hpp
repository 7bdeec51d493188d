#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circis/circulant.hpp"
#include "circis/simple_graph.hpp"

namespace circis {

// k-paired circulant spec C(n; a1,b1; ...; ak,bk), Definition 3.1 style:
// each pair contributes D_{a,b} = {d in [1,n-1] : a | d, ab not| d}.
// k = 0 encodes the edgeless C(n;). Repeated pairs and (1,1) are allowed.
struct PairedSpec {
  i64 n = 1;
  std::vector<std::pair<i64, i64>> pairs;

  std::size_t k() const { return pairs.size(); }
  bool operator==(const PairedSpec& o) const { return n == o.n && pairs == o.pairs; }
};

// Validates n >= 1, a,b >= 1 and a*b | n.
PairedSpec make_paired(i64 n, std::vector<std::pair<i64, i64>> pairs);

DistanceSet paired_distance_set(const PairedSpec& spec);
Circulant realize(const PairedSpec& spec);

// Prop 3.4: C(n;...)[C(m;a'_j,b'_j...)] = C(nm; ...; n*a'_j, b'_j ...).
PairedSpec paired_lex_product(const PairedSpec& g, const PairedSpec& h);

// Prop 3.5: with d = lcm(a_i b_i) the spec is core[S_blowup], core of order d
// with the same pairs, blowup = n/d. Throws EmptySpec when k = 0.
struct LcmReduction {
  PairedSpec core;
  i64 blowup = 1;
};
LcmReduction lcm_reduce(const PairedSpec& spec);

// Prop 3.6: number of connected components; n if every b_i = 1 (edgeless),
// else gcd{a_i : b_i > 1}.
i64 paired_component_count(const PairedSpec& spec);

// One component as a paired spec of order n/d: pairs (a_i/d, b_i) for
// b_i > 1; pairs with b_i = 1 contribute no distances and are kept as (1,1)
// (a_i/d need not be integral for them).
PairedSpec reduce_connected(const PairedSpec& spec);

// Prop 3.8 (corrected for vacuous (1,1) pairs): co-connected iff n = 1 or no
// pair has a_i = 1 with b_i > 1.
bool paired_is_co_connected(const PairedSpec& spec);

// Theorem 3.3(ii): when a_ell = 1 the graph equals K_{b_ell}[core] where core
// has order n/b_ell and pairs A_i = a_i/gcd(a_i,b_ell),
// B_i = b_i*gcd(a_i,b_ell)/gcd(a_i b_i, b_ell) for i != ell.
// ell is a 0-based index; throws BadIndex unless a_ell = 1.
struct CoReduction {
  i64 clique_size = 1;  // b_ell
  PairedSpec core;
};
CoReduction co_reduce(const PairedSpec& spec, std::size_t ell);

// Smallest-k spec with k <= k_max realizing D(g), if any; among minimal-k
// covers returns the lexicographically least pair list (pairs sorted by
// (a,b)). Exact cover search over candidate pairs, exponential worst case.
std::optional<PairedSpec> recognize_paired(const Circulant& g, int k_max);

// Cograph test (Prop 5.1): recursive complement-component decomposition.
bool is_p4_free(const SimpleGraph& g);

// Paired-calculus version: recursively strip components (reduce_connected)
// and K_b layers (co_reduce at the smallest index with a_ell = 1); P4-free
// iff the decomposition bottoms out at order 1.
bool is_p4_free_paired(const PairedSpec& spec);

// Prop 5.5 family: G_1 = C(6;1,2), G_n = Q_n[G_{n-1}] with
// Q_n = K_{p_{2n-1}}[S_{p_{2n}}]; pairs a_i = prod_{j>i} q_j, b_i = p_{2i-1},
// q_i = p_{2i-1} p_{2i}. Capped at n <= 3 (orders explode).
PairedSpec gn_family(int n);

// Prop 4.2 sizes of maximal a1-/a2-cliques; requires k = 2 and
// n = lcm(a1 b1, a2 b2), else PreconditionViolated.
std::pair<i64, i64> clique_size_formulas(const PairedSpec& spec);

// Theorem 3.4: a connected, co-connected 2-paired circulant is CIS iff
// gcd(a1 b1, a2 b2) = 1. PreconditionViolated unless k = 2, connected and
// co-connected.
bool is_cis_2paired(const PairedSpec& spec);

// Prop 4.8 blocking triple {0, 1 + alpha*a1, 2 + beta*a2} mod n with
// alpha = a2*gcd(b1,b2) and beta the least solution of
// 2 + beta*a2 == 0 (mod a1 b1). Preconditions (what the proof uses): k = 2,
// n = lcm(a1 b1, a2 b2), gcd(b1,b2) > 1, and some orientation of the pairs
// (unswapped preferred) with a1 >= 2, a2 >= 3 and gcd(a2, a1 b1) = 1.
// The triple is stable and no maximal stable superset reaches size a1*a2.
std::vector<i64> blocking_stable_triple(const PairedSpec& spec);

// "C(n;a1,b1;...;ak,bk)", "C(n;)" for k = 0.
std::string format_paired(const PairedSpec& spec);
PairedSpec parse_paired(const std::string& text);

}  // namespace circis
