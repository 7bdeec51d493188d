#pragma once

#include <string>
#include <vector>

#include "circis/simple_graph.hpp"

namespace circis {

// Induced comb: stable_side[i] is matched to clique_side[i]; stable_side is
// stable, clique_side is a clique, and there are no other edges between the
// sides. For anticomb violations the sides describe the comb found inside
// the complement graph (same vertex labels).
struct CombEmbedding {
  std::vector<int> stable_side;
  std::vector<int> clique_side;
};

struct CombViolation {
  bool anticomb = false;
  CombEmbedding emb;
};

// B_k: 2k vertices, stable side 0..k-1, clique side k..2k-1, matching
// (i, k+i); k(k+1)/2 edges. Settled version D_k adds v0 = 2k adjacent to the
// whole clique side.
SimpleGraph build_comb(int k);
SimpleGraph build_settled_comb(int k);
SimpleGraph build_anticomb(int k);          // complement of B_k
SimpleGraph build_settled_anticomb(int k);  // complement of D_k

// A-graph = settled 2-comb.
SimpleGraph bull_graph();

// Holzman's 15-vertex graph: pair vertices v_ij (lex order, indices 0..9)
// forming K_10, singletons v_k (indices 10..14) stable, v_ij ~ v_k iff
// k in {i,j}. All combs and anticombs settled, yet not CIS.
SimpleGraph holzman_graph();

// Every induced k-comb / k-anticomb with 2 <= k <= k_max that lacks a
// settling vertex v0 (outside the embedding, complete to the clique side,
// anticomplete to the stable side; dual condition via the complement for
// anticombs). Throws PreconditionViolated if k_max < 2, CapExceeded beyond
// k_max = 4 or 16 vertices.
std::vector<CombViolation> find_unsettled(const SimpleGraph& g, int k_max);

// Chvatal's sufficient condition: no induced 3-combs, no induced
// 3-anticombs, and every induced 2-comb settled. Implies CIS.
bool chvatal_sufficient(const SimpleGraph& g);

// Adds a simplicial vertex per maximal clique; economical mode skips cliques
// that already contain a simplicial vertex. The result is CIS and contains g
// as an induced subgraph.
SimpleGraph cis_extension(const SimpleGraph& g, bool economical);

// JSON array of {"kind":"comb"|"anticomb","k":...,"S":[...],"C":[...]}.
std::string comb_violations_json(const std::vector<CombViolation>& violations);

}  // namespace circis
