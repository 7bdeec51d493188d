#pragma once

#include <string>
#include <vector>

#include "circis/circulant.hpp"
#include "circis/error.hpp"
#include "circis/simple_graph.hpp"

namespace circis {

namespace detail {

// Bron-Kerbosch with pivoting. Visitor gets each maximal clique (ascending
// vertex list) and returns true to keep enumerating. Returns false iff the
// visitor stopped the walk.
template <class Visitor>
bool bk_pivot(const SimpleGraph& g, Bitset& r, Bitset p, Bitset x, Visitor& visit) {
  if (p.none() && x.none()) {
    std::vector<int> clique;
    for (auto v = r.find_first(); v != Bitset::npos; v = r.find_next(v))
      clique.push_back((int)v);
    return visit(clique);
  }
  Bitset px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t pivot_cnt = (p & g.neighbors((int)pivot)).count();
  for (auto u = px.find_next(pivot); u != Bitset::npos; u = px.find_next(u)) {
    std::size_t cnt = (p & g.neighbors((int)u)).count();
    if (cnt > pivot_cnt) {
      pivot = u;
      pivot_cnt = cnt;
    }
  }
  Bitset cands = p - g.neighbors((int)pivot);
  for (auto v = cands.find_first(); v != Bitset::npos; v = cands.find_next(v)) {
    r.set(v);
    if (!bk_pivot(g, r, p & g.neighbors((int)v), x & g.neighbors((int)v), visit)) {
      r.reset(v);
      return false;
    }
    r.reset(v);
    p.reset(v);
    x.set(v);
  }
  return true;
}

}  // namespace detail

// Streams every inclusion-maximal clique exactly once; visitor returns true
// to continue, false to stop early. Returns false iff stopped early.
template <class Visitor>
bool for_each_maximal_clique(const SimpleGraph& g, Visitor&& visit) {
  int n = g.order();
  if (n == 0) return true;
  Bitset r(n), p(n), x(n);
  p.set();
  return detail::bk_pivot(g, r, std::move(p), std::move(x), visit);
}

// Only the maximal cliques containing v (seed R={v}, P=N(v), X=empty).
template <class Visitor>
bool for_each_maximal_clique_containing(const SimpleGraph& g, int v, Visitor&& visit) {
  Bitset r(g.order()), x(g.order());
  r.set(v);
  Bitset p = g.neighbors(v);
  return detail::bk_pivot(g, r, std::move(p), std::move(x), visit);
}

// Maximal cliques containing a whole seed set, which must itself be a clique.
template <class Visitor>
bool for_each_maximal_clique_containing_set(const SimpleGraph& g, const std::vector<int>& seed,
                                            Visitor&& visit) {
  Bitset r(g.order()), x(g.order()), p(g.order());
  p.set();
  for (int v : seed) {
    r.set(v);
    p &= g.neighbors(v);
  }
  return detail::bk_pivot(g, r, std::move(p), std::move(x), visit);
}

// verts is a clique and no outside vertex is adjacent to all of it.
bool is_maximal_clique(const SimpleGraph& g, const std::vector<int>& verts);
bool is_maximal_stable_set(const SimpleGraph& g, const std::vector<int>& verts);

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g);
std::vector<std::vector<int>> maximal_stable_sets(const SimpleGraph& g);

// Throw EmptyGraph on order 0.
int alpha(const SimpleGraph& g);
int omega(const SimpleGraph& g);
bool is_well_covered(const SimpleGraph& g);
bool is_co_well_covered(const SimpleGraph& g);

// Gap view of a subset X of Z_n: base is the least member, gaps are the
// successive differences around the circle (they sum to n).
struct GapDecomposition {
  i64 base = 0;
  std::vector<i64> gaps;
};

GapDecomposition gap_sequence(const std::vector<i64>& verts, i64 n);
std::vector<i64> generate(const std::vector<i64>& gaps, i64 base, i64 n);

// Lexicographically least cyclic rotation.
std::vector<i64> canonical_rotation(std::vector<i64> gaps);

// Canonical gap form of every set, deduplicated and sorted. Two sets are
// rotations of each other iff their canonical forms coincide.
std::vector<std::vector<i64>> canonical_gap_classes(const std::vector<std::vector<int>>& sets,
                                                    i64 n);

// Paper display style: "(2, 10)", "(3)^4", "(2, 10)^3" (smallest period block).
std::string format_gap_sequence(const std::vector<i64>& gaps);

}  // namespace circis
