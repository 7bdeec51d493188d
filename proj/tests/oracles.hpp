#pragma once

// Deliberately naive cross-check oracles: subset scans, BFS, permutation
// isomorphism. Nothing here shares code with the library paths under test.

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "circis/circulant.hpp"
#include "circis/error.hpp"
#include "circis/simple_graph.hpp"
#include "doctest.h"

namespace oracle {

using circis::i64;
using circis::SimpleGraph;

inline bool mask_is_clique(const SimpleGraph& g, unsigned mask) {
  int n = g.order();
  for (int u = 0; u < n; ++u) {
    if (!(mask >> u & 1)) continue;
    for (int v = u + 1; v < n; ++v)
      if ((mask >> v & 1) && !g.has_edge(u, v)) return false;
  }
  return true;
}

inline std::vector<int> mask_verts(unsigned mask, int n) {
  std::vector<int> vs;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) vs.push_back(v);
  return vs;
}

// all maximal cliques by scanning every vertex subset; n <= 20 or bust
inline std::set<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  int n = g.order();
  REQUIRE(n <= 20);
  std::set<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!mask_is_clique(g, mask)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(mask >> v & 1) && mask_is_clique(g, mask | (1u << v))) maximal = false;
    if (maximal) out.insert(mask_verts(mask, n));
  }
  return out;
}

inline std::set<std::vector<int>> maximal_stable_sets(const SimpleGraph& g) {
  return oracle::maximal_cliques(g.complement());
}

inline bool is_cis(const SimpleGraph& g) {
  auto cliques = oracle::maximal_cliques(g);
  auto stables = oracle::maximal_stable_sets(g);
  for (const auto& c : cliques)
    for (const auto& s : stables) {
      std::vector<int> inter;
      std::set_intersection(c.begin(), c.end(), s.begin(), s.end(),
                            std::back_inserter(inter));
      if (inter.empty()) return false;
    }
  return true;
}

inline int component_count(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (g.has_edge(u, v) && !seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
    }
  }
  return comps;
}

inline bool is_bipartite(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (!g.has_edge(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  REQUIRE(n <= 8);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u)
      for (int v = u + 1; v < n && match; ++v)
        if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// every symmetric distance set of order n via the half-set mask
inline std::vector<circis::Circulant> all_circulants(i64 n) {
  std::vector<circis::Circulant> out;
  i64 h = n / 2;
  for (i64 mask = 0; mask < (i64{1} << h); ++mask) {
    std::vector<i64> ds;
    for (i64 d = 1; d <= h; ++d)
      if (mask >> (d - 1) & 1) {
        ds.push_back(d);
        if (d != n - d) ds.push_back(n - d);
      }
    std::sort(ds.begin(), ds.end());
    out.push_back(circis::make_circulant(n, ds));
  }
  return out;
}

inline SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
  SimpleGraph g(n);
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

template <class F>
void expect_errc(circis::Errc want, F&& f) {
  try {
    f();
    FAIL_CHECK("expected a circis::Error, none thrown");
  } catch (const circis::Error& e) {
    CHECK(circis::errc_name(e.code()) == doctest::String(circis::errc_name(want)));
  }
}

}  // namespace oracle
