#pragma once

#include <boost/dynamic_bitset.hpp>
#include <utility>
#include <vector>

#include "circis/error.hpp"

namespace circis {

using Bitset = boost::dynamic_bitset<>;

// Undirected simple graph on vertices 0..n-1, dense bitset adjacency rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), rows_(n, Bitset(n)) {}

  int order() const { return n_; }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw Error(Errc::out_of_range, "self loop");
    rows_[u].set(v);
    rows_[v].set(u);
  }

  void remove_edge(int u, int v) {
    check(u);
    check(v);
    rows_[u].reset(v);
    rows_[v].reset(u);
  }

  bool has_edge(int u, int v) const {
    check(u);
    check(v);
    return u != v && rows_[u].test(v);
  }

  const Bitset& neighbors(int v) const {
    check(v);
    return rows_[v];
  }

  int degree(int v) const { return (int)neighbors(v).count(); }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& row : rows_) total += row.count();
    return total / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
      for (int v = (int)rows_[u].find_next(u); v != (int)Bitset::npos;
           v = (int)rows_[u].find_next(v))
        es.emplace_back(u, v);
    return es;
  }

  SimpleGraph complement() const {
    SimpleGraph g(n_);
    for (int u = 0; u < n_; ++u) {
      g.rows_[u] = rows_[u];
      g.rows_[u].flip();
      g.rows_[u].reset(u);
    }
    return g;
  }

  SimpleGraph induced_subgraph(const std::vector<int>& verts) const {
    SimpleGraph g((int)verts.size());
    for (int i = 0; i < (int)verts.size(); ++i)
      for (int j = i + 1; j < (int)verts.size(); ++j)
        if (has_edge(verts[i], verts[j])) g.add_edge(i, j);
    return g;
  }

  bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const SimpleGraph& o) const { return !(*this == o); }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw Error(Errc::out_of_range, "vertex out of range");
  }

  int n_ = 0;
  std::vector<Bitset> rows_;
};

// Lexicographic product G[H] on the flattened labels (u,x) -> u*|V(H)| + x.
// (u,x) ~ (v,y)  iff  uv in E(G), or u==v and xy in E(H).
SimpleGraph lex_product_graph(const SimpleGraph& g, const SimpleGraph& h);

// Vertex sets of the connected components, each ascending, ordered by least
// member.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

SimpleGraph complete_graph(int n);
SimpleGraph empty_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);

}  // namespace circis
