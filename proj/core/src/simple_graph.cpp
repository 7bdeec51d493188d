#include "circis/simple_graph.hpp"

namespace circis {

SimpleGraph lex_product_graph(const SimpleGraph& g, const SimpleGraph& h) {
  int n = g.order(), m = h.order();
  SimpleGraph p(n * m);
  for (int u = 0; u < n; ++u)
    for (int x = 0; x < m; ++x)
      for (int v = u; v < n; ++v) {
        int y0 = (v == u) ? x + 1 : 0;
        for (int y = y0; y < m; ++y) {
          bool adj = (u != v) ? g.has_edge(u, v) : h.has_edge(x, y);
          if (adj) p.add_edge(u * m + x, v * m + y);
        }
      }
  return p;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  int n = g.order();
  std::vector<std::vector<int>> comps;
  Bitset seen(n);
  for (int s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    Bitset comp(n), frontier(n);
    frontier.set(s);
    while (frontier.any()) {
      comp |= frontier;
      Bitset next(n);
      for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
        next |= g.neighbors((int)v);
      frontier = next - comp;
    }
    seen |= comp;
    std::vector<int> verts;
    for (auto v = comp.find_first(); v != Bitset::npos; v = comp.find_next(v))
      verts.push_back((int)v);
    comps.push_back(std::move(verts));
  }
  return comps;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

}  // namespace circis
