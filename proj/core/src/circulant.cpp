#include "circis/circulant.hpp"

#include <algorithm>
#include <set>

#include "circis/error.hpp"

namespace circis {

namespace {

void check_range(i64 n, const std::vector<i64>& ds) {
  if (n < 1) throw Error(Errc::out_of_range, "order must be >= 1");
  for (i64 d : ds)
    if (d < 1 || d > n - 1)
      throw Error(Errc::out_of_range, "distance " + std::to_string(d) +
                                          " outside [1," + std::to_string(n - 1) + "]");
}

}  // namespace

DistanceSet DistanceSet::full(i64 n, std::vector<i64> ds) {
  check_range(n, ds);
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  for (i64 d : ds)
    if (!std::binary_search(ds.begin(), ds.end(), n - d))
      throw Error(Errc::not_symmetric, "distance " + std::to_string(d) + " present without " +
                                           std::to_string(n - d));
  DistanceSet s;
  s.ds_ = std::move(ds);
  return s;
}

DistanceSet DistanceSet::half(i64 n, std::vector<i64> ds) {
  check_range(n, ds);
  std::set<i64> closed;
  for (i64 d : ds) {
    closed.insert(d);
    closed.insert(n - d);
  }
  DistanceSet s;
  s.ds_.assign(closed.begin(), closed.end());
  return s;
}

bool DistanceSet::contains(i64 d) const {
  return std::binary_search(ds_.begin(), ds_.end(), d);
}

Circulant make_circulant(i64 n, const std::vector<i64>& distances) {
  return Circulant{n, DistanceSet::full(n, distances)};
}

Circulant make_circulant_half(i64 n, const std::vector<i64>& distances) {
  return Circulant{n, DistanceSet::half(n, distances)};
}

Circulant complement_circulant(const Circulant& g) {
  std::vector<i64> ds;
  for (i64 d = 1; d < g.n; ++d)
    if (!g.distances.contains(d)) ds.push_back(d);
  return Circulant{g.n, DistanceSet::full(g.n, std::move(ds))};
}

i64 component_count(const Circulant& g) {
  return gcd_range(g.distances.values().begin(), g.distances.values().end(), g.n);
}

Circulant component_subgraph(const Circulant& g) {
  i64 c = component_count(g);
  std::vector<i64> ds;
  for (i64 d : g.distances.values()) ds.push_back(d / c);
  return Circulant{g.n / c, DistanceSet::full(g.n / c, std::move(ds))};
}

bool is_bipartite(const Circulant& g) {
  if (g.distances.empty()) return true;
  Circulant comp = component_subgraph(g);
  // connected circulant on >= 2 vertices is bipartite iff order even and
  // all distances odd (then classes = parity)
  if (comp.n % 2 != 0) return false;
  for (i64 d : comp.distances.values())
    if (d % 2 == 0) return false;
  return true;
}

Circulant lex_product(const Circulant& g, const Circulant& h) {
  i64 n = g.n, m = h.n;
  std::vector<i64> t;
  for (i64 j = 0; j < m; ++j)
    for (i64 d : g.distances.values()) t.push_back(d + j * n);
  for (i64 f : h.distances.values()) t.push_back(n * f);
  return Circulant{n * m, DistanceSet::full(n * m, std::move(t))};
}

std::optional<i64> cayley_multiplier(const Circulant& g, const Circulant& h) {
  if (g.n != h.n) throw Error(Errc::order_mismatch, "orders differ");
  i64 n = g.n;
  if (n == 1) return 1;  // both graphs are K_1, identity multiplier
  if (g.distances.size() != h.distances.size()) return std::nullopt;
  for (i64 q = 1; q < n; ++q) {
    if (std::gcd(q, n) != 1) continue;
    bool ok = true;
    for (i64 d : g.distances.values())
      if (!h.distances.contains(mod_norm(q * d, n))) {
        ok = false;
        break;
      }
    if (ok) return q;
  }
  return std::nullopt;
}

SimpleGraph to_graph(const Circulant& g) {
  SimpleGraph s((int)g.n);
  for (i64 u = 0; u < g.n; ++u)
    for (i64 d : g.distances.values()) {
      i64 v = mod_norm(u + d, g.n);
      if (u < v) s.add_edge((int)u, (int)v);
    }
  return s;
}

}  // namespace circis
