#pragma once

#include <optional>
#include <vector>

#include "circis/numeric.hpp"
#include "circis/simple_graph.hpp"

namespace circis {

// Distance sets are stored in full symmetric form: sorted, each d in [1,n-1],
// and d in D iff n-d in D.
class DistanceSet {
 public:
  // strict: input must already be symmetric (d and n-d both present)
  static DistanceSet full(i64 n, std::vector<i64> ds);
  // lenient: input is closed under d -> n-d automatically
  static DistanceSet half(i64 n, std::vector<i64> ds);

  const std::vector<i64>& values() const { return ds_; }
  bool contains(i64 d) const;
  bool empty() const { return ds_.empty(); }
  std::size_t size() const { return ds_.size(); }

  bool operator==(const DistanceSet& o) const { return ds_ == o.ds_; }

 private:
  DistanceSet() = default;
  std::vector<i64> ds_;
};

struct Circulant {
  i64 n = 0;
  DistanceSet distances;  // full symmetric form

  bool operator==(const Circulant& o) const {
    return n == o.n && distances == o.distances;
  }
};

// Strict constructor: throws OutOfRange for d outside [1,n-1], NotSymmetric
// if some d is present without n-d.
Circulant make_circulant(i64 n, const std::vector<i64>& distances);

// Same but completes the set under d -> n-d.
Circulant make_circulant_half(i64 n, const std::vector<i64>& distances);

// Complement has distance set [1,n-1] \ D.
Circulant complement_circulant(const Circulant& g);

// Number of connected components: gcd of D together with n.
i64 component_count(const Circulant& g);

// Each component is isomorphic to C_{n/c}(D/c) where c = component_count.
Circulant component_subgraph(const Circulant& g);

// Edgeless graphs are bipartite; otherwise bipartite iff every component
// C_{n'}(D') has n' even and all d' odd.
bool is_bipartite(const Circulant& g);

// Lexicographic product of circulants stays circulant:
//   C_n(D)[C_m(F)] = C_{nm}(T),  T = (D + jn for j=0..m-1)  union  n*F.
// The formula identifies vertex (u,x) of the product with u + x*n in Z_nm
// (copy index in the high digits). Note lex_product_graph flattens the other
// way, (u,x) -> u*m + x; the map w -> (w mod n)*m + (w div n) carries one
// labeling onto the other.
Circulant lex_product(const Circulant& g, const Circulant& h);

// Smallest q in [1,n-1] with gcd(q,n)=1 and q*D(g) = D(h), if any.
// Throws OrderMismatch when orders differ. For square-free n a multiplier
// exists iff the graphs are isomorphic (Muzychuk).
std::optional<i64> cayley_multiplier(const Circulant& g, const Circulant& h);

SimpleGraph to_graph(const Circulant& g);

}  // namespace circis
