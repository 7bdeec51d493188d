#include "circis/cis.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "circis/enumerate.hpp"
#include "circis/error.hpp"

namespace circis {

namespace {

Bitset to_bitset(int n, const std::vector<int>& verts) {
  Bitset b(n);
  for (int v : verts) b.set(v);
  return b;
}

struct SizeStats {
  std::size_t min = 0, max = 0;
  bool seen = false;
  bool uniform = true;
  void add(std::size_t s) {
    if (!seen) {
      min = max = s;
      seen = true;
    } else {
      min = std::min(min, s);
      max = std::max(max, s);
      uniform = (min == max);
    }
  }
};

}  // namespace

CISReport is_cis_bruteforce(const SimpleGraph& g) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "graph has no vertices");
  auto cliques = maximal_cliques(g);
  auto stables = maximal_stable_sets(g);
  CISReport r;
  SizeStats cs, ss;
  for (const auto& c : cliques) cs.add(c.size());
  for (const auto& s : stables) ss.add(s.size());
  r.omega = (int)cs.max;
  r.alpha = (int)ss.max;
  r.co_well_covered = cs.uniform;
  r.well_covered = ss.uniform;
  std::vector<Bitset> stable_bits;
  stable_bits.reserve(stables.size());
  for (const auto& s : stables) stable_bits.push_back(to_bitset(g.order(), s));
  r.is_cis = true;
  for (const auto& c : cliques) {
    Bitset cb = to_bitset(g.order(), c);
    for (std::size_t i = 0; i < stables.size(); ++i) {
      if (!cb.intersects(stable_bits[i])) {
        r.is_cis = false;
        r.witness = CISWitness{c, stables[i]};
        return r;
      }
    }
  }
  return r;
}

CISReport is_cis_circulant(const Circulant& g) {
  SimpleGraph s = to_graph(g);
  SimpleGraph sc = s.complement();
  CISReport r;
  SizeStats cs, ss;
  for_each_maximal_clique_containing(s, 0, [&](const std::vector<int>& c) {
    cs.add(c.size());
    return true;
  });
  for_each_maximal_clique_containing(sc, 0, [&](const std::vector<int>& st) {
    ss.add(st.size());
    return true;
  });
  r.omega = (int)cs.max;
  r.alpha = (int)ss.max;
  r.co_well_covered = cs.uniform;
  r.well_covered = ss.uniform;
  r.is_cis = r.well_covered && r.co_well_covered && (i64)r.alpha * r.omega == g.n;
  if (!r.is_cis) {
    // a disjoint pair exists (Thm 2.1); rotate it so the clique contains 0
    auto stables = maximal_cliques(sc);
    std::vector<Bitset> stable_bits;
    stable_bits.reserve(stables.size());
    for (const auto& st : stables) stable_bits.push_back(to_bitset(s.order(), st));
    for_each_maximal_clique_containing(s, 0, [&](const std::vector<int>& c) {
      Bitset cb = to_bitset(s.order(), c);
      for (std::size_t i = 0; i < stables.size(); ++i) {
        if (!cb.intersects(stable_bits[i])) {
          r.witness = CISWitness{c, stables[i]};
          return false;
        }
      }
      return true;
    });
  }
  return r;
}

bool alpha_omega_bound(const Circulant& g) {
  SimpleGraph s = to_graph(g);
  return (i64)alpha(s) * omega(s) <= g.n;
}

AlmostCISReport almost_cis(const SimpleGraph& g) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "graph has no vertices");
  auto cliques = maximal_cliques(g);
  auto stables = maximal_stable_sets(g);
  std::vector<Bitset> stable_bits;
  stable_bits.reserve(stables.size());
  for (const auto& st : stables) stable_bits.push_back(to_bitset(g.order(), st));
  AlmostCISReport r;
  for (const auto& c : cliques) {
    Bitset cb = to_bitset(g.order(), c);
    for (std::size_t i = 0; i < stables.size(); ++i) {
      if (!cb.intersects(stable_bits[i])) {
        if (++r.disjoint_pairs == 1) r.unique_pair = CISWitness{c, stables[i]};
      }
    }
  }
  r.almost_cis = (r.disjoint_pairs == 1);
  if (!r.almost_cis) r.unique_pair.reset();
  return r;
}

bool is_split_with_unique_partition(const SimpleGraph& g) {
  int n = g.order();
  if (n == 0) throw Error(Errc::empty_graph, "graph has no vertices");
  if (n > 25) throw Error(Errc::cap_exceeded, "split partition count caps at 25 vertices");
  long long partitions = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        bool in_c = (mask >> u & 1) && (mask >> v & 1);
        bool in_s = !(mask >> u & 1) && !(mask >> v & 1);
        if (in_c && !g.has_edge(u, v)) ok = false;
        if (in_s && g.has_edge(u, v)) ok = false;
      }
    if (ok && ++partitions > 1) return false;
  }
  return partitions == 1;
}

std::string cis_report_json(const Circulant& g, const CISReport& r) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["D"] = g.distances.values();
  j["cis"] = r.is_cis;
  j["alpha"] = r.alpha;
  j["omega"] = r.omega;
  j["wc"] = r.well_covered;
  j["cowc"] = r.co_well_covered;
  if (r.witness) {
    nlohmann::ordered_json w;
    w["C"] = r.witness->clique;
    w["S"] = r.witness->stable;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

}  // namespace circis
