#include "circis/combs.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "circis/enumerate.hpp"
#include "circis/error.hpp"

namespace circis {

SimpleGraph build_comb(int k) {
  if (k < 1) throw Error(Errc::out_of_range, "comb needs k >= 1");
  SimpleGraph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(i, k + i);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(k + i, k + j);
  return g;
}

SimpleGraph build_settled_comb(int k) {
  if (k < 1) throw Error(Errc::out_of_range, "comb needs k >= 1");
  SimpleGraph b = build_comb(k);
  SimpleGraph g(2 * k + 1);
  for (auto [u, v] : b.edges()) g.add_edge(u, v);
  for (int i = 0; i < k; ++i) g.add_edge(2 * k, k + i);
  return g;
}

SimpleGraph build_anticomb(int k) { return build_comb(k).complement(); }

SimpleGraph build_settled_anticomb(int k) { return build_settled_comb(k).complement(); }

SimpleGraph bull_graph() { return build_settled_comb(2); }

SimpleGraph holzman_graph() {
  SimpleGraph g(15);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  for (int p = 0; p < 10; ++p)
    for (int q = p + 1; q < 10; ++q) g.add_edge(p, q);
  for (int p = 0; p < 10; ++p) {
    g.add_edge(p, 10 + pairs[p].first);
    g.add_edge(p, 10 + pairs[p].second);
  }
  return g;
}

namespace {

// all cliques of size exactly k, ascending vertex order
template <class F>
bool for_each_k_clique(const SimpleGraph& g, int k, F&& f) {
  int n = g.order();
  std::vector<int> cur;
  Bitset common(n);
  common.set();
  auto rec = [&](auto&& self, int start, const Bitset& cand) -> bool {
    if ((int)cur.size() == k) return f(cur);
    for (int v = start; v < n; ++v) {
      if (!cand.test(v)) continue;
      cur.push_back(v);
      if (!self(self, v + 1, cand & g.neighbors(v))) return false;
      cur.pop_back();
    }
    return true;
  };
  return rec(rec, 0, common);
}

// comb embeddings with the given clique side: one private stable neighbor
// per clique vertex, pairwise nonadjacent. f(stable_side) -> keep going.
template <class F>
bool for_each_comb_with_clique(const SimpleGraph& g, const std::vector<int>& clique, F&& f) {
  int n = g.order();
  int k = (int)clique.size();
  Bitset cb(n);
  for (int c : clique) cb.set(c);
  // candidates[i]: vertices outside the clique seeing exactly clique[i] in it
  std::vector<std::vector<int>> candidates(k);
  for (int s = 0; s < n; ++s) {
    if (cb.test(s)) continue;
    Bitset seen = g.neighbors(s) & cb;
    if (seen.count() != 1) continue;
    int c = (int)seen.find_first();
    candidates[std::find(clique.begin(), clique.end(), c) - clique.begin()].push_back(s);
  }
  std::vector<int> stable(k);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return f(stable);
    for (int s : candidates[i]) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = !g.has_edge(stable[j], s) && stable[j] != s;
      if (!ok) continue;
      stable[i] = s;
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

bool is_settled(const SimpleGraph& g, const std::vector<int>& stable,
                const std::vector<int>& clique) {
  int n = g.order();
  Bitset used(n);
  for (int v : stable) used.set(v);
  for (int v : clique) used.set(v);
  for (int v0 = 0; v0 < n; ++v0) {
    if (used.test(v0)) continue;
    bool ok = true;
    for (int c : clique)
      if (!g.has_edge(v0, c)) {
        ok = false;
        break;
      }
    for (int s : stable)
      if (ok && g.has_edge(v0, s)) ok = false;
    if (ok) return true;
  }
  return false;
}

void check_caps(const SimpleGraph& g, int k_max) {
  if (k_max < 2) throw Error(Errc::precondition_violated, "comb search needs k_max >= 2");
  if (k_max > 4) throw Error(Errc::cap_exceeded, "comb search capped at k_max = 4");
  if (g.order() > 16) throw Error(Errc::cap_exceeded, "comb search capped at 16 vertices");
}

}  // namespace

std::vector<CombViolation> find_unsettled(const SimpleGraph& g, int k_max) {
  check_caps(g, k_max);
  std::vector<CombViolation> out;
  SimpleGraph gc = g.complement();
  for (int kind = 0; kind < 2; ++kind) {
    const SimpleGraph& h = kind ? gc : g;
    for (int k = 2; k <= k_max; ++k) {
      for_each_k_clique(h, k, [&](const std::vector<int>& clique) {
        for_each_comb_with_clique(h, clique, [&](const std::vector<int>& stable) {
          if (!is_settled(h, stable, clique))
            out.push_back({kind == 1, CombEmbedding{stable, clique}});
          return true;
        });
        return true;
      });
    }
  }
  return out;
}

bool chvatal_sufficient(const SimpleGraph& g) {
  check_caps(g, 3);
  SimpleGraph gc = g.complement();
  // any induced 3-comb or 3-anticomb kills the condition outright
  const SimpleGraph* sides[] = {&g, &gc};
  for (const SimpleGraph* h : sides) {
    bool found = !for_each_k_clique(*h, 3, [&](const std::vector<int>& clique) {
      return for_each_comb_with_clique(*h, clique, [&](const std::vector<int>&) {
        return false;  // one embedding is enough
      });
    });
    if (found) return false;
  }
  bool ok = true;
  for_each_k_clique(g, 2, [&](const std::vector<int>& clique) {
    return for_each_comb_with_clique(g, clique, [&](const std::vector<int>& stable) {
      ok = is_settled(g, stable, clique);
      return ok;
    });
  });
  return ok;
}

SimpleGraph cis_extension(const SimpleGraph& g, bool economical) {
  int n = g.order();
  auto cliques = maximal_cliques(g);
  std::vector<std::vector<int>> to_extend;
  for (const auto& c : cliques) {
    if (economical) {
      Bitset cb(n);
      for (int v : c) cb.set(v);
      bool has_simplicial = false;
      for (int v : c) {
        Bitset closed = g.neighbors(v);
        closed.set(v);
        if (closed == cb) {
          has_simplicial = true;
          break;
        }
      }
      if (has_simplicial) continue;
    }
    to_extend.push_back(c);
  }
  SimpleGraph out(n + (int)to_extend.size());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (std::size_t i = 0; i < to_extend.size(); ++i)
    for (int v : to_extend[i]) out.add_edge(n + (int)i, v);
  return out;
}

std::string comb_violations_json(const std::vector<CombViolation>& violations) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json j;
    j["kind"] = v.anticomb ? "anticomb" : "comb";
    j["k"] = v.emb.clique_side.size();
    j["S"] = v.emb.stable_side;
    j["C"] = v.emb.clique_side;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

}  // namespace circis
