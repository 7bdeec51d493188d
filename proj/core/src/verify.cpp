#include "circis/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "circis/census.hpp"
#include "circis/cis.hpp"
#include "circis/combs.hpp"
#include "circis/enumerate.hpp"
#include "circis/error.hpp"
#include "circis/graph_io.hpp"
#include "circis/paired.hpp"

namespace circis {

namespace {

struct Checker {
  SuiteResult res;
  explicit Checker(std::string name) { res.name = std::move(name); }
  void add(const std::string& desc, long long instances, const std::string& cex) {
    if (cex.empty()) {
      res.lines.push_back("ok: " + desc + " [" + std::to_string(instances) + " checked]");
    } else {
      res.passed = false;
      res.lines.push_back("FAIL: " + desc + ": " + cex);
    }
  }
};

// ---- exhaustive generators ------------------------------------------------

std::vector<i64> half_mask_distances(i64 n, std::uint64_t mask) {
  std::vector<i64> ds;
  for (int i = 0; i < (int)(n / 2); ++i) {
    if (!(mask >> i & 1)) continue;
    i64 d = i + 1;
    ds.push_back(d);
    if (n - d != d) ds.push_back(n - d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

template <class F>
void for_each_circulant(i64 n_min, i64 n_max, F&& f) {
  for (i64 n = n_min; n <= n_max; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << (n / 2)); ++mask)
      f(Circulant{n, DistanceSet::full(n, half_mask_distances(n, mask))});
}

// unordered pairs of (a,b) blocks, n = lcm(a1 b1, a2 b2) <= lcm_max
template <class F>
void for_each_two_pair_lcm_spec(i64 lcm_max, F&& f) {
  std::vector<std::pair<i64, i64>> ps;
  for (i64 a = 1; a <= lcm_max; ++a)
    for (i64 b = 1; a * b <= lcm_max; ++b) ps.emplace_back(a, b);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i; j < ps.size(); ++j) {
      i64 n = std::lcm(ps[i].first * ps[i].second, ps[j].first * ps[j].second);
      if (n > lcm_max) continue;
      f(make_paired(n, {ps[i], ps[j]}));
    }
}

std::vector<std::pair<i64, i64>> one_pair_options(i64 n) {
  std::vector<std::pair<i64, i64>> out;
  for (i64 m : divisors(n))
    for (i64 a : divisors(m)) out.emplace_back(a, m / a);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- seeded random generators ---------------------------------------------

SimpleGraph random_graph(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit(rng) < p) g.add_edge(u, v);
  return g;
}

Circulant random_circulant(std::mt19937& rng, i64 n_max) {
  i64 n = std::uniform_int_distribution<i64>(1, n_max)(rng);
  std::uint64_t mask =
      std::uniform_int_distribution<std::uint64_t>(0, (1ull << (n / 2)) - 1)(rng);
  return Circulant{n, DistanceSet::full(n, half_mask_distances(n, mask))};
}

SimpleGraph random_cograph(std::mt19937& rng, int n) {
  if (n <= 1) return SimpleGraph(std::max(n, 1));
  int n1 = std::uniform_int_distribution<int>(1, n - 1)(rng);
  SimpleGraph g1 = random_cograph(rng, n1);
  SimpleGraph g2 = random_cograph(rng, n - n1);
  SimpleGraph g(n);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  if (std::uniform_int_distribution<int>(0, 1)(rng)) {
    for (int u = 0; u < n1; ++u)
      for (int v = n1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

PairedSpec random_paired_spec(std::mt19937& rng, i64 n_max, int k_max) {
  i64 n = std::uniform_int_distribution<i64>(1, n_max)(rng);
  auto opts = one_pair_options(n);
  int k = std::uniform_int_distribution<int>(0, k_max)(rng);
  std::vector<std::pair<i64, i64>> pairs;
  for (int i = 0; i < k; ++i)
    pairs.push_back(opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)]);
  return make_paired(n, std::move(pairs));
}

// ---- small independent oracles (kept deliberately naive) -------------------

std::set<std::vector<int>> brute_maximal_cliques(const SimpleGraph& g) {
  int n = g.order();
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < verts.size() && clique; ++i)
      for (std::size_t j = i + 1; j < verts.size() && clique; ++j)
        clique = g.has_edge(verts[i], verts[j]);
    if (!clique) continue;
    bool maximal = true;
    for (int w = 0; w < n && maximal; ++w) {
      if (mask >> w & 1) continue;
      bool all = true;
      for (int v : verts)
        if (!g.has_edge(w, v)) {
          all = false;
          break;
        }
      maximal = !all;
    }
    if (maximal) out.insert(verts);
  }
  return out;
}

int bfs_component_count(const SimpleGraph& g) {
  int n = g.order(), count = 0;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (g.has_edge(u, v) && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return count;
}

bool bfs_bipartite(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (!g.has_edge(u, v)) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool brute_p4_free(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> v(4);
  for (v[0] = 0; v[0] < n; ++v[0])
    for (v[1] = v[0] + 1; v[1] < n; ++v[1])
      for (v[2] = v[1] + 1; v[2] < n; ++v[2])
        for (v[3] = v[2] + 1; v[3] < n; ++v[3]) {
          // is the induced subgraph on these 4 vertices a path?
          int deg[4] = {0, 0, 0, 0}, edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.has_edge(v[i], v[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
          if (edges != 3) continue;
          int ones = 0, twos = 0;
          for (int i = 0; i < 4; ++i) {
            if (deg[i] == 1) ++ones;
            if (deg[i] == 2) ++twos;
          }
          if (ones == 2 && twos == 2) return false;
        }
  return true;
}

bool isomorphic_small(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order()) return false;
  int n = a.order();
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        ok = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---- shared describe helpers ----------------------------------------------

std::string show_verts(const std::vector<int>& vs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << "}";
  return os.str();
}

bool reports_agree(const CISReport& a, const CISReport& b) {
  return a.is_cis == b.is_cis && a.alpha == b.alpha && a.omega == b.omega &&
         a.well_covered == b.well_covered && a.co_well_covered == b.co_well_covered;
}

bool witness_valid(const SimpleGraph& g, const CISReport& r) {
  if (r.is_cis) return !r.witness.has_value();
  if (!r.witness) return false;
  const auto& w = *r.witness;
  for (int c : w.clique)
    for (int s : w.stable)
      if (c == s) return false;
  return is_maximal_clique(g, w.clique) && is_maximal_stable_set(g, w.stable);
}

// ---- suites -----------------------------------------------------------------

SuiteResult suite_theorem_2_1(const VerifyBounds& bounds) {
  i64 n_max = bounds.n_max ? bounds.n_max : 20;
  Checker ck("theorem-2-1");
  long long count = 0;
  std::string cex, wex, eqx;
  for_each_circulant(1, n_max, [&](const Circulant& g) {
    if (!cex.empty() && !wex.empty() && !eqx.empty()) return;
    ++count;
    SimpleGraph s = to_graph(g);
    CISReport fast = is_cis_circulant(g);
    CISReport brute = is_cis_bruteforce(s);
    if (cex.empty() && !reports_agree(fast, brute)) cex = format_circulant(g);
    if (wex.empty() && !(witness_valid(s, fast) && witness_valid(s, brute)))
      wex = format_circulant(g);
    // Theorem 2.1, both directions, on the brute-force report
    bool thm = brute.well_covered && brute.co_well_covered && (i64)brute.alpha * brute.omega == g.n;
    if (eqx.empty() && brute.is_cis != thm) eqx = format_circulant(g);
  });
  ck.add("is_cis_circulant agrees with is_cis_bruteforce on all circulants of order <= " +
             std::to_string(n_max),
         count, cex);
  ck.add("witnesses are valid disjoint maximal pairs exactly when not CIS", count, wex);
  ck.add("CIS <=> well-covered and co-well-covered and alpha*omega = n (Thm 2.1)", count, eqx);
  return ck.res;
}

SuiteResult suite_alpha_omega(const VerifyBounds& bounds) {
  i64 n_max = bounds.n_max ? bounds.n_max : 14;
  Checker ck("alpha-omega");
  long long count = 0;
  std::string cex;
  for_each_circulant(1, n_max, [&](const Circulant& g) {
    if (!cex.empty()) return;
    ++count;
    if (!alpha_omega_bound(g)) cex = format_circulant(g);
  });
  ck.add("alpha*omega <= n on all circulants of order <= " + std::to_string(n_max), count, cex);
  return ck.res;
}

SuiteResult suite_two_paired(const VerifyBounds& bounds) {
  i64 lcm_max = bounds.lcm_max ? bounds.lcm_max : 60;
  Checker ck("two-paired");
  long long count = 0;
  std::string cex;
  for_each_two_pair_lcm_spec(lcm_max, [&](const PairedSpec& spec) {
    if (!cex.empty()) return;
    if (paired_component_count(spec) != 1 || !paired_is_co_connected(spec)) return;
    ++count;
    bool formula = is_cis_2paired(spec);
    bool brute = is_cis_bruteforce(to_graph(realize(spec))).is_cis;
    if (formula != brute) cex = format_paired(spec);
  });
  ck.add("Thm 3.4: CIS <=> gcd(a1 b1, a2 b2) = 1 on connected co-connected 2-paired specs, lcm <= " +
             std::to_string(lcm_max),
         count, cex);
  return ck.res;
}

SuiteResult suite_clique_formulas(const VerifyBounds& bounds) {
  i64 lcm_max = bounds.lcm_max ? bounds.lcm_max : 48;
  Checker ck("clique-formulas");
  long long count = 0, triple_count = 0;
  std::string cls_cex, size_cex, cor43_cex, cor46_cex, p47_cex, p48_cex;
  for_each_two_pair_lcm_spec(lcm_max, [&](const PairedSpec& spec) {
    ++count;
    i64 a1 = spec.pairs[0].first, b1 = spec.pairs[0].second;
    i64 a2 = spec.pairs[1].first, b2 = spec.pairs[1].second;
    auto [f1, f2] = clique_size_formulas(spec);
    Circulant realized = realize(spec);
    SimpleGraph g = to_graph(realized);
    // aI | n, so "all pairwise differences divisible by aI" = "single residue
    // class mod aI"
    auto residue = [](const std::vector<int>& c, i64 m) -> i64 {
      i64 r = mod_norm(c[0], m);
      for (int v : c)
        if (mod_norm(v, m) != r) return -1;
      return r;
    };
    bool uniform = true;
    bool realized1 = false, realized2 = false;  // class has a maximal clique of G
    i64 cc = component_count(complement_circulant(realized));
    if (cc == 1) {
      std::size_t first_size = 0;
      bool any_clique = false;
      for_each_maximal_clique(g, [&](const std::vector<int>& c) {
        if (!any_clique) {
          any_clique = true;
          first_size = c.size();
        }
        i64 r1 = residue(c, a1), r2 = residue(c, a2);
        realized1 = realized1 || r1 >= 0;
        realized2 = realized2 || r2 >= 0;
        if (r1 < 0 && r2 < 0 && cls_cex.empty())
          cls_cex = format_paired(spec) + " clique " + show_verts(c);
        if (((r1 >= 0 && (i64)c.size() != f1) || (r2 >= 0 && (i64)c.size() != f2)) &&
            size_cex.empty())
          size_cex = format_paired(spec) + " clique " + show_verts(c);
        uniform = uniform && c.size() == first_size;
        return true;
      });
    } else {
      // complement splits into cc isomorphic components (the cosets mod cc),
      // so G is a join of cc parts and its maximal cliques are exactly the
      // products of per-part maximal cliques: 2^24 of them for specs like
      // C(48;1,24;16,1). Verify through part-0 statistics instead. Part j is
      // part 0 shifted by j, so part-0 data covers every slot.
      std::vector<i64> dp;
      for (i64 d : realized.distances.values())
        if (d % cc == 0) dp.push_back(d / cc);
      SimpleGraph part =
          to_graph(Circulant{spec.n / cc, DistanceSet::full(spec.n / cc, dp)});
      // per-side residue histograms over part-0 cliques (original label cc*t)
      struct Side {
        i64 a = 1;
        std::vector<char> exists;
        std::vector<i64> minsz, maxsz;
      };
      Side sides[2];
      for (int i = 0; i < 2; ++i) {
        sides[i].a = i == 0 ? a1 : a2;
        sides[i].exists.assign(sides[i].a, 0);
        sides[i].minsz.assign(sides[i].a, 0);
        sides[i].maxsz.assign(sides[i].a, 0);
      }
      i64 min0 = -1, max0 = -1;
      for_each_maximal_clique(part, [&](const std::vector<int>& t) {
        std::vector<int> orig;
        orig.reserve(t.size());
        for (int v : t) orig.push_back((int)(cc * (i64)v));
        i64 sz = (i64)t.size();
        if (min0 < 0 || sz < min0) min0 = sz;
        max0 = std::max(max0, sz);
        for (Side& s : sides) {
          i64 r = residue(orig, s.a);
          if (r < 0) continue;
          if (!s.exists[r]) {
            s.exists[r] = 1;
            s.minsz[r] = s.maxsz[r] = sz;
          } else {
            s.minsz[r] = std::min(s.minsz[r], sz);
            s.maxsz[r] = std::max(s.maxsz[r], sz);
          }
        }
        return true;
      });
      uniform = min0 == max0;
      // Prop 4.1 on a join: the same part clique placed in two adjacent
      // cosets shifts its residue by 1 mod each aI, so with a1,a2 >= 2 some
      // product clique misses both classes; the join case must have aI = 1
      if (a1 != 1 && a2 != 1 && cls_cex.empty())
        cls_cex = format_paired(spec) + " join of " + std::to_string(cc) +
                  " parts with a1,a2 >= 2";
      for (int i = 0; i < 2; ++i) {
        const Side& s = sides[i];
        i64 fi = i == 0 ? f1 : f2;
        for (i64 r = 0; r < s.a; ++r) {
          i64 lo = 0, hi = 0;
          bool aligned = true;
          for (i64 j = 0; j < cc && aligned; ++j) {
            i64 rho = mod_norm(r - j, s.a);
            aligned = s.exists[rho];
            lo += s.minsz[rho];
            hi += s.maxsz[rho];
          }
          if (!aligned) continue;
          (i == 0 ? realized1 : realized2) = true;
          if ((lo != fi || hi != fi) && size_cex.empty())
            size_cex = format_paired(spec) + " a" + std::to_string(i + 1) +
                       "-clique sizes " + std::to_string(lo) + ".." + std::to_string(hi);
        }
      }
    }
    // Cor 4.3 forward direction presumes both clique classes are realized by
    // maximal cliques of G; degenerate specs break that, e.g. C(2;1,2;2,1) =
    // K2 (empty a2 block) or C(4;1,2;2,2) = K4 (maximal a2-cliques swallowed
    // by the a1 class) are uniform even though the gcds differ. The reverse
    // direction holds unconditionally.
    bool gcd_eq = std::gcd(a2, a1 * b1) == std::gcd(a1, a2 * b2);
    bool cor43_bad =
        (gcd_eq && !uniform) || (uniform && realized1 && realized2 && !gcd_eq);
    if (cor43_bad && cor43_cex.empty()) cor43_cex = format_paired(spec);
    // maximal stable sets of a disjoint union are products over components and
    // all components are isomorphic, so min/max sizes scale from one component
    // (sparse specs like C(48;24,2;24,2) have 2^24 maximal stables otherwise)
    i64 c = component_count(realized);
    SimpleGraph comp_co = to_graph(component_subgraph(realized)).complement();
    i64 min_s = 0, max_s = 0;
    for_each_maximal_clique(comp_co, [&](const std::vector<int>& s) {
      i64 sz = (i64)s.size();
      if (min_s == 0 || sz < min_s) min_s = sz;
      max_s = std::max(max_s, sz);
      return true;
    });
    if (c * max_s > a1 * a2 && cor46_cex.empty())
      cor46_cex = format_paired(spec) + " stable of size " + std::to_string(c * max_s);
    if (std::gcd(a1 * b1, a2 * b2) == 1 && (c * min_s != a1 * a2 || c * max_s != a1 * a2) &&
        p47_cex.empty())
      p47_cex = format_paired(spec) + " stable sizes " + std::to_string(c * min_s) + ".." +
                std::to_string(c * max_s);
    // Prop 4.8 on qualifying specs
    std::vector<i64> triple;
    try {
      triple = blocking_stable_triple(spec);
    } catch (const Error& e) {
      if (e.code() != Errc::precondition_violated) throw;
      return;
    }
    ++triple_count;
    std::vector<int> tv(triple.begin(), triple.end());
    for (std::size_t i = 0; i < tv.size() && p48_cex.empty(); ++i)
      for (std::size_t j = i + 1; j < tv.size() && p48_cex.empty(); ++j)
        if (tv[i] == tv[j] || g.has_edge(tv[i], tv[j]))
          p48_cex = format_paired(spec) + " triple not stable " + show_verts(tv);
    if (p48_cex.empty()) {
      SimpleGraph gc = g.complement();
      for_each_maximal_clique_containing_set(gc, tv, [&](const std::vector<int>& s) {
        if ((i64)s.size() >= a1 * a2) {
          p48_cex = format_paired(spec) + " superset " + show_verts(s);
          return false;
        }
        return true;
      });
    }
  });
  ck.add("Prop 4.1: every maximal clique is an a1- or a2-clique (lcm <= " +
             std::to_string(lcm_max) + ")",
         count, cls_cex);
  ck.add("Prop 4.2: maximal a1-/a2-clique sizes match the formulas", count, size_cex);
  ck.add("Cor 4.3: uniform clique sizes iff gcd(a2,a1b1) = gcd(a1,a2b2), both classes realized",
         count, cor43_cex);
  ck.add("Cor 4.6: every maximal stable set has size <= a1*a2", count, cor46_cex);
  ck.add("Prop 4.7: size exactly a1*a2 when gcd(a1b1,a2b2) = 1", count, p47_cex);
  ck.add("Prop 4.8: blocking triple stable, maximal supersets below a1*a2", triple_count, p48_cex);
  return ck.res;
}

SuiteResult suite_lex_product(const VerifyBounds& bounds) {
  i64 n_max = bounds.n_max ? bounds.n_max : 12;
  Checker ck("lex-product");
  std::mt19937 rng(bounds.seed);

  // formula-level product vs adjacency-level product, under the documented
  // identification w = u + x*n  <->  flattened u*m + x
  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 200; ++trial) {
      Circulant g = random_circulant(rng, n_max);
      Circulant h = random_circulant(rng, n_max);
      ++count;
      Circulant prod = lex_product(g, h);
      SimpleGraph sp = to_graph(prod);
      SimpleGraph pg = lex_product_graph(to_graph(g), to_graph(h));
      i64 n = g.n, m = h.n;
      auto map = [&](i64 w) { return (int)((w % n) * m + w / n); };
      bool ok = true;
      for (i64 u = 0; u < n * m && ok; ++u)
        for (i64 v = u + 1; v < n * m && ok; ++v)
          ok = sp.has_edge((int)u, (int)v) == pg.has_edge(map(u), map(v));
      if (!ok && cex.empty()) cex = format_circulant(g) + " x " + format_circulant(h);
    }
    ck.add("Prop 1.5 distance-set product equals graph-level product (orders <= " +
               std::to_string(n_max) + ")",
           count, cex);
  }

  // complement law, exhaustive on all labeled pairs with <= 5 vertices
  {
    std::vector<SimpleGraph> all;
    for (int n = 1; n <= 5; ++n) {
      int bits = n * (n - 1) / 2;
      for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        SimpleGraph g(n);
        int b = 0;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v, ++b)
            if (mask >> b & 1) g.add_edge(u, v);
        all.push_back(std::move(g));
      }
    }
    std::vector<SimpleGraph> comp;
    comp.reserve(all.size());
    for (const auto& g : all) comp.push_back(g.complement());
    long long count = 0;
    std::string cex;
    for (std::size_t i = 0; i < all.size() && cex.empty(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        ++count;
        if (lex_product_graph(all[i], all[j]).complement() !=
            lex_product_graph(comp[i], comp[j])) {
          cex = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
      }
    ck.add("complement(G[H]) = complement(G)[complement(H)], all labeled pairs <= 5 vertices",
           count, cex);
  }

  // Prop 3.4 paired product: exhaustive k <= 1 spec pairs of orders <= 20,
  // plus a seeded sample of deeper specs
  {
    std::vector<PairedSpec> specs;
    for (i64 n = 1; n <= 20; ++n) {
      specs.push_back(make_paired(n, {}));
      for (auto [a, b] : one_pair_options(n)) specs.push_back(make_paired(n, {{a, b}}));
    }
    long long count = 0;
    std::string cex;
    auto check_pair = [&](const PairedSpec& g, const PairedSpec& h) {
      ++count;
      Circulant lhs = realize(paired_lex_product(g, h));
      Circulant rhs = lex_product(realize(g), realize(h));
      if (!(lhs == rhs) && cex.empty()) cex = format_paired(g) + " x " + format_paired(h);
    };
    for (const auto& g : specs)
      for (const auto& h : specs) {
        if (!cex.empty()) break;
        check_pair(g, h);
      }
    for (int trial = 0; trial < 200 && cex.empty(); ++trial)
      check_pair(random_paired_spec(rng, 20, 3), random_paired_spec(rng, 20, 3));
    ck.add("Prop 3.4: paired_lex_product realizes the lex product (k <= 1 exhaustive + sampled)",
           count, cex);
  }
  return ck.res;
}

SuiteResult suite_p4_free(const VerifyBounds& bounds) {
  i64 n_max = bounds.n_max ? bounds.n_max : 30;
  Checker ck("p4-free");
  std::mt19937 rng(bounds.seed);

  {
    long long count = 0;
    std::string cex;
    for (i64 n = 1; n <= n_max && cex.empty(); ++n)
      for (auto [a, b] : one_pair_options(n)) {
        ++count;
        PairedSpec spec = make_paired(n, {{a, b}});
        Circulant g = realize(spec);
        if (!is_p4_free(to_graph(g)) || !is_cis_circulant(g).is_cis) {
          cex = format_paired(spec);
          break;
        }
      }
    ck.add("Prop 5.3 / Thm 3.2: 1-paired circulants of order <= " + std::to_string(n_max) +
               " are P4-free and CIS",
           count, cex);
  }

  {
    i64 rec_max = std::min<i64>(n_max, 24);
    long long count = 0;
    std::string cex;
    for_each_circulant(1, rec_max, [&](const Circulant& g) {
      if (!cex.empty()) return;
      if (!is_p4_free(to_graph(g))) return;
      ++count;
      if (!recognize_paired(g, 8)) cex = format_circulant(g);
    });
    ck.add("Thm 5.4: every P4-free circulant of order <= " + std::to_string(rec_max) +
               " is recognized as paired",
           count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    // exhaustive k <= 2 specs
    for (i64 n = 1; n <= n_max && cex.empty(); ++n) {
      auto opts = one_pair_options(n);
      std::vector<PairedSpec> specs;
      specs.push_back(make_paired(n, {}));
      for (std::size_t i = 0; i < opts.size(); ++i) {
        specs.push_back(make_paired(n, {opts[i]}));
        for (std::size_t j = i; j < opts.size(); ++j)
          specs.push_back(make_paired(n, {opts[i], opts[j]}));
      }
      for (const auto& spec : specs) {
        ++count;
        if (is_p4_free_paired(spec) != is_p4_free(to_graph(realize(spec)))) {
          cex = format_paired(spec);
          break;
        }
      }
    }
    for (int trial = 0; trial < 200 && cex.empty(); ++trial) {
      PairedSpec spec = random_paired_spec(rng, n_max, 4);
      ++count;
      if (is_p4_free_paired(spec) != is_p4_free(to_graph(realize(spec))))
        cex = format_paired(spec);
    }
    ck.add("is_p4_free_paired agrees with the cograph test (k <= 2 exhaustive + sampled, n <= " +
               std::to_string(n_max) + ")",
           count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 500 && cex.empty(); ++trial) {
      int n = std::uniform_int_distribution<int>(1, 10)(rng);
      SimpleGraph g = trial % 3 == 0 ? random_cograph(rng, n) : random_graph(rng, n);
      ++count;
      if (is_p4_free(g) != brute_p4_free(g)) cex = to_graph6(g);
    }
    ck.add("is_p4_free agrees with the induced-P4 scan on random graphs (n <= 10)", count, cex);
  }

  {
    // G_n battery (Prop 5.5)
    std::string cex;
    long long count = 0;
    auto expect = [&](bool ok, const std::string& what) {
      ++count;
      if (!ok && cex.empty()) cex = what;
    };
    PairedSpec g1 = gn_family(1);
    expect(g1 == make_paired(6, {{1, 2}}), "gn(1) spec");
    expect(realize(g1) == make_circulant(6, {1, 3, 5}), "gn(1) distance set");
    PairedSpec g2 = gn_family(2);
    expect(g2 == make_paired(210, {{35, 2}, {1, 5}}), "gn(2) spec");
    expect(is_p4_free_paired(g2), "gn(2) P4-free");
    Circulant g2c = realize(g2);
    expect(!recognize_paired(g2c, 1).has_value(), "gn(2) not 1-paired by cover search");
    auto rec2 = recognize_paired(g2c, 2);
    expect(rec2.has_value() && rec2->k() == 2, "gn(2) recognized as 2-paired");
    PairedSpec prod = paired_lex_product(make_paired(35, {{1, 5}}), make_paired(6, {{1, 2}}));
    auto sorted_pairs = [](PairedSpec s) {
      std::sort(s.pairs.begin(), s.pairs.end());
      return s;
    };
    expect(sorted_pairs(prod) == sorted_pairs(g2) && realize(prod) == g2c,
           "gn(2) = C(35;1,5)[C(6;1,2)] up to pair order");
    // Muzychuk: no multiplier maps a 1-paired distance set of order 210 onto
    // D(gn(2)); order is square-free, so gn(2) is not isomorphic to any
    // 1-paired circulant
    {
      bool clean = true;
      std::string bad;
      for (auto [a, b] : one_pair_options(210)) {
        Circulant c = realize(make_paired(210, {{a, b}}));
        if (cayley_multiplier(c, g2c).has_value()) {
          clean = false;
          bad = format_paired(make_paired(210, {{a, b}}));
          break;
        }
      }
      expect(clean, "gn(2) multiplier-isomorphic to " + bad);
    }
    PairedSpec g3 = gn_family(3);
    expect(g3 == make_paired(30030, {{5005, 2}, {143, 5}, {1, 11}}), "gn(3) spec");
    expect(is_p4_free_paired(g3), "gn(3) P4-free by spec recursion");
    bool threw = false;
    try {
      gn_family(4);
    } catch (const Error& e) {
      threw = e.code() == Errc::cap_exceeded;
    }
    expect(threw, "gn(4) raises the cap error");
    ck.add("Prop 5.5 G_n family battery", count, cex);
  }
  return ck.res;
}

SuiteResult suite_appendix(const VerifyBounds& bounds) {
  Checker ck("appendix");
  std::mt19937 rng(bounds.seed);

  {
    long long count = 0;
    std::string cex;
    for (int k = 1; k <= 8; ++k) {
      ++count;
      SimpleGraph b = build_comb(k);
      if (b.edge_count() != (std::size_t)(k * (k + 1) / 2) ||
          build_anticomb(k) != b.complement()) {
        cex = "k=" + std::to_string(k);
        break;
      }
    }
    ck.add("comb edge count k(k+1)/2 and anticomb complement identity, k <= 8", count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int k = 1; k <= 6 && cex.empty(); ++k) {
      ++count;
      if (!is_cis_bruteforce(build_settled_comb(k)).is_cis) cex = "settled comb k=" + std::to_string(k);
      if (!is_cis_bruteforce(build_settled_anticomb(k)).is_cis)
        cex = "settled anticomb k=" + std::to_string(k);
    }
    ck.add("settled combs and anticombs are CIS, k <= 6", count, cex);
  }

  {
    std::string cex;
    long long count = 0;
    auto expect = [&](bool ok, const std::string& what) {
      ++count;
      if (!ok && cex.empty()) cex = what;
    };
    SimpleGraph p4 = path_graph(4);
    CISReport p4rep = is_cis_bruteforce(p4);
    expect(!p4rep.is_cis, "P4 not CIS");
    AlmostCISReport almost = almost_cis(p4);
    expect(almost.almost_cis && almost.unique_pair &&
               almost.unique_pair->clique == std::vector<int>{1, 2} &&
               almost.unique_pair->stable == std::vector<int>{0, 3},
           "P4 unique disjoint pair is midpoints vs endpoints");
    expect(is_cis_bruteforce(bull_graph()).is_cis, "bull graph CIS");
    expect(almost_cis(bull_graph()).disjoint_pairs == 0, "bull graph has no disjoint pair");
    expect(bull_graph() == build_settled_comb(2), "bull graph is the settled 2-comb");
    // complement(P4) = P4, so the unsettled 2-comb shows up on both sides
    auto p4viol = find_unsettled(p4, 2);
    int combs = 0, anticombs = 0;
    for (const auto& v : p4viol) (v.anticomb ? anticombs : combs) += 1;
    expect(combs == 1 && anticombs == 1, "P4 has one unsettled 2-comb and one 2-anticomb");
    expect(find_unsettled(bull_graph(), 3).empty(), "bull graph fully settled to k = 3");
    SimpleGraph holz = holzman_graph();
    expect(holz.order() == 15, "Holzman graph order 15");
    bool cross_deg_ok = true;
    for (int p = 0; p < 10; ++p) {
      int cd = 0;
      for (int k = 10; k < 15; ++k) cd += holz.has_edge(p, k) ? 1 : 0;
      cross_deg_ok = cross_deg_ok && cd == 2;
    }
    expect(cross_deg_ok, "Holzman pair vertices have cross-degree 2");
    expect(find_unsettled(holz, 4).empty(), "Holzman graph: all combs/anticombs settled (k <= 4)");
    expect(!is_cis_bruteforce(holz).is_cis, "Holzman graph is not CIS");
    expect(chvatal_sufficient(build_comb(2)) == false, "P4 fails the Chvatal condition");
    expect(chvatal_sufficient(build_settled_comb(3)) == false,
           "settled 3-comb fails the Chvatal condition (contains a 3-comb)");
    expect(is_cis_bruteforce(build_settled_comb(3)).is_cis, "settled 3-comb is CIS regardless");
    expect(chvatal_sufficient(random_cograph(rng, 8)), "cographs pass the Chvatal condition");
    SimpleGraph p4ext = cis_extension(p4, true);
    expect(p4ext.order() == 5 && isomorphic_small(p4ext, bull_graph()),
           "economical CIS extension of P4 is the bull graph");
    SimpleGraph k4 = complete_graph(4);
    expect(cis_extension(k4, true) == k4, "economical extension leaves K_n unchanged");
    expect(cis_extension(k4, false) == complete_graph(5), "full extension of K_4 is K_5");
    SimpleGraph c5ext = cis_extension(cycle_graph(5), false);
    expect(c5ext.order() == 10 && is_cis_bruteforce(c5ext).is_cis,
           "extension of C5 has 10 vertices and is CIS");
    ck.add("appendix named-graph battery", count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 500 && cex.empty(); ++trial) {
      int n = std::uniform_int_distribution<int>(1, 9)(rng);
      SimpleGraph g = random_graph(rng, n);
      ++count;
      if (chvatal_sufficient(g) && !is_cis_bruteforce(g).is_cis) cex = to_graph6(g);
    }
    ck.add("Chvatal condition implies CIS on random graphs n <= 9", count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 200 && cex.empty(); ++trial) {
      int n = std::uniform_int_distribution<int>(1, 7)(rng);
      SimpleGraph g = random_graph(rng, n);
      ++count;
      bool economical = trial % 2 == 0;
      SimpleGraph ext = cis_extension(g, economical);
      if (!is_cis_bruteforce(ext).is_cis) cex = to_graph6(g);
    }
    ck.add("cis_extension output is CIS on random graphs n <= 7", count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int n = 1; n <= 6 && cex.empty(); ++n) {
      int bits = n * (n - 1) / 2;
      for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        SimpleGraph g(n);
        int b = 0;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v, ++b)
            if (mask >> b & 1) g.add_edge(u, v);
        ++count;
        if (almost_cis(g).almost_cis != is_split_with_unique_partition(g)) {
          cex = to_graph6(g);
          break;
        }
      }
    }
    ck.add("WZZ: almost CIS <=> split with unique partition, all labeled graphs n <= 6", count,
           cex);
  }
  return ck.res;
}

SuiteResult suite_closure(const VerifyBounds& bounds) {
  Checker ck("closure");
  std::mt19937 rng(bounds.seed);

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 500 && cex.empty(); ++trial) {
      int n = std::uniform_int_distribution<int>(1, 9)(rng);
      SimpleGraph g = random_graph(rng, n);
      ++count;
      if (is_cis_bruteforce(g).is_cis != is_cis_bruteforce(g.complement()).is_cis)
        cex = to_graph6(g);
    }
    ck.add("Lemma 1.6: CIS is closed under complement (random n <= 9)", count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 200 && cex.empty(); ++trial) {
      int ng = std::uniform_int_distribution<int>(1, 6)(rng);
      int nh = std::uniform_int_distribution<int>(1, 24 / ng)(rng);
      SimpleGraph g = random_graph(rng, ng), h = random_graph(rng, nh);
      ++count;
      bool whole = is_cis_bruteforce(lex_product_graph(g, h)).is_cis;
      bool parts = is_cis_bruteforce(g).is_cis && is_cis_bruteforce(h).is_cis;
      if (whole != parts) cex = to_graph6(g) + " , " + to_graph6(h);
    }
    ck.add("Cor 1.8: G[H] CIS iff G and H CIS (random pairs, |V| product <= 24)", count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 200 && cex.empty(); ++trial) {
      int n1 = std::uniform_int_distribution<int>(1, 5)(rng);
      int n2 = std::uniform_int_distribution<int>(1, 5)(rng);
      SimpleGraph g1 = random_graph(rng, n1), g2 = random_graph(rng, n2);
      SimpleGraph g(n1 + n2);
      for (auto [u, v] : g1.edges()) g.add_edge(u, v);
      for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
      ++count;
      bool whole = is_cis_bruteforce(g).is_cis;
      bool parts = true;
      for (const auto& comp : connected_components(g))
        parts = parts && is_cis_bruteforce(g.induced_subgraph(comp)).is_cis;
      if (whole != parts) cex = to_graph6(g);
    }
    ck.add("Prop 1.9: disconnected graph CIS iff every component CIS (random n <= 10)", count,
           cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 500 && cex.empty(); ++trial) {
      int n = std::uniform_int_distribution<int>(1, 10)(rng);
      SimpleGraph g = random_cograph(rng, n);
      ++count;
      if (!is_p4_free(g) || !is_cis_bruteforce(g).is_cis) cex = to_graph6(g);
    }
    ck.add("Prop 1.10: random cographs are P4-free and CIS (n <= 10)", count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 200 && cex.empty(); ++trial) {
      Circulant g = random_circulant(rng, 16);
      ++count;
      SimpleGraph s = to_graph(g);
      if (!(complement_circulant(complement_circulant(g)) == g))
        cex = format_circulant(g) + " double complement";
      else if (component_count(g) != bfs_component_count(s))
        cex = format_circulant(g) + " components";
      else if (is_bipartite(g) != bfs_bipartite(s))
        cex = format_circulant(g) + " bipartite";
      else if (to_graph(complement_circulant(g)) != s.complement())
        cex = format_circulant(g) + " complement realization";
    }
    ck.add("circulant core vs oracles: double complement, components, bipartite (n <= 16)", count,
           cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 500 && cex.empty(); ++trial) {
      int n = std::uniform_int_distribution<int>(1, 10)(rng);
      SimpleGraph g = random_graph(rng, n);
      ++count;
      auto fast = maximal_cliques(g);
      std::set<std::vector<int>> got(fast.begin(), fast.end());
      if (got.size() != fast.size() || got != brute_maximal_cliques(g)) cex = to_graph6(g);
    }
    ck.add("Bron-Kerbosch output equals the all-subsets oracle (random n <= 10)", count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for (int trial = 0; trial < 1000 && cex.empty(); ++trial) {
      i64 n = std::uniform_int_distribution<i64>(1, 60)(rng);
      std::vector<i64> verts;
      for (i64 v = 0; v < n; ++v)
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) verts.push_back(v);
      if (verts.empty()) verts.push_back(std::uniform_int_distribution<i64>(0, n - 1)(rng));
      ++count;
      GapDecomposition d = gap_sequence(verts, n);
      if (generate(d.gaps, d.base, n) != verts)
        cex = "n=" + std::to_string(n) + " set " +
              show_verts(std::vector<int>(verts.begin(), verts.end()));
    }
    ck.add("generate(gap_sequence(X)) = X on random subsets", count, cex);
  }

  {
    long long count = 0;
    std::string cex;
    for_each_circulant(1, 14, [&](const Circulant& g) {
      if (!cex.empty()) return;
      ++count;
      SimpleGraph s = to_graph(g);
      auto cliques = maximal_cliques(s);
      std::set<std::vector<int>> all(cliques.begin(), cliques.end());
      for (const auto& c : cliques) {
        std::vector<int> shifted;
        for (int v : c) shifted.push_back((int)mod_norm(v + 1, g.n));
        std::sort(shifted.begin(), shifted.end());
        if (!all.count(shifted)) {
          cex = format_circulant(g) + " clique " + show_verts(c);
          break;
        }
      }
    });
    ck.add("maximal cliques of circulants are rotation-closed (n <= 14)", count, cex);
  }
  return ck.res;
}

// ---- fixtures ---------------------------------------------------------------

std::vector<i64> rep_seq(std::vector<i64> block, int p) {
  std::vector<i64> out;
  for (int i = 0; i < p; ++i) out.insert(out.end(), block.begin(), block.end());
  return out;
}

std::vector<std::vector<i64>> canon_table(std::vector<std::vector<i64>> seqs) {
  std::set<std::vector<i64>> s;
  for (auto& q : seqs) s.insert(canonical_rotation(std::move(q)));
  return {s.begin(), s.end()};
}

struct FixtureExample {
  PairedSpec spec;
  std::vector<i64> distance_set;
  std::vector<std::vector<i64>> clique_classes;
  std::vector<std::vector<i64>> stable_classes;
  i64 clique_size_lo, clique_size_hi;  // equal when uniform
  i64 stable_size;
  bool cis;
};

}  // namespace

SuiteResult run_fixtures() {
  Checker ck("fixtures");

  std::vector<FixtureExample> examples;
  examples.push_back(FixtureExample{
      make_paired(12, {{2, 2}, {3, 2}}),
      {2, 3, 6, 9, 10},
      {{2, 10}, rep_seq({3}, 4)},
      {{1, 4, 7}, {1, 7, 4}, rep_seq({4}, 3)},
      2,
      4,
      3,
      false});
  examples.push_back(FixtureExample{
      make_paired(36, {{2, 2}, {3, 3}}),
      {2, 3, 6, 10, 12, 14, 15, 18, 21, 22, 24, 26, 30, 33, 34},
      {rep_seq({2, 10}, 3), rep_seq({3, 3, 12}, 2), rep_seq({6}, 6)},
      {{1, 4, 4, 19, 4, 4}, {1, 7, 1, 8, 11, 8}, {4, 5, 4, 7, 9, 7}},
      6,
      6,
      6,
      true});
  // the paper's ex.3 union line misprints D2 (it is not even symmetric);
  // the set below is the one Eq. (1) produces
  examples.push_back(FixtureExample{
      make_paired(60, {{2, 2}, {3, 5}}),
      {2,  3,  6,  9,  10, 12, 14, 18, 21, 22, 24, 26, 27, 30,
       33, 34, 36, 38, 39, 42, 46, 48, 50, 51, 54, 57, 58},
      {rep_seq({2, 10}, 5), rep_seq({3, 3, 3, 3, 18}, 2), rep_seq({3, 3, 6, 12, 6}, 2),
       rep_seq({3, 6, 3, 9, 9}, 2), rep_seq({6}, 10)},
      {{1, 4, 11, 4, 25, 15},
       {1, 7, 8, 29, 8, 7},
       {1, 15, 1, 15, 13, 15},
       {1, 15, 25, 4, 11, 4},
       {4, 4, 7, 4, 4, 37},
       {4, 11, 4, 13, 15, 13},
       {5, 8, 7, 8, 17, 15},
       rep_seq({5, 15}, 3),
       {5, 15, 17, 8, 7, 8}},
      10,
      10,
      6,
      true});
  examples.push_back(FixtureExample{
      make_paired(60, {{2, 2}, {5, 3}}),
      {2, 5, 6, 10, 14, 18, 20, 22, 25, 26, 30, 34, 35, 38, 40, 42, 46, 50, 54, 55, 58},
      {rep_seq({2, 18}, 3), rep_seq({5, 5, 20}, 2), rep_seq({6, 14}, 3), rep_seq({10}, 6)},
      {{1, 3, 4, 4, 4, 29, 4, 4, 4, 3},
       {1, 3, 4, 8, 1, 15, 13, 4, 4, 7},
       {1, 3, 4, 8, 21, 8, 4, 3, 1, 7},
       {1, 3, 8, 1, 3, 12, 17, 4, 8, 3},
       {1, 3, 8, 4, 17, 12, 3, 1, 8, 3},
       {1, 3, 9, 3, 1, 11, 4, 13, 4, 11},
       {1, 3, 9, 3, 12, 9, 8, 4, 3, 8},
       {1, 3, 12, 1, 15, 1, 12, 3, 1, 11},
       {1, 7, 1, 7, 1, 7, 8, 13, 8, 7},
       {1, 7, 4, 4, 13, 15, 1, 8, 4, 3},
       {1, 7, 8, 1, 12, 3, 12, 1, 8, 7},
       {1, 8, 3, 4, 8, 9, 12, 3, 9, 3},
       {1, 8, 4, 3, 8, 4, 9, 8, 7, 8},
       {1, 8, 7, 8, 9, 4, 8, 3, 4, 8},
       {3, 4, 4, 4, 9, 15, 9, 4, 4, 4},
       {4, 4, 7, 4, 4, 9, 4, 11, 4, 9},
       rep_seq({3, 9}, 5)},
      6,
      6,
      10,
      true});

  int idx = 0;
  for (const auto& ex : examples) {
    ++idx;
    std::string tag = "ex." + std::to_string(idx) + " " + format_paired(ex.spec);
    Circulant g = realize(ex.spec);
    ck.add(tag + " distance set matches the paper", 1,
           g.distances.values() == ex.distance_set ? "" : format_circulant(g));
    ck.add(tag + " connected and co-connected", 1,
           paired_component_count(ex.spec) == 1 && paired_is_co_connected(ex.spec)
               ? ""
               : "connectivity flags");
    SimpleGraph s = to_graph(g);
    auto cliques = maximal_cliques(s);
    auto stables = maximal_stable_sets(s);
    {
      std::set<i64> sizes;
      for (const auto& c : cliques) sizes.insert((i64)c.size());
      std::set<i64> want{ex.clique_size_lo, ex.clique_size_hi};
      ck.add(tag + " maximal clique sizes", 1, sizes == want ? "" : "unexpected clique sizes");
      auto [f1, f2] = clique_size_formulas(ex.spec);
      std::set<i64> formulas{f1, f2};
      ck.add(tag + " Prop 4.2 formulas", 1, formulas == want ? "" : "formula mismatch");
    }
    {
      bool all = true;
      for (const auto& st : stables) all = all && (i64)st.size() == ex.stable_size;
      ck.add(tag + " maximal stable sets all of size " + std::to_string(ex.stable_size),
             (long long)stables.size(), all ? "" : "size spread");
    }
    ck.add(tag + " clique gap classes", (long long)cliques.size(),
           canonical_gap_classes(cliques, g.n) == canon_table(ex.clique_classes)
               ? ""
               : "clique class tables differ");
    ck.add(tag + " stable gap classes", (long long)stables.size(),
           canonical_gap_classes(stables, g.n) == canon_table(ex.stable_classes)
               ? ""
               : "stable class tables differ");
    CISReport rep = is_cis_circulant(g);
    ck.add(tag + (ex.cis ? " is CIS" : " is not CIS"), 1,
           rep.is_cis == ex.cis && is_cis_2paired(ex.spec) == ex.cis ? "" : "CIS verdict");
  }

  {
    // ex.1 also names an explicit disjoint witness pair
    SimpleGraph s = to_graph(realize(examples[0].spec));
    std::vector<int> c{0, 2}, st{1, 5, 9};
    bool ok = is_maximal_clique(s, c) && is_maximal_stable_set(s, st);
    ck.add("ex.1 paper witness C={0,2}, S={1,5,9} is a valid disjoint pair", 1,
           ok ? "" : "witness invalid");
  }

  {
    PairedSpec h = make_paired(36, {{2, 2}, {3, 3}});
    PairedSpec want = make_paired(1296, {{2, 2}, {3, 3}, {72, 2}, {108, 3}});
    ck.add("ex.5 lex product C(36;2,2;3,3)[itself] = C(1296;2,2;3,3;72,2;108,3)", 1,
           paired_lex_product(h, h) == want ? "" : "spec mismatch");
  }

  return ck.res;
}

SuiteResult run_suite(const std::string& name, const VerifyBounds& bounds) {
  if (name == "theorem-2-1") return suite_theorem_2_1(bounds);
  if (name == "alpha-omega") return suite_alpha_omega(bounds);
  if (name == "two-paired") return suite_two_paired(bounds);
  if (name == "clique-formulas") return suite_clique_formulas(bounds);
  if (name == "lex-product") return suite_lex_product(bounds);
  if (name == "p4-free") return suite_p4_free(bounds);
  if (name == "appendix") return suite_appendix(bounds);
  if (name == "closure") return suite_closure(bounds);
  throw Error(Errc::unknown_suite, "no suite named '" + name + "'");
}

std::vector<std::string> suite_names() {
  return {"theorem-2-1",     "alpha-omega", "two-paired", "clique-formulas",
          "lex-product", "p4-free",     "appendix",   "closure"};
}

}  // namespace circis
