#include "circis/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace circis {

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  for_each_maximal_clique(g, [&](const std::vector<int>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<std::vector<int>> maximal_stable_sets(const SimpleGraph& g) {
  return maximal_cliques(g.complement());
}

bool is_maximal_clique(const SimpleGraph& g, const std::vector<int>& verts) {
  if (verts.empty()) return false;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) return false;
  Bitset common(g.order());
  common.set();
  for (int v : verts) common &= g.neighbors(v);
  return common.none();
}

bool is_maximal_stable_set(const SimpleGraph& g, const std::vector<int>& verts) {
  return is_maximal_clique(g.complement(), verts);
}

namespace {

void require_nonempty(const SimpleGraph& g) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "graph has no vertices");
}

}  // namespace

int omega(const SimpleGraph& g) {
  require_nonempty(g);
  std::size_t best = 0;
  for_each_maximal_clique(g, [&](const std::vector<int>& c) {
    best = std::max(best, c.size());
    return true;
  });
  return (int)best;
}

int alpha(const SimpleGraph& g) {
  require_nonempty(g);
  return omega(g.complement());
}

bool is_co_well_covered(const SimpleGraph& g) {
  require_nonempty(g);
  std::size_t seen = 0;
  bool uniform = true;
  for_each_maximal_clique(g, [&](const std::vector<int>& c) {
    if (seen == 0) {
      seen = c.size();
      return true;
    }
    uniform = (c.size() == seen);
    return uniform;
  });
  return uniform;
}

bool is_well_covered(const SimpleGraph& g) {
  require_nonempty(g);
  return is_co_well_covered(g.complement());
}

GapDecomposition gap_sequence(const std::vector<i64>& verts, i64 n) {
  if (verts.empty()) throw Error(Errc::empty_set, "gap sequence of empty set");
  std::vector<i64> v = verts;
  std::sort(v.begin(), v.end());
  for (i64 x : v)
    if (x < 0 || x >= n) throw Error(Errc::out_of_range, "vertex outside Z_n");
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw Error(Errc::out_of_range, "repeated vertex");
  GapDecomposition d;
  d.base = v.front();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) d.gaps.push_back(v[i + 1] - v[i]);
  d.gaps.push_back(n - v.back() + v.front());
  return d;
}

std::vector<i64> generate(const std::vector<i64>& gaps, i64 base, i64 n) {
  if (gaps.empty()) throw Error(Errc::empty_set, "empty gap sequence");
  i64 sum = 0;
  for (i64 g : gaps) {
    if (g < 1) throw Error(Errc::out_of_range, "gaps must be positive");
    sum += g;
  }
  if (sum != n) throw Error(Errc::bad_gap_sum, "gaps sum to " + std::to_string(sum) +
                                                   ", expected " + std::to_string(n));
  std::vector<i64> verts;
  i64 v = mod_norm(base, n);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    verts.push_back(v);
    v = mod_norm(v + gaps[i], n);
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

std::vector<i64> canonical_rotation(std::vector<i64> gaps) {
  if (gaps.empty()) return gaps;
  std::size_t r = gaps.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < r; ++s) {
    for (std::size_t i = 0; i < r; ++i) {
      i64 a = gaps[(s + i) % r], b = gaps[(best + i) % r];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  std::rotate(gaps.begin(), gaps.begin() + best, gaps.end());
  return gaps;
}

std::vector<std::vector<i64>> canonical_gap_classes(const std::vector<std::vector<int>>& sets,
                                                    i64 n) {
  std::set<std::vector<i64>> classes;
  for (const auto& s : sets) {
    std::vector<i64> v(s.begin(), s.end());
    classes.insert(canonical_rotation(gap_sequence(v, n).gaps));
  }
  return {classes.begin(), classes.end()};
}

std::string format_gap_sequence(const std::vector<i64>& gaps) {
  std::size_t r = gaps.size();
  std::size_t period = r;
  for (std::size_t p = 1; p < r; ++p) {
    if (r % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < r && ok; ++i) ok = (gaps[i] == gaps[i % p]);
    if (ok) {
      period = p;
      break;
    }
  }
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < period; ++i) {
    if (i) os << ", ";
    os << gaps[i];
  }
  os << ")";
  if (period != r) os << "^" << (r / period);
  return os.str();
}

}  // namespace circis
