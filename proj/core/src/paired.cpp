#include "circis/paired.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "circis/error.hpp"

namespace circis {

PairedSpec make_paired(i64 n, std::vector<std::pair<i64, i64>> pairs) {
  if (n < 1) throw Error(Errc::out_of_range, "order must be >= 1");
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1) throw Error(Errc::out_of_range, "pair entries must be positive");
    if (n % (a * b) != 0)
      throw Error(Errc::out_of_range, "a*b = " + std::to_string(a * b) +
                                          " does not divide n = " + std::to_string(n));
  }
  return PairedSpec{n, std::move(pairs)};
}

DistanceSet paired_distance_set(const PairedSpec& spec) {
  std::vector<char> in((std::size_t)spec.n, 0);
  for (auto [a, b] : spec.pairs) {
    i64 ab = a * b;
    for (i64 d = a; d < spec.n; d += a)
      if (d % ab != 0) in[(std::size_t)d] = 1;
  }
  std::vector<i64> ds;
  for (i64 d = 1; d < spec.n; ++d)
    if (in[(std::size_t)d]) ds.push_back(d);
  return DistanceSet::full(spec.n, std::move(ds));
}

Circulant realize(const PairedSpec& spec) { return Circulant{spec.n, paired_distance_set(spec)}; }

PairedSpec paired_lex_product(const PairedSpec& g, const PairedSpec& h) {
  std::vector<std::pair<i64, i64>> pairs = g.pairs;
  for (auto [a, b] : h.pairs) pairs.emplace_back(g.n * a, b);
  return make_paired(g.n * h.n, std::move(pairs));
}

LcmReduction lcm_reduce(const PairedSpec& spec) {
  if (spec.k() == 0) throw Error(Errc::empty_spec, "lcm_reduce needs k >= 1");
  i64 d = 1;
  for (auto [a, b] : spec.pairs) d = std::lcm(d, a * b);
  return LcmReduction{make_paired(d, spec.pairs), spec.n / d};
}

i64 paired_component_count(const PairedSpec& spec) {
  i64 d = 0;
  for (auto [a, b] : spec.pairs)
    if (b > 1) d = std::gcd(d, a);
  return d == 0 ? spec.n : d;
}

PairedSpec reduce_connected(const PairedSpec& spec) {
  i64 d = paired_component_count(spec);
  std::vector<std::pair<i64, i64>> pairs;
  pairs.reserve(spec.pairs.size());
  for (auto [a, b] : spec.pairs) {
    if (b > 1)
      pairs.emplace_back(a / d, b);
    else
      pairs.emplace_back(1, 1);  // contributes no distances either way
  }
  return make_paired(spec.n / d, std::move(pairs));
}

bool paired_is_co_connected(const PairedSpec& spec) {
  if (spec.n == 1) return true;
  for (auto [a, b] : spec.pairs)
    if (a == 1 && b > 1) return false;
  return true;
}

CoReduction co_reduce(const PairedSpec& spec, std::size_t ell) {
  if (ell >= spec.k()) throw Error(Errc::bad_index, "pair index out of range");
  auto [a_ell, b_ell] = spec.pairs[ell];
  if (a_ell != 1) throw Error(Errc::bad_index, "co_reduce needs a_ell = 1");
  std::vector<std::pair<i64, i64>> pairs;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    if (i == ell) continue;
    auto [a, b] = spec.pairs[i];
    i64 g = std::gcd(a, b_ell);
    pairs.emplace_back(a / g, b * g / std::gcd(a * b, b_ell));
  }
  return CoReduction{b_ell, make_paired(spec.n / b_ell, std::move(pairs))};
}

namespace {

struct CoverCand {
  i64 a, b;
  Bitset dist;  // bit d set iff d in D_{a,b}
};

void cover_dfs(const std::vector<CoverCand>& cands, const Bitset& target, Bitset covered,
               std::vector<std::pair<i64, i64>>& cur, int depth_left,
               std::set<std::vector<std::pair<i64, i64>>>& found) {
  Bitset uncovered = target - covered;
  if (uncovered.none()) {
    auto sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    found.insert(std::move(sorted));
    return;
  }
  if (depth_left == 0) return;
  auto d = uncovered.find_first();
  for (const auto& c : cands) {
    if (!c.dist.test(d)) continue;
    cur.emplace_back(c.a, c.b);
    cover_dfs(cands, target, covered | c.dist, cur, depth_left - 1, found);
    cur.pop_back();
  }
}

}  // namespace

std::optional<PairedSpec> recognize_paired(const Circulant& g, int k_max) {
  i64 n = g.n;
  if (g.distances.empty()) return make_paired(n, {});
  if (k_max < 1) return std::nullopt;
  // candidates: (a,b) with b >= 2, ab | n and D_{a,b} fully inside D(g);
  // b = 1 pairs contribute nothing so they never appear in a minimal cover
  std::vector<CoverCand> cands;
  for (i64 a : divisors(n)) {
    if (a == n) continue;
    for (i64 b : divisors(n / a)) {
      if (b < 2) continue;
      Bitset bits((std::size_t)n);
      bool subset = true;
      for (i64 d = a; d < n && subset; d += a) {
        if (d % (a * b) == 0) continue;
        if (g.distances.contains(d))
          bits.set((std::size_t)d);
        else
          subset = false;
      }
      if (subset) cands.push_back({a, b, std::move(bits)});
    }
  }
  Bitset target((std::size_t)n);
  for (i64 d : g.distances.values()) target.set((std::size_t)d);
  for (int k = 1; k <= k_max; ++k) {
    std::set<std::vector<std::pair<i64, i64>>> found;
    std::vector<std::pair<i64, i64>> cur;
    cover_dfs(cands, target, Bitset((std::size_t)n), cur, k, found);
    if (!found.empty()) return make_paired(n, *found.begin());
  }
  return std::nullopt;
}

bool is_p4_free(const SimpleGraph& g) {
  if (g.order() <= 1) return true;
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    for (const auto& c : comps)
      if (!is_p4_free(g.induced_subgraph(c))) return false;
    return true;
  }
  auto cocomps = connected_components(g.complement());
  if (cocomps.size() == 1) return false;  // connected and co-connected, >= 2 vertices
  for (const auto& c : cocomps)
    if (!is_p4_free(g.induced_subgraph(c))) return false;
  return true;
}

bool is_p4_free_paired(const PairedSpec& spec) {
  if (spec.n == 1) return true;
  if (paired_component_count(spec) > 1) return is_p4_free_paired(reduce_connected(spec));
  for (std::size_t ell = 0; ell < spec.k(); ++ell)
    if (spec.pairs[ell].first == 1) return is_p4_free_paired(co_reduce(spec, ell).core);
  return false;
}

PairedSpec gn_family(int n) {
  if (n < 1) throw Error(Errc::out_of_range, "gn_family needs n >= 1");
  if (n > 3) throw Error(Errc::cap_exceeded, "gn_family capped at n = 3, orders explode");
  auto primes = first_primes(2 * n);
  std::vector<i64> q(n);
  for (int i = 0; i < n; ++i) q[i] = primes[2 * i] * primes[2 * i + 1];
  i64 order = 1;
  for (i64 qi : q) order *= qi;
  std::vector<std::pair<i64, i64>> pairs;
  for (int i = 0; i < n; ++i) {
    i64 a = 1;
    for (int j = i + 1; j < n; ++j) a *= q[j];
    pairs.emplace_back(a, primes[2 * i]);
  }
  return make_paired(order, std::move(pairs));
}

namespace {

void require_two_pairs(const PairedSpec& spec) {
  if (spec.k() != 2)
    throw Error(Errc::precondition_violated, "operation needs a 2-paired spec");
}

}  // namespace

std::pair<i64, i64> clique_size_formulas(const PairedSpec& spec) {
  require_two_pairs(spec);
  auto [a1, b1] = spec.pairs[0];
  auto [a2, b2] = spec.pairs[1];
  if (spec.n != std::lcm(a1 * b1, a2 * b2))
    throw Error(Errc::precondition_violated, "clique size formulas need n = lcm(a1 b1, a2 b2)");
  i64 g = std::gcd(a1 * b1, a2 * b2);
  return {b1 * b2 * std::gcd(a2, a1 * b1) / g, b1 * b2 * std::gcd(a1, a2 * b2) / g};
}

bool is_cis_2paired(const PairedSpec& spec) {
  require_two_pairs(spec);
  if (paired_component_count(spec) != 1)
    throw Error(Errc::precondition_violated, "is_cis_2paired needs a connected spec");
  if (!paired_is_co_connected(spec))
    throw Error(Errc::precondition_violated, "is_cis_2paired needs a co-connected spec");
  auto [a1, b1] = spec.pairs[0];
  auto [a2, b2] = spec.pairs[1];
  return std::gcd(a1 * b1, a2 * b2) == 1;
}

std::vector<i64> blocking_stable_triple(const PairedSpec& spec) {
  require_two_pairs(spec);
  i64 a1 = spec.pairs[0].first, b1 = spec.pairs[0].second;
  i64 a2 = spec.pairs[1].first, b2 = spec.pairs[1].second;
  i64 n = spec.n;
  if (n != std::lcm(a1 * b1, a2 * b2))
    throw Error(Errc::precondition_violated, "blocking triple needs n = lcm(a1 b1, a2 b2)");
  if (std::gcd(b1, b2) <= 1)
    throw Error(Errc::precondition_violated, "blocking triple needs gcd(b1, b2) > 1");
  // the proof wants a1 >= 2, a2 >= 3 and gcd(a2, a1 b1) = 1 in some order of
  // the two pairs; prefer the order as given
  auto fits = [](i64 A1, i64 B1, i64 A2) {
    return A1 >= 2 && A2 >= 3 && std::gcd(A2, A1 * B1) == 1;
  };
  if (!fits(a1, b1, a2)) {
    if (fits(a2, b2, a1)) {
      std::swap(a1, a2);
      std::swap(b1, b2);
    } else {
      throw Error(Errc::precondition_violated,
                  "blocking triple needs a1 >= 2, a2 >= 3, gcd(a2, a1 b1) = 1 in some pair order");
    }
  }
  i64 alpha = a2 * std::gcd(b1, b2);
  i64 i = mod_norm(1 + alpha * a1, n);
  i64 m = a1 * b1;
  i64 beta = mod_norm(-2 * mod_inverse(a2, m), m);
  i64 j = mod_norm(2 + beta * a2, n);
  return {0, i, j};
}

std::string format_paired(const PairedSpec& spec) {
  std::ostringstream os;
  os << "C(" << spec.n << ";";
  bool first = true;
  for (auto [a, b] : spec.pairs) {
    if (!first) os << ";";
    os << a << "," << b;
    first = false;
  }
  os << ")";
  return os.str();
}

PairedSpec parse_paired(const std::string& text) {
  if (text.size() < 4 || text.substr(0, 2) != "C(" || text.back() != ')')
    throw Error(Errc::parse_error, "expected C(n;a1,b1;...): '" + text + "'");
  std::string body = text.substr(2, text.size() - 3);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto semi = body.find(';', start);
    parts.push_back(body.substr(start, semi == std::string::npos ? semi : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (parts.size() < 2) throw Error(Errc::parse_error, "missing ';' after order: '" + text + "'");
  auto to_num = [&](const std::string& s) -> i64 {
    try {
      std::size_t pos = 0;
      i64 v = std::stoll(s, &pos);
      if (pos != s.size()) throw Error(Errc::parse_error, "bad number '" + s + "'");
      return v;
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad number '" + s + "'");
    }
  };
  i64 n = to_num(parts[0]);
  std::vector<std::pair<i64, i64>> pairs;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p.empty() || p == "∅") {
      if (parts.size() != 2)
        throw Error(Errc::parse_error, "empty pair in '" + text + "'");
      break;  // C(n;) or C(n;∅)
    }
    auto comma = p.find(',');
    if (comma == std::string::npos)
      throw Error(Errc::parse_error, "pair without ',': '" + p + "'");
    pairs.emplace_back(to_num(p.substr(0, comma)), to_num(p.substr(comma + 1)));
  }
  return make_paired(n, std::move(pairs));
}

}  // namespace circis
