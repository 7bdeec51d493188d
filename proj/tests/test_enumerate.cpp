#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "circis/circulant.hpp"
#include "circis/enumerate.hpp"
#include "circis/paired.hpp"
#include "circis/simple_graph.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circis;

namespace {

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& sets) {
  return {sets.begin(), sets.end()};
}

std::set<std::vector<i64>> class_set(const std::vector<std::vector<i64>>& cs) {
  return {cs.begin(), cs.end()};
}

}  // namespace

TEST_CASE("maximal_cliques basics") {
  SimpleGraph c5 = to_graph(make_circulant(5, {1, 4}));
  CHECK(as_set(maximal_cliques(c5)) ==
        std::set<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(maximal_cliques(complete_graph(4)) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("paper example 1 cliques and stable sets") {
  SimpleGraph g = to_graph(make_circulant(12, {2, 3, 6, 9, 10}));
  auto cliques = maximal_cliques(g);
  // 12 rotations of {0,2}; {0,3,6,9} is invariant under +3 so only 3 rotations
  CHECK(cliques.size() == 15);
  auto classes = class_set(canonical_gap_classes(cliques, 12));
  CHECK(classes == std::set<std::vector<i64>>{{2, 10}, {3, 3, 3, 3}});
  int pairs = 0, quads = 0;
  for (const auto& c : cliques) (c.size() == 2 ? pairs : quads) += 1;
  CHECK(pairs == 12);
  CHECK(quads == 3);

  auto stables = maximal_stable_sets(g);
  for (const auto& s : stables) CHECK(s.size() == 3);
  auto sclasses = class_set(canonical_gap_classes(stables, 12));
  CHECK(sclasses == std::set<std::vector<i64>>{{1, 4, 7}, {1, 7, 4}, {4, 4, 4}});
}

TEST_CASE("maximal_stable_sets basics") {
  SimpleGraph c6 = to_graph(make_circulant(6, {1, 5}));
  std::set<std::size_t> sizes;
  for (const auto& s : maximal_stable_sets(c6)) sizes.insert(s.size());
  CHECK(sizes == std::set<std::size_t>{2, 3});
  CHECK(maximal_stable_sets(empty_graph(5)) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("alpha omega well-covered") {
  Circulant c5 = make_circulant(5, {1, 4});
  SimpleGraph g5 = to_graph(c5);
  CHECK(alpha(g5) == 2);
  CHECK(omega(g5) == 2);
  CHECK(is_well_covered(g5));
  CHECK(is_co_well_covered(g5));

  SimpleGraph g6 = to_graph(make_circulant(6, {1, 5}));
  CHECK_FALSE(is_well_covered(g6));
  CHECK_FALSE(is_co_well_covered(g6.complement()));

  oracle::expect_errc(Errc::empty_graph, [] { alpha(SimpleGraph(0)); });
  oracle::expect_errc(Errc::empty_graph, [] { is_well_covered(SimpleGraph(0)); });
}

TEST_CASE("gap sequences") {
  GapDecomposition d = gap_sequence({0, 2}, 12);
  CHECK(d.base == 0);
  CHECK(d.gaps == std::vector<i64>{2, 10});
  CHECK(gap_sequence({0, 3, 6, 9}, 12).gaps == std::vector<i64>{3, 3, 3, 3});
  GapDecomposition single = gap_sequence({5}, 7);
  CHECK(single.base == 5);
  CHECK(single.gaps == std::vector<i64>{7});

  CHECK(generate({2, 10}, 0, 12) == std::vector<i64>{0, 2});
  oracle::expect_errc(Errc::empty_set, [] { gap_sequence({}, 12); });
  oracle::expect_errc(Errc::bad_gap_sum, [] { generate({3, 3}, 5, 12); });

  // round trip on random subsets
  std::mt19937 rng(21001);
  for (int trial = 0; trial < 1000; ++trial) {
    i64 n = 1 + (i64)(rng() % 30);
    std::vector<i64> verts;
    for (i64 v = 0; v < n; ++v)
      if (rng() & 1) verts.push_back(v);
    if (verts.empty()) verts.push_back((i64)(rng() % n));
    GapDecomposition gd = gap_sequence(verts, n);
    CHECK(generate(gd.gaps, gd.base, n) == verts);
  }
}

TEST_CASE("canonical gap classes") {
  // single rotation orbit collapses to one class
  std::vector<std::vector<int>> orbit;
  for (int r = 0; r < 12; ++r) {
    std::vector<int> s = {r, (r + 2) % 12};
    std::sort(s.begin(), s.end());
    orbit.push_back(s);
  }
  CHECK(canonical_gap_classes(orbit, 12).size() == 1);

  // paper example 2: three clique classes
  SimpleGraph g36 = to_graph(realize(parse_paired("C(36;2,2;3,3)")));
  auto classes = class_set(canonical_gap_classes(maximal_cliques(g36), 36));
  auto want = std::set<std::vector<i64>>{
      canonical_rotation({2, 10, 2, 10, 2, 10}),
      canonical_rotation({3, 3, 12, 3, 3, 12}),
      canonical_rotation({6, 6, 6, 6, 6, 6})};
  CHECK(classes == want);

  // paper example 3: nine stable-set classes
  SimpleGraph g60 = to_graph(realize(parse_paired("C(60;2,2;3,5)")));
  CHECK(canonical_gap_classes(maximal_stable_sets(g60), 60).size() == 9);
}

TEST_CASE("format_gap_sequence") {
  CHECK(format_gap_sequence({2, 10}) == "(2, 10)");
  CHECK(format_gap_sequence({3, 3, 3, 3}) == "(3)^4");
  CHECK(format_gap_sequence({6, 6, 6, 6, 6, 6}) == "(6)^6");
  CHECK(format_gap_sequence({2, 10, 2, 10, 2, 10}) == "(2, 10)^3");
  CHECK(format_gap_sequence({7}) == "(7)");
}

TEST_CASE("streaming enumeration and maximality predicates") {
  SimpleGraph g = to_graph(make_circulant(12, {2, 3, 6, 9, 10}));

  int seen = 0;
  bool finished = for_each_maximal_clique(g, [&](const std::vector<int>&) {
    ++seen;
    return false;  // stop immediately
  });
  CHECK_FALSE(finished);
  CHECK(seen == 1);

  std::vector<std::vector<int>> with03;
  for_each_maximal_clique_containing_set(g, {0, 3}, [&](const std::vector<int>& c) {
    with03.push_back(c);
    return true;
  });
  CHECK(with03 == std::vector<std::vector<int>>{{0, 3, 6, 9}});

  CHECK(is_maximal_clique(g, {0, 2}));
  CHECK_FALSE(is_maximal_clique(g, {0}));
  CHECK(is_maximal_stable_set(g, {1, 5, 9}));
  CHECK_FALSE(is_maximal_stable_set(g, {1, 5}));
}

TEST_CASE("enumeration agrees with the subset-scan oracle") {
  std::mt19937 rng(21002);
  for (int trial = 0; trial < 500; ++trial) {
    SimpleGraph g = oracle::random_graph(rng, 1 + (int)(rng() % 10), 0.2 + 0.6 * (rng() % 100) / 100.0);
    CHECK(as_set(maximal_cliques(g)) == oracle::maximal_cliques(g));
  }
}

TEST_CASE("maximal cliques of circulants are rotation-closed") {
  for (i64 n = 1; n <= 14; ++n) {
    for (const Circulant& c : oracle::all_circulants(n)) {
      SimpleGraph g = to_graph(c);
      auto cliques = as_set(maximal_cliques(g));
      for (const auto& cl : cliques) {
        std::vector<int> rot;
        for (int v : cl) rot.push_back((int)((v + 1) % n));
        std::sort(rot.begin(), rot.end());
        CHECK(cliques.count(rot) == 1);
      }
    }
  }
}
