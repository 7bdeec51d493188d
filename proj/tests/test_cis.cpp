#include <random>
#include <vector>

#include "circis/circulant.hpp"
#include "circis/cis.hpp"
#include "circis/combs.hpp"
#include "circis/enumerate.hpp"
#include "circis/simple_graph.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circis;

TEST_CASE("is_cis_bruteforce on the paper's small examples") {
  CISReport p4 = is_cis_bruteforce(path_graph(4));
  CHECK_FALSE(p4.is_cis);
  REQUIRE(p4.witness.has_value());
  CHECK(p4.witness->clique == std::vector<int>{1, 2});  // midpoints
  CHECK(p4.witness->stable == std::vector<int>{0, 3});  // endpoints

  CHECK(is_cis_bruteforce(bull_graph()).is_cis);

  SimpleGraph ex1 = to_graph(make_circulant(12, {2, 3, 6, 9, 10}));
  CISReport r = is_cis_bruteforce(ex1);
  CHECK_FALSE(r.is_cis);
  REQUIRE(r.witness.has_value());
  CHECK(is_maximal_clique(ex1, r.witness->clique));
  CHECK(is_maximal_stable_set(ex1, r.witness->stable));
  // the paper's own witness is one of the valid ones
  CHECK(is_maximal_clique(ex1, {0, 2}));
  CHECK(is_maximal_stable_set(ex1, {1, 5, 9}));

  oracle::expect_errc(Errc::empty_graph, [] { is_cis_bruteforce(SimpleGraph(0)); });
}

TEST_CASE("is_cis_circulant theorem fast path") {
  CISReport c5 = is_cis_circulant(make_circulant(5, {1, 4}));
  CHECK_FALSE(c5.is_cis);  // alpha*omega = 4 < 5
  CHECK(c5.alpha == 2);
  CHECK(c5.omega == 2);
  CHECK(c5.well_covered);
  CHECK(c5.co_well_covered);

  CISReport c6 = is_cis_circulant(make_circulant(6, {1, 5}));
  CHECK_FALSE(c6.is_cis);  // alpha*omega = 6 = n but not well-covered
  CHECK(c6.alpha * c6.omega == 6);
  CHECK_FALSE(c6.well_covered);

  CISReport ex2 = is_cis_circulant(
      make_circulant(36, {2, 3, 6, 10, 12, 14, 15, 18, 21, 22, 24, 26, 30, 33, 34}));
  CHECK(ex2.is_cis);
  CHECK(ex2.alpha == 6);
  CHECK(ex2.omega == 6);
  CHECK_FALSE(ex2.witness.has_value());
}

TEST_CASE("fast path equals brute force, exhaustive order <= 12") {
  for (i64 n = 1; n <= 12; ++n) {
    for (const Circulant& c : oracle::all_circulants(n)) {
      CISReport fast = is_cis_circulant(c);
      CISReport brute = is_cis_bruteforce(to_graph(c));
      CHECK(fast.is_cis == brute.is_cis);
      CHECK(fast.alpha == brute.alpha);
      CHECK(fast.omega == brute.omega);
      CHECK(fast.well_covered == brute.well_covered);
      CHECK(fast.co_well_covered == brute.co_well_covered);
      if (!fast.is_cis) {
        REQUIRE(fast.witness.has_value());
        SimpleGraph g = to_graph(c);
        CHECK(is_maximal_clique(g, fast.witness->clique));
        CHECK(is_maximal_stable_set(g, fast.witness->stable));
      }
    }
  }
}

TEST_CASE("alpha_omega_bound") {
  CHECK(alpha_omega_bound(make_circulant(5, {1, 4})));
  CHECK(alpha_omega_bound(make_circulant(7, {1, 2, 3, 4, 5, 6})));
  CHECK(alpha_omega_bound(make_circulant(9, {})));
}

TEST_CASE("almost_cis and unique split partition") {
  AlmostCISReport p4 = almost_cis(path_graph(4));
  CHECK(p4.almost_cis);
  CHECK(p4.disjoint_pairs == 1);
  REQUIRE(p4.unique_pair.has_value());
  CHECK(p4.unique_pair->clique == std::vector<int>{1, 2});
  CHECK(p4.unique_pair->stable == std::vector<int>{0, 3});
  CHECK(is_split_with_unique_partition(path_graph(4)));

  AlmostCISReport bull = almost_cis(bull_graph());
  CHECK_FALSE(bull.almost_cis);
  CHECK(bull.disjoint_pairs == 0);

  AlmostCISReport s2 = almost_cis(empty_graph(2));
  CHECK_FALSE(s2.almost_cis);
  CHECK(s2.disjoint_pairs == 0);
  CHECK(is_cis_bruteforce(empty_graph(2)).is_cis);

  oracle::expect_errc(Errc::empty_graph, [] { almost_cis(SimpleGraph(0)); });

  // WZZ equivalence, exhaustive on all labeled graphs with n <= 5
  for (int n = 1; n <= 5; ++n) {
    int bits = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      SimpleGraph g(n);
      int b = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
          if (mask >> b & 1) g.add_edge(u, v);
      CHECK(almost_cis(g).almost_cis == is_split_with_unique_partition(g));
    }
  }
}

TEST_CASE("cis_report_json format") {
  Circulant c5 = make_circulant(5, {1, 4});
  CHECK(cis_report_json(c5, is_cis_circulant(c5)) ==
        R"({"n":5,"D":[1,4],"cis":false,"alpha":2,"omega":2,"wc":true,"cowc":true,"witness":{"C":[0,1],"S":[2,4]}})");

  Circulant ex2 =
      make_circulant(36, {2, 3, 6, 10, 12, 14, 15, 18, 21, 22, 24, 26, 30, 33, 34});
  std::string j = cis_report_json(ex2, is_cis_circulant(ex2));
  CHECK(j.find("\"cis\":true") != std::string::npos);
  CHECK(j.find("\"witness\":null") != std::string::npos);
  CHECK(j.find("\"n\":36") == 1);
}
