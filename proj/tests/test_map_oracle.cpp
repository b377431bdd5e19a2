#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "mapcount/map_oracle.hpp"

using namespace mapcount;
using namespace mapcount::test;

namespace {

Multigraph graph(int vertices, std::vector<std::pair<int, int>> edges) {
  Multigraph g;
  g.vertices = vertices;
  g.edges = std::move(edges);
  return g;
}

PolyNu series_coeff_at(const TruncSeries<PolyNu>& s, std::size_t n) { return s[n]; }

BigRational at(const PolyNu& p, long v) { return p(BigRational(v)); }

// Maps combinatorial closed form 2*3^n/((n+1)(n+2)) binom(2n,n)
mpz_class tutte_count(unsigned n) {
  mpz_class b, p;
  mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
  mpz_ui_pow_ui(p.get_mpz_t(), 3, n);
  return 2 * p * b / ((n + 1) * (n + 2));
}

}  // namespace

TEST_CASE("rooted map counts") {
  CHECK(enumerate_rooted_maps(0).size() == 1);
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(mpz_class(static_cast<unsigned long>(enumerate_rooted_maps(static_cast<int>(n)).size())) == tutte_count(n));
  }
  const std::vector<std::uint64_t> all_genera{1, 2, 10, 74, 706, 8162};
  for (int n = 0; n <= 5; ++n) CHECK(count_rooted_maps_all_genera(n) == all_genera[static_cast<std::size_t>(n)]);
  CHECK_THROWS_AS(enumerate_rooted_maps(8), CapExceeded);
}

TEST_CASE("canonical labelling yields distinct rotations") {
  const auto maps = enumerate_rooted_maps(4);
  std::map<std::vector<int>, int> seen;
  for (const auto& m : maps) {
    ++seen[m.sigma];
    CHECK(m.vertex_count() - m.edges + m.face_count() == 2);
  }
  CHECK(seen.size() == maps.size());
}

TEST_CASE("potts polynomial examples") {
  CHECK(potts_polynomial(graph(2, {{0, 1}}), 2) == nu({2, 2}));
  CHECK(potts_polynomial(graph(1, {{0, 0}}), 2) == nu({0, 2}));
  CHECK(potts_polynomial(graph(3, {{0, 1}, {1, 2}, {2, 0}}), 2) == nu({0, 6, 0, 2}));
  // q = 1 forces a single colouring with every edge monochromatic
  CHECK(potts_polynomial(graph(3, {{0, 1}, {1, 2}, {2, 2}}), 1) == nu({0, 0, 0, 1}));
  // nu = 1 gives q^V
  CHECK(potts_polynomial(graph(3, {{0, 1}, {1, 2}, {0, 1}}), 3)(BigRational(1)) == 27);
  const auto sym = potts_polynomial_symbolic(graph(2, {{0, 1}}));
  // q^2 + q(nu - 1)  ->  coefficient of q is nu - 1, of q^2 is 1
  CHECK(sym.coeff(1) == nu({-1, 1}));
  CHECK(sym.coeff(2) == nu({1}));
}

TEST_CASE("property: deletion-contraction equals colouring sums up to five edges") {
  int checked = 0;
  for (int v = 1; v <= 6; ++v) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < v; ++a) {
      for (int b = a; b < v; ++b) pairs.emplace_back(a, b);
    }
    for (int e = 0; e <= 5; ++e) {
      // multisets of e pairs, as nondecreasing index sequences
      std::vector<std::size_t> idx(static_cast<std::size_t>(e), 0);
      while (true) {
        Multigraph g;
        g.vertices = v;
        for (auto i : idx) g.edges.push_back(pairs[i]);
        // skip relabellings: vertices must first appear in increasing order
        int next_new = 0;
        bool canonical = true;
        for (const auto& [a, b] : g.edges) {
          for (int x : {a, b}) {
            if (x > next_new) canonical = false;
            if (x == next_new) ++next_new;
          }
        }
        for (int q : {2, 3}) {
          if (!canonical) break;
          if (potts_polynomial(g, q) != potts_bruteforce(g, q)) {
            FAIL("mismatch on graph with " << v << " vertices, " << e << " edges, q=" << q);
          }
        }
        ++checked;
        std::size_t k = idx.size();
        while (k > 0 && idx[k - 1] == pairs.size() - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[k - 1];
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("cut vertex multiplicativity") {
  // triangle and a double edge sharing vertex 2
  const auto g1 = graph(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto g2 = graph(2, {{0, 1}, {0, 1}});
  const auto joined = graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {2, 3}});
  for (int q : {2, 3}) {
    CHECK(potts_polynomial(joined, q) ==
          potts_polynomial(g1, q) * potts_polynomial(g2, q) * BigRational(mpz_class(1), mpz_class(q)));
  }
}

TEST_CASE("classification examples") {
  const auto double_edge = classify(graph(2, {{0, 1}, {0, 1}}));
  CHECK(double_edge.two_connected);
  CHECK_FALSE(double_edge.three_connected);
  CHECK(double_edge.bipartite);
  const auto loop = classify(graph(1, {{0, 0}}));
  CHECK_FALSE(loop.two_connected);
  CHECK_FALSE(loop.bipartite);
  CHECK(loop.root_edge_is_loop);
  // every rooted map with 6 edges whose graph is K4 is 3-connected
  int k4 = 0;
  for (const auto& m : enumerate_rooted_maps(6)) {
    const auto g = Multigraph::of(m);
    const auto f = classify(g);
    if (g.vertices == 4 && f.two_connected) {
      bool simple = true;
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
          simple = simple && std::minmax(g.edges[i].first, g.edges[i].second) !=
                                 std::minmax(g.edges[j].first, g.edges[j].second);
        }
      }
      if (simple) {
        ++k4;
        CHECK(f.three_connected);
      }
    } else {
      CHECK_FALSE(f.three_connected);
    }
  }
  CHECK(k4 >= 1);
}

TEST_CASE("oracle series examples") {
  const auto all = oracle_series(4, Weighting::parse("all"));
  CHECK(all[0] == nu({1}));
  CHECK(all[1] == nu({1, 2}));
  CHECK(all[2] == nu({3, 8, 9}));
  // the z^3 term printed alongside these reads 42nu^3+72nu^2+51nu+12; its nu^3
  // coefficient must be the number of 3-edge maps, 54
  CHECK(all[3] == nu({12, 45, 66, 54}));
  const auto bi = oracle_series(3, Weighting::parse("bi_root"));
  CHECK(at(bi[1], 0) == 1);
  CHECK(at(bi[2], 0) == 3);
  CHECK(at(bi[3], 0) == 12);
  const auto mono = oracle_series(3, Weighting::parse("mono_root"));
  CHECK(mono[1] == nu({0, 2}));
  const auto del = oracle_series(3, Weighting::parse("del"));
  CHECK(del[1] == nu({3}));
  CHECK(oracle_series(2, Weighting::parse("con"))[1] == nu({2}));
  CHECK_THROWS_AS(Weighting::parse("bogus"), UsageError);
  CHECK(Weighting::parse("two_conn+bi_root").name() == "two_conn+bi_root");
}

TEST_CASE("oracle identities") {
  const int n = 5;
  const auto all = oracle_series(n, Weighting::parse("all"));
  const auto mono = oracle_series(n, Weighting::parse("mono_root"));
  const auto bi = oracle_series(n, Weighting::parse("bi_root"));
  const auto del = oracle_series(n, Weighting::parse("del"));
  const auto con = oracle_series(n, Weighting::parse("con"));
  const auto bip = oracle_series(n, Weighting::parse("bipartite_only"));
  CHECK(all == NuSeries::one(n + 1) + mono + bi);
  CHECK(bi == del - con);
  for (int k = 0; k <= n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    CHECK(mono[ku] == con[ku] * nu({0, 1}));
    // nu = 0 keeps only proper colourings: one per bipartite map
    CHECK(at(all[ku], 0) == at(bip[ku], 1) / at(bip[ku], 1) * at(bip[ku], 0));
    // nu = 1 counts 2^(V-1) colourings per map
    BigRational expected = 0;
    for (const auto& m : enumerate_rooted_maps(k)) expected += pow(BigRational(2), static_cast<unsigned>(m.vertex_count() - 1));
    CHECK(at(all[ku], 1) == expected);
    BigRational bipartite_maps = 0;
    for (const auto& m : enumerate_rooted_maps(k)) bipartite_maps += classify(m).bipartite ? 1 : 0;
    CHECK(at(all[ku], 0) == bipartite_maps);
  }
  (void)series_coeff_at;
}

TEST_CASE("map dump format") {
  const auto maps = enumerate_rooted_maps(1);
  REQUIRE(maps.size() == 2);
  CHECK(dump_map(maps[0]) == "(1)(2) bipartite=true two_connected=false three_connected=false root_loop=false");
  CHECK(dump_map(maps[1]) == "(1 2) bipartite=false two_connected=false three_connected=false root_loop=true");
}
