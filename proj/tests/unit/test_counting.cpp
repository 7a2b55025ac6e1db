#include "iset/counting.hpp"

#include <random>

#include "doctest.h"
#include "iset/corpus.hpp"

using namespace iset;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// i(C_n) equals the n-th Lucas number, i(P_n) the (n+2)-nd Fibonacci number.
long lucas(int n) {
  long a = 2, b = 1;
  for (int k = 0; k < n; ++k) {
    long t = a + b;
    a = b;
    b = t;
  }
  return a;
}

long fibonacci(int n) {
  long a = 0, b = 1;
  for (int k = 0; k < n; ++k) {
    long t = a + b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

TEST_CASE("counts on fixed graphs") {
  CHECK(count_independent_sets(Graph(0)) == 1);
  CHECK(count_independent_sets(Graph(1)) == 2);
  CHECK(count_independent_sets(clique(3)) == 4);
  CHECK(count_independent_sets(complete_bipartite(2, 2).graph) == 7);
  CHECK(count_independent_sets(cycle_graph(5)) == 11);
  CHECK(count_independent_sets(path_graph(4)) == 8);
  CHECK(count_independent_sets(petersen_graph()) == 76);
  CHECK(brute_force_count(petersen_graph()) == 76);
}

TEST_CASE("i(K_{d,d}) = 2^{d+1} - 1") {
  for (int d = 1; d <= 6; ++d) {
    mpz_class expected = (mpz_class(1) << (d + 1)) - 1;
    Graph kdd = complete_bipartite(d, d).graph;
    CHECK(count_independent_sets(kdd) == expected);
    if (2 * d <= 12) CHECK(brute_force_count(kdd) == expected);
  }
}

TEST_CASE("cycles follow the Lucas numbers, paths the Fibonacci numbers") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(count_independent_sets(cycle_graph(n)) == lucas(n));
    CHECK(brute_force_count(cycle_graph(n)) == lucas(n));
  }
  for (int n = 1; n <= 12; ++n) {
    CHECK(count_independent_sets(path_graph(n)) == fibonacci(n + 2));
  }
}

TEST_CASE("recursive count agrees with the brute-force oracle") {
  std::mt19937 rng(29);
  for (int round = 0; round < 60; ++round) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 12), 0.35, rng);
    CHECK(count_independent_sets(g) == brute_force_count(g));
  }
}

TEST_CASE("pivot choice does not change the count") {
  std::mt19937 rng(31);
  for (int round = 0; round < 40; ++round) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 10), 0.4, rng);
    CHECK(count_independent_sets(g, PivotRule::kMaxDegreeLowestIndex) ==
          count_independent_sets(g, PivotRule::kMaxDegreeHighestIndex));
  }
}

TEST_CASE("counts multiply over disjoint unions") {
  std::mt19937 rng(37);
  for (int round = 0; round < 30; ++round) {
    Graph g1 = random_graph(1 + static_cast<int>(rng() % 7), 0.4, rng);
    Graph g2 = random_graph(1 + static_cast<int>(rng() % 7), 0.4, rng);
    CHECK(count_independent_sets(disjoint_union(g1, g2)) ==
          count_independent_sets(g1) * count_independent_sets(g2));
    IndependencePolynomial p1 = independence_polynomial(g1);
    IndependencePolynomial p2 = independence_polynomial(g2);
    IndependencePolynomial joint = independence_polynomial(disjoint_union(g1, g2));
    CHECK(evaluate(joint, mpq_class(3, 7)) ==
          evaluate(p1, mpq_class(3, 7)) * evaluate(p2, mpq_class(3, 7)));
  }
}

TEST_CASE("brute force capacity") {
  CHECK_THROWS_AS(brute_force_count(Graph(31)), CapacityError);
}

TEST_CASE("counting at the 64-vertex capacity edge") {
  CHECK(count_independent_sets(Graph(64)) == mpz_class(1) << 64);
  CHECK(count_independent_sets(complete_bipartite(32, 32).graph) ==
        (mpz_class(1) << 33) - 1);
  mpz_class a = 0, b = 1;  // i(P_64) is the 66th Fibonacci number
  for (int i = 0; i < 66; ++i) {
    mpz_class t = a + b;
    a = b;
    b = t;
  }
  CHECK(count_independent_sets(path_graph(64)) == a);
}

TEST_CASE("polynomial basics") {
  IndependencePolynomial k2 = independence_polynomial(clique(2));
  CHECK(k2.coeffs == std::vector<mpz_class>{1, 2});

  std::mt19937 rng(41);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 10), 0.4, rng);
    IndependencePolynomial p = independence_polynomial(g);
    CHECK(p.coeffs[0] == 1);                                  // the empty set
    CHECK(evaluate(p, mpq_class(0)) == 1);                    // P(0) = 1
    if (g.vertex_count() > 0) CHECK(p.coeffs[1] == g.vertex_count());  // c_1 = n
    CHECK(p.coeffs.back() > 0);
    CHECK(evaluate(p, mpq_class(1)) == mpq_class(count_independent_sets(g)));
    CHECK(p.total() == count_independent_sets(g));
  }
}

TEST_CASE("P_{K_{d,d}} = 2(1+x)^d - 1 as a coefficient identity") {
  for (int d = 1; d <= 5; ++d) {
    IndependencePolynomial p = independence_polynomial(complete_bipartite(d, d).graph);
    // binomial expansion of 2(1+x)^d - 1
    std::vector<mpz_class> expected(static_cast<std::size_t>(d) + 1);
    mpz_class binom = 1;
    for (int k = 0; k <= d; ++k) {
      expected[static_cast<std::size_t>(k)] = 2 * binom;
      binom = binom * (d - k) / (k + 1);
    }
    expected[0] -= 1;
    CHECK(p.coeffs == expected);
  }
}

TEST_CASE("evaluate on fixed inputs") {
  IndependencePolynomial p{std::vector<mpz_class>{1, 2}};
  CHECK(evaluate(p, mpq_class(1)) == 3);
  CHECK(evaluate(p, mpq_class(1, 2)) == 2);
  IndependencePolynomial c5 = independence_polynomial(cycle_graph(5));
  CHECK(c5.coeffs == std::vector<mpz_class>{1, 5, 5});
  CHECK(evaluate(c5, mpq_class(2)) == 31);
}

TEST_CASE("bigraph polynomial on K_{1,1} is 1 + x + y") {
  BigraphPolynomial p = bigraph_polynomial(complete_bipartite(1, 1));
  REQUIRE(p.coeffs.size() == 2);
  CHECK(p.coeffs[0][0] == 1);
  CHECK(p.coeffs[1][0] == 1);
  CHECK(p.coeffs[0][1] == 1);
  CHECK(p.coeffs[1][1] == 0);
  mpq_class l(2, 3), m(5, 7);
  CHECK(evaluate2(p, l, m) == 1 + l + m);
}

TEST_CASE("bigraph polynomial: recursion matches enumeration and collapses correctly") {
  std::mt19937 rng(43);
  int rounds = 0;
  while (rounds < 25) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 8), 0.3, rng);
    auto bg = bipartition(g);
    if (!bg) continue;
    ++rounds;
    BigraphPolynomial fast = bigraph_polynomial(*bg);
    BigraphPolynomial slow = bigraph_polynomial_enumerated(*bg);
    CHECK(fast == slow);
    CHECK(fast.coeffs[0][0] == 1);
    CHECK(fast.total() == count_independent_sets(g));
    // equal weights collapse to the one-variable polynomial
    IndependencePolynomial one_var = independence_polynomial(g);
    mpq_class lambda(4, 5);
    CHECK(evaluate2(fast, lambda, lambda) == evaluate(one_var, lambda));
    CHECK(evaluate2(fast, mpq_class(1), mpq_class(1)) ==
          mpq_class(count_independent_sets(g)));
    // the mu = 1 specialization is the generating polynomial of the
    // row marginals (set sizes counted on the A side only)
    mpq_class row_value = 0;
    mpq_class power(1);
    for (const auto& row : fast.coeffs) {
      mpz_class row_sum = 0;
      for (const mpz_class& c : row) row_sum += c;
      row_value += power * mpq_class(row_sum);
      power *= lambda;
    }
    CHECK(evaluate2(fast, lambda, mpq_class(1)) == row_value);
  }
}

TEST_CASE("enumeration is ordered, complete, and independent") {
  Graph k2 = clique(2);
  std::vector<VertexSet> sets;
  for_each_independent_set(k2, [&](VertexSet s) { sets.push_back(s); });
  CHECK(sets == std::vector<VertexSet>{0, 1, 2});

  std::mt19937 rng(47);
  for (int round = 0; round < 20; ++round) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 10), 0.4, rng);
    std::vector<VertexSet> all = independent_sets(g);
    CHECK(mpz_class(static_cast<long>(all.size())) == count_independent_sets(g));
    for (std::size_t k = 0; k + 1 < all.size(); ++k) CHECK(all[k] < all[k + 1]);
    for (VertexSet s : all) CHECK(is_independent_set(g, s));
  }
  CHECK_THROWS_AS(for_each_independent_set(Graph(31), [](VertexSet) {}), CapacityError);
}

TEST_CASE("polynomial JSON uses decimal strings") {
  nlohmann::json j = to_json(independence_polynomial(cycle_graph(5)));
  CHECK(j == nlohmann::json::array({"1", "5", "5"}));
  nlohmann::json g = to_json(bigraph_polynomial(complete_bipartite(1, 1)));
  CHECK(g["part_a"] == 1);
  CHECK(g["part_b"] == 1);
  CHECK(g["coeffs"] == nlohmann::json::array({{"1", "1"}, {"1", "0"}}));
}
