#include "iset/corpus.hpp"

#include <set>

#include "doctest.h"
#include "iset/counting.hpp"

using namespace iset;

TEST_CASE("exhaustive tiers") {
  CHECK(generate_exhaustive(3).size() == 8);
  CHECK(generate_exhaustive(4).size() == 64);
  CHECK(labeled_graph_count(6) == 32768);

  // deterministic ids in ascending mask order
  auto tier = generate_exhaustive(3);
  CHECK(tier.front().id == "n3-0");
  CHECK(tier.back().id == "n3-7");
  CHECK(tier.front().graph.edge_count() == 0);
  CHECK(tier.back().graph.edge_count() == 3);
  for (const CorpusEntry& e : tier) CHECK(e.provenance == Provenance::kExhaustive);

  CHECK_THROWS_AS(generate_exhaustive(8), CapacityError);
  CHECK_THROWS_AS(generate_exhaustive(0), CapacityError);
}

TEST_CASE("every labeled 4-vertex graph appears exactly once") {
  std::set<std::vector<std::uint64_t>> seen;
  for_each_labeled_graph(4, [&](const Graph& g) {
    std::vector<std::uint64_t> key;
    for (int v = 0; v < 4; ++v) key.push_back(g.neighbors(v));
    CHECK(seen.insert(key).second);
  });
  CHECK(seen.size() == 64);
}

TEST_CASE("named corpus fixtures") {
  std::vector<CorpusEntry> named = named_corpus();
  std::set<std::string> ids;
  for (const CorpusEntry& e : named) {
    CHECK(ids.insert(e.id).second);  // unique ids
    CHECK(e.provenance == Provenance::kNamed);
    CHECK(e.graph.vertex_count() >= 1);
  }
  CHECK(ids.count("petersen") == 1);
  CHECK(ids.count("k3x3+k3x3") == 1);
  CHECK(ids.count("k1x1+k1") == 1);
  CHECK(ids.count("c12") == 1);
  CHECK(ids.count("k5x5") == 1);

  for (const CorpusEntry& e : named) {
    if (e.id == "petersen") CHECK(count_independent_sets(e.graph) == 76);
    if (e.id == "k3x3+k3x3") {
      CHECK(e.graph.vertex_count() == 12);
      CHECK(count_independent_sets(e.graph) == 15 * 15);
    }
    if (e.id == "k1x1+k1") CHECK(isolated_count(e.graph) == 1);
  }
}

TEST_CASE("run config parsing") {
  RunConfig config = parse_run_config(
      "# comment\n"
      "max_exhaustive_n = 4\n"
      "include_named = false\n"
      "lambdas = 1/2, 1, 2\n"
      "bigraph_weights = 1, 2\n"
      "tolerance = 1e-8\n"
      "parallelism = 2\n"
      "format = csv\n");
  CHECK(config.max_exhaustive_n == 4);
  CHECK_FALSE(config.include_named);
  REQUIRE(config.lambdas.size() == 3);
  CHECK(config.lambdas[0] == mpq_class(1, 2));
  CHECK(config.bigraph_weights.size() == 2);
  CHECK(config.weight_grid().size() == 4);
  CHECK(config.tolerance == 1e-8);
  CHECK(config.parallelism == 2);
  CHECK(config.format == RunConfig::Format::kCsv);

  CHECK_THROWS_AS(parse_run_config("max_exhaustive_n = 9\n"), DomainError);
  CHECK_THROWS_AS(parse_run_config("tolerance = 0\n"), DomainError);
  CHECK_THROWS_AS(parse_run_config("mystery = 1\n"), DomainError);
  CHECK_THROWS_AS(parse_run_config("lambdas = -1\n"), DomainError);
  CHECK_THROWS_AS(parse_run_config("format = yaml\n"), DomainError);
}

TEST_CASE("default config matches the documented defaults") {
  RunConfig config;
  CHECK(config.max_exhaustive_n == 6);
  CHECK(config.include_named);
  CHECK(config.lambdas.size() == 4);
  CHECK(config.bigraph_weights.size() == 3);
  CHECK(config.tolerance == 1e-9);
  config.validate();
}
