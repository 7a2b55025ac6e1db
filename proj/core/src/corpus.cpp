#include "iset/corpus.hpp"

#include <sstream>

namespace iset {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kExhaustive: return "exhaustive-n";
    case Provenance::kNamed: return "named";
    case Provenance::kRegular: return "regular-(n,d)";
    case Provenance::kFile: return "file";
  }
  return "unknown";
}

Graph labeled_graph_from_mask(int n, std::uint64_t edge_mask) {
  Graph g(n);
  int bit = 0;
  for (int column = 1; column < n; ++column) {
    for (int row = 0; row < column; ++row, ++bit) {
      if ((edge_mask >> bit) & 1) g.add_edge(row, column);
    }
  }
  return g;
}

std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

std::string exhaustive_id(int n, std::uint64_t mask) {
  return "n" + std::to_string(n) + "-" + std::to_string(mask);
}

std::vector<CorpusEntry> generate_exhaustive(int n) {
  std::vector<CorpusEntry> tier;
  tier.reserve(labeled_graph_count(n));
  std::uint64_t mask = 0;
  for_each_labeled_graph(n, [&](Graph g) {
    tier.push_back(CorpusEntry{exhaustive_id(n, mask), std::move(g), Provenance::kExhaustive});
    ++mask;
  });
  return tier;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int k = 0; k < 5; ++k) {
    g.add_edge(k, (k + 1) % 5);          // outer 5-cycle
    g.add_edge(k, k + 5);                // spokes
    g.add_edge(5 + k, 5 + (k + 2) % 5);  // inner pentagram
  }
  return g;
}

std::vector<CorpusEntry> named_corpus() {
  std::vector<CorpusEntry> tier;
  auto add = [&](std::string id, Graph g) {
    tier.push_back(CorpusEntry{std::move(id), std::move(g), Provenance::kNamed});
  };

  for (int d = 1; d <= 5; ++d) {
    add("k" + std::to_string(d) + "x" + std::to_string(d), complete_bipartite(d, d).graph);
  }
  for (int n = 1; n <= 6; ++n) add("k" + std::to_string(n), clique(n));
  for (int k = 2; k <= 5; ++k) add("k1x" + std::to_string(k), complete_bipartite(1, k).graph);
  for (int n = 1; n <= 12; ++n) add("p" + std::to_string(n), path_graph(n));
  for (int n = 3; n <= 12; ++n) add("c" + std::to_string(n), cycle_graph(n));
  add("petersen", petersen_graph());
  add("k2x3", complete_bipartite(2, 3).graph);
  add("k3x4", complete_bipartite(3, 4).graph);

  Graph k33 = complete_bipartite(3, 3).graph;
  Graph k22 = complete_bipartite(2, 2).graph;
  add("k3x3+k3x3", disjoint_union(k33, k33));
  add("k2x2+k2x2", disjoint_union(k22, k22));
  add("k1x1+k1", disjoint_union(complete_bipartite(1, 1).graph, clique(1)));
  add("k4+k2", disjoint_union(clique(4), clique(2)));
  add("k3+k1", disjoint_union(clique(3), clique(1)));
  add("c5+c5", disjoint_union(cycle_graph(5), cycle_graph(5)));
  add("c4+k1+k1", disjoint_union(disjoint_union(cycle_graph(4), clique(1)), clique(1)));
  add("p4+k1x2", disjoint_union(path_graph(4), complete_bipartite(1, 2).graph));
  add("k2x3+k3", disjoint_union(complete_bipartite(2, 3).graph, clique(3)));
  return tier;
}

std::vector<std::pair<mpq_class, mpq_class>> RunConfig::weight_grid() const {
  std::vector<std::pair<mpq_class, mpq_class>> grid;
  for (const mpq_class& lambda : bigraph_weights)
    for (const mpq_class& mu : bigraph_weights) grid.emplace_back(lambda, mu);
  return grid;
}

void RunConfig::validate() const {
  if (max_exhaustive_n < 0 || max_exhaustive_n > 7) {
    throw DomainError("max_exhaustive_n must be in [0, 7]");
  }
  if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
  if (parallelism < 0) throw DomainError("parallelism must be >= 0");
  for (const mpq_class& v : lambdas)
    if (v <= 0) throw DomainError("lambdas must be positive");
  for (const mpq_class& v : bigraph_weights)
    if (v <= 0) throw DomainError("bigraph weights must be positive");
}

namespace {

std::string trim(std::string s) {
  auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  std::size_t b = 0, e = s.size();
  while (b < e && issp(s[b])) ++b;
  while (e > b && issp(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<mpq_class> parse_rational_list(const std::string& value) {
  std::vector<mpq_class> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    mpq_class q;
    if (q.set_str(item, 10) != 0 || q.get_den() == 0) {
      throw DomainError("bad rational: '" + item + "'");
    }
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long parsed = std::stol(value, &used);
    if (used != value.size()) throw DomainError("");
    return parsed;
  } catch (const std::exception&) {
    throw DomainError("bad integer for " + key + ": '" + value + "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double parsed = std::stod(value, &used);
    if (used != value.size()) throw DomainError("");
    return parsed;
  } catch (const std::exception&) {
    throw DomainError("bad number for " + key + ": '" + value + "'");
  }
}

}  // namespace

RunConfig parse_run_config(std::string_view text) {
  RunConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("config line missing '=': " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "max_exhaustive_n") {
      config.max_exhaustive_n = static_cast<int>(parse_long(key, value));
    } else if (key == "include_named") {
      config.include_named = value == "true" || value == "1" || value == "yes";
    } else if (key == "lambdas") {
      config.lambdas = parse_rational_list(value);
    } else if (key == "bigraph_weights") {
      config.bigraph_weights = parse_rational_list(value);
    } else if (key == "tolerance") {
      config.tolerance = parse_double(key, value);
    } else if (key == "parallelism") {
      config.parallelism = static_cast<int>(parse_long(key, value));
    } else if (key == "out_dir") {
      config.out_dir = value;
    } else if (key == "format") {
      if (value == "json") config.format = RunConfig::Format::kJson;
      else if (value == "csv") config.format = RunConfig::Format::kCsv;
      else throw DomainError("format must be json or csv");
    } else {
      throw DomainError("unknown config key: " + key);
    }
  }
  config.validate();
  return config;
}

}  // namespace iset
