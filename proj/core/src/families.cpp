#include "domgame/families.hpp"

#include <charconv>
#include <string>

#include "domgame/error.hpp"

namespace domgame {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InputError(std::string("family parameter out of range: ") + what);
}

int parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("bad family parameter '" + std::string(s) + "'");
  }
  return value;
}

Graph c5_with(std::initializer_list<int> attach) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  for (int v : attach) edges.emplace_back(v, 5);
  return Graph::from_edges(6, edges);
}

Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph::from_edges(10, edges);
}

Graph mycielski_complete(int k) {
  require(k >= 2, "mycielski_complete needs k >= 2");
  const int centre = 2 * k;
  std::vector<Edge> edges;
  for (int j = 0; j < k; ++j) edges.emplace_back(centre, j);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i < j) edges.emplace_back(k + i, k + j);
      if (i != j) edges.emplace_back(k + i, j);
    }
  }
  return Graph::from_edges(2 * k + 1, edges);
}

Graph h_graph(int k, int t) {
  require(k >= 4, "h_graph needs k >= 4");
  require(t == 2 || t == 3, "h_graph needs t in {2, 3}");
  const int u = 0;
  const int v = k;
  const int w = 2 * k;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) edges.emplace_back(i, k + j);
  }
  for (int i = 0; i < 2 * k; ++i) edges.emplace_back(w, i);
  std::vector<int> extra;
  for (int i = 0; i < t; ++i) extra.push_back(2 * k + 1 + i);
  for (std::size_t i = 0; i < extra.size(); ++i) {
    edges.emplace_back(extra[i], u);
    edges.emplace_back(extra[i], v);
    for (std::size_t j = i + 1; j < extra.size(); ++j) edges.emplace_back(extra[i], extra[j]);
  }
  return Graph::from_edges(2 * k + 1 + t, edges);
}

Graph family_build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kCycle: return cycle(spec.a);
    case Family::kPath: return path(spec.a);
    case Family::kComplete: return complete(spec.a);
    case Family::kCompleteBipartite: return complete_bipartite(spec.a, spec.b);
    case Family::kPetersen: return petersen();
    case Family::kMycielskiComplete: return mycielski_complete(spec.a);
    case Family::kHGraph: return h_graph(spec.a, spec.b == 0 ? 2 : spec.b);
  }
  throw InputError("unknown family");
}

Graph family_from_string(std::string_view text) {
  std::string_view name = text;
  std::vector<int> params;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      params.push_back(parse_int(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  auto param = [&](std::size_t i) {
    if (i >= params.size()) throw InputError("family '" + std::string(name) + "' needs more parameters");
    return params[i];
  };
  auto expect_params = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw InputError("wrong parameter count for family '" + std::string(name) + "'");
    }
  };

  if (name == "cycle") return expect_params(1, 1), cycle(param(0));
  if (name == "path") return expect_params(1, 1), path(param(0));
  if (name == "complete") return expect_params(1, 1), complete(param(0));
  if (name == "complete_bipartite") return expect_params(2, 2), complete_bipartite(param(0), param(1));
  if (name == "mycielski_complete") return expect_params(1, 1), mycielski_complete(param(0));
  if (name == "h_graph") return expect_params(1, 2), h_graph(param(0), params.size() > 1 ? param(1) : 2);
  expect_params(0, 0);
  if (name == "petersen") return petersen();
  for (auto& fixture : named_fixtures()) {
    if (fixture.name == name) return fixture.graph;
  }
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::vector<NamedGraph> named_fixtures() {
  return {
      {"c4", cycle(4)},
      {"c5", cycle(5)},
      {"c5_ear", c5_with({2, 4})},
      {"c5_ear_split", c5_with({1, 2, 4})},
      {"c5_ear_fan", c5_with({2, 3, 4})},
      {"k33", complete_bipartite(3, 3)},
      {"prism", prism()},
      {"petersen", petersen()},
  };
}

std::vector<std::string> family_usage() {
  return {
      "cycle:n               C_n, n >= 3",
      "path:n                P_n, n >= 1",
      "complete:n            K_n, n >= 1",
      "complete_bipartite:a,b  K_{a,b}",
      "petersen              Petersen graph",
      "mycielski_complete:k  Mycielskian of K_k, k >= 2 (n = 2k+1)",
      "h_graph:k[,t]         H_k with xy edge (t=2) or xyz triangle (t=3), k >= 4",
      "c4 c5 c5_ear c5_ear_split c5_ear_fan k33 prism",
      "                      fixed graphs with gamma_g = ceil(n/2)",
  };
}

}  // namespace domgame
