#include "ddp/corpus.hpp"

#include <charconv>
#include <stdexcept>

namespace ddp {

namespace {

std::vector<std::pair<int, int>> sorted_pairs(std::vector<std::pair<int, int>> e) {
  for (auto& [u, v] : e) {
    if (u > v) std::swap(u, v);
  }
  return e;
}

}  // namespace

Graph petersen() {
  // Kneser graph on the 2-subsets of {0..4}, lexicographically indexed;
  // adjacent iff disjoint.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < subsets.size(); ++i) {
    for (size_t j = i + 1; j < subsets.size(); ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph::from_edges(10, edges);
}

Graph heawood() {
  // Incidence graph of the Fano plane built from the difference set {0,1,3}:
  // points 0..6, line i = {i, i+1, i+3} mod 7 as vertex 7+i.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 7; ++i) {
    for (int off : {0, 1, 3}) edges.emplace_back((i + off) % 7, 7 + i);
  }
  return Graph::from_edges(14, sorted_pairs(edges));
}

Graph hoffman_singleton() {
  // Five pentagons P_h and five pentagrams Q_i; vertex j of P_h joined to
  // vertex (h*i + j) mod 5 of Q_i.
  auto p = [](int h, int j) { return 5 * h + j; };
  auto q = [](int i, int j) { return 25 + 5 * i + j; };
  std::vector<std::pair<int, int>> edges;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) edges.emplace_back(p(h, j), p(h, (j + 1) % 5));
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) edges.emplace_back(q(i, j), q(i, (j + 2) % 5));
  }
  for (int h = 0; h < 5; ++h) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) edges.emplace_back(p(h, j), q(i, (h * i + j) % 5));
    }
  }
  return Graph::from_edges(50, sorted_pairs(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph k33() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(6, edges);
}

namespace {

int family_arg(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0 || name.back() != ')') return -1;
  std::string_view num(name.data() + prefix.size(), name.size() - prefix.size() - 1);
  int n = 0;
  auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  return ec == std::errc() && p == num.data() + num.size() ? n : -1;
}

}  // namespace

Graph corpus_graph(const std::string& name) {
  if (name == "petersen") return petersen();
  if (name == "heawood") return heawood();
  if (name == "hoffman_singleton") return hoffman_singleton();
  if (name == "k33") return k33();
  if (!name.empty()) {
    if (int n = family_arg(name, "complete("); n >= 0) return complete_graph(n);
    if (int n = family_arg(name, "cycle("); n >= 0) return cycle_graph(n);
  }
  throw std::invalid_argument("unknown corpus graph '" + name + "'");
}

std::vector<std::string> corpus_names() {
  return {"petersen", "heawood", "hoffman_singleton", "k33", "complete(n)", "cycle(n)"};
}

}  // namespace ddp
