#include "ddp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "ddp/parallel.hpp"

namespace ddp {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_long(std::string_view tok, int lineno, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(lineno, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return v;
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  Graph g;
  g.n_ = n;
  g.m_ = static_cast<long>(edges.size());
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge");
  }
  return g;
}

Graph Graph::parse_edge_list(std::string_view text) {
  int lineno = 0;
  bool have_header = false;
  long n = 0, m = 0;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;

  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;

    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') continue;

    if (!have_header) {
      if (toks.size() != 2) throw ParseError(lineno, "header must be 'n m'");
      n = parse_long(toks[0], lineno, "vertex count");
      m = parse_long(toks[1], lineno, "edge count");
      if (n < 1) throw ParseError(lineno, "vertex count must be positive");
      if (m < 0) throw ParseError(lineno, "edge count must be nonnegative");
      if (n > 1'000'000) throw ParseError(lineno, "vertex count too large");
      have_header = true;
      continue;
    }

    if (toks.size() != 2) throw ParseError(lineno, "edge line must be 'u v'");
    long u = parse_long(toks[0], lineno, "vertex");
    long v = parse_long(toks[1], lineno, "vertex");
    if (u < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
    if (u >= v) throw ParseError(lineno, "edges must satisfy u < v");
    if (static_cast<long>(edges.size()) == m) throw ParseError(lineno, "more edges than declared");
    auto e = std::make_pair(static_cast<int>(u), static_cast<int>(v));
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(e);
  }

  if (!have_header) throw ParseError(lineno + 1, "missing 'n m' header");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(lineno + 1, "fewer edges than declared");
  return from_edges(static_cast<int>(n), edges);
}

Graph Graph::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string Graph::to_edge_list() const {
  std::string out = std::to_string(n_) + " " + std::to_string(m_) + "\n";
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v > u) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
  }
  return out;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

DegreeProfile degree_profile(const Graph& g) {
  int lo = g.order() ? g.degree(0) : 0;
  int hi = lo;
  for (int v = 1; v < g.order(); ++v) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  return {lo, hi, lo == hi};
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.order(), -1);
  std::vector<int> queue;
  queue.reserve(g.order());
  dist[src] = 0;
  queue.push_back(src);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<int> queue;
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  // From each root, the shortest cycle candidate dist(u) + dist(v) + 1 over
  // non-tree edges (u,v) never undercounts, and a root on a shortest cycle
  // attains it, so the minimum over roots is exact.
  std::vector<int> best(n, -1);
  parallel_for(n, [&](int r) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> queue;
    dist[r] = 0;
    queue.push_back(r);
    int local = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          int cand = dist[u] + dist[v] + 1;
          if (local == -1 || cand < local) local = cand;
        }
      }
    }
    best[r] = local;
  });
  int g_min = -1;
  for (int v : best) {
    if (v != -1 && (g_min == -1 || v < g_min)) g_min = v;
  }
  if (g_min == -1) return std::nullopt;
  return g_min;
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  std::vector<int> ecc(n, -1);
  parallel_for(n, [&](int r) {
    auto dist = bfs_distances(g, r);
    int e = 0;
    for (int dv : dist) {
      if (dv == -1) {
        e = -1;
        break;
      }
      e = std::max(e, dv);
    }
    ecc[r] = e;
  });
  int diam = 0;
  for (int e : ecc) {
    if (e == -1) return std::nullopt;
    diam = std::max(diam, e);
  }
  return diam;
}

DistanceDecomposition distance_decomposition(const Graph& g, int d) {
  const int n = g.order();
  if (d < 0) throw std::invalid_argument("layer count must be nonnegative");
  if (n > kDenseOrderCap) throw std::invalid_argument("graph too large for dense decomposition");
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  if (static_cast<long long>(d + 1) * n * n > 2'000'000'000LL)
    throw std::invalid_argument("decomposition would exceed the memory cap");

  DistanceDecomposition out;
  out.d = d;
  out.layers.assign(d + 1, ByteMatrix(n, std::vector<std::uint8_t>(n, 0)));
  std::vector<std::pair<int, int>> far(n, {-1, -1});  // per-root first pair beyond d
  parallel_for(n, [&](int u) {
    auto dist = bfs_distances(g, u);
    for (int v = 0; v < n; ++v) {
      if (dist[v] <= d) {
        out.layers[dist[v]][u][v] = 1;
      } else if (far[u].first == -1) {
        far[u] = {v, dist[v]};
      }
    }
  });
  out.sum_to_j = true;
  for (int u = 0; u < n; ++u) {
    if (far[u].first != -1) {
      out.sum_to_j = false;
      out.detail = "dist(" + std::to_string(u) + "," + std::to_string(far[u].first) +
                   ") = " + std::to_string(far[u].second) + " exceeds " + std::to_string(d);
      break;
    }
  }
  return out;
}

}  // namespace ddp
