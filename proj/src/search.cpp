#include "ddp/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ddp/bounds.hpp"

namespace ddp {

namespace {

struct Dfs {
  int n, k, d;
  bool prune;
  long long budget;
  long long nodes = 0;
  bool aborted = false;
  std::vector<std::vector<bool>> adj;
  std::vector<int> deg;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> winner;  // edge set at the moment of success
  std::vector<long long> tree;  // tree[h] = 1 + (k-1) + ... + (k-1)^h

  Dfs(int n_, int k_, int d_, bool prune_, long long budget_)
      : n(n_), k(k_), d(d_), prune(prune_), budget(budget_),
        adj(n_, std::vector<bool>(n_, false)), deg(n_, 0) {
    tree.resize(d + 1);
    long long acc = 0, pw = 1;
    for (int h = 0; h <= d; ++h) {
      acc += pw;
      pw *= k - 1;
      tree[h] = acc;
    }
  }

  // dist from src in the current partial graph; -1 unreachable
  void bfs(int src, std::vector<int>& dist) const {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue;
    queue.reserve(n);
    dist[src] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v = 0; v < n; ++v) {
        if (adj[u][v] && dist[v] == -1) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }

  bool feasible_now(std::vector<int>& dist) const {
    if (n == 1) return true;
    if (static_cast<int>(edges.size()) < n - 1) return false;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 0) return false;
    }
    for (int v = 0; v < n; ++v) {
      bfs(v, dist);
      for (int u = 0; u < n; ++u) {
        if (dist[u] == -1 || dist[u] > d) return false;
      }
    }
    return true;
  }

  // No supergraph on these n vertices with max degree k can reach every
  // vertex from v in d hops if even the optimistic count falls short: the
  // current d-ball plus, for every u within d-1, the (k - deg(u)) spare
  // slots each growing a (k-1)-ary tree of the remaining depth.
  bool may_complete(std::vector<int>& dist) const {
    for (int v = 0; v < n; ++v) {
      bfs(v, dist);
      long long reach = 0;
      for (int u = 0; u < n; ++u) {
        if (dist[u] != -1 && dist[u] <= d) ++reach;
      }
      if (reach >= n) continue;
      long long extra = 0;
      for (int u = 0; u < n; ++u) {
        if (dist[u] != -1 && dist[u] <= d - 1)
          extra += static_cast<long long>(k - deg[u]) * tree[d - dist[u] - 1];
      }
      if (reach + extra < n) return false;
    }
    return true;
  }

  // Edges are inserted in strictly increasing lexicographic order, so every
  // graph on the fixed vertex set is generated exactly once.
  bool run(int lu, int lv, std::vector<int>& dist) {
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    if (feasible_now(dist)) {
      winner = edges;
      return true;
    }
    if (prune && !may_complete(dist)) return false;
    for (int u = lu; u < n; ++u) {
      if (deg[u] >= k) continue;
      for (int v = (u == lu ? lv + 1 : u + 1); v < n; ++v) {
        if (deg[v] >= k || adj[u][v]) continue;
        adj[u][v] = adj[v][u] = true;
        ++deg[u];
        ++deg[v];
        edges.emplace_back(u, v);
        bool found = run(u, v, dist);
        edges.pop_back();
        --deg[u];
        --deg[v];
        adj[u][v] = adj[v][u] = false;
        if (found || aborted) return found;
      }
    }
    return false;
  }
};

}  // namespace

SearchResult max_order_search(int k, int d, int n_cap, long long budget, bool prune) {
  if (k != 2 && k != 3) throw std::invalid_argument("supported degrees are 2 and 3");
  if (d < 1) throw std::invalid_argument("diameter must be at least 1");
  if (n_cap < 1 || n_cap > 12) throw std::invalid_argument("order cap must be in [1, 12]");
  if (budget < 1) throw std::invalid_argument("budget must be positive");

  mpz_class moore = moore_bound(Params(k, d));

  SearchResult res;
  res.k = k;
  res.d = d;
  long long spent = 0;
  bool aborted = false;

  for (int n = n_cap; n >= 1; --n) {
    if (prune && moore < n) continue;  // no diameter-d graph can be this big
    Dfs dfs(n, k, d, prune, budget - spent);
    std::vector<int> dist(n);
    bool found = dfs.run(0, 0, dist);
    spent += dfs.nodes;
    if (dfs.aborted) {
      aborted = true;
      break;
    }
    if (found) {
      res.best_order = n;
      res.witness = Graph::from_edges(n, dfs.winner);
      break;
    }
  }

  if (res.best_order == 0) {
    // either everything above order 1 was refuted or the budget ran out;
    // the one-vertex graph is always feasible
    res.best_order = 1;
    res.witness = Graph::from_edges(1, {});
  }
  res.nodes_explored = spent;
  res.exhaustive = !aborted;
  return res;
}

bool verify_extremal(int k, int d) {
  bool supported = (k == 2 && d >= 1 && d <= 5) || (k == 3 && d == 2);
  if (!supported) throw std::invalid_argument("supported parameters: k=2 with d in [1,5], (3,2)");

  mpz_class moore = moore_bound(Params(k, d));
  int known = k == 2 ? 2 * d + 1 : 10;
  int cap = static_cast<int>(std::min(mpz_class(12), moore).get_si());

  SearchResult res = max_order_search(k, d, cap);
  auto prof = degree_profile(res.witness);
  auto diam = diameter(res.witness);
  bool witness_ok = res.witness.order() == res.best_order && prof.max_degree <= k &&
                    diam && *diam <= d;
  if (!witness_ok) return false;
  if (res.best_order == moore) return true;
  return res.exhaustive && res.best_order == known;
}

}  // namespace ddp
