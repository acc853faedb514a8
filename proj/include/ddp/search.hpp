#pragma once

#include "ddp/graph.hpp"

namespace ddp {

struct SearchResult {
  int k = 0;
  int d = 0;
  int best_order = 0;
  Graph witness;              // graph attaining best_order
  bool exhaustive = false;    // every order above best_order fully refuted
  long long nodes_explored = 0;
};

inline constexpr long long kDefaultSearchBudget = 20'000'000;

// Largest order of a connected graph with maximum degree k and diameter <= d,
// over all orders up to n_cap. Exact orderly edge-augmentation search;
// supported for k in {2, 3} and n_cap <= 12. prune = false turns off the
// ball-counting feasibility prune and the Moore-bound order skip (used to
// validate their soundness); the degree cap and the sorted-insertion
// generation order are part of the problem statement, not prunes.
SearchResult max_order_search(int k, int d, int n_cap,
                              long long budget = kDefaultSearchBudget,
                              bool prune = true);

// Search-backed confirmation that the known extremal order for (k, d) is
// correct. Supported: k = 2 with d <= 5, and (3, 2).
bool verify_extremal(int k, int d);

}  // namespace ddp
