#include "ddp/walks.hpp"

#include <cmath>
#include <stdexcept>

#include "ddp/parallel.hpp"

namespace ddp {

namespace {

// Depth-first enumeration of walks from `v` that never reverse the edge just
// used; every endpoint at every remaining depth contributes one count.
void extend(const Graph& g, int v, int prev, int remaining, std::vector<long long>& cnt) {
  if (remaining == 0) return;
  for (int u : g.neighbors(v)) {
    if (u == prev) continue;
    ++cnt[u];
    extend(g, u, v, remaining - 1, cnt);
  }
}

}  // namespace

IntMatrix nb_walk_counts(const Graph& g, int i) {
  if (i < 0) throw std::invalid_argument("walk length must be nonnegative");
  if (i > 6) throw std::invalid_argument("walk enumeration is capped at length 6");
  auto prof = degree_profile(g);
  if (!prof.regular) throw std::invalid_argument("walk oracle needs a regular graph");

  const int n = g.order();
  double leaves = static_cast<double>(n) * std::pow(static_cast<double>(prof.max_degree),
                                                    static_cast<double>(i));
  if (leaves > 2e8)
    throw std::invalid_argument("walk enumeration too large for these parameters");
  IntMatrix out(n, n);
  parallel_for(n, [&](int s) {
    std::vector<long long> cnt(n, 0);
    cnt[s] = 1;  // the empty walk
    extend(g, s, -1, i, cnt);
    for (int v = 0; v < n; ++v) out.at(s, v) = static_cast<long>(cnt[v]);
  });
  return out;
}

}  // namespace ddp
