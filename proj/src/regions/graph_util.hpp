#ifndef QINJ_SRC_REGIONS_GRAPH_UTIL_HPP
#define QINJ_SRC_REGIONS_GRAPH_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace qinj::detail {

struct WeightedEdge {
  int from = 0;
  int to = 0;
  std::int64_t weight = 0;
  int tag = 0;
};

// Tarjan's strongly connected components; returns the component of every node.
inline std::vector<int> strongly_connected(int n, const std::vector<WeightedEdge>& edges,
                                           int* count = nullptr) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) adj[e.from].push_back(e.to);
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0;
  int next_comp = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
      } while (w != v);
      ++next_comp;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  if (count) *count = next_comp;
  return comp;
}

// Bellman-Ford longest-path relaxation from a virtual source; returns the
// edges (positions into `edges`, in walk order) of a cycle with positive total
// weight, if one exists.
inline std::optional<std::vector<int>> positive_cycle(int n,
                                                      const std::vector<WeightedEdge>& edges) {
  if (n == 0 || edges.empty()) return std::nullopt;
  std::vector<std::int64_t> dist(n, 0);
  std::vector<int> pred(n, -1);
  int relaxed = -1;
  for (int round = 0; round < n; ++round) {
    relaxed = -1;
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
      const auto& e = edges[k];
      if (dist[e.from] + e.weight > dist[e.to]) {
        dist[e.to] = dist[e.from] + e.weight;
        pred[e.to] = k;
        relaxed = e.to;
      }
    }
    if (relaxed < 0) return std::nullopt;
  }
  int v = relaxed;
  for (int k = 0; k < n; ++k) v = edges[pred[v]].from;
  std::vector<int> cycle;
  int u = v;
  do {
    const int k = pred[u];
    cycle.push_back(k);
    u = edges[k].from;
  } while (u != v);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

// Whether the component restricted graph admits a closed walk of total weight
// exactly zero (some cycle with weight >= 0 and some with weight <= 0).
inline bool zero_closed_walk(int n, const std::vector<WeightedEdge>& edges) {
  int count = 0;
  const auto comp = strongly_connected(n, edges, &count);
  for (int c = 0; c < count; ++c) {
    std::vector<WeightedEdge> nonneg, nonpos;
    for (const auto& e : edges) {
      if (comp[e.from] != c || comp[e.to] != c) continue;
      nonneg.push_back({e.from, e.to, (n + 1) * e.weight + 1, e.tag});
      nonpos.push_back({e.from, e.to, -(n + 1) * e.weight + 1, e.tag});
    }
    if (positive_cycle(n, nonneg) && positive_cycle(n, nonpos)) return true;
  }
  return false;
}

}  // namespace qinj::detail

#endif  // QINJ_SRC_REGIONS_GRAPH_UTIL_HPP
