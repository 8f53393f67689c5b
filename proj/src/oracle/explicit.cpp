#include <algorithm>
#include <cstdlib>
#include <functional>
#include <unordered_map>

#include "qinj/oracle.hpp"

namespace qinj::oracle {

std::optional<std::size_t> ExplicitQuiver::find(const std::string& vertex) const {
  auto it = std::find(vertices.begin(), vertices.end(), vertex);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t ExplicitQuiver::at(const std::string& vertex) const {
  auto v = find(vertex);
  if (!v) throw std::out_of_range("no vertex " + vertex + " in the explicit quiver");
  return *v;
}

ExplicitQuiver expand(const QuiverDescription& q, std::int64_t radius) {
  ExplicitQuiver g;
  std::unordered_map<std::string, std::size_t> ids;
  auto add = [&](std::string id) {
    ids.emplace(id, g.vertices.size());
    g.vertices.push_back(std::move(id));
  };
  for (const auto& c : q.cores()) add("v:" + c);
  for (const auto& r : q.rays()) {
    for (std::int64_t i = r.domain == Domain::kNat ? 0 : -radius; i <= radius; ++i) {
      add("r:" + r.name + ":" + std::to_string(i));
    }
  }
  auto name = [&](const Endpoint& e, std::int64_t i) -> std::string {
    const std::string& node = q.node_name(e.node);
    switch (e.kind) {
      case Endpoint::Kind::kCore: return "v:" + node;
      case Endpoint::Kind::kRayConst: return "r:" + node + ":" + std::to_string(e.value);
      case Endpoint::Kind::kRayShift: return "r:" + node + ":" + std::to_string(i + e.value);
    }
    return {};
  };
  auto connect = [&](const std::string& label, const std::string& s, const std::string& t) {
    auto si = ids.find(s);
    auto ti = ids.find(t);
    if (si != ids.end() && ti != ids.end()) g.arrows.push_back({label, si->second, ti->second});
  };
  for (const auto& a : q.singles()) connect(a.label, name(a.source, 0), name(a.target, 0));
  for (const auto& f : q.families()) {
    const std::int64_t reach = radius + std::abs(f.source.value) + std::abs(f.target.value) + 1;
    for (std::int64_t i = -reach; i <= reach; ++i) {
      if (!f.all_indices && i < f.lower) continue;
      connect(f.label + "@" + std::to_string(i), name(f.source, i), name(f.target, i));
    }
  }
  return g;
}

namespace {

std::vector<std::vector<std::size_t>> outgoing(const ExplicitQuiver& g) {
  std::vector<std::vector<std::size_t>> out(g.vertices.size());
  for (std::size_t a = 0; a < g.arrows.size(); ++a) out[g.arrows[a].source].push_back(a);
  return out;
}

std::vector<std::size_t> closure(const ExplicitQuiver& g, std::size_t v, bool forward) {
  std::vector<bool> seen(g.vertices.size(), false);
  std::vector<std::size_t> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& a : g.arrows) {
      const std::size_t from = forward ? a.source : a.target;
      const std::size_t to = forward ? a.target : a.source;
      if (from == x && !seen[to]) {
        seen[to] = true;
        stack.push_back(to);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < seen.size(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

}  // namespace

void require_acyclic(const ExplicitQuiver& g) {
  // 0 unvisited, 1 on the stack, 2 done
  std::vector<int> state(g.vertices.size(), 0);
  const auto out = outgoing(g);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    for (std::size_t a : out[v]) {
      const std::size_t t = g.arrows[a].target;
      if (state[t] == 1) throw CycleDetected("oriented cycle through " + g.vertices[t]);
      if (state[t] == 0) visit(t);
    }
    state[v] = 2;
  };
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (state[v] == 0) visit(v);
  }
}

std::vector<BrutePath> brute_paths(const ExplicitQuiver& g, std::size_t a, std::size_t b) {
  require_acyclic(g);
  std::vector<bool> useful(g.vertices.size(), false);
  for (std::size_t v : closure(g, b, false)) useful[v] = true;
  const auto out = outgoing(g);
  std::vector<BrutePath> found;
  BrutePath current;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == b) found.push_back(current);
    for (std::size_t arrow : out[v]) {
      const std::size_t t = g.arrows[arrow].target;
      if (!useful[t]) continue;
      current.push_back(arrow);
      walk(t);
      current.pop_back();
    }
  };
  if (useful[a]) walk(a);
  return found;
}

std::vector<std::size_t> brute_predecessors(const ExplicitQuiver& g, std::size_t v) {
  return closure(g, v, false);
}

std::vector<std::size_t> brute_successors(const ExplicitQuiver& g, std::size_t v) {
  return closure(g, v, true);
}

}  // namespace qinj::oracle
