#include <algorithm>
#include <functional>
#include <sstream>

#include "graph_util.hpp"
#include "qinj/regions.hpp"

namespace qinj {

std::size_t RegionGraph::count(RegionEdge::Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const RegionEdge& e) { return e.kind == kind; }));
}

std::size_t RegionGraph::internal_count(int direction) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const RegionEdge& e) {
    return e.internal() && e.direction() == direction;
  }));
}

RegionGraph build_region_graph(const QuiverDescription& q) {
  RegionGraph g;
  g.node_count = q.node_count();
  for (int s = 0; s < static_cast<int>(q.singles().size()); ++s) {
    const auto& a = q.singles()[s];
    RegionEdge e;
    e.kind = RegionEdge::Kind::kSingle;
    e.origin = {false, s};
    e.from = a.source.node;
    e.to = a.target.node;
    e.entry_shift = a.source.value;
    e.exit_shift = a.target.value;
    g.edges.push_back(e);
  }
  for (int f = 0; f < static_cast<int>(q.families().size()); ++f) {
    const auto& fam = q.families()[f];
    RegionEdge e;
    e.origin = {true, f};
    e.from = fam.source.node;
    e.to = fam.target.node;
    e.entry_shift = fam.source.value;
    e.exit_shift = fam.target.value;
    e.lower = fam.lower;
    e.all_indices = fam.all_indices;
    if (fam.ray_to_ray()) {
      e.kind = RegionEdge::Kind::kRayToRay;
    } else if (fam.target.mentions_index()) {
      e.kind = RegionEdge::Kind::kFanOut;
    } else {
      e.kind = RegionEdge::Kind::kFanIn;
    }
    g.edges.push_back(e);
  }
  return g;
}

std::string TailWitness::describe(const QuiverDescription& q) const {
  std::ostringstream os;
  os << "ray " << q.node_name(ray) << ", i " << (direction > 0 ? ">= " : "<= ") << threshold;
  if (step > 1) os << ", step " << step;
  return os.str();
}

const BigInt& Cardinality::count() const {
  if (!count_) throw std::logic_error("count() of an infinite cardinality");
  return *count_;
}

const TailWitness& Cardinality::witness() const {
  if (!witness_) throw std::logic_error("witness() of a finite cardinality");
  return *witness_;
}

std::string Cardinality::describe(const QuiverDescription& q) const {
  if (count_) return "finite " + count_->get_str();
  return "infinite (" + witness_->describe(q) + ")";
}

namespace {

// Concrete cycle search by depth-first search on a window.
std::optional<Path> window_cycle(const Window& w) {
  const std::size_t n = w.size();
  std::vector<int> color(n, 0);
  std::vector<std::size_t> via(n, 0);  // arrow that entered the vertex on the stack
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& outs = w.out_arrows(v);
      if (next == outs.size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t a = outs[next++];
      const std::size_t t = w.arrow_target(a);
      if (color[t] == 1) {
        Path p;
        p.source = w.vertices()[t];
        std::vector<std::size_t> arrows{a};
        for (std::size_t u = v; u != t; u = w.arrow_source(via[u])) arrows.push_back(via[u]);
        std::reverse(arrows.begin(), arrows.end());
        for (std::size_t x : arrows) p.arrows.push_back(w.arrows()[x]);
        return p;
      }
      if (color[t] == 0) {
        color[t] = 1;
        via[t] = a;
        stack.emplace_back(t, 0);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CycleCheck oriented_cycle_check(const QuiverDescription& q) {
  // A cycle either stays in the constant zone, where the analysis window sees
  // it, or is a closed family walk of total gain zero, which repeats at every
  // large enough index. The window is grown until the latter shows up.
  std::vector<detail::WeightedEdge> edges;
  for (int f = 0; f < static_cast<int>(q.families().size()); ++f) {
    const auto& fam = q.families()[f];
    if (fam.ray_to_ray()) edges.push_back({fam.source.node, fam.target.node, fam.gain(), f});
  }
  const bool zero_walk = detail::zero_closed_walk(q.node_count(), edges);
  Index radius = analysis_parameters(q, 0).window_radius();
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (auto p = window_cycle(Window(q, radius))) return {std::move(p)};
    if (!zero_walk) break;
    radius *= 2;
  }
  if (zero_walk) throw std::logic_error("zero-gain family cycle not realized on any window");
  return {};
}

}  // namespace qinj
