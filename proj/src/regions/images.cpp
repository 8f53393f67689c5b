#include "qinj/regions.hpp"

namespace qinj {

namespace {

IndexSet domain_of(const QuiverDescription& q, NodeId ray) {
  return q.ray_of(ray).domain == Domain::kNat ? IndexSet::at_least(0) : IndexSet::all();
}

int ordinal(const QuiverDescription& q, NodeId ray) { return ray - q.core_count(); }

bool holds(const QuiverDescription& q, const SupportDescription& s, const Endpoint& e) {
  return s.contains(q, e.at(0));
}

void add_vertex(const QuiverDescription& q, SupportDescription& s, const VertexRef& v) {
  if (q.contains(v)) s.insert(q, v);
}

}  // namespace

SupportDescription out_image(const QuiverDescription& q, const SupportDescription& s) {
  SupportDescription out = SupportDescription::none(q);
  for (const auto& a : q.singles()) {
    if (holds(q, s, a.source)) add_vertex(q, out, a.target.at(0));
  }
  for (const auto& f : q.families()) {
    const IndexSet active = f.all_indices ? IndexSet::all() : IndexSet::at_least(f.lower);
    if (f.ray_to_ray()) {
      // Source indices j = i + c1 that occur, moved to j + gain on the target ray.
      const IndexSet from = s.rays[ordinal(q, f.source.node)].intersect(active.shifted(f.source.value));
      auto& dst = out.rays[ordinal(q, f.target.node)];
      dst = dst.unite(from.shifted(f.gain()).intersect(domain_of(q, f.target.node)));
    } else if (f.source.mentions_index()) {
      const IndexSet from = s.rays[ordinal(q, f.source.node)].intersect(active.shifted(f.source.value));
      if (!from.is_empty()) add_vertex(q, out, f.target.at(0));
    } else if (holds(q, s, f.source)) {
      auto& dst = out.rays[ordinal(q, f.target.node)];
      dst = dst.unite(active.shifted(f.target.value).intersect(domain_of(q, f.target.node)));
    }
  }
  return out;
}

SupportDescription in_image(const QuiverDescription& q, const SupportDescription& s) {
  return out_image(q.opposite(), s);
}

bool is_predecessor_closed(const QuiverDescription& q, const SupportDescription& s) {
  return in_image(q, s).subset_of(s);
}

SupportDescription sources(const QuiverDescription& q) {
  const auto all = SupportDescription::everything(q);
  return all.minus(out_image(q, all));
}

VertexSet out_neighbors(const QuiverDescription& q, const VertexRef& a) {
  if (!q.contains(a)) throw std::invalid_argument("vertex not in the quiver");
  SupportDescription single = SupportDescription::none(q);
  single.insert(q, a);
  return make_vertex_set(q, out_image(q, single));
}

VertexSet in_neighbors(const QuiverDescription& q, const VertexRef& a) {
  return out_neighbors(q.opposite(), a);
}

VertexSet boundary(const QuiverDescription& q, const SupportDescription& s) {
  return make_vertex_set(q, out_image(q, s).minus(s));
}

}  // namespace qinj
