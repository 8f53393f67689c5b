#include <algorithm>
#include <stdexcept>
#include <limits>

#include "qinj/qdl.hpp"

namespace qinj {

namespace {

bool in_radius(const QuiverDescription& q, const VertexRef& v, Index radius) {
  return q.contains(v) && (q.is_core(v.node) || (v.index >= -radius && v.index <= radius));
}

}  // namespace

Window::Window(const QuiverDescription& q, Index radius) : q_(q), radius_(radius) {
  if (radius < 0) throw std::invalid_argument("window radius must be nonnegative");
  for (int c = 0; c < q.core_count(); ++c) vertices_.push_back({c, 0});
  for (int r = 0; r < q.ray_count(); ++r) {
    const Index lo = q.rays()[r].domain == Domain::kNat ? 0 : -radius;
    for (Index i = lo; i <= radius; ++i) vertices_.push_back({q.ray_node(r), i});
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) position_.emplace(vertices_[i], i);

  for (int s = 0; s < static_cast<int>(q.singles().size()); ++s) {
    const ArrowRef a = q.single(s);
    if (in_radius(q, a.source, radius) && in_radius(q, a.target, radius)) arrows_.push_back(a);
  }
  for (int f = 0; f < static_cast<int>(q.families().size()); ++f) {
    const Family& fam = q.families()[f];
    // Every ray-shift endpoint pins i to [-radius - c, radius - c].
    Index lo = fam.all_indices ? std::numeric_limits<Index>::min() : fam.lower;
    Index hi = std::numeric_limits<Index>::max();
    for (const Endpoint* ep : {&fam.source, &fam.target}) {
      if (!ep->mentions_index()) continue;
      lo = std::max(lo, -radius - ep->value);
      hi = std::min(hi, radius - ep->value);
    }
    for (Index i = lo; i <= hi; ++i) {
      auto a = q.instantiate(f, i);
      if (a && in_radius(q, a->source, radius) && in_radius(q, a->target, radius)) {
        arrows_.push_back(*a);
      }
    }
  }
  std::sort(arrows_.begin(), arrows_.end(),
            [&](const ArrowRef& a, const ArrowRef& b) { return arrow_order(q_, a, b); });

  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const std::size_t s = position_.at(arrows_[a].source);
    const std::size_t t = position_.at(arrows_[a].target);
    arrow_src_.push_back(s);
    arrow_tgt_.push_back(t);
    out_[s].push_back(a);
    in_[t].push_back(a);
    arrow_position_.emplace(arrows_[a], a);
  }
}

std::size_t Window::position(const VertexRef& v) const {
  auto it = position_.find(v);
  if (it == position_.end()) throw std::out_of_range("vertex outside window");
  return it->second;
}

std::optional<std::size_t> Window::find(const VertexRef& v) const {
  auto it = position_.find(v);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Window::find_arrow(const ArrowRef& a) const {
  auto it = arrow_position_.find(a);
  if (it == arrow_position_.end()) return std::nullopt;
  return it->second;
}

Window instantiate_window(const QuiverDescription& q, Index radius) { return Window(q, radius); }

}  // namespace qinj
