#include <algorithm>
#include <charconv>

#include "qinj/qdl.hpp"

namespace qinj {

const std::string& QuiverDescription::node_name(NodeId n) const {
  return is_core(n) ? cores_[n] : rays_[n - core_count()].name;
}

std::optional<NodeId> QuiverDescription::find_node(std::string_view name) const {
  for (int i = 0; i < core_count(); ++i) {
    if (cores_[i] == name) return i;
  }
  for (int i = 0; i < ray_count(); ++i) {
    if (rays_[i].name == name) return ray_node(i);
  }
  return std::nullopt;
}

bool QuiverDescription::contains(const VertexRef& v) const {
  if (v.node < 0 || v.node >= node_count()) return false;
  if (is_core(v.node)) return v.index == 0;
  return ray_of(v.node).domain == Domain::kInt || v.index >= 0;
}

std::string QuiverDescription::vertex_id(const VertexRef& v) const {
  if (is_core(v.node)) return "v:" + cores_[v.node];
  return "r:" + ray_of(v.node).name + ":" + std::to_string(v.index);
}

const std::string& QuiverDescription::origin_label(const ArrowOrigin& o) const {
  return o.family ? families_[o.id].label : singles_[o.id].label;
}

std::string QuiverDescription::arrow_id(const ArrowRef& a) const {
  if (!a.origin.family) return singles_[a.origin.id].label;
  return families_[a.origin.id].label + "@" + std::to_string(a.instance);
}

std::optional<VertexRef> QuiverDescription::parse_vertex_id(std::string_view id) const {
  if (id.starts_with("v:")) {
    const auto node = find_node(id.substr(2));
    if (!node || !is_core(*node)) return std::nullopt;
    return VertexRef{*node, 0};
  }
  if (!id.starts_with("r:")) return std::nullopt;
  id.remove_prefix(2);
  const auto colon = id.rfind(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto node = find_node(id.substr(0, colon));
  if (!node || !is_ray(*node)) return std::nullopt;
  const auto digits = id.substr(colon + 1);
  Index index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  const VertexRef v{*node, index};
  if (!contains(v)) return std::nullopt;
  return v;
}

std::optional<ArrowRef> QuiverDescription::instantiate(int family, Index i) const {
  const Family& f = families_[family];
  if (!f.active(i)) return std::nullopt;
  ArrowRef a{{true, family}, i, f.source.at(i), f.target.at(i)};
  if (!contains(a.source) || !contains(a.target)) return std::nullopt;
  return a;
}

ArrowRef QuiverDescription::single(int id) const {
  const SingleArrow& s = singles_[id];
  return {{false, id}, 0, s.source.at(0), s.target.at(0)};
}

QuiverDescription QuiverDescription::opposite() const {
  QuiverDescription op = *this;
  op.name_ = name_ + "_op";
  for (auto& a : op.singles_) std::swap(a.source, a.target);
  for (auto& f : op.families_) std::swap(f.source, f.target);
  return op;
}

bool arrow_order(const QuiverDescription& q, const ArrowRef& a, const ArrowRef& b) {
  const std::string& la = q.origin_label(a.origin);
  const std::string& lb = q.origin_label(b.origin);
  if (la != lb) return la < lb;
  return a.instance < b.instance;
}

bool path_order(const QuiverDescription& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a.arrows[i] == b.arrows[i]) continue;
    return arrow_order(q, a.arrows[i], b.arrows[i]);
  }
  return a.source < b.source;
}

std::string path_id(const QuiverDescription& q, const Path& p) {
  if (p.arrows.empty()) return "e(" + q.vertex_id(p.source) + ")";
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += ".";
    out += q.arrow_id(*it);
  }
  return out;
}

}  // namespace qinj
