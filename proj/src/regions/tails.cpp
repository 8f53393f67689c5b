#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "graph_util.hpp"
#include "qinj/regions.hpp"

namespace qinj {

namespace {

Index abs_index(Index i) { return i < 0 ? -i : i; }
Index floor_mod(Index a, Index m) { return ((a % m) + m) % m; }

std::string class_id(const QuiverDescription& q, NodeId ray, int direction, Index gain, Index residue) {
  std::string id = "(" + q.node_name(ray) + (direction > 0 ? ",+)" : ",-)");
  if (gain > 1) id += "%" + std::to_string(residue);
  return id;
}

// Drops repetitions of a shorter period from a cyclic family sequence.
std::vector<int> primitive_cycle(std::vector<int> cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = cycle[i] == cycle[i - p];
    if (repeats) {
      cycle.resize(p);
      break;
    }
  }
  return cycle;
}

// Canonical class for a cycle of families entered at `entry` on the source
// ray of cycle[0]; the cycle is rotated to start at its smallest ray node.
TailClass make_class(const QuiverDescription& q, std::vector<int> cycle, Index entry, int direction) {
  cycle = primitive_cycle(std::move(cycle));
  const auto& fams = q.families();
  std::size_t best = 0;
  Index offset = 0, best_offset = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (fams[cycle[k]].source.node < fams[cycle[best]].source.node) {
      best = k;
      best_offset = offset;
    }
    offset += fams[cycle[k]].gain();
  }
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(best), cycle.end());
  entry += best_offset;
  Index gain = 0;
  for (int f : cycle) gain += fams[f].gain();
  gain = abs_index(gain);
  TailClass c;
  c.ray = fams[cycle[0]].source.node;
  c.direction = direction;
  c.cycle_gain = gain;
  c.base_index = floor_mod(entry, gain);
  c.id = class_id(q, c.ray, direction, gain, c.base_index);
  c.spelling.start = {c.ray, entry};
  c.spelling.cycle = std::move(cycle);
  return c;
}

// Far-zone family walks inside s in one direction, abstracted to states
// (ray, index mod L); a cycle of the right gain sign lifts to an infinite walk.
std::optional<TailClass> zone_walk(const QuiverDescription& q, const SupportDescription& s, int zone) {
  const auto params = analysis_parameters(q, 0);
  const int rays = q.ray_count();
  Index period = 1;
  Index far = params.constant_zone + 1;
  std::vector<bool> live(rays, false);
  for (int r = 0; r < rays; ++r) {
    const IndexSet& set = s.rays[r];
    if (zone > 0 ? set.up_empty() : set.down_empty()) continue;
    if (zone < 0 && q.rays()[r].domain == Domain::kNat) continue;
    live[r] = true;
    period = std::lcm(period, zone > 0 ? set.up_period() : set.down_period());
    far = std::max(far, zone > 0 ? set.up_start() + 1 : -set.down_start() + 1);
  }
  auto member = [&](int r, Index residue) {
    // Index beyond `far` (in the zone direction) with the given residue.
    const Index base = zone * far;
    const Index x = base + floor_mod(residue - base, period) - (zone < 0 ? period : 0);
    return s.rays[r].contains(x);
  };
  const int states = rays * static_cast<int>(period);
  std::vector<detail::WeightedEdge> edges;
  for (int f = 0; f < static_cast<int>(q.families().size()); ++f) {
    const auto& fam = q.families()[f];
    if (!fam.ray_to_ray() || (zone < 0 && !fam.all_indices)) continue;
    const int from = fam.source.node - q.core_count();
    const int to = fam.target.node - q.core_count();
    if (!live[from] || !live[to]) continue;
    for (Index rho = 0; rho < period; ++rho) {
      const Index next = floor_mod(rho + fam.gain(), period);
      if (!member(from, rho) || !member(to, next)) continue;
      edges.push_back({from * static_cast<int>(period) + static_cast<int>(rho),
                       to * static_cast<int>(period) + static_cast<int>(next), zone * fam.gain(), f});
    }
  }
  const auto cycle = detail::positive_cycle(states, edges);
  if (!cycle) return std::nullopt;
  std::vector<int> families;
  for (int e : *cycle) families.push_back(edges[e].tag);
  const int first = edges[cycle->front()].from;
  const Index rho0 = first % static_cast<int>(period);
  // Entry index far enough that every partial sum of the walk stays in the zone.
  const Index margin = far + static_cast<Index>(families.size()) * params.max_gain + 1;
  const Index base = zone * margin;
  const Index entry = base + zone * floor_mod(zone * (rho0 - base), period);
  return make_class(q, families, entry, zone);
}

}  // namespace

VertexRef TailClass::tail_vertex_from(Index from) const {
  const Index x0 = spelling.start.index;
  if (direction * (from - x0) <= 0) return {ray, x0};
  const Index steps = (abs_index(from - x0) + cycle_gain - 1) / cycle_gain;
  return {ray, x0 + direction * steps * cycle_gain};
}

std::optional<TailClass> has_left_infinite_path(const QuiverDescription& q, const SupportDescription& s) {
  if (auto c = zone_walk(q, s, 1)) return c;
  return zone_walk(q, s, -1);
}

std::optional<TailClass> has_right_infinite_path(const QuiverDescription& q, const SupportDescription& s) {
  return has_left_infinite_path(q.opposite(), s);
}

std::string InfiniteClassFamily::describe(const QuiverDescription& q) const {
  std::ostringstream os;
  os << "branching tail component {";
  for (std::size_t i = 0; i < nodes.size(); ++i) os << (i ? ", " : "") << q.node_name(nodes[i]);
  os << "} (" << (direction > 0 ? "+" : "-") << "): infinitely many classes; |Q(" << q.vertex_id(source)
     << ", w)| =";
  for (std::size_t i = 0; i < growth.size(); ++i) {
    os << (i ? "," : "") << " " << growth[i].second.get_str() << " at " << q.vertex_id(growth[i].first);
  }
  return os.str();
}

TailClassEnumeration Analyzer::enumerate_tail_classes() const {
  TailClassEnumeration out;
  const auto& fams = q_.families();
  const Index far = params_.constant_zone + 1;
  for (int zone : {1, -1}) {
    std::vector<detail::WeightedEdge> edges;
    for (int f = 0; f < static_cast<int>(fams.size()); ++f) {
      if (!fams[f].ray_to_ray() || (zone < 0 && !fams[f].all_indices)) continue;
      edges.push_back({fams[f].source.node, fams[f].target.node, zone * fams[f].gain(), f});
    }
    int count = 0;
    const auto comp = detail::strongly_connected(q_.node_count(), edges, &count);
    for (int c = 0; c < count; ++c) {
      std::vector<detail::WeightedEdge> inner;
      std::vector<int> out_degree(q_.node_count(), 0);
      for (const auto& e : edges) {
        if (comp[e.from] == c && comp[e.to] == c) {
          inner.push_back(e);
          ++out_degree[e.from];
        }
      }
      if (inner.empty()) continue;
      std::vector<NodeId> nodes;
      bool simple = true;
      for (NodeId v = 0; v < q_.node_count(); ++v) {
        if (comp[v] != c) continue;
        nodes.push_back(v);
        simple = simple && out_degree[v] == 1;
      }
      if (simple) {
        std::vector<int> cycle;
        Index gain = 0;
        NodeId v = nodes.front();
        do {
          const auto& e = *std::find_if(inner.begin(), inner.end(),
                                        [&](const detail::WeightedEdge& x) { return x.from == v; });
          cycle.push_back(e.tag);
          gain += e.weight;
          v = e.to;
        } while (v != nodes.front());
        if (gain == 0) throw PreconditionError("zero-gain family cycle (oriented cycle)");
        if (gain < 0) continue;
        const Index start = far + static_cast<Index>(cycle.size() + 1) * params_.max_gain;
        for (Index r = 0; r < gain; ++r) {
          const Index entry = zone * start + floor_mod(r - zone * start, gain);
          out.classes.push_back(make_class(q_, cycle, entry, zone));
        }
        continue;
      }
      if (!detail::positive_cycle(q_.node_count(), inner)) continue;
      // Branching: path counts from one tail vertex into its own ray grow.
      InfiniteClassFamily fam;
      fam.nodes = nodes;
      fam.direction = zone;
      NodeId x = nodes.front();
      for (NodeId v : nodes) {
        if (out_degree[v] >= 2) {
          x = v;
          break;
        }
      }
      fam.source = {x, zone * params_.stabilization_index(0)};
      const auto counts = count_paths_from(fam.source);
      std::vector<std::pair<VertexRef, BigInt>> reached;
      for (Index k = params_.stabilization_index(0) + 1; k <= params_.trust_radius(); ++k) {
        const VertexRef w{x, zone * k};
        const BigInt& n = counts[window_->position(w)];
        if (n > 0) reached.emplace_back(w, n);
      }
      std::vector<std::pair<VertexRef, BigInt>> growth;
      for (auto it = reached.rbegin(); it != reached.rend() && growth.size() < 3; ++it) {
        if (growth.empty() || it->second < growth.back().second) growth.push_back(*it);
      }
      if (growth.size() < 3) {
        throw std::logic_error("branching tail component without growing path counts");
      }
      std::reverse(growth.begin(), growth.end());
      fam.growth = std::move(growth);
      out.infinite_families.push_back(std::move(fam));
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const TailClass& a, const TailClass& b) {
    return std::tuple(a.ray, -a.direction, a.base_index) < std::tuple(b.ray, -b.direction, b.base_index);
  });
  return out;
}

SupportDescription Analyzer::class_support(const TailClass& c) const {
  const Window& w = *window_;
  std::vector<bool> member(w.size(), false);
  std::vector<std::size_t> stack;
  VertexRef v = c.spelling.start;
  std::size_t k = 0;
  // Walk the canonical spelling to the window edge, seeding a backward search.
  while (auto pos = w.find(v)) {
    if (!member[*pos]) {
      member[*pos] = true;
      stack.push_back(*pos);
    }
    const auto& fam = q_.families()[c.spelling.cycle[k % c.spelling.cycle.size()]];
    const auto arrow = q_.instantiate(c.spelling.cycle[k % c.spelling.cycle.size()],
                                      v.index - fam.source.value);
    if (!arrow) break;
    v = arrow->target;
    ++k;
  }
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t a : w.in_arrows(x)) {
      const std::size_t s = w.arrow_source(a);
      if (!member[s]) {
        member[s] = true;
        stack.push_back(s);
      }
    }
  }
  return extrapolate(member);
}

std::optional<BigInt> Analyzer::tail_dimension(const VertexRef& a, const TailClass& c) const {
  check_span(a);
  const auto counts = count_paths_from(a);
  const Index level = q_.is_core(a.node) ? 0 : abs_index(a.index);
  const VertexRef h1 = c.tail_vertex_from(c.direction * params_.stabilization_index(level));
  const VertexRef h2 =
      c.tail_vertex_from(h1.index + c.direction * params_.checkpoint_gap * c.cycle_gain);
  const BigInt& n1 = counts[window_->position(h1)];
  const BigInt& n2 = counts[window_->position(h2)];
  if (n1 != n2) return std::nullopt;
  return n1;
}

VertexRef Analyzer::stable_tail_vertex(const TailClass& c, Index radius) const {
  return c.tail_vertex_from(c.direction *
                            (params_.stabilization_index(radius) + params_.checkpoint_gap * c.cycle_gain));
}

std::vector<ArrowRef> unroll(const QuiverDescription& q, const TailSpelling& s, std::size_t steps) {
  std::vector<ArrowRef> out;
  VertexRef v = s.start;
  for (std::size_t k = 0; k < steps; ++k) {
    std::optional<ArrowRef> arrow;
    if (k < s.prefix.size()) {
      arrow = s.prefix[k];
    } else {
      if (s.cycle.empty()) throw PreconditionError("spelling has an empty cycle");
      const int f = s.cycle[(k - s.prefix.size()) % s.cycle.size()];
      if (f < 0 || f >= static_cast<int>(q.families().size())) {
        throw PreconditionError("spelling names an unknown family");
      }
      const auto& fam = q.families()[f];
      if (!fam.source.mentions_index() || fam.source.node != v.node) {
        throw PreconditionError("spelling does not compose at " + q.vertex_id(v));
      }
      arrow = q.instantiate(f, v.index - fam.source.value);
      if (!arrow) throw PreconditionError("spelling leaves the quiver at " + q.vertex_id(v));
    }
    if (arrow->source != v) throw PreconditionError("spelling does not compose at " + q.vertex_id(v));
    out.push_back(*arrow);
    v = arrow->target;
  }
  return out;
}

namespace {

Index spelling_gain(const QuiverDescription& q, const TailSpelling& s) {
  Index gain = 0;
  for (int f : s.cycle) gain += q.families()[f].gain();
  return gain;
}

}  // namespace

void validate_spelling(const QuiverDescription& q, const TailSpelling& s) {
  if (!q.contains(s.start)) throw PreconditionError("spelling starts outside the quiver");
  if (s.cycle.empty()) throw PreconditionError("spelling has an empty cycle");
  for (std::size_t k = 0; k < s.cycle.size(); ++k) {
    const int f = s.cycle[k];
    if (f < 0 || f >= static_cast<int>(q.families().size()) || !q.families()[f].ray_to_ray()) {
      throw PreconditionError("spelling cycle must consist of ray-to-ray families");
    }
    const int g = s.cycle[(k + 1) % s.cycle.size()];
    if (g < 0 || g >= static_cast<int>(q.families().size()) ||
        q.families()[f].target.node != q.families()[g].source.node) {
      throw PreconditionError("spelling cycle does not close");
    }
  }
  const Index gain = spelling_gain(q, s);
  if (gain == 0) throw PreconditionError("spelling cycle has zero gain");
  if (gain < 0) {
    for (int f : s.cycle) {
      if (!q.families()[f].all_indices) {
        throw PreconditionError("descending spelling uses a family bounded below");
      }
    }
  }
  // Unroll until a whole period runs past the constant zone.
  const auto params = analysis_parameters(q, 0);
  const Index zone = params.constant_zone + static_cast<Index>(s.cycle.size()) * params.max_gain + 1;
  const Index start = s.prefix.empty() ? s.start.index : s.prefix.back().target.index;
  const Index periods = (zone + abs_index(start)) / abs_index(gain) + 2;
  unroll(q, s, s.prefix.size() + static_cast<std::size_t>(periods + 1) * s.cycle.size());
}

bool classes_equivalent(const QuiverDescription& q, const TailSpelling& a, const TailSpelling& b) {
  validate_spelling(q, a);
  validate_spelling(q, b);
  const Index ga = spelling_gain(q, a);
  const Index gb = spelling_gain(q, b);
  if ((ga > 0) != (gb > 0)) return false;
  const int dir = ga > 0 ? 1 : -1;
  const auto params = analysis_parameters(q, 0);
  const std::size_t pa = a.cycle.size();
  const std::size_t pb = b.cycle.size();
  const Index excursion = static_cast<Index>(pa + pb) * params.max_gain;

  auto prefix_reach = [&](const TailSpelling& s) {
    Index m = dir * s.start.index;
    for (const auto& arrow : s.prefix) m = std::max(m, dir * arrow.target.index);
    return m;
  };
  // Past every prefix vertex, so matching positions lie in both periodic parts.
  const Index depth = std::max({prefix_reach(a), prefix_reach(b), params.constant_zone}) + excursion + 1;
  auto periodic_position = [&](const TailSpelling& s, Index target, std::vector<ArrowRef>& arrows) {
    const std::size_t p = s.cycle.size();
    std::size_t n = s.prefix.size();
    for (;;) {
      if (arrows.size() < n + p) arrows = unroll(q, s, 2 * (n + p));
      if (dir * arrows[n].source.index >= target) return n;
      n += p;
    }
  };
  std::vector<ArrowRef> arrows_a, arrows_b;
  const std::size_t nb = periodic_position(b, depth, arrows_b);
  const ArrowRef anchor = arrows_b[nb];
  const Index limit = dir * anchor.source.index + 2 * excursion + 1;
  const std::size_t na_end = periodic_position(a, limit, arrows_a);
  const std::size_t period = std::lcm(pa, pb);
  for (std::size_t m = a.prefix.size(); m < na_end; ++m) {
    if (arrows_a[m] != anchor) continue;
    const auto ua = unroll(q, a, m + period);
    const auto ub = unroll(q, b, nb + period);
    bool same = true;
    for (std::size_t k = 0; k < period && same; ++k) same = ua[m + k] == ub[nb + k];
    return same;
  }
  return false;
}

std::vector<ArrowRef> class_walk(const QuiverDescription& q, const TailClass& c, Index radius) {
  const std::size_t len = c.spelling.cycle.size();
  auto cycle_from = [&](Index x) -> std::optional<std::vector<ArrowRef>> {
    try {
      return unroll(q, TailSpelling{{c.ray, x}, {}, c.spelling.cycle}, len);
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
  };
  Index entry = c.spelling.start.index;
  for (;;) {
    const Index back = entry - c.direction * c.cycle_gain;
    if (abs_index(entry) <= radius && abs_index(back) > radius) break;
    if (!q.contains({c.ray, back}) || !cycle_from(back)) break;
    entry = back;
  }
  std::vector<ArrowRef> out;
  for (Index x = entry;; x += c.direction * c.cycle_gain) {
    const auto step = cycle_from(x);
    if (!step) break;
    for (const auto& arrow : *step) {
      if (abs_index(arrow.source.index) > radius || abs_index(arrow.target.index) > radius) return out;
      out.push_back(arrow);
    }
  }
  return out;
}

const TailClass* find_class(const TailClassEnumeration& e, const std::string& id) {
  for (const auto& c : e.classes) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace qinj
