#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>

#include "qinj/regions.hpp"

namespace qinj {

namespace {

Index abs_index(Index i) { return i < 0 ? -i : i; }

}  // namespace

TailWitness witness_of(const QuiverDescription& q, const SupportDescription& s) {
  for (int r = 0; r < q.ray_count(); ++r) {
    const IndexSet& set = s.rays[r];
    if (!set.up_empty()) {
      return {q.ray_node(r), 1, set.first_up_member_from(set.up_start()), set.up_period()};
    }
    if (!set.down_empty()) {
      return {q.ray_node(r), -1, set.first_down_member_from(set.down_start()), set.down_period()};
    }
  }
  throw std::logic_error("no infinite ray part");
}

VertexSet make_vertex_set(const QuiverDescription& q, SupportDescription s) {
  VertexSet v;
  v.cardinality = s.is_finite() ? Cardinality::finite(BigInt(static_cast<unsigned long>(s.finite_size())))
                                : Cardinality::infinite(witness_of(q, s));
  v.set = std::move(s);
  return v;
}

AnalysisParameters analysis_parameters(const QuiverDescription& q, Index span) {
  AnalysisParameters p;
  p.span = std::max<Index>(span, 0);
  p.nodes = std::max(1, q.node_count());
  Index zone = 0;
  for (const auto& a : q.singles()) {
    zone = std::max({zone, abs_index(a.source.value), abs_index(a.target.value)});
  }
  Index gain_lcm = 1;
  for (const auto& f : q.families()) {
    const Index shifts = std::max(abs_index(f.source.value), abs_index(f.target.value));
    zone = std::max(zone, shifts);
    if (!f.all_indices) zone = std::max(zone, abs_index(f.lower) + shifts);
    if (f.ray_to_ray() && f.gain() != 0) {
      p.max_gain = std::max(p.max_gain, abs_index(f.gain()));
      gain_lcm = std::lcm(gain_lcm, abs_index(f.gain()));
    }
  }
  p.constant_zone = zone;
  p.checkpoint_gap = std::max(p.max_gain + 1, gain_lcm);
  p.max_period = 2 * p.nodes * p.max_gain * p.checkpoint_gap;
  return p;
}

Index AnalysisParameters::stabilization_index(Index query) const {
  return constant_zone + (nodes + 1) * (max_gain + 1) + abs_index(query) + 1;
}

Index AnalysisParameters::stable_start() const { return 2 * stabilization_index(span); }

Index AnalysisParameters::trust_radius() const {
  return stable_start() + 3 * max_period + checkpoint_gap;
}

Index AnalysisParameters::window_radius() const {
  const Index excursion = nodes * (max_gain + 1);
  return trust_radius() + excursion * excursion + 8;
}

Analyzer::Analyzer(const QuiverDescription& q, Index span)
    : q_(q), params_(analysis_parameters(q, span)),
      window_(std::make_shared<const Window>(q, params_.window_radius())) {
  // Kahn's algorithm; left empty when the window carries a cycle.
  const Window& w = *window_;
  std::vector<std::size_t> indegree(w.size(), 0);
  for (std::size_t a = 0; a < w.arrows().size(); ++a) ++indegree[w.arrow_target(a)];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (std::size_t a : w.out_arrows(v)) {
      if (--indegree[w.arrow_target(a)] == 0) ready.push_back(w.arrow_target(a));
    }
  }
  if (order.size() == w.size()) topo_ = std::move(order);
}

void Analyzer::check_span(const VertexRef& v) const {
  if (!q_.contains(v)) throw std::invalid_argument("vertex not in the quiver");
  if (q_.is_ray(v.node) && abs_index(v.index) > params_.span) {
    throw std::logic_error("vertex " + q_.vertex_id(v) + " beyond the analysis span");
  }
}

std::vector<bool> Analyzer::forward_closure(std::size_t from) const {
  const Window& w = *window_;
  std::vector<bool> seen(w.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t a : w.out_arrows(v)) {
      const std::size_t t = w.arrow_target(a);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> Analyzer::backward_closure(std::size_t to) const {
  const Window& w = *window_;
  std::vector<bool> seen(w.size(), false);
  std::vector<std::size_t> stack{to};
  seen[to] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t a : w.in_arrows(v)) {
      const std::size_t s = w.arrow_source(a);
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
  }
  return seen;
}

SupportDescription Analyzer::extrapolate(const std::vector<bool>& member) const {
  const Window& w = *window_;
  SupportDescription s = SupportDescription::none(q_);
  for (int c = 0; c < q_.core_count(); ++c) s.cores[c] = member[w.position({c, 0})];
  const Index trust = params_.trust_radius();
  const Index stable = params_.stable_start();
  for (int r = 0; r < q_.ray_count(); ++r) {
    const NodeId node = q_.ray_node(r);
    const bool nat = q_.rays()[r].domain == Domain::kNat;
    auto at = [&](Index i) { return static_cast<bool>(member[w.position({node, i})]); };
    s.rays[r] = IndexSet::extrapolate(at, nat ? 0 : -trust, trust, -stable, stable,
                                      params_.max_period, nat);
  }
  return s;
}

SupportDescription Analyzer::successors(const VertexRef& a) const {
  check_span(a);
  return extrapolate(forward_closure(window_->position(a)));
}

SupportDescription Analyzer::predecessors(const VertexRef& a) const {
  check_span(a);
  return extrapolate(backward_closure(window_->position(a)));
}

VertexSet Analyzer::successor_set(const VertexRef& a) const {
  return make_vertex_set(q_, successors(a));
}

VertexSet Analyzer::predecessor_set(const VertexRef& a) const {
  return make_vertex_set(q_, predecessors(a));
}

bool Analyzer::reachable(const VertexRef& from, const VertexRef& to) const {
  check_span(from);
  check_span(to);
  return forward_closure(window_->position(from))[window_->position(to)];
}

std::vector<BigInt> Analyzer::count_paths_from(const VertexRef& a) const {
  if (topo_.empty() && window_->size() != 0) {
    throw PreconditionError("path counts requested on a quiver with an oriented cycle");
  }
  const Window& w = *window_;
  std::vector<BigInt> counts(w.size(), 0);
  const std::size_t start = w.position(a);
  counts[start] = 1;
  bool started = false;
  for (std::size_t v : topo_) {
    if (v == start) started = true;
    if (!started || counts[v] == 0) continue;
    for (std::size_t arrow : w.out_arrows(v)) counts[w.arrow_target(arrow)] += counts[v];
  }
  return counts;
}

Cardinality Analyzer::path_count(const VertexRef& a, const VertexRef& b) const {
  check_span(a);
  check_span(b);
  const std::size_t pa = window_->position(a);
  const std::size_t pb = window_->position(b);
  const auto forward = forward_closure(pa);
  if (!forward[pb]) return Cardinality::finite(0);
  const auto backward = backward_closure(pb);
  std::vector<bool> both(forward.size());
  for (std::size_t v = 0; v < both.size(); ++v) both[v] = forward[v] && backward[v];
  const SupportDescription between = extrapolate(both);
  if (!between.is_finite()) return Cardinality::infinite(witness_of(q_, between));
  return Cardinality::finite(count_paths_from(a)[pb]);
}

std::vector<Path> Analyzer::paths(const VertexRef& a, const VertexRef& b) const {
  check_span(a);
  const Window& w = *window_;
  if (!w.contains(b)) throw std::logic_error("path target outside the analysis window");
  if (count_paths_from(a)[w.position(b)] > 1000000) {
    throw std::length_error("too many paths to enumerate");
  }
  const std::size_t pb = w.position(b);
  const auto useful = backward_closure(pb);
  std::vector<Path> out;
  Path current{a, {}};
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == pb) out.push_back(current);
    for (std::size_t arrow : w.out_arrows(v)) {
      const std::size_t t = w.arrow_target(arrow);
      if (!useful[t]) continue;
      current.arrows.push_back(w.arrows()[arrow]);
      walk(t);
      current.arrows.pop_back();
    }
  };
  if (useful[w.position(a)]) walk(w.position(a));
  std::sort(out.begin(), out.end(),
            [&](const Path& x, const Path& y) { return path_order(q_, x, y); });
  return out;
}

IntervalFiniteness Analyzer::interval_finiteness() const {
  IntervalFiniteness result;
  if (auto cyc = oriented_cycle_check(q_); !cyc.ok()) {
    result.interval_finite = false;
    result.cycle = cyc.cycle;
    result.witness = std::make_pair(cyc.cycle->source, cyc.cycle->source);
    return result;
  }
  // Pumping: an infinite path set a -> b contains paths through vertices of
  // arbitrarily large index, in particular past the stabilization index.
  const Window& w = *window_;
  const Index near = params_.stabilization_index(0);
  const Index trust = params_.trust_radius();
  std::vector<std::size_t> close;
  for (std::size_t v = 0; v < w.size(); ++v) {
    const auto& x = w.vertices()[v];
    if (q_.is_core(x.node) || abs_index(x.index) <= near) close.push_back(v);
  }
  std::vector<std::vector<bool>> back(close.size());
  for (std::size_t j = 0; j < close.size(); ++j) back[j] = backward_closure(close[j]);
  for (std::size_t i = 0; i < close.size(); ++i) {
    const auto forward = forward_closure(close[i]);
    const Index from = abs_index(w.vertices()[close[i]].index);
    for (std::size_t j = 0; j < close.size(); ++j) {
      const Index query = std::max(from, abs_index(w.vertices()[close[j]].index));
      const Index far = params_.stabilization_index(query);
      for (std::size_t v = 0; v < w.size(); ++v) {
        const auto& x = w.vertices()[v];
        if (!forward[v] || !back[j][v] || q_.is_core(x.node)) continue;
        const Index ix = abs_index(x.index);
        if (ix > far && ix <= trust) {
          result.interval_finite = false;
          result.witness = std::make_pair(w.vertices()[close[i]], w.vertices()[close[j]]);
          return result;
        }
      }
    }
  }
  return result;
}

UniformBound Analyzer::uniformly_interval_finite(const SupportDescription& s) const {
  if (!is_predecessor_closed(q_, s)) {
    throw PreconditionError("support is not closed under predecessors");
  }
  const Index k1 = params_.stabilization_index(0);
  const Index k2 = k1 + params_.checkpoint_gap;
  const Index k3 = k2 + params_.checkpoint_gap;
  if (k3 > params_.span) throw std::logic_error("analysis span too small for uniform bound");
  const auto finiteness = interval_finiteness();
  if (!finiteness.interval_finite && s.contains(q_, finiteness.witness->first) &&
      s.contains(q_, finiteness.witness->second)) {
    throw NotIntervalFinite(finiteness.witness->first, finiteness.witness->second,
                            "infinitely many paths inside the support");
  }
  const Window& w = *window_;
  const std::array<Index, 3> radii{k1, k2, k3};
  std::array<UniformBound::Sample, 3> best;
  for (std::size_t k = 0; k < 3; ++k) best[k] = {radii[k], {}, {}, BigInt(0)};
  std::array<bool, 3> any{false, false, false};
  auto level = [&](const VertexRef& v) { return q_.is_core(v.node) ? Index{0} : abs_index(v.index); };
  for (std::size_t pa = 0; pa < w.size(); ++pa) {
    const VertexRef a = w.vertices()[pa];
    if (level(a) > k3 || !s.contains(q_, a)) continue;
    const auto counts = count_paths_from(a);
    for (std::size_t pb = 0; pb < w.size(); ++pb) {
      const VertexRef b = w.vertices()[pb];
      if (counts[pb] == 0 || level(b) > k3 || !s.contains(q_, b)) continue;
      const Index lv = std::max(level(a), level(b));
      for (std::size_t k = 0; k < 3; ++k) {
        if (lv > radii[k]) continue;
        if (!any[k] || counts[pb] > best[k].count) {
          best[k] = {radii[k], a, b, counts[pb]};
          any[k] = true;
        }
      }
    }
  }
  UniformBound out;
  out.checkpoints.assign(best.begin(), best.end());
  if (best[1].count == best[0].count) {
    out.bounded = true;
    out.bound = best[0].count;
    return out;
  }
  if (!(best[2].count > best[1].count)) {
    throw std::logic_error("path counts did not stabilize between checkpoints");
  }
  out.bounded = false;
  return out;
}

TopFiniteCertificate Analyzer::top_finite(const SupportDescription& s) const {
  if (!is_predecessor_closed(q_, s)) {
    throw PreconditionError("support is not closed under predecessors");
  }
  TopFiniteCertificate cert;
  if (auto right = has_right_infinite_path(q_, s)) {
    cert.top_finite = false;
    cert.backward_tail = right;
    return cert;
  }
  const SupportDescription tops = s.intersect(sources(q_));
  if (!tops.is_finite()) {
    cert.top_finite = false;
    cert.infinite_sources = witness_of(q_, tops);
    return cert;
  }
  cert.top_finite = true;
  cert.generators = tops.elements(q_);
  return cert;
}

std::string TopFiniteCertificate::describe(const QuiverDescription& q) const {
  if (top_finite) {
    std::string out = "generators {";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) out += ", ";
      out += q.vertex_id(generators[i]);
    }
    return out + "}";
  }
  if (backward_tail) {
    return "right infinite path (backward tail of ray " + q.node_name(backward_tail->ray) +
           (backward_tail->direction > 0 ? ", i -> +inf)" : ", i -> -inf)");
  }
  return "infinitely many sources (" + infinite_sources->describe(q) + ")";
}

Cardinality path_count(const QuiverDescription& q, const VertexRef& a, const VertexRef& b) {
  const Index span = std::max(abs_index(a.index), abs_index(b.index));
  return Analyzer(q, span).path_count(a, b);
}

IntervalFiniteness is_interval_finite(const QuiverDescription& q) {
  const Index span = analysis_parameters(q, 0).stabilization_index(0);
  return Analyzer(q, span).interval_finiteness();
}

VertexSet predecessors(const QuiverDescription& q, const VertexRef& a) {
  return Analyzer(q, abs_index(a.index)).predecessor_set(a);
}

VertexSet successors(const QuiverDescription& q, const VertexRef& a) {
  return Analyzer(q, abs_index(a.index)).successor_set(a);
}

}  // namespace qinj
