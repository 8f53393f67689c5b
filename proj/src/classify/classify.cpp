#include <map>
#include <stdexcept>

#include "qinj/classify.hpp"

namespace qinj {

namespace {

Index abs_index(Index i) { return i < 0 ? -i : i; }

IaVerdict evaluate_ia(const Analyzer& an, const VertexRef& a) {
  const auto& q = an.description();
  IaVerdict v;
  v.vertex = a;
  const VertexSet preds = an.predecessor_set(a);
  if (!preds.cardinality.is_finite()) {
    v.failure = IaVerdict::Failure::kInfinitePredecessors;
    v.predecessor_witness = preds.cardinality.witness();
    return v;
  }
  v.predecessors = preds.set.elements(q);
  for (const auto& b : v.predecessors) {
    const VertexSet out = out_neighbors(q, b);
    if (!out.cardinality.is_finite()) {
      v.failure = IaVerdict::Failure::kInfiniteOutDegree;
      v.offending = b;
      v.out_witness = out.cardinality.witness();
      v.out_lists.clear();
      return v;
    }
    v.out_lists.push_back(out.set.elements(q));
  }
  v.yes = true;
  return v;
}

}  // namespace

std::string IaVerdict::summary(const QuiverDescription& q) const {
  switch (failure) {
    case Failure::kNone: {
      std::string s = "predecessors {";
      for (std::size_t i = 0; i < predecessors.size(); ++i) {
        s += (i ? ", " : "") + q.vertex_id(predecessors[i]);
      }
      return s + "}, each with finite out-neighbours";
    }
    case Failure::kInfinitePredecessors:
      return "infinitely many predecessors of " + q.vertex_id(vertex) + " (" +
             predecessor_witness->describe(q) + ")";
    case Failure::kInfiniteOutDegree:
      return "predecessor " + q.vertex_id(*offending) + " has infinitely many out-neighbours (" +
             out_witness->describe(q) + ")";
  }
  return {};
}

std::string YpVerdict::reason() const {
  switch (failure) {
    case Failure::kNone: return "";
    case Failure::kNotTopFinite: return "not top finite";
    case Failure::kNotUniform: return "not uniformly interval finite";
    case Failure::kInfiniteBoundary: return "infinite boundary";
  }
  return {};
}

std::string RayVerdict::describe() const {
  switch (shape) {
    case Shape::kAllYes: return "all yes";
    case Shape::kAllNo: return "all no";
    case Shape::kYesOn: return "yes on " + yes.describe();
  }
  return {};
}

Index classification_span(const QuiverDescription& q) {
  const auto p = analysis_parameters(q, 0);
  return 2 * p.stabilization_index(0) + 2 * p.checkpoint_gap;
}

Classifier::Classifier(const QuiverDescription& q) : q_(q), analyzer_(q, classification_span(q)) {}

IaVerdict Classifier::ia_fp(const VertexRef& a) const {
  if (q_.is_ray(a.node) && abs_index(a.index) > analyzer_.parameters().span) return qinj::ia_fp(q_, a);
  return evaluate_ia(analyzer_, a);
}

RayVerdict Classifier::ray_verdict(NodeId ray) const {
  const auto& params = analyzer_.parameters();
  const bool nat = q_.ray_of(ray).domain == Domain::kNat;
  const Index reach = params.span;
  const Index stable = params.stabilization_index(0);
  RayVerdict out;
  out.ray = ray;
  out.checked_to = reach;
  out.periodic_from = stable;
  std::map<Index, bool> pointwise;
  for (Index i = nat ? 0 : -reach; i <= reach; ++i) {
    const IaVerdict v = evaluate_ia(analyzer_, {ray, i});
    pointwise[i] = v.yes;
    if (!v.yes && (!out.sample_no || abs_index(i) < abs_index(out.sample_no->vertex.index))) {
      out.sample_no = v;
    }
  }
  out.yes = IndexSet::extrapolate([&](Index i) { return pointwise.at(i); }, nat ? 0 : -reach, reach,
                                  -stable, stable, params.max_period, nat);
  const IndexSet domain = nat ? IndexSet::at_least(0) : IndexSet::all();
  if (out.yes.is_empty()) {
    out.shape = RayVerdict::Shape::kAllNo;
  } else if (out.yes == domain) {
    out.shape = RayVerdict::Shape::kAllYes;
  } else {
    // Only finite and cofinite exception sets can occur in the fragment.
    const bool up_ok = out.yes.up_empty() || out.yes.up_full();
    const bool down_ok = nat || out.yes.down_empty() || out.yes.down_full();
    if (!up_ok || !down_ok) {
      throw std::logic_error("internal consistency: periodic I_a verdict along ray " + q_.node_name(ray));
    }
    out.shape = RayVerdict::Shape::kYesOn;
  }
  return out;
}

YpVerdict Classifier::yp_fp(const TailClass& c) const {
  YpVerdict v;
  v.class_id = c.id;
  v.support = analyzer_.class_support(c);
  v.top = analyzer_.top_finite(v.support);
  if (!v.top->top_finite) {
    v.failure = YpVerdict::Failure::kNotTopFinite;
    return v;
  }
  v.uniform = analyzer_.uniformly_interval_finite(v.support);
  if (!v.uniform->bounded) {
    v.failure = YpVerdict::Failure::kNotUniform;
    return v;
  }
  v.boundary = boundary(q_, v.support);
  if (!v.boundary->cardinality.is_finite()) {
    v.failure = YpVerdict::Failure::kInfiniteBoundary;
    return v;
  }
  v.yes = true;
  return v;
}

InjectiveCatalog Classifier::classify() const {
  InjectiveCatalog cat;
  for (int c = 0; c < q_.core_count(); ++c) cat.ia_core.push_back(ia_fp({c, 0}));
  for (int r = 0; r < q_.ray_count(); ++r) cat.ia_rays.push_back(ray_verdict(q_.ray_node(r)));
  auto classes = analyzer_.enumerate_tail_classes();
  for (const auto& c : classes.classes) cat.y_classes.emplace_back(c, yp_fp(c));
  cat.infinite_class_families = std::move(classes.infinite_families);
  return cat;
}

IaVerdict ia_fp(const QuiverDescription& q, const VertexRef& a) {
  return evaluate_ia(Analyzer(q, q.is_ray(a.node) ? abs_index(a.index) : 0), a);
}

YpVerdict yp_fp(const QuiverDescription& q, const TailClass& c) { return Classifier(q).yp_fp(c); }

InjectiveCatalog classify(const QuiverDescription& q) {
  const auto finiteness = is_interval_finite(q);
  if (!finiteness.interval_finite) {
    if (finiteness.cycle) {
      const VertexRef v = finiteness.cycle->source;
      throw NotIntervalFinite(v, v, "not interval finite: oriented cycle through " + q.vertex_id(v));
    }
    const auto& [a, b] = *finiteness.witness;
    throw NotIntervalFinite(a, b, "not interval finite: infinitely many paths " + q.vertex_id(a) + " -> " +
                                      q.vertex_id(b));
  }
  return Classifier(q).classify();
}

}  // namespace qinj
