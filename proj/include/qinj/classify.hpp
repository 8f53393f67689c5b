#ifndef QINJ_CLASSIFY_HPP
#define QINJ_CLASSIFY_HPP

// Finite presentability criteria for I_a and Y_[p] and the resulting catalog
// of indecomposable injective objects of fp(Q).

#include <optional>
#include <string>
#include <vector>

#include "qinj/index_set.hpp"
#include "qinj/regions.hpp"

namespace qinj {

struct IaVerdict {
  enum class Failure { kNone, kInfinitePredecessors, kInfiniteOutDegree };
  VertexRef vertex;
  bool yes = false;
  Failure failure = Failure::kNone;
  // yes: the finite predecessor set with every finite b^+.
  std::vector<VertexRef> predecessors;
  std::vector<std::vector<VertexRef>> out_lists;
  // no
  std::optional<TailWitness> predecessor_witness;
  std::optional<VertexRef> offending;  // predecessor with infinite out-degree
  std::optional<TailWitness> out_witness;

  std::string summary(const QuiverDescription& q) const;
};

struct YpVerdict {
  enum class Failure { kNone, kNotTopFinite, kNotUniform, kInfiniteBoundary };
  std::string class_id;
  bool yes = false;
  Failure failure = Failure::kNone;
  SupportDescription support;
  std::optional<TopFiniteCertificate> top;
  std::optional<UniformBound> uniform;
  std::optional<VertexSet> boundary;

  std::string reason() const;  // "not top finite", ...
};

struct RayVerdict {
  enum class Shape { kAllYes, kAllNo, kYesOn };
  NodeId ray = 0;
  Shape shape = Shape::kAllNo;
  IndexSet yes;              // indices whose I_a is finitely presented
  Index checked_to = 0;      // pointwise evaluation covered |i| <= checked_to
  Index periodic_from = 0;   // the verdict is constant for |i| >= periodic_from
  std::optional<IaVerdict> sample_no;  // first failing index, for the certificate

  std::string describe() const;  // "all yes", "all no", "yes on {0, 1}"
};

struct InjectiveCatalog {
  std::vector<IaVerdict> ia_core;
  std::vector<RayVerdict> ia_rays;
  std::vector<std::pair<TailClass, YpVerdict>> y_classes;
  std::vector<InfiniteClassFamily> infinite_class_families;
};

class Classifier {
 public:
  explicit Classifier(const QuiverDescription& q);

  const Analyzer& analyzer() const { return analyzer_; }
  IaVerdict ia_fp(const VertexRef& a) const;
  YpVerdict yp_fp(const TailClass& c) const;
  RayVerdict ray_verdict(NodeId ray) const;
  InjectiveCatalog classify() const;

 private:
  QuiverDescription q_;
  Analyzer analyzer_;
};

// Analysis span used by the classifier.
Index classification_span(const QuiverDescription& q);

// Stand-alone evaluations sized for the query.
IaVerdict ia_fp(const QuiverDescription& q, const VertexRef& a);
YpVerdict yp_fp(const QuiverDescription& q, const TailClass& c);
// Throws NotIntervalFinite when the description is not interval finite.
InjectiveCatalog classify(const QuiverDescription& q);

}  // namespace qinj

#endif  // QINJ_CLASSIFY_HPP
