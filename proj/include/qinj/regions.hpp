#ifndef QINJ_REGIONS_HPP
#define QINJ_REGIONS_HPP

// Decision procedures over the infinite quiver instantiated from a
// description: reachability, path counts, neighbour sets, infinite paths,
// top finiteness, uniform interval finiteness and tail classes of left
// infinite paths.
//
// Beyond the constant zone (indices larger than every constant in the
// description) the instantiated quiver is invariant under index translation.
// Queries are therefore evaluated on one finite analysis window whose radius
// exceeds the stabilization index of the query plus an excursion margin, and
// per-ray answers are extended periodically past the stabilization index.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qinj/index_set.hpp"
#include "qinj/qdl.hpp"

namespace qinj {

using BigInt = mpz_class;

// ---------------------------------------------------------------------------
// Region graph

struct RegionEdge {
  enum class Kind {
    kSingle,     // one arrow between fixed vertices
    kRayToRay,   // family s[i+c1] -> t[i+c2]; internal when s == t
    kFanOut,     // fixed vertex -> every index of a ray tail
    kFanIn,      // every index of a ray tail -> fixed vertex
  };
  Kind kind = Kind::kSingle;
  ArrowOrigin origin;
  NodeId from = 0;
  NodeId to = 0;
  Index entry_shift = 0;  // c1 (source template shift), ray endpoints only
  Index exit_shift = 0;   // c2 (target template shift), ray endpoints only
  Index lower = 0;        // first instantiation index (unless all_indices)
  bool all_indices = false;

  Index gain() const { return exit_shift - entry_shift; }
  bool internal() const { return kind == Kind::kRayToRay && from == to; }
  // +1 ascending, -1 descending; 0 for non-internal edges.
  int direction() const {
    if (!internal()) return 0;
    return gain() > 0 ? 1 : (gain() < 0 ? -1 : 0);
  }
};

struct RegionGraph {
  int node_count = 0;
  std::vector<RegionEdge> edges;

  std::size_t count(RegionEdge::Kind kind) const;
  std::size_t internal_count(int direction) const;
};

RegionGraph build_region_graph(const QuiverDescription& q);

// ---------------------------------------------------------------------------
// Cardinalities and witnesses

// Every vertex (ray, threshold + k * step * direction), k >= 0, belongs to the
// set the witness is attached to.
struct TailWitness {
  NodeId ray = 0;
  int direction = 1;
  Index threshold = 0;
  Index step = 1;

  std::string describe(const QuiverDescription& q) const;
};

class Cardinality {
 public:
  static Cardinality finite(BigInt n) { return Cardinality(std::move(n)); }
  static Cardinality infinite(TailWitness w) { return Cardinality(w); }

  bool is_finite() const { return count_.has_value(); }
  const BigInt& count() const;
  const TailWitness& witness() const;
  std::string describe(const QuiverDescription& q) const;  // "finite 3" / "infinite (...)"

 private:
  explicit Cardinality(BigInt n) : count_(std::move(n)) {}
  explicit Cardinality(TailWitness w) : witness_(w) {}
  std::optional<BigInt> count_;
  std::optional<TailWitness> witness_;
};

struct VertexSet {
  Cardinality cardinality = Cardinality::finite(0);
  SupportDescription set;
};

// Witness for an infinite support: its first infinite ray tail.
TailWitness witness_of(const QuiverDescription& q, const SupportDescription& s);
VertexSet make_vertex_set(const QuiverDescription& q, SupportDescription s);

// ---------------------------------------------------------------------------
// Left infinite path tail classes

// An eventually periodic forward walk: a finite prefix of concrete arrows from
// `start`, then the region cycle `cycle` (ray-to-ray families, listed from
// the vertex the prefix ends at) repeated forever.
struct TailSpelling {
  VertexRef start;
  std::vector<ArrowRef> prefix;
  std::vector<int> cycle;  // family ids
};

struct TailClass {
  std::string id;        // "(a,+)" or "(a,+)%r" when the cycle gain exceeds 1
  NodeId ray = 0;        // first ray of the cycle (declaration order)
  int direction = 1;     // +1: indices grow along the walk
  Index base_index = 0;  // residue class of entry indices on `ray`
  Index cycle_gain = 1;  // |index gain| of one cycle traversal
  TailSpelling spelling; // canonical representative

  // The canonical walk's states (vertex on `ray` at the start of each cycle
  // traversal) whose index is at least `from` in the walk direction.
  VertexRef tail_vertex_from(Index from) const;
};

// Branching component of the tail graph: infinitely many classes.
struct InfiniteClassFamily {
  std::vector<NodeId> nodes;
  int direction = 1;
  // Pairs (u, w_k) with strictly growing path counts.
  VertexRef source;
  std::vector<std::pair<VertexRef, BigInt>> growth;
  std::string describe(const QuiverDescription& q) const;
};

struct TailClassEnumeration {
  std::vector<TailClass> classes;
  std::vector<InfiniteClassFamily> infinite_families;
};

// Thrown when a query precondition is violated.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an interval-finiteness violation is met inside a query.
class NotIntervalFinite : public std::runtime_error {
 public:
  NotIntervalFinite(VertexRef a, VertexRef b, const std::string& message)
      : std::runtime_error(message), a(a), b(b) {}
  VertexRef a;
  VertexRef b;
};

struct TopFiniteCertificate {
  bool top_finite = false;
  std::vector<VertexRef> generators;        // positive
  std::optional<TailWitness> infinite_sources;  // negative: a ray tail of sources
  std::optional<TailClass> backward_tail;       // negative: a right infinite path
  std::string describe(const QuiverDescription& q) const;
};

struct UniformBound {
  bool bounded = false;
  BigInt bound;  // sup |Q(a,b)| over the set when bounded
  struct Sample {
    Index radius;
    VertexRef a;
    VertexRef b;
    BigInt count;
  };
  std::vector<Sample> checkpoints;  // maximal pair per checkpoint radius
};

struct IntervalFiniteness {
  bool interval_finite = true;
  std::optional<std::pair<VertexRef, VertexRef>> witness;
  std::optional<Path> cycle;
};

// ---------------------------------------------------------------------------

struct AnalysisParameters {
  Index constant_zone = 0;   // max |constant| in the description
  Index max_gain = 1;        // G
  Index checkpoint_gap = 2;  // max(G + 1, lcm of gains)
  Index max_period = 1;
  int nodes = 1;
  Index span = 0;            // largest |index| the analysis may be asked about

  // N* for queries touching indices up to `query`.
  Index stabilization_index(Index query) const;
  Index stable_start() const;   // where periodic extrapolation starts
  Index trust_radius() const;   // answers are exact for |index| <= this
  Index window_radius() const;  // analysis window radius
};

AnalysisParameters analysis_parameters(const QuiverDescription& q, Index span);

class Analyzer {
 public:
  Analyzer(const QuiverDescription& q, Index span);

  const QuiverDescription& description() const { return q_; }
  const AnalysisParameters& parameters() const { return params_; }
  const Window& window() const { return *window_; }
  Index stabilization_index() const { return params_.stabilization_index(0); }

  SupportDescription successors(const VertexRef& a) const;
  SupportDescription predecessors(const VertexRef& a) const;
  VertexSet successor_set(const VertexRef& a) const;
  VertexSet predecessor_set(const VertexRef& a) const;
  bool reachable(const VertexRef& from, const VertexRef& to) const;

  Cardinality path_count(const VertexRef& a, const VertexRef& b) const;
  IntervalFiniteness interval_finiteness() const;

  TopFiniteCertificate top_finite(const SupportDescription& s) const;
  UniformBound uniformly_interval_finite(const SupportDescription& s) const;

  TailClassEnumeration enumerate_tail_classes() const;
  SupportDescription class_support(const TailClass& c) const;
  // dim Y_[c](a) = sup over tail vertices w of |Q(a, w)|; nullopt if unbounded.
  std::optional<BigInt> tail_dimension(const VertexRef& a, const TailClass& c) const;
  // The tail vertex whose path counts equal the stabilized dimensions for all
  // vertices with |index| <= radius.
  VertexRef stable_tail_vertex(const TailClass& c, Index radius) const;

  // Path counts from a to every window vertex (paths inside the window).
  std::vector<BigInt> count_paths_from(const VertexRef& a) const;
  // All paths a -> b, enumerated inside the analysis window, canonical order.
  std::vector<Path> paths(const VertexRef& a, const VertexRef& b) const;

  // Window positions reachable from / co-reachable to a window position.
  std::vector<bool> forward_closure(std::size_t from) const;
  std::vector<bool> backward_closure(std::size_t to) const;

 private:
  void check_span(const VertexRef& v) const;
  SupportDescription extrapolate(const std::vector<bool>& member) const;

  QuiverDescription q_;
  AnalysisParameters params_;
  std::shared_ptr<const Window> window_;
  std::vector<std::size_t> topo_;  // topological order of window positions
};

// Convenience wrappers building an analyzer sized for the query.
Cardinality path_count(const QuiverDescription& q, const VertexRef& a, const VertexRef& b);
IntervalFiniteness is_interval_finite(const QuiverDescription& q);
VertexSet predecessors(const QuiverDescription& q, const VertexRef& a);
VertexSet successors(const QuiverDescription& q, const VertexRef& a);
VertexSet out_neighbors(const QuiverDescription& q, const VertexRef& a);
VertexSet in_neighbors(const QuiverDescription& q, const VertexRef& a);

// One-step images, computed exactly from the description.
SupportDescription out_image(const QuiverDescription& q, const SupportDescription& s);
SupportDescription in_image(const QuiverDescription& q, const SupportDescription& s);
bool is_predecessor_closed(const QuiverDescription& q, const SupportDescription& s);
// Vertices of Q without incoming arrows.
SupportDescription sources(const QuiverDescription& q);

std::optional<TailClass> has_left_infinite_path(const QuiverDescription& q,
                                                const SupportDescription& s);
std::optional<TailClass> has_right_infinite_path(const QuiverDescription& q,
                                                 const SupportDescription& s);

VertexSet boundary(const QuiverDescription& q, const SupportDescription& s);

// Tail equivalence of two spellings; throws PreconditionError when a
// spelling is not an infinite walk.
bool classes_equivalent(const QuiverDescription& q, const TailSpelling& a, const TailSpelling& b);
void validate_spelling(const QuiverDescription& q, const TailSpelling& s);

// The canonical walk of a class, started at its earliest valid entry on the
// class ray and cut where it leaves the indices |i| <= radius.
std::vector<ArrowRef> class_walk(const QuiverDescription& q, const TailClass& c, Index radius);

// Concrete arrows of the first `steps` steps of a spelling.
std::vector<ArrowRef> unroll(const QuiverDescription& q, const TailSpelling& s, std::size_t steps);

const TailClass* find_class(const TailClassEnumeration& e, const std::string& id);

}  // namespace qinj

#endif  // QINJ_REGIONS_HPP
