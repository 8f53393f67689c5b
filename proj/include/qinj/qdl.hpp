#ifndef QINJ_QDL_HPP
#define QINJ_QDL_HPP

// Quiver description language: a finite presentation of a possibly infinite
// quiver by core vertices, integer-indexed rays and translation-invariant
// arrow families i -> i + c.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qinj {

using Index = std::int64_t;

enum class Domain { kNat, kInt };

struct RayDecl {
  std::string name;
  Domain domain = Domain::kNat;
  bool operator==(const RayDecl&) const = default;
};

// A region node is either a core vertex (0 .. cores-1) or a ray
// (cores .. cores+rays-1). Core vertices always carry index 0.
using NodeId = int;

struct VertexRef {
  NodeId node = 0;
  Index index = 0;
  auto operator<=>(const VertexRef&) const = default;
};

// Endpoint of a single arrow or family.
struct Endpoint {
  enum class Kind { kCore, kRayConst, kRayShift };
  Kind kind = Kind::kCore;
  NodeId node = 0;
  Index value = 0;  // constant index (kRayConst) or shift c in i + c (kRayShift)

  bool mentions_index() const { return kind == Kind::kRayShift; }
  // Concrete vertex for instantiation index i.
  VertexRef at(Index i) const {
    switch (kind) {
      case Kind::kCore: return {node, 0};
      case Kind::kRayConst: return {node, value};
      case Kind::kRayShift: return {node, i + value};
    }
    return {node, 0};
  }
  bool operator==(const Endpoint&) const = default;
};

struct SingleArrow {
  std::string label;
  bool generated_label = false;
  Endpoint source;
  Endpoint target;
  bool operator==(const SingleArrow&) const = default;
};

struct Family {
  std::string label;
  bool generated_label = false;
  Endpoint source;
  Endpoint target;
  bool all_indices = false;   // "for all i"
  Index declared_lower = 0;   // "for i >= k"
  Index lower = 0;            // effective lower bound after nat adjustment

  // Instantiation index range; unbounded above, and below when all_indices.
  bool active(Index i) const { return all_indices || i >= lower; }
  // Index gain of a ray-to-ray family, s(i + c1) -> t(i + c2).
  bool ray_to_ray() const { return source.mentions_index() && target.mentions_index(); }
  Index gain() const { return target.value - source.value; }
  bool operator==(const Family&) const = default;
};

class QdlError : public std::runtime_error {
 public:
  enum class Kind {
    kSyntax,
    kUndeclaredIdentifier,
    kDuplicateIdentifier,
    kMalformedTemplate,
    kNegativeNatIndex,
  };
  QdlError(Kind kind, int line, int column, const std::string& message);
  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

std::string_view to_string(QdlError::Kind kind);

// Where an instantiated arrow comes from.
struct ArrowOrigin {
  bool family = false;
  int id = 0;  // index into singles() or families()
  auto operator<=>(const ArrowOrigin&) const = default;
};

struct ArrowRef {
  ArrowOrigin origin;
  Index instance = 0;  // family instantiation index; 0 for single arrows
  VertexRef source;
  VertexRef target;
  auto operator<=>(const ArrowRef&) const = default;
};

class QuiverDescription {
 public:
  QuiverDescription() = default;

  const std::string& name() const { return name_; }
  const std::vector<std::string>& cores() const { return cores_; }
  const std::vector<RayDecl>& rays() const { return rays_; }
  const std::vector<SingleArrow>& singles() const { return singles_; }
  const std::vector<Family>& families() const { return families_; }

  int core_count() const { return static_cast<int>(cores_.size()); }
  int ray_count() const { return static_cast<int>(rays_.size()); }
  int node_count() const { return core_count() + ray_count(); }
  bool is_core(NodeId n) const { return n < core_count(); }
  bool is_ray(NodeId n) const { return n >= core_count() && n < node_count(); }
  NodeId ray_node(int ray) const { return core_count() + ray; }
  const RayDecl& ray_of(NodeId n) const { return rays_[n - core_count()]; }
  const std::string& node_name(NodeId n) const;
  std::optional<NodeId> find_node(std::string_view name) const;

  // True when v names an existing vertex of the instantiated quiver.
  bool contains(const VertexRef& v) const;

  // Canonical ids: "v:<name>", "r:<name>:<index>", "<label>", "<label>@<i>".
  std::string vertex_id(const VertexRef& v) const;
  std::string arrow_id(const ArrowRef& a) const;
  const std::string& origin_label(const ArrowOrigin& o) const;
  std::optional<VertexRef> parse_vertex_id(std::string_view id) const;

  // Instantiation of a family at index i; nullopt when i is out of range.
  std::optional<ArrowRef> instantiate(int family, Index i) const;
  ArrowRef single(int id) const;

  // Same vertices, every arrow reversed.
  QuiverDescription opposite() const;

  bool operator==(const QuiverDescription&) const = default;

  friend QuiverDescription parse(std::string_view text);
  friend class DescriptionBuilder;

 private:
  std::string name_;
  std::vector<std::string> cores_;
  std::vector<RayDecl> rays_;
  std::vector<SingleArrow> singles_;
  std::vector<Family> families_;
};

// Parses and validates the description language. Throws QdlError.
QuiverDescription parse(std::string_view text);
QuiverDescription parse_file(const std::string& path);

// Canonical source text; parse(render(q)) == q.
std::string render(const QuiverDescription& q);

// Orders arrows by origin label, then instantiation index.
bool arrow_order(const QuiverDescription& q, const ArrowRef& a, const ArrowRef& b);

struct Path {
  VertexRef source;
  std::vector<ArrowRef> arrows;  // arrows[0] is applied first

  VertexRef target() const { return arrows.empty() ? source : arrows.back().target; }
  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
};

// (length, lexicographic arrow order) canonical comparison.
bool path_order(const QuiverDescription& q, const Path& a, const Path& b);
std::string path_id(const QuiverDescription& q, const Path& p);

// Finite truncation: core vertices plus ray vertices with |index| <= radius.
class Window {
 public:
  Window(const QuiverDescription& q, Index radius);

  const QuiverDescription& description() const { return q_; }
  Index radius() const { return radius_; }
  const std::vector<VertexRef>& vertices() const { return vertices_; }
  const std::vector<ArrowRef>& arrows() const { return arrows_; }
  std::size_t size() const { return vertices_.size(); }

  bool contains(const VertexRef& v) const { return position_.count(v) != 0; }
  std::size_t position(const VertexRef& v) const;
  std::optional<std::size_t> find(const VertexRef& v) const;

  // Arrow positions leaving / entering the vertex at a position.
  const std::vector<std::size_t>& out_arrows(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_arrows(std::size_t v) const { return in_[v]; }
  std::size_t arrow_source(std::size_t a) const { return arrow_src_[a]; }
  std::size_t arrow_target(std::size_t a) const { return arrow_tgt_[a]; }
  std::optional<std::size_t> find_arrow(const ArrowRef& a) const;

 private:
  QuiverDescription q_;
  Index radius_;
  std::vector<VertexRef> vertices_;
  std::vector<ArrowRef> arrows_;
  std::map<VertexRef, std::size_t> position_;
  std::map<ArrowRef, std::size_t> arrow_position_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::size_t> arrow_src_;
  std::vector<std::size_t> arrow_tgt_;
};

Window instantiate_window(const QuiverDescription& q, Index radius);

// Result of the oriented cycle check: empty when acyclic.
struct CycleCheck {
  std::optional<Path> cycle;
  bool ok() const { return !cycle.has_value(); }
};

// Finds a concrete oriented cycle of the instantiated quiver, if any.
CycleCheck oriented_cycle_check(const QuiverDescription& q);

}  // namespace qinj

#endif  // QINJ_QDL_HPP
