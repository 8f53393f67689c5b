#ifndef QINJ_INDEX_SET_HPP
#define QINJ_INDEX_SET_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qinj/qdl.hpp"

namespace qinj {

// An ultimately periodic set of integers: a finite middle part plus a
// periodic tail in each direction. Membership is O(1).
//
//   i >= up_start:   member iff up_mask[(i - up_start) mod up_period]
//   i <= down_start: member iff down_mask[(down_start - i) mod down_period]
//   otherwise:       member iff i is listed in middle
class IndexSet {
 public:
  IndexSet();

  static IndexSet empty() { return IndexSet(); }
  static IndexSet finite(std::vector<Index> elements);
  static IndexSet at_least(Index k);
  static IndexSet at_most(Index k);
  static IndexSet all();
  // {i >= k : i = residue mod period} (residue taken mod period)
  static IndexSet progression_up(Index k, Index period, Index residue);
  static IndexSet progression_down(Index k, Index period, Index residue);

  // Builds a set from a membership oracle that is trusted on [lo, hi]; the
  // upward tail is assumed periodic from `stable_up` on and the downward tail
  // from `stable_down` downwards. The least period <= max_period fitting the
  // trusted range is used; throws std::logic_error when none fits.
  static IndexSet extrapolate(const std::function<bool(Index)>& member, Index lo, Index hi,
                              Index stable_down, Index stable_up, Index max_period,
                              bool bounded_below);

  bool contains(Index i) const;
  bool is_empty() const;
  bool is_finite() const { return up_empty() && down_empty(); }
  bool up_empty() const;
  bool down_empty() const;
  bool up_full() const;    // period 1, every index from up_start on
  bool down_full() const;
  // Finite sets only.
  std::vector<Index> elements() const;
  std::size_t size() const { return elements().size(); }
  std::optional<Index> min() const;  // nullopt when empty or unbounded below
  std::optional<Index> max() const;

  // Some member >= k exists for every k (up) / <= k (down).
  Index up_start() const { return up_start_; }
  Index down_start() const { return down_start_; }
  Index up_period() const { return static_cast<Index>(up_mask_.size()); }
  Index down_period() const { return static_cast<Index>(down_mask_.size()); }
  // First member >= k on the upward tail (requires !up_empty()).
  Index first_up_member_from(Index k) const;
  Index first_down_member_from(Index k) const;

  IndexSet unite(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  IndexSet shifted(Index by) const;
  bool subset_of(const IndexSet& other) const;
  bool operator==(const IndexSet& other) const;

  // "all", "i >= 3", "{0, 1}", "i <= 0", "i >= 2 (mod 2: 0)", joined by " + ".
  std::string describe() const;

 private:
  static IndexSet combine(const IndexSet& a, const IndexSet& b,
                          const std::function<bool(bool, bool)>& op);
  void normalize();

  Index up_start_ = 1;
  std::vector<bool> up_mask_{false};
  Index down_start_ = -1;
  std::vector<bool> down_mask_{false};
  std::vector<Index> middle_;
};

// Symbolic vertex set: core vertices plus one IndexSet per ray.
struct SupportDescription {
  std::vector<bool> cores;       // by core id
  std::vector<IndexSet> rays;    // by ray ordinal

  static SupportDescription none(const QuiverDescription& q);
  static SupportDescription everything(const QuiverDescription& q);

  bool contains(const QuiverDescription& q, const VertexRef& v) const;
  void insert(const QuiverDescription& q, const VertexRef& v);
  bool is_finite() const;
  bool is_empty() const;
  std::size_t finite_size() const;
  // Finite members in canonical order (cores, then rays by ascending index).
  std::vector<VertexRef> elements(const QuiverDescription& q) const;

  SupportDescription unite(const SupportDescription& o) const;
  SupportDescription intersect(const SupportDescription& o) const;
  SupportDescription minus(const SupportDescription& o) const;
  bool subset_of(const SupportDescription& o) const;
  bool operator==(const SupportDescription& o) const;

  // "finite {v:x, r:a:0}" or "infinite (v:x; ray a, i >= 0; ...)".
  std::string describe(const QuiverDescription& q) const;
};

}  // namespace qinj

#endif  // QINJ_INDEX_SET_HPP
