#include "qinj/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qinj {

namespace {

Index mod(Index a, Index m) {
  Index r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<bool> minimal_period(const std::vector<bool>& mask) {
  const std::size_t p = mask.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t j = d; j < p && ok; ++j) ok = mask[j] == mask[j % d];
    if (ok) return std::vector<bool>(mask.begin(), mask.begin() + static_cast<long>(d));
  }
  return mask;
}

bool all_false(const std::vector<bool>& m) {
  return std::none_of(m.begin(), m.end(), [](bool b) { return b; });
}

std::string residues(const std::vector<bool>& mask, Index anchor, bool upward) {
  const Index p = static_cast<Index>(mask.size());
  std::vector<Index> res;
  for (Index j = 0; j < p; ++j) {
    if (mask[j]) res.push_back(mod(upward ? anchor + j : anchor - j, p));
  }
  std::sort(res.begin(), res.end());
  std::ostringstream out;
  out << ", i mod " << p << " in {";
  for (std::size_t k = 0; k < res.size(); ++k) out << (k ? ", " : "") << res[k];
  out << "}";
  return out.str();
}

}  // namespace

IndexSet::IndexSet() = default;

IndexSet IndexSet::finite(std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  IndexSet s;
  if (elements.empty()) return s;
  s.down_start_ = elements.front() - 1;
  s.up_start_ = elements.back() + 1;
  s.middle_ = std::move(elements);
  s.normalize();
  return s;
}

IndexSet IndexSet::at_least(Index k) {
  IndexSet s;
  s.up_start_ = k;
  s.up_mask_ = {true};
  s.down_start_ = k - 1;
  s.normalize();
  return s;
}

IndexSet IndexSet::at_most(Index k) {
  IndexSet s;
  s.down_start_ = k;
  s.down_mask_ = {true};
  s.up_start_ = k + 1;
  s.normalize();
  return s;
}

IndexSet IndexSet::all() {
  IndexSet s;
  s.down_start_ = -1;
  s.up_start_ = 0;
  s.up_mask_ = {true};
  s.down_mask_ = {true};
  s.normalize();
  return s;
}

IndexSet IndexSet::progression_up(Index k, Index period, Index residue) {
  IndexSet s;
  s.up_start_ = k;
  s.down_start_ = k - 1;
  s.up_mask_.assign(static_cast<std::size_t>(period), false);
  for (Index j = 0; j < period; ++j) s.up_mask_[j] = mod(k + j - residue, period) == 0;
  s.normalize();
  return s;
}

IndexSet IndexSet::progression_down(Index k, Index period, Index residue) {
  IndexSet s;
  s.down_start_ = k;
  s.up_start_ = k + 1;
  s.down_mask_.assign(static_cast<std::size_t>(period), false);
  for (Index j = 0; j < period; ++j) s.down_mask_[j] = mod(k - j - residue, period) == 0;
  s.normalize();
  return s;
}

IndexSet IndexSet::extrapolate(const std::function<bool(Index)>& member, Index lo, Index hi,
                               Index stable_down, Index stable_up, Index max_period,
                               bool bounded_below) {
  auto find_period = [&](Index from, Index to, Index step) -> std::vector<bool> {
    // Scans [from, to] in direction `step`.
    const Index span = (to - from) * step + 1;
    for (Index p = 1; p <= max_period; ++p) {
      if (span < 3 * p) break;
      bool ok = true;
      for (Index k = 0; k + p < span && ok; ++k) {
        ok = member(from + step * k) == member(from + step * (k + p));
      }
      if (ok) {
        std::vector<bool> mask(static_cast<std::size_t>(p));
        for (Index j = 0; j < p; ++j) mask[j] = member(from + step * j);
        return mask;
      }
    }
    throw std::logic_error("index set tail is not periodic within the analysis window");
  };

  IndexSet s;
  if (bounded_below) {
    stable_down = lo - 1;
    s.down_mask_ = {false};
  }
  if (stable_down >= stable_up) throw std::logic_error("inverted stabilization bounds");
  s.up_start_ = stable_up;
  s.up_mask_ = find_period(stable_up, hi, 1);
  s.down_start_ = stable_down;
  if (!bounded_below) s.down_mask_ = find_period(stable_down, lo, -1);
  for (Index i = stable_down + 1; i < stable_up; ++i) {
    if (member(i)) s.middle_.push_back(i);
  }
  s.normalize();
  return s;
}

bool IndexSet::contains(Index i) const {
  if (i >= up_start_) return up_mask_[static_cast<std::size_t>(mod(i - up_start_, up_period()))];
  if (i <= down_start_) {
    return down_mask_[static_cast<std::size_t>(mod(down_start_ - i, down_period()))];
  }
  return std::binary_search(middle_.begin(), middle_.end(), i);
}

bool IndexSet::up_empty() const { return all_false(up_mask_); }
bool IndexSet::down_empty() const { return all_false(down_mask_); }
bool IndexSet::up_full() const { return up_mask_.size() == 1 && up_mask_[0]; }
bool IndexSet::down_full() const { return down_mask_.size() == 1 && down_mask_[0]; }
bool IndexSet::is_empty() const { return middle_.empty() && up_empty() && down_empty(); }

std::vector<Index> IndexSet::elements() const {
  if (!is_finite()) throw std::logic_error("elements() of an infinite index set");
  return middle_;
}

std::optional<Index> IndexSet::min() const {
  if (!down_empty() || is_empty()) return std::nullopt;
  if (!middle_.empty()) return middle_.front();
  return first_up_member_from(up_start_);
}

std::optional<Index> IndexSet::max() const {
  if (!up_empty() || is_empty()) return std::nullopt;
  if (!middle_.empty()) return middle_.back();
  return first_down_member_from(down_start_);
}

Index IndexSet::first_up_member_from(Index k) const {
  if (up_empty()) throw std::logic_error("empty upward tail");
  k = std::max(k, up_start_);
  while (!contains(k)) ++k;
  return k;
}

Index IndexSet::first_down_member_from(Index k) const {
  if (down_empty()) throw std::logic_error("empty downward tail");
  k = std::min(k, down_start_);
  while (!contains(k)) --k;
  return k;
}

IndexSet IndexSet::combine(const IndexSet& a, const IndexSet& b,
                           const std::function<bool(bool, bool)>& op) {
  IndexSet s;
  s.up_start_ = std::max(a.up_start_, b.up_start_);
  s.down_start_ = std::min(a.down_start_, b.down_start_);
  const Index pu = std::lcm(a.up_period(), b.up_period());
  const Index pd = std::lcm(a.down_period(), b.down_period());
  s.up_mask_.assign(static_cast<std::size_t>(pu), false);
  s.down_mask_.assign(static_cast<std::size_t>(pd), false);
  for (Index j = 0; j < pu; ++j) {
    s.up_mask_[j] = op(a.contains(s.up_start_ + j), b.contains(s.up_start_ + j));
  }
  for (Index j = 0; j < pd; ++j) {
    s.down_mask_[j] = op(a.contains(s.down_start_ - j), b.contains(s.down_start_ - j));
  }
  for (Index i = s.down_start_ + 1; i < s.up_start_; ++i) {
    if (op(a.contains(i), b.contains(i))) s.middle_.push_back(i);
  }
  s.normalize();
  return s;
}

void IndexSet::normalize() {
  up_mask_ = minimal_period(up_mask_);
  down_mask_ = minimal_period(down_mask_);
  while (up_start_ - 1 > down_start_) {
    const bool predicted = up_mask_.back();
    const bool actual = std::binary_search(middle_.begin(), middle_.end(), up_start_ - 1);
    if (predicted != actual) break;
    std::rotate(up_mask_.rbegin(), up_mask_.rbegin() + 1, up_mask_.rend());
    if (actual) middle_.pop_back();
    --up_start_;
  }
  while (down_start_ + 1 < up_start_) {
    const bool predicted = down_mask_.back();
    const bool actual = std::binary_search(middle_.begin(), middle_.end(), down_start_ + 1);
    if (predicted != actual) break;
    std::rotate(down_mask_.rbegin(), down_mask_.rbegin() + 1, down_mask_.rend());
    if (actual) middle_.erase(middle_.begin());
    ++down_start_;
  }
}

IndexSet IndexSet::unite(const IndexSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x || y; });
}
IndexSet IndexSet::intersect(const IndexSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && y; });
}
IndexSet IndexSet::minus(const IndexSet& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && !y; });
}

IndexSet IndexSet::shifted(Index by) const {
  IndexSet s = *this;
  s.up_start_ += by;
  s.down_start_ += by;
  for (auto& m : s.middle_) m += by;
  return s;
}

bool IndexSet::subset_of(const IndexSet& o) const { return minus(o).is_empty(); }

bool IndexSet::operator==(const IndexSet& o) const { return subset_of(o) && o.subset_of(*this); }

std::string IndexSet::describe() const {
  if (is_empty()) return "{}";
  if (up_full() && down_full() && up_start_ == down_start_ + 1) return "all";
  std::vector<std::string> parts;
  if (!down_empty()) {
    std::string d = "i <= " + std::to_string(down_start_);
    if (!down_full()) d += residues(down_mask_, down_start_, false);
    parts.push_back(d);
  }
  if (!middle_.empty()) {
    std::ostringstream m;
    m << "{";
    for (std::size_t k = 0; k < middle_.size(); ++k) m << (k ? ", " : "") << middle_[k];
    m << "}";
    parts.push_back(m.str());
  }
  if (!up_empty()) {
    std::string u = "i >= " + std::to_string(up_start_);
    if (!up_full()) u += residues(up_mask_, up_start_, true);
    parts.push_back(u);
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " + " : "") + parts[k];
  return out;
}

// ---------------------------------------------------------------------------

SupportDescription SupportDescription::none(const QuiverDescription& q) {
  SupportDescription s;
  s.cores.assign(static_cast<std::size_t>(q.core_count()), false);
  s.rays.assign(static_cast<std::size_t>(q.ray_count()), IndexSet::empty());
  return s;
}

SupportDescription SupportDescription::everything(const QuiverDescription& q) {
  SupportDescription s;
  s.cores.assign(static_cast<std::size_t>(q.core_count()), true);
  for (const auto& r : q.rays()) {
    s.rays.push_back(r.domain == Domain::kNat ? IndexSet::at_least(0) : IndexSet::all());
  }
  return s;
}

bool SupportDescription::contains(const QuiverDescription& q, const VertexRef& v) const {
  if (!q.contains(v)) return false;
  if (q.is_core(v.node)) return cores[v.node];
  return rays[v.node - q.core_count()].contains(v.index);
}

void SupportDescription::insert(const QuiverDescription& q, const VertexRef& v) {
  if (q.is_core(v.node)) {
    cores[v.node] = true;
  } else {
    auto& r = rays[v.node - q.core_count()];
    r = r.unite(IndexSet::finite({v.index}));
  }
}

bool SupportDescription::is_finite() const {
  return std::all_of(rays.begin(), rays.end(), [](const IndexSet& r) { return r.is_finite(); });
}

bool SupportDescription::is_empty() const {
  return std::none_of(cores.begin(), cores.end(), [](bool b) { return b; }) &&
         std::all_of(rays.begin(), rays.end(), [](const IndexSet& r) { return r.is_empty(); });
}

std::size_t SupportDescription::finite_size() const {
  std::size_t n = static_cast<std::size_t>(std::count(cores.begin(), cores.end(), true));
  for (const auto& r : rays) n += r.size();
  return n;
}

std::vector<VertexRef> SupportDescription::elements(const QuiverDescription& q) const {
  std::vector<VertexRef> out;
  for (int c = 0; c < q.core_count(); ++c) {
    if (cores[c]) out.push_back({c, 0});
  }
  for (int r = 0; r < q.ray_count(); ++r) {
    for (Index i : rays[r].elements()) out.push_back({q.ray_node(r), i});
  }
  return out;
}

namespace {

SupportDescription zip(const SupportDescription& a, const SupportDescription& b,
                       bool (*cop)(bool, bool),
                       IndexSet (IndexSet::*rop)(const IndexSet&) const) {
  SupportDescription s;
  for (std::size_t c = 0; c < a.cores.size(); ++c) s.cores.push_back(cop(a.cores[c], b.cores[c]));
  for (std::size_t r = 0; r < a.rays.size(); ++r) s.rays.push_back((a.rays[r].*rop)(b.rays[r]));
  return s;
}

}  // namespace

SupportDescription SupportDescription::unite(const SupportDescription& o) const {
  return zip(*this, o, [](bool x, bool y) { return x || y; }, &IndexSet::unite);
}
SupportDescription SupportDescription::intersect(const SupportDescription& o) const {
  return zip(*this, o, [](bool x, bool y) { return x && y; }, &IndexSet::intersect);
}
SupportDescription SupportDescription::minus(const SupportDescription& o) const {
  return zip(*this, o, [](bool x, bool y) { return x && !y; }, &IndexSet::minus);
}
bool SupportDescription::subset_of(const SupportDescription& o) const {
  return minus(o).is_empty();
}
bool SupportDescription::operator==(const SupportDescription& o) const {
  return subset_of(o) && o.subset_of(*this);
}

std::string SupportDescription::describe(const QuiverDescription& q) const {
  if (is_finite()) {
    std::string out = "finite {";
    bool first = true;
    for (const auto& v : elements(q)) {
      out += (first ? "" : ", ") + q.vertex_id(v);
      first = false;
    }
    return out + "}";
  }
  std::vector<std::string> parts;
  for (int c = 0; c < q.core_count(); ++c) {
    if (cores[c]) parts.push_back(q.vertex_id({c, 0}));
  }
  for (int r = 0; r < q.ray_count(); ++r) {
    const IndexSet& s = rays[r];
    if (s.is_empty()) continue;
    if (s.is_finite()) {
      for (Index i : s.elements()) parts.push_back(q.vertex_id({q.ray_node(r), i}));
    } else {
      parts.push_back("ray " + q.rays()[r].name + ", " + s.describe());
    }
  }
  std::string out = "infinite (";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "; " : "") + parts[k];
  return out + ")";
}

}  // namespace qinj
