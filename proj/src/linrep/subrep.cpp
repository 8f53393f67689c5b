#include <deque>
#include <stdexcept>

#include "qinj/linrep.hpp"

namespace qinj {

namespace {

// Maps of the subrepresentation spanned by the inclusion columns.
RepWindow restrict_to(const RepWindow& m, const std::vector<Matrix>& inclusion) {
  const Window& w = *m.window;
  RepWindow sub;
  sub.window = m.window;
  for (const auto& k : inclusion) sub.dims.push_back(k.cols());
  for (std::size_t a = 0; a < w.arrows().size(); ++a) {
    const std::size_t s = w.arrow_source(a);
    const std::size_t t = w.arrow_target(a);
    auto x = solve(inclusion[t], m.maps[a] * inclusion[s]);
    if (!x) throw std::logic_error("subspaces are not closed under the representation maps");
    sub.maps.push_back(std::move(*x));
  }
  return sub;
}

bool arrows_inside(const QuiverDescription& q, const Window& w, const VertexSet& neighbours) {
  if (!neighbours.cardinality.is_finite()) return false;
  for (const auto& v : neighbours.set.elements(q)) {
    if (!w.contains(v)) return false;
  }
  return true;
}

}  // namespace

SubRepWindow socle(const RepWindow& m) {
  const Window& w = *m.window;
  const auto& q = w.description();
  SubRepWindow out;
  for (std::size_t v = 0; v < w.size(); ++v) {
    std::vector<Matrix> blocks;
    for (std::size_t a : w.out_arrows(v)) blocks.push_back(m.maps[a]);
    out.inclusion.push_back(kernel(Matrix::stack(blocks, m.dims[v])));
    out.boundary.push_back(!arrows_inside(q, w, out_neighbors(q, w.vertices()[v])));
  }
  out.rep = restrict_to(m, out.inclusion);
  return out;
}

SubRepWindow radical(const RepWindow& m) {
  const Window& w = *m.window;
  const auto& q = w.description();
  SubRepWindow out;
  for (std::size_t v = 0; v < w.size(); ++v) {
    std::vector<Matrix> blocks;
    for (std::size_t a : w.in_arrows(v)) blocks.push_back(m.maps[a]);
    out.inclusion.push_back(column_basis(Matrix::join(blocks, m.dims[v])));
    out.boundary.push_back(!arrows_inside(q, w, in_neighbors(q, w.vertices()[v])));
  }
  out.rep = restrict_to(m, out.inclusion);
  return out;
}

SubRepWindow subrep_generated(const RepWindow& m, const std::map<VertexRef, Matrix>& seeds) {
  const Window& w = *m.window;
  std::vector<Matrix> span;
  for (std::size_t v = 0; v < w.size(); ++v) span.emplace_back(m.dims[v], 0);
  std::deque<std::size_t> work;
  for (const auto& [vertex, vectors] : seeds) {
    auto pos = w.find(vertex);
    if (!pos) throw std::invalid_argument("seed vertex outside the window");
    if (vectors.rows() != m.dims[*pos]) throw std::invalid_argument("seed dimension mismatch");
    span[*pos] = column_basis(Matrix::join({span[*pos], vectors}, m.dims[*pos]));
    work.push_back(*pos);
  }
  while (!work.empty()) {
    const std::size_t v = work.front();
    work.pop_front();
    for (std::size_t a : w.out_arrows(v)) {
      const std::size_t t = w.arrow_target(a);
      Matrix grown = column_basis(Matrix::join({span[t], m.maps[a] * span[v]}, m.dims[t]));
      if (grown.cols() > span[t].cols()) {
        span[t] = std::move(grown);
        work.push_back(t);
      }
    }
  }
  SubRepWindow out;
  out.inclusion = std::move(span);
  out.boundary.assign(w.size(), false);
  out.rep = restrict_to(m, out.inclusion);
  return out;
}

RepWindow quotient(const RepWindow& m, const SubRepWindow& sub) {
  const Window& w = *m.window;
  std::vector<Matrix> complement;
  std::vector<Matrix> full;
  for (std::size_t v = 0; v < w.size(); ++v) {
    const Matrix& k = sub.inclusion[v];
    if (k.rows() != m.dims[v]) throw std::invalid_argument("subrepresentation does not match");
    const Matrix both = Matrix::join({k, Matrix::identity(m.dims[v])}, m.dims[v]);
    std::vector<std::size_t> extra;
    for (std::size_t c : pivot_columns(both)) {
      if (c >= k.cols()) extra.push_back(c);
    }
    complement.push_back(both.columns(extra));
    full.push_back(Matrix::join({k, complement.back()}, m.dims[v]));
  }
  RepWindow out;
  out.window = m.window;
  for (const auto& c : complement) out.dims.push_back(c.cols());
  for (std::size_t a = 0; a < w.arrows().size(); ++a) {
    const std::size_t s = w.arrow_source(a);
    const std::size_t t = w.arrow_target(a);
    auto coords = solve(full[t], m.maps[a] * complement[s]);
    if (!coords) throw std::logic_error("basis does not span the ambient space");
    out.maps.push_back(coords->rows_range(sub.inclusion[t].cols(), complement[t].cols()));
  }
  return out;
}

}  // namespace qinj
