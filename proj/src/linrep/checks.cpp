#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "qinj/linrep.hpp"

namespace qinj {

bool check_restriction_surjective(const RepWindow& i, const VertexRef& a, const std::vector<Path>& paths) {
  for (std::size_t x = 0; x < paths.size(); ++x) {
    if (paths[x].source != a) throw PreconditionError("restriction path does not start at the vertex");
    for (std::size_t y = 0; y < paths.size(); ++y) {
      if (x == y) continue;
      const auto& longer = paths[x].arrows;
      const auto& shorter = paths[y].arrows;
      if (shorter.size() <= longer.size() && std::equal(shorter.begin(), shorter.end(), longer.begin())) {
        throw PreconditionError("restriction paths are not pairwise indivisible");
      }
    }
  }
  std::vector<Matrix> blocks;
  std::size_t rows = 0;
  for (const auto& p : paths) {
    blocks.push_back(apply_path(i, p));
    rows += blocks.back().rows();
  }
  return rank(Matrix::stack(blocks, i.dim(a))) == rows;
}

TailBijectivity eventual_tail_bijectivity(const RepWindow& i, const TailClass& c) {
  const auto& q = i.description();
  TailBijectivity out;
  out.required_radius = analysis_parameters(q, 0).constant_zone + c.cycle_gain + 1;
  if (i.window->radius() < out.required_radius) {
    throw std::invalid_argument("window too small for the tail class: need radius " +
                                std::to_string(out.required_radius));
  }
  const auto walk = class_walk(q, c, i.window->radius());
  if (walk.empty()) throw std::invalid_argument("tail class has no arrow inside the window");
  // Zero fibres along the tail count as failure: the class must live there.
  std::size_t first = walk.size();
  while (first > 0) {
    const Matrix& m = i.map(walk[first - 1]);
    if (m.rows() == 0 || m.rows() != m.cols() || rank(m) != m.rows()) break;
    --first;
  }
  if (first == walk.size()) {
    out.ok = false;
    out.failure = walk.back();
    return out;
  }
  out.ok = true;
  out.z = walk[first].source.index;
  if (first > 0) out.failure = walk[first - 1];
  return out;
}

FpCheck is_fd_rep_fp(const QuiverDescription& q, const RepWindow& m) {
  const Window& w = *m.window;
  for (std::size_t v = 0; v < w.size(); ++v) {
    const auto& x = w.vertices()[v];
    if (m.dims[v] > 0 && q.is_ray(x.node) && std::abs(x.index) >= w.radius()) {
      throw PreconditionError("support touches the window boundary at " + q.vertex_id(x));
    }
  }
  FpCheck out;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (m.dims[v] == 0) continue;
    if (!out_neighbors(q, w.vertices()[v]).cardinality.is_finite()) {
      out.finitely_presented = false;
      out.witness = w.vertices()[v];
      return out;
    }
  }
  return out;
}

}  // namespace qinj
