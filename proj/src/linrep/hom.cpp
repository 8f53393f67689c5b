#include <stdexcept>

#include "qinj/linrep.hpp"

namespace qinj {

std::vector<MorphismWindow> hom_basis(std::shared_ptr<const RepWindow> m,
                                      std::shared_ptr<const RepWindow> n) {
  const Window& w = *m->window;
  // Unknowns: the entries of every component f_v, row-major, vertex by vertex.
  std::vector<std::size_t> offset(w.size() + 1, 0);
  for (std::size_t v = 0; v < w.size(); ++v) offset[v + 1] = offset[v] + n->dims[v] * m->dims[v];
  const std::size_t unknowns = offset[w.size()];
  std::vector<std::vector<std::pair<std::size_t, Rational>>> equations;
  for (std::size_t a = 0; a < w.arrows().size(); ++a) {
    const std::size_t s = w.arrow_source(a);
    const std::size_t t = w.arrow_target(a);
    const Matrix& ma = m->maps[a];
    const Matrix& na = n->maps[a];
    // (N(a) f_s - f_t M(a))[i][j] = 0
    for (std::size_t i = 0; i < n->dims[t]; ++i) {
      for (std::size_t j = 0; j < m->dims[s]; ++j) {
        std::vector<std::pair<std::size_t, Rational>> row;
        for (std::size_t k = 0; k < n->dims[s]; ++k) {
          if (na(i, k) != 0) row.emplace_back(offset[s] + k * m->dims[s] + j, na(i, k));
        }
        for (std::size_t k = 0; k < m->dims[t]; ++k) {
          if (ma(k, j) != 0) row.emplace_back(offset[t] + i * m->dims[t] + k, -ma(k, j));
        }
        if (!row.empty()) equations.push_back(std::move(row));
      }
    }
  }
  Matrix system(equations.size(), unknowns);
  for (std::size_t r = 0; r < equations.size(); ++r) {
    for (const auto& [col, value] : equations[r]) system(r, col) += value;
  }
  const Matrix basis = kernel(system);
  std::vector<MorphismWindow> out;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    MorphismWindow f{m, n, {}};
    for (std::size_t v = 0; v < w.size(); ++v) {
      Matrix c(n->dims[v], m->dims[v]);
      for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = basis(offset[v] + i * m->dims[v] + j, b);
      }
      f.components.push_back(std::move(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

bool same(const MorphismWindow& f, const MorphismWindow& g) { return f.components == g.components; }

Matrix unit(std::size_t n, std::size_t i) {
  Matrix e(n, 1);
  e(i, 0) = 1;
  return e;
}

}  // namespace

HomIso hom_from_projective(const RepWindow& m, const VertexRef& a) {
  auto target = std::make_shared<const RepWindow>(m);
  auto p = std::make_shared<const RepWindow>(build_P(m.window, a));
  const Window& w = *m.window;
  const auto paths = window_paths_from(w, a);
  const std::size_t pa = w.position(a);
  HomIso out;
  out.dimension = m.dims[pa];

  // eta'(x): p -> M(p) x; eta(f) = f_a(e_a), e_a being the first basis path.
  auto realize = [&](const Matrix& x) {
    MorphismWindow f{p, target, {}};
    for (std::size_t v = 0; v < w.size(); ++v) {
      std::vector<Matrix> cols;
      for (const auto& path : paths[v]) cols.push_back(apply_path(m, path) * x);
      f.components.push_back(Matrix::join(cols, m.dims[v]));
    }
    return f;
  };
  auto evaluate = [&](const MorphismWindow& f) { return f.components[pa].column(0); };

  bool ok = true;
  for (std::size_t i = 0; i < out.dimension; ++i) {
    auto f = realize(unit(out.dimension, i));
    ok = ok && f.natural() && evaluate(f) == unit(out.dimension, i);
    out.realized.push_back(std::move(f));
  }
  const auto basis = hom_basis(p, target);
  out.hom_dimension = basis.size();
  for (const auto& f : basis) ok = ok && same(realize(evaluate(f)), f);
  out.round_trip = ok && out.hom_dimension == out.dimension;
  return out;
}

HomIso hom_to_injective(const RepWindow& m, const VertexRef& a) {
  auto source = std::make_shared<const RepWindow>(m);
  auto inj = std::make_shared<const RepWindow>(build_I(m.window, a));
  const Window& w = *m.window;
  const auto paths = window_paths_into(w, a);
  const std::size_t pa = w.position(a);
  HomIso out;
  out.dimension = m.dims[pa];

  // zeta'(phi): y -> (u -> phi(M(u) y)); zeta(f) = (x -> f_a(x)(e_a)).
  auto realize = [&](const Matrix& phi) {
    MorphismWindow f{source, inj, {}};
    for (std::size_t v = 0; v < w.size(); ++v) {
      std::vector<Matrix> rows;
      for (const auto& path : paths[v]) rows.push_back(phi * apply_path(m, path));
      f.components.push_back(Matrix::stack(rows, m.dims[v]));
    }
    return f;
  };
  auto evaluate = [&](const MorphismWindow& f) { return f.components[pa].rows_range(0, 1); };

  bool ok = true;
  for (std::size_t i = 0; i < out.dimension; ++i) {
    const Matrix phi = unit(out.dimension, i).transposed();
    auto f = realize(phi);
    ok = ok && f.natural() && evaluate(f) == phi;
    out.realized.push_back(std::move(f));
  }
  const auto basis = hom_basis(source, inj);
  out.hom_dimension = basis.size();
  for (const auto& f : basis) ok = ok && same(realize(evaluate(f)), f);
  out.round_trip = ok && out.hom_dimension == out.dimension;
  return out;
}

}  // namespace qinj
