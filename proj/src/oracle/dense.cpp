#include <sstream>

#include "qinj/oracle.hpp"

namespace qinj::oracle {

std::size_t brute_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

Dense zeros(std::size_t rows, std::size_t cols) {
  return Dense(rows, std::vector<mpq_class>(cols, mpq_class(0)));
}

}  // namespace

BruteRep brute_P(const ExplicitQuiver& g, std::size_t a) {
  std::vector<std::vector<BrutePath>> basis(g.vertices.size());
  BruteRep m;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    basis[v] = brute_paths(g, a, v);
    m.dims.push_back(basis[v].size());
  }
  for (std::size_t x = 0; x < g.arrows.size(); ++x) {
    const auto& arrow = g.arrows[x];
    Dense map = zeros(m.dims[arrow.target], m.dims[arrow.source]);
    for (std::size_t col = 0; col < basis[arrow.source].size(); ++col) {
      BrutePath longer = basis[arrow.source][col];
      longer.push_back(x);
      for (std::size_t row = 0; row < basis[arrow.target].size(); ++row) {
        if (basis[arrow.target][row] == longer) map[row][col] = 1;
      }
    }
    m.maps.push_back(std::move(map));
  }
  return m;
}

BruteRep brute_I(const ExplicitQuiver& g, std::size_t a) {
  std::vector<std::vector<BrutePath>> basis(g.vertices.size());
  BruteRep m;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    basis[v] = brute_paths(g, v, a);
    m.dims.push_back(basis[v].size());
  }
  for (std::size_t x = 0; x < g.arrows.size(); ++x) {
    const auto& arrow = g.arrows[x];
    Dense map = zeros(m.dims[arrow.target], m.dims[arrow.source]);
    for (std::size_t row = 0; row < basis[arrow.target].size(); ++row) {
      BrutePath longer{x};
      longer.insert(longer.end(), basis[arrow.target][row].begin(), basis[arrow.target][row].end());
      for (std::size_t col = 0; col < basis[arrow.source].size(); ++col) {
        if (basis[arrow.source][col] == longer) map[row][col] = 1;
      }
    }
    m.maps.push_back(std::move(map));
  }
  return m;
}

std::vector<std::size_t> brute_socle(const ExplicitQuiver& g, const BruteRep& m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    Dense stacked;
    for (std::size_t x = 0; x < g.arrows.size(); ++x) {
      if (g.arrows[x].source != v) continue;
      stacked.insert(stacked.end(), m.maps[x].begin(), m.maps[x].end());
    }
    out.push_back(m.dims[v] - brute_rank(stacked));
  }
  return out;
}

std::vector<std::size_t> brute_radical(const ExplicitQuiver& g, const BruteRep& m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    Dense joined(m.dims[v]);
    for (std::size_t x = 0; x < g.arrows.size(); ++x) {
      if (g.arrows[x].target != v) continue;
      for (std::size_t r = 0; r < m.dims[v]; ++r) {
        joined[r].insert(joined[r].end(), m.maps[x][r].begin(), m.maps[x][r].end());
      }
    }
    out.push_back(brute_rank(joined));
  }
  return out;
}

BruteRep read_dump(const ExplicitQuiver& g, const std::string& text) {
  BruteRep m;
  m.dims.assign(g.vertices.size(), 0);
  m.maps.resize(g.arrows.size());
  std::vector<bool> seen(g.arrows.size(), false);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "vertex") {
      std::string id, dim_word;
      std::size_t dim = 0;
      words >> id >> dim_word >> dim;
      m.dims[g.at(id)] = dim;
    } else if (head == "arrow") {
      std::string label, src, to, tgt, shape;
      words >> label >> src >> to >> tgt >> shape;
      const auto x = shape.find('x');
      const std::size_t rows = std::stoul(shape.substr(0, x));
      const std::size_t cols = std::stoul(shape.substr(x + 1));
      std::size_t index = g.arrows.size();
      for (std::size_t k = 0; k < g.arrows.size(); ++k) {
        if (g.arrows[k].label == label) index = k;
      }
      if (index == g.arrows.size()) throw std::out_of_range("dump arrow " + label + " not in the quiver");
      Dense map = zeros(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        std::getline(in, line);
        std::istringstream entries(line);
        for (std::size_t c = 0; c < cols; ++c) {
          std::string entry;
          entries >> entry;
          map[r][c] = mpq_class(entry);
          map[r][c].canonicalize();
        }
      }
      m.maps[index] = std::move(map);
      seen[index] = true;
    }
  }
  for (std::size_t k = 0; k < g.arrows.size(); ++k) {
    if (!seen[k]) {
      m.maps[k] = zeros(m.dims[g.arrows[k].target], m.dims[g.arrows[k].source]);
    }
  }
  return m;
}

}  // namespace qinj::oracle
