#include <algorithm>
#include <functional>

#include "qinj/linrep.hpp"

namespace qinj {

RepWindow RepWindow::zero(std::shared_ptr<const Window> w) {
  RepWindow m;
  m.dims.assign(w->size(), 0);
  m.maps.assign(w->arrows().size(), Matrix(0, 0));
  m.window = std::move(w);
  return m;
}

RepWindow direct_sum(const std::vector<RepWindow>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no representations");
  const Window& w = *parts[0].window;
  for (const auto& m : parts) {
    if (m.window->radius() != w.radius() || !(m.description() == w.description())) {
      throw std::invalid_argument("direct sum over different windows");
    }
  }
  RepWindow out = RepWindow::zero(parts[0].window);
  for (std::size_t v = 0; v < w.size(); ++v) {
    for (const auto& m : parts) out.dims[v] += m.dims[v];
  }
  for (std::size_t a = 0; a < w.arrows().size(); ++a) {
    Matrix x(out.dims[w.arrow_target(a)], out.dims[w.arrow_source(a)]);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& m : parts) {
      const Matrix& block = m.maps[a];
      for (std::size_t r = 0; r < block.rows(); ++r) {
        for (std::size_t c = 0; c < block.cols(); ++c) x(r0 + r, c0 + c) = block(r, c);
      }
      r0 += block.rows();
      c0 += block.cols();
    }
    out.maps[a] = std::move(x);
  }
  return out;
}

const Matrix& RepWindow::map(const ArrowRef& a) const {
  auto pos = window->find_arrow(a);
  if (!pos) throw std::out_of_range("arrow " + description().arrow_id(a) + " outside the window");
  return maps[*pos];
}

std::size_t RepWindow::total_dimension() const {
  std::size_t n = 0;
  for (std::size_t d : dims) n += d;
  return n;
}

bool RepWindow::well_formed() const {
  if (dims.size() != window->size() || maps.size() != window->arrows().size()) return false;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    if (maps[a].rows() != dims[window->arrow_target(a)] || maps[a].cols() != dims[window->arrow_source(a)]) {
      return false;
    }
  }
  if (!basis_labels.empty()) {
    if (basis_labels.size() != dims.size()) return false;
    for (std::size_t v = 0; v < dims.size(); ++v) {
      auto labels = basis_labels[v];
      if (labels.size() != dims[v]) return false;
      std::sort(labels.begin(), labels.end());
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
    }
  }
  return true;
}

bool MorphismWindow::natural() const {
  const Window& w = *source->window;
  for (std::size_t a = 0; a < w.arrows().size(); ++a) {
    const std::size_t s = w.arrow_source(a);
    const std::size_t t = w.arrow_target(a);
    if (!(components[t] * source->maps[a] == target->maps[a] * components[s])) return false;
  }
  return true;
}

Matrix apply_path(const RepWindow& m, const Path& p) {
  auto start = m.window->find(p.source);
  if (!start) throw std::out_of_range("path starts outside the window");
  Matrix out = Matrix::identity(m.dims[*start]);
  for (const auto& arrow : p.arrows) out = m.map(arrow) * out;
  return out;
}

std::vector<std::vector<Path>> window_paths_from(const Window& w, const VertexRef& a) {
  std::vector<std::vector<Path>> out(w.size());
  Path current{a, {}};
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    out[v].push_back(current);
    for (std::size_t arrow : w.out_arrows(v)) {
      current.arrows.push_back(w.arrows()[arrow]);
      walk(w.arrow_target(arrow));
      current.arrows.pop_back();
    }
  };
  walk(w.position(a));
  for (auto& paths : out) {
    std::sort(paths.begin(), paths.end(),
              [&](const Path& x, const Path& y) { return path_order(w.description(), x, y); });
  }
  return out;
}

std::vector<std::vector<Path>> window_paths_into(const Window& w, const VertexRef& a) {
  std::vector<std::vector<Path>> out(w.size());
  std::vector<ArrowRef> reversed;  // arrows from the current vertex to a, last first
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    out[v].push_back(Path{w.vertices()[v], {reversed.rbegin(), reversed.rend()}});
    for (std::size_t arrow : w.in_arrows(v)) {
      reversed.push_back(w.arrows()[arrow]);
      walk(w.arrow_source(arrow));
      reversed.pop_back();
    }
  };
  walk(w.position(a));
  for (auto& paths : out) {
    std::sort(paths.begin(), paths.end(),
              [&](const Path& x, const Path& y) { return path_order(w.description(), x, y); });
  }
  return out;
}

namespace {

using Lookup = std::map<std::vector<ArrowRef>, std::size_t>;

std::vector<Lookup> index_paths(const std::vector<std::vector<Path>>& bases) {
  std::vector<Lookup> out(bases.size());
  for (std::size_t v = 0; v < bases.size(); ++v) {
    for (std::size_t k = 0; k < bases[v].size(); ++k) out[v].emplace(bases[v][k].arrows, k);
  }
  return out;
}

RepWindow from_bases(std::shared_ptr<const Window> w, const std::vector<std::vector<Path>>& bases) {
  RepWindow m;
  m.window = w;
  for (std::size_t v = 0; v < w->size(); ++v) {
    m.dims.push_back(bases[v].size());
    std::vector<std::string> labels;
    for (const auto& p : bases[v]) labels.push_back(path_id(w->description(), p));
    m.basis_labels.push_back(std::move(labels));
  }
  return m;
}

// Paths into a target, as the dual basis of an injective-type representation:
// M(alpha)[u', u] = 1 iff u = u' alpha.
std::vector<Matrix> precomposition_maps(const Window& w, const std::vector<std::vector<Path>>& bases) {
  const auto lookup = index_paths(bases);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < w.arrows().size(); ++a) {
    const std::size_t s = w.arrow_source(a);
    const std::size_t t = w.arrow_target(a);
    Matrix m(bases[t].size(), bases[s].size());
    for (std::size_t row = 0; row < bases[t].size(); ++row) {
      std::vector<ArrowRef> u{w.arrows()[a]};
      const auto& rest = bases[t][row].arrows;
      u.insert(u.end(), rest.begin(), rest.end());
      auto it = lookup[s].find(u);
      if (it == lookup[s].end()) throw std::logic_error("path basis not closed under precomposition");
      m(row, it->second) = 1;
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

}  // namespace

RepWindow build_P(std::shared_ptr<const Window> w, const VertexRef& a) {
  const auto bases = window_paths_from(*w, a);
  const auto lookup = index_paths(bases);
  RepWindow m = from_bases(w, bases);
  for (std::size_t arrow = 0; arrow < w->arrows().size(); ++arrow) {
    const std::size_t s = w->arrow_source(arrow);
    const std::size_t t = w->arrow_target(arrow);
    Matrix x(bases[t].size(), bases[s].size());
    for (std::size_t col = 0; col < bases[s].size(); ++col) {
      auto p = bases[s][col].arrows;
      p.push_back(w->arrows()[arrow]);
      x(lookup[t].at(p), col) = 1;
    }
    m.maps.push_back(std::move(x));
  }
  return m;
}

RepWindow build_I(std::shared_ptr<const Window> w, const VertexRef& a) {
  const auto bases = window_paths_into(*w, a);
  RepWindow m = from_bases(w, bases);
  m.maps = precomposition_maps(*w, bases);
  return m;
}

RepWindow build_P(const QuiverDescription& q, const VertexRef& a, Index n) {
  return build_P(std::make_shared<const Window>(q, n), a);
}

RepWindow build_I(const QuiverDescription& q, const VertexRef& a, Index n) {
  return build_I(std::make_shared<const Window>(q, n), a);
}

RepWindow build_Y(const QuiverDescription& q, const TailClass& c, Index n) {
  const Analyzer an(q, n);
  auto w = std::make_shared<const Window>(q, n);
  std::vector<std::size_t> dims;
  for (const auto& v : w->vertices()) {
    auto d = an.tail_dimension(v, c);
    if (!d) throw InfiniteDimensionAt(v, "infinite dimension at " + q.vertex_id(v));
    dims.push_back(d->get_ui());
  }
  // On the window, Y_[p] is I_h for a tail vertex h far enough out.
  const VertexRef h = an.stable_tail_vertex(c, n);
  const auto walk = class_walk(q, c, an.window().radius());
  auto on_walk = std::find_if(walk.begin(), walk.end(), [&](const ArrowRef& x) { return x.target == h; });
  if (on_walk == walk.end()) throw std::logic_error("stable tail vertex not on the class walk");
  const std::vector<ArrowRef> into_h(walk.begin(), on_walk + 1);

  std::vector<std::vector<Path>> bases(w->size());
  std::vector<std::vector<std::string>> labels(w->size());
  for (std::size_t v = 0; v < w->size(); ++v) {
    auto paths = an.paths(w->vertices()[v], h);
    if (paths.size() != dims[v]) throw std::logic_error("tail dimension not attained at the stable vertex");
    // Split every path into a prefix and the longest common suffix with the
    // canonical walk; order by where the prefix joins the walk.
    struct Entry {
      std::size_t join;
      Path prefix;
      Path full;
    };
    std::vector<Entry> entries;
    for (auto& p : paths) {
      std::size_t k = 0;
      while (k < p.arrows.size() && k < into_h.size() &&
             p.arrows[p.arrows.size() - 1 - k] == into_h[into_h.size() - 1 - k]) {
        ++k;
      }
      Path prefix{p.source, {p.arrows.begin(), p.arrows.end() - static_cast<std::ptrdiff_t>(k)}};
      entries.push_back({into_h.size() - k, std::move(prefix), std::move(p)});
    }
    std::sort(entries.begin(), entries.end(), [&](const Entry& x, const Entry& y) {
      if (x.join != y.join) return x.join < y.join;
      return path_order(q, x.prefix, y.prefix);
    });
    for (auto& e : entries) {
      const VertexRef join = e.prefix.target();
      labels[v].push_back(q.vertex_id(join) + "|" + path_id(q, e.prefix));
      bases[v].push_back(std::move(e.full));
    }
  }
  RepWindow m;
  m.window = w;
  m.dims = dims;
  m.basis_labels = std::move(labels);
  m.maps = precomposition_maps(*w, bases);
  return m;
}

}  // namespace qinj
