#include <sstream>

#include "qinj/linrep.hpp"

namespace qinj {

std::string dump(const RepWindow& m, const std::string& title) {
  const Window& w = *m.window;
  const auto& q = w.description();
  std::ostringstream os;
  os << "rep " << title << "\n";
  os << "window " << w.radius() << "\n";
  for (std::size_t v = 0; v < w.size(); ++v) {
    os << "vertex " << q.vertex_id(w.vertices()[v]) << " dim " << m.dims[v] << "\n";
    if (!m.basis_labels.empty()) {
      for (const auto& label : m.basis_labels[v]) os << "  basis " << label << "\n";
    }
  }
  for (std::size_t a = 0; a < w.arrows().size(); ++a) {
    const auto& arrow = w.arrows()[a];
    const Matrix& x = m.maps[a];
    os << "arrow " << q.arrow_id(arrow) << " " << q.vertex_id(arrow.source) << " -> "
       << q.vertex_id(arrow.target) << " " << x.rows() << "x" << x.cols() << "\n";
    for (std::size_t r = 0; r < x.rows(); ++r) {
      os << " ";
      for (std::size_t c = 0; c < x.cols(); ++c) os << " " << format(x(r, c));
      os << "\n";
    }
  }
  return os.str();
}

std::string dot(const RepWindow& m, const std::string& title) {
  const Window& w = *m.window;
  const auto& q = w.description();
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n  rankdir=LR;\n";
  for (std::size_t v = 0; v < w.size(); ++v) {
    const std::string id = q.vertex_id(w.vertices()[v]);
    os << "  \"" << id << "\" [label=\"" << id << "\\ndim " << m.dims[v] << "\"";
    if (m.dims[v] == 0) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& arrow : w.arrows()) {
    os << "  \"" << q.vertex_id(arrow.source) << "\" -> \"" << q.vertex_id(arrow.target) << "\" [label=\""
       << q.arrow_id(arrow) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qinj
