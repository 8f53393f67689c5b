#include <sstream>

#include "qinj/cli.hpp"

namespace qinj {

namespace {

std::string vertex_list(const QuiverDescription& q, const std::vector<VertexRef>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + q.vertex_id(vs[i]);
  return s + "}";
}

void ia_lines(std::ostream& os, const QuiverDescription& q, const std::string& key, const IaVerdict& v) {
  os << key << ".certificate: " << v.summary(q) << "\n";
  for (std::size_t k = 0; k < v.out_lists.size(); ++k) {
    os << key << ".out[" << q.vertex_id(v.predecessors[k]) << "]: " << vertex_list(q, v.out_lists[k]) << "\n";
  }
}

std::string checkpoints(const QuiverDescription& q, const UniformBound& u) {
  std::string s;
  for (std::size_t k = 0; k < u.checkpoints.size(); ++k) {
    const auto& c = u.checkpoints[k];
    s += (k ? ", " : "") + std::to_string(c.radius) + ":" + c.count.get_str() + " (" + q.vertex_id(c.a) +
         " -> " + q.vertex_id(c.b) + ")";
  }
  return s;
}

}  // namespace

std::string render_catalog(const QuiverDescription& q, const InjectiveCatalog& catalog) {
  std::ostringstream os;
  os << "quiver: " << q.name() << "\n";

  os << "[IA-CORE]\n";
  if (catalog.ia_core.empty()) os << "none\n";
  for (const auto& v : catalog.ia_core) {
    const std::string key = q.vertex_id(v.vertex);
    os << key << ": " << (v.yes ? "yes" : "no") << "\n";
    ia_lines(os, q, key, v);
  }

  os << "[IA-RAYS]\n";
  if (catalog.ia_rays.empty()) os << "none\n";
  for (const auto& r : catalog.ia_rays) {
    const std::string key = q.node_name(r.ray);
    os << key << ": " << r.describe() << "\n";
    os << key << ".checked: |i| <= " << r.checked_to << ", constant for |i| >= " << r.periodic_from << "\n";
    if (r.sample_no) {
      os << key << ".sample_no: " << q.vertex_id(r.sample_no->vertex) << "\n";
      ia_lines(os, q, key + ".sample_no", *r.sample_no);
    }
  }

  os << "[Y-CLASSES]\n";
  if (catalog.y_classes.empty()) os << "none\n";
  for (const auto& [c, v] : catalog.y_classes) {
    const std::string& key = c.id;
    os << key << ": " << (v.yes ? "yes" : "no (" + v.reason() + ")") << "\n";
    std::string cycle;
    for (std::size_t k = 0; k < c.spelling.cycle.size(); ++k) {
      cycle += (k ? " " : "") + q.families()[c.spelling.cycle[k]].label;
    }
    os << key << ".walk: from " << q.vertex_id(c.spelling.start) << ", cycle " << cycle << "\n";
    os << key << ".support: " << v.support.describe(q) << "\n";
    if (v.top) os << key << ".top: " << v.top->describe(q) << "\n";
    if (v.uniform) {
      if (v.uniform->bounded) {
        os << key << ".bound: " << v.uniform->bound.get_str() << "\n";
      } else {
        os << key << ".bound: unbounded\n";
      }
      os << key << ".checkpoints: " << checkpoints(q, *v.uniform) << "\n";
    }
    if (v.boundary) os << key << ".boundary: " << v.boundary->set.describe(q) << "\n";
  }

  os << "[INFINITE-FAMILIES]\n";
  if (catalog.infinite_class_families.empty()) os << "none\n";
  for (const auto& f : catalog.infinite_class_families) os << f.describe(q) << ": no\n";

  os << "[SUMMARY]\n";
  std::size_t found = 0;
  auto line = [&](const std::string& text) {
    os << text << "\n";
    ++found;
  };
  for (const auto& v : catalog.ia_core) {
    if (v.yes) line("I " + q.vertex_id(v.vertex));
  }
  for (const auto& r : catalog.ia_rays) {
    if (r.shape == RayVerdict::Shape::kAllYes) line("I ray " + q.node_name(r.ray) + ", every index");
    if (r.shape == RayVerdict::Shape::kYesOn) line("I ray " + q.node_name(r.ray) + ", " + r.yes.describe());
  }
  for (const auto& [c, v] : catalog.y_classes) {
    if (v.yes) line("Y " + c.id);
  }
  if (found == 0) os << "no nonzero injective objects\n";
  return os.str();
}

}  // namespace qinj
