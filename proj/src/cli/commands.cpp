#include <CLI11.hpp>

#include <cstdlib>
#include <ios>
#include <memory>
#include <ostream>

#include "qinj/cli.hpp"
#include "qinj/linrep.hpp"

namespace qinj {

namespace {

class UnknownId : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

VertexRef vertex_arg(const QuiverDescription& q, const std::string& id) {
  auto v = q.parse_vertex_id(id);
  if (!v || !q.contains(*v)) throw UnknownId("unknown vertex id '" + id + "'");
  return *v;
}

// Accepts "(a,+)" or the two tokens "class (a,+)".
std::string class_arg(const std::vector<std::string>& args) {
  if (args.size() == 2 && args[0] == "class") return args[1];
  if (args.size() == 1) return args[0];
  throw CLI::ValidationError("expected a class id such as (a,+)");
}

TailClass class_lookup(const Analyzer& an, const std::string& id) {
  const auto e = an.enumerate_tail_classes();
  const TailClass* c = find_class(e, id);
  if (!c) throw UnknownId("unknown class id '" + id + "'");
  return *c;
}

Index abs_index(Index i) { return i < 0 ? -i : i; }

void print_set(std::ostream& out, const QuiverDescription& q, const VertexSet& s) {
  out << s.set.describe(q) << "\n";
  out << "count: " << s.cardinality.describe(q) << "\n";
}

int cmd_validate(const QuiverDescription& q, std::ostream& out, std::ostream& err) {
  const auto f = is_interval_finite(q);
  if (f.cycle) {
    err << "oriented cycle: " << path_id(q, *f.cycle) << " at " << q.vertex_id(f.cycle->source) << "\n";
    return kExitNotIntervalFinite;
  }
  if (!f.interval_finite) {
    err << "not interval finite: infinitely many paths " << q.vertex_id(f.witness->first) << " -> "
        << q.vertex_id(f.witness->second) << "\n";
    return kExitNotIntervalFinite;
  }
  const auto p = analysis_parameters(q, 0);
  out << "ok\n";
  out << "quiver: " << q.name() << "\n";
  out << "cores: " << q.core_count() << "\n";
  out << "rays: " << q.ray_count() << "\n";
  out << "arrows: " << q.singles().size() << "\n";
  out << "families: " << q.families().size() << "\n";
  out << "stabilization_index: " << p.stabilization_index(0) << "\n";
  return kExitOk;
}

int cmd_query(const QuiverDescription& q, const std::string& kind, const std::vector<std::string>& args,
              std::ostream& out) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw CLI::ValidationError("query " + kind + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  if (kind == "paths") {
    need(2);
    const VertexRef a = vertex_arg(q, args[0]);
    const VertexRef b = vertex_arg(q, args[1]);
    const Index span = std::max(abs_index(a.index), abs_index(b.index));
    const Analyzer an(q, span);
    const Cardinality c = an.path_count(a, b);
    out << c.describe(q) << "\n";
    if (c.is_finite() && c.count() <= 64) {
      for (const auto& p : an.paths(a, b)) out << "path: " << path_id(q, p) << "\n";
    }
    return kExitOk;
  }
  if (kind == "pred" || kind == "succ" || kind == "out" || kind == "in") {
    need(1);
    const VertexRef a = vertex_arg(q, args[0]);
    if (kind == "pred") print_set(out, q, predecessors(q, a));
    if (kind == "succ") print_set(out, q, successors(q, a));
    if (kind == "out") print_set(out, q, out_neighbors(q, a));
    if (kind == "in") print_set(out, q, in_neighbors(q, a));
    return kExitOk;
  }
  if (kind == "supp" || kind == "boundary") {
    const Classifier cl(q);
    const TailClass c = class_lookup(cl.analyzer(), class_arg(args));
    const SupportDescription s = cl.analyzer().class_support(c);
    if (kind == "supp") {
      print_set(out, q, make_vertex_set(q, s));
    } else {
      print_set(out, q, boundary(q, s));
    }
    return kExitOk;
  }
  throw CLI::ValidationError("unknown query kind '" + kind + "'");
}

int cmd_rep(const QuiverDescription& q, const std::string& kind, const std::vector<std::string>& args,
            std::optional<Index> window, bool want_dot, std::ostream& out) {
  const auto params = analysis_parameters(q, 0);
  RepWindow m;
  std::string title;
  if (kind == "P" || kind == "I") {
    if (args.size() != 1) throw CLI::ValidationError("rep " + kind + " takes one vertex id");
    const VertexRef a = vertex_arg(q, args[0]);
    const Index n = window.value_or(params.stabilization_index(abs_index(a.index)) + 2);
    m = kind == "P" ? build_P(q, a, n) : build_I(q, a, n);
    title = kind + " " + q.vertex_id(a);
  } else if (kind == "Y") {
    const Classifier cl(q);
    const TailClass c = class_lookup(cl.analyzer(), class_arg(args));
    const Index n = window.value_or(params.stabilization_index(0) + 2);
    m = build_Y(q, c, n);
    title = "Y " + c.id;
  } else {
    throw CLI::ValidationError("rep kind must be P, I or Y");
  }
  out << (want_dot ? dot(m, title) : dump(m, title));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indecomposable injectives of fp(Q) for symbolically described quivers", "qinj"};
  app.require_subcommand(1);

  std::string file;
  std::string kind;
  std::vector<std::string> rest;
  std::optional<Index> window;
  bool want_dump = false;
  bool want_dot = false;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "check syntax and interval finiteness");
  validate->add_option("file", file, "description file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "print the injective catalog");
  classify_cmd->add_option("file", file, "description file")->required();
  auto* query = app.add_subcommand("query", "paths|pred|succ|out|in|supp|boundary");
  query->add_option("file", file, "description file")->required();
  query->add_option("kind", kind, "query kind")->required();
  query->add_option("args", rest, "vertex or class ids");
  auto* rep = app.add_subcommand("rep", "window representation P|I|Y");
  rep->add_option("file", file, "description file")->required();
  rep->add_option("kind", kind, "P, I or Y")->required();
  rep->add_option("args", rest, "vertex or class id")->required();
  rep->add_option("--window", window, "window radius (default: stabilization index + 2)");
  rep->add_flag("--dump", want_dump, "text dump (default)");
  rep->add_flag("--dot", want_dot, "graph description output");
  auto* compare = app.add_subcommand("oracle-compare", "differential check against brute force");
  compare->add_option("file", file, "description file")->required();
  compare->add_option("--window", window, "window radius for representation checks");
  compare->add_option("--seed", seed, "sampling seed");

  std::vector<std::string> storage{"qinj"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitParse;
  }
  if (want_dump && want_dot) {
    err << "usage error: --dump and --dot are exclusive\n";
    return kExitParse;
  }

  try {
    const QuiverDescription q = parse_file(file);
    if (validate->parsed()) return cmd_validate(q, out, err);
    if (classify_cmd->parsed()) {
      out << render_catalog(q, classify(q));
      return kExitOk;
    }
    if (query->parsed()) return cmd_query(q, kind, rest, out);
    if (rep->parsed()) return cmd_rep(q, kind, rest, window, want_dot, out);
    if (compare->parsed()) {
      const auto f = is_interval_finite(q);
      if (!f.interval_finite) return cmd_validate(q, out, err);
      const Index w = window.value_or(std::min<Index>(analysis_parameters(q, 0).stabilization_index(0) + 2, 8));
      const std::size_t mismatches = oracle_compare(q, w, seed, out);
      return mismatches == 0 ? kExitOk : kExitIo;
    }
  } catch (const std::ios_base::failure& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const QdlError& e) {
    err << file << ":" << e.what() << "\n";
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotIntervalFinite& e) {
    err << e.what() << "\n";
    return kExitNotIntervalFinite;
  } catch (const UnknownId& e) {
    err << e.what() << "\n";
    return kExitUnknownId;
  } catch (const InfiniteDimensionAt& e) {
    err << e.what() << "\n";
    return kExitInfiniteDimension;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitNotIntervalFinite;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace qinj
