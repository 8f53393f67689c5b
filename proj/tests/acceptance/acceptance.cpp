// One line per acceptance criterion: "criterion N: pass|fail  <detail>".
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "qinj/classify.hpp"
#include "qinj/cli.hpp"
#include "qinj/linrep.hpp"
#include "qinj/oracle.hpp"

using namespace qinj;

namespace {

std::string fixture_path(const std::string& name) { return std::string(QINJ_FIXTURE_DIR) + "/" + name + ".qd"; }
QuiverDescription fixture(const std::string& name) { return parse_file(fixture_path(name)); }

VertexRef vx(const QuiverDescription& q, const std::string& id) { return *q.parse_vertex_id(id); }

Index abs_index(Index i) { return i < 0 ? -i : i; }

// Collects failures of one criterion.
struct Criterion {
  int number;
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  bool report() const {
    const bool ok = failures.empty() && checks > 0;
    std::cout << "criterion " << number << ": " << (ok ? "pass" : "fail") << "  " << name << " (" << checks
              << " checks";
    if (!failures.empty()) std::cout << ", " << failures.size() << " failed; first: " << failures.front();
    std::cout << ")\n";
    return ok;
  }
};

std::vector<std::string> summary_lines(const std::string& report) {
  std::vector<std::string> out;
  std::istringstream in(report.substr(report.find("[SUMMARY]\n") + 10));
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

TailClass class_of(const QuiverDescription& q, const std::string& id) {
  const auto e = Analyzer(q, 4).enumerate_tail_classes();
  return *find_class(e, id);
}

// Shared by criteria 3 and 8: fragments small enough for dense windows.
std::vector<QuiverDescription> fragments(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<QuiverDescription> out;
  while (out.size() < count) {
    auto q = oracle::random_fragment(rng);
    const Analyzer an(q, 4);
    const Window w(q, 4);
    bool small = true;
    for (const auto& v : w.vertices()) {
      for (const auto& c : an.count_paths_from(v)) small = small && c <= 24;
    }
    if (small) out.push_back(std::move(q));
  }
  return out;
}

// ---------------------------------------------------------------------------

bool criterion1() {
  Criterion c{1, "example corpus complete sets"};
  const std::vector<std::pair<std::string, std::vector<std::string>>> expected{
      {"ex1", {"I ray a, every index", "Y (a,+)"}},
      {"ex2", {"no nonzero injective objects"}},
      {"ex3", {"no nonzero injective objects"}},
      {"ex4", {"I ray a, every index", "I ray b, every index"}},
      {"ex5", {"I ray a, every index", "Y (a,+)"}},
  };
  for (const auto& [name, lines] : expected) {
    std::ostringstream out, err;
    const int code = run_cli({"classify", fixture_path(name)}, out, err);
    c.expect(code == 0, name + " exit code");
    c.expect(summary_lines(out.str()) == lines, name + " summary");
    if (name == "ex4") {
      c.expect(has_line(out.str(), "(a,+): no (infinite boundary)"), "ex4 (a,+)");
      c.expect(has_line(out.str(), "(b,+): no (not uniformly interval finite)"), "ex4 (b,+)");
    }
    if (name == "ex5") {
      c.expect(has_line(out.str(), "(a,+).boundary: finite {r:b:0, r:b:1}"), "ex5 boundary certificate");
      c.expect(has_line(out.str(), "(b,+): no (not top finite)"), "ex5 (b,+)");
    }
  }
  return c.report();
}

bool criterion2() {
  Criterion c{2, "criterion fidelity, pointwise and symbolic"};
  // Per-example statements: expected I_a verdict per ray, expected Y verdicts.
  const std::vector<std::tuple<std::string, std::vector<bool>, std::vector<std::pair<std::string, std::string>>>>
      statements{
          {"ex1", {true}, {{"(a,+)", ""}}},
          {"ex2", {false}, {{"(a,+)", "not top finite"}}},
          {"ex3", {false}, {{"(b,+)", "not uniformly interval finite"}}},
          {"ex4", {true, true}, {{"(a,+)", "infinite boundary"}, {"(b,+)", "not uniformly interval finite"}}},
          {"ex5", {true, false}, {{"(a,+)", ""}, {"(b,+)", "not top finite"}}},
      };
  for (const auto& [name, rays, ys] : statements) {
    const auto q = fixture(name);
    const Classifier cl(q);
    for (int r = 0; r < q.ray_count(); ++r) {
      const NodeId ray = q.ray_node(r);
      const bool nat = q.ray_of(ray).domain == Domain::kNat;
      for (Index i = nat ? 0 : -10; i <= 10; ++i) {
        c.expect(cl.ia_fp({ray, i}).yes == rays[r], name + " ia at " + q.vertex_id({ray, i}));
      }
      const auto verdict = cl.ray_verdict(ray);
      const Index limit = 2 * cl.analyzer().stabilization_index();
      for (Index i = nat ? 0 : -limit; i <= limit; ++i) {
        c.expect(verdict.yes.contains(i) == ia_fp(q, {ray, i}).yes, name + " symbolic vs pointwise");
      }
    }
    if (name == "ex3") c.expect(!cl.ia_fp(vx(q, "v:v0")).yes, "ex3 v0");
    for (const auto& [id, reason] : ys) {
      const auto v = cl.yp_fp(class_of(q, id));
      c.expect(v.yes == reason.empty() && v.reason() == reason, name + " " + id);
    }
  }
  return c.report();
}

bool criterion3() {
  Criterion c{3, "dimension laws on 100 samples"};
  std::mt19937_64 rng(3);
  std::vector<QuiverDescription> pool;
  for (const char* name : {"ex1", "ex2", "ex3", "ex4", "ex5"}) pool.push_back(fixture(name));
  for (auto& q : fragments(31, 15)) pool.push_back(std::move(q));
  const Index n = 4;
  for (int k = 0; k < 100; ++k) {
    const auto& q = pool[k % pool.size()];
    const Window w(q, n);
    auto pick = [&]() { return w.vertices()[std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng)]; };
    const VertexRef a = pick();
    const VertexRef b = pick();
    const auto g = oracle::expand(q, n);
    const std::size_t ab = oracle::brute_paths(g, g.at(q.vertex_id(a)), g.at(q.vertex_id(b))).size();
    const std::size_t ba = oracle::brute_paths(g, g.at(q.vertex_id(b)), g.at(q.vertex_id(a))).size();
    c.expect(build_P(q, a, n).dim(b) == ab, "P " + q.vertex_id(a) + " at " + q.vertex_id(b));
    c.expect(build_I(q, a, n).dim(b) == ba, "I " + q.vertex_id(a) + " at " + q.vertex_id(b));
    // On a window past the stabilization index the window counts are the true counts.
    const Index big = analysis_parameters(q, 0).stabilization_index(std::max(abs_index(a.index), abs_index(b.index)));
    const auto gb = oracle::expand(q, big);
    c.expect(path_count(q, a, b).count() ==
                 oracle::brute_paths(gb, gb.at(q.vertex_id(a)), gb.at(q.vertex_id(b))).size(),
             "symbolic count " + q.vertex_id(a) + " " + q.vertex_id(b));
  }
  return c.report();
}

bool criterion4() {
  Criterion c{4, "Hom isomorphisms on 50 samples"};
  std::mt19937_64 rng(4);
  const char* names[] = {"ex1", "ex3", "ex4", "ex5"};
  for (int k = 0; k < 50; ++k) {
    const auto q = fixture(names[k % 4]);
    auto w = std::make_shared<const Window>(q, 3);
    auto pick = [&]() { return w->vertices()[std::uniform_int_distribution<std::size_t>(0, w->size() - 1)(rng)]; };
    RepWindow m;
    switch (k % 5) {
      case 0: m = build_P(w, pick()); break;
      case 1: m = build_I(w, pick()); break;
      case 2: m = direct_sum({build_I(w, pick()), build_P(w, pick())}); break;
      case 3: {
        const auto p = build_P(w, pick());
        m = quotient(p, radical(p));
        break;
      }
      default:
        m = (q.name() == "ex1" || q.name() == "ex5") ? build_Y(q, class_of(q, "(a,+)"), 3) : build_I(w, pick());
        w = m.window;
    }
    const VertexRef a = pick();
    const auto hp = hom_from_projective(m, a);
    const auto hi = hom_to_injective(m, a);
    const std::string tag = q.name() + " sample " + std::to_string(k) + " at " + q.vertex_id(a);
    c.expect(hp.round_trip && hp.hom_dimension == m.dim(a), "eta " + tag);
    c.expect(hi.round_trip && hi.hom_dimension == m.dim(a), "zeta " + tag);
  }
  return c.report();
}

bool criterion5() {
  Criterion c{5, "restriction surjectivity"};
  auto all_single_arrow_sets = [&](const RepWindow& m, const std::string& tag) {
    const Window& w = *m.window;
    const auto& q = w.description();
    for (std::size_t v = 0; v < w.size(); ++v) {
      const VertexRef a = w.vertices()[v];
      const auto out = out_neighbors(q, a);
      if (!out.cardinality.is_finite()) continue;
      bool interior = true;
      for (const auto& b : out.set.elements(q)) interior = interior && w.contains(b);
      if (!interior) continue;
      const auto& arrows = w.out_arrows(v);
      for (std::size_t mask = 1; mask < (std::size_t{1} << arrows.size()); ++mask) {
        std::vector<Path> paths;
        for (std::size_t k = 0; k < arrows.size(); ++k) {
          if (mask & (std::size_t{1} << k)) paths.push_back(Path{a, {w.arrows()[arrows[k]]}});
        }
        c.expect(check_restriction_surjective(m, a, paths), tag + " at " + q.vertex_id(a));
      }
    }
  };
  for (const char* name : {"ex1", "ex5"}) {
    const auto q = fixture(name);
    const auto cat = classify(q);
    for (const auto& r : cat.ia_rays) {
      for (Index i = 0; i <= 3; ++i) {
        if (r.yes.contains(i)) all_single_arrow_sets(build_I(q, {r.ray, i}, 6), std::string(name) + " I");
      }
    }
    for (const auto& [cls, v] : cat.y_classes) {
      if (v.yes) all_single_arrow_sets(build_Y(q, cls, 6), std::string(name) + " Y " + cls.id);
    }
  }
  // A representation that is not injective must fail.
  const auto ex5 = fixture("ex5");
  const auto p = build_P(ex5, vx(ex5, "r:a:0"), 2);
  const Path up{vx(ex5, "r:a:0"), {*ex5.instantiate(0, 0)}};
  const Path across{vx(ex5, "r:a:0"), {ex5.single(0)}};
  c.expect(!check_restriction_surjective(p, vx(ex5, "r:a:0"), {up, across}), "P_{a0} on ex5 must fail");
  return c.report();
}

bool criterion6() {
  Criterion c{6, "eventual tail bijectivity of Y"};
  for (const char* name : {"ex1", "ex5"}) {
    const auto q = fixture(name);
    const auto cls = class_of(q, "(a,+)");
    for (Index n : {6, 8, 10}) {
      const auto t = eventual_tail_bijectivity(build_Y(q, cls, n), cls);
      c.expect(t.ok && t.z <= n, std::string(name) + " window " + std::to_string(n));
    }
  }
  return c.report();
}

std::size_t intersection_dim(const Matrix& s, const Matrix& k) {
  return rank(s) + rank(k) - rank(Matrix::join({s, k}, s.rows()));
}

bool criterion7() {
  Criterion c{7, "socle essentiality (50) and multiplicity recovery (20)"};
  std::mt19937_64 rng(7);
  // Finite support injective pieces, each strictly inside a radius 7 window.
  struct Piece {
    std::string fixture;
    std::string vertex;
  };
  const std::vector<Piece> pieces{{"ex1", "r:a:0"}, {"ex1", "r:a:2"}, {"ex1", "r:a:4"},
                                  {"ex4", "r:a:1"}, {"ex4", "r:b:0"}, {"ex4", "r:b:2"},
                                  {"ex5", "r:a:1"}, {"ex5", "r:a:3"}};
  auto random_sum = [&](const std::string& name, std::vector<VertexRef>& chosen) {
    const auto q = fixture(name);
    auto w = std::make_shared<const Window>(q, 7);
    std::vector<Piece> mine;
    for (const auto& p : pieces) {
      if (p.fixture == name) mine.push_back(p);
    }
    const int parts = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<RepWindow> reps;
    for (int k = 0; k < parts; ++k) {
      const auto& p = mine[std::uniform_int_distribution<std::size_t>(0, mine.size() - 1)(rng)];
      chosen.push_back(vx(q, p.vertex));
      reps.push_back(build_I(w, chosen.back()));
    }
    return direct_sum(reps);
  };
  const char* names[] = {"ex1", "ex4", "ex5"};

  for (int k = 0; k < 50; ++k) {
    std::vector<VertexRef> chosen;
    const auto m = random_sum(names[k % 3], chosen);
    const Window& w = *m.window;
    std::vector<std::size_t> live;
    for (std::size_t v = 0; v < w.size(); ++v) {
      if (m.dims[v] > 0) live.push_back(v);
    }
    const std::size_t v = live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng)];
    Matrix seed(m.dims[v], 1);
    while (seed.is_zero()) {
      for (std::size_t r = 0; r < seed.rows(); ++r) seed(r, 0) = std::uniform_int_distribution<int>(-2, 2)(rng);
    }
    const auto sub = subrep_generated(m, {{w.vertices()[v], seed}});
    const auto soc = socle(m);
    std::size_t meet = 0;
    for (std::size_t x = 0; x < w.size(); ++x) meet += intersection_dim(sub.inclusion[x], soc.inclusion[x]);
    c.expect(meet > 0, "essentiality sample " + std::to_string(k));
  }

  for (int k = 0; k < 20; ++k) {
    std::vector<VertexRef> chosen;
    const auto m = random_sum(names[k % 3], chosen);
    const auto soc = socle(m);
    const Window& w = *m.window;
    bool ok = true;
    for (std::size_t v = 0; v < w.size(); ++v) {
      const auto expected = static_cast<std::size_t>(std::count(chosen.begin(), chosen.end(), w.vertices()[v]));
      // The edge of the window is flagged as truncated; it must carry nothing.
      ok = ok && soc.rep.dims[v] == expected && (!soc.boundary[v] || m.dims[v] == 0);
    }
    c.expect(ok, "multiplicity sample " + std::to_string(k));
  }
  return c.report();
}

bool criterion8() {
  Criterion c{8, "oracle convergence"};
  std::ostringstream sink;
  std::vector<QuiverDescription> corpus;
  for (const char* name : {"ex1", "ex2", "ex3", "ex4", "ex5"}) corpus.push_back(fixture(name));
  corpus.push_back(parse(oracle::branching_fixture_text()));
  for (auto& q : fragments(83, 25)) corpus.push_back(std::move(q));
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& q = corpus[k];
    const Index w = std::min<Index>(analysis_parameters(q, 0).stabilization_index(0) + 2, 6);
    c.expect(oracle_compare(q, w, k, sink) == 0, q.name() + " #" + std::to_string(k));
  }

  const auto ex4 = fixture("ex4");
  const auto t4 = oracle::window_convergence_probe(ex4, {oracle::ProbeQuery::Kind::kPathCount, "r:a:0", "r:b:5"},
                                                   {5, 6, 7, 8, 9});
  c.expect(t4.constant_from(5) && t4.values[0] == 6, "ex4 a0 -> b5");
  const auto ex2 = fixture("ex2");
  const auto t2 = oracle::window_convergence_probe(ex2, {oracle::ProbeQuery::Kind::kPredecessors, "r:a:0", ""},
                                                   {2, 3, 4, 5, 6});
  c.expect(t2.values == std::vector<mpz_class>{3, 4, 5, 6, 7}, "ex2 predecessors of a0");

  // An infinite path count replayed along its witness.
  const auto fan = parse(
      "quiver f\nvertex x, y\nray r domain nat\nfamily x -> r[i] for i >= 0\n"
      "family r[i+1] -> r[i] for i >= 0\narrow r[0] -> y\n");
  const auto count = path_count(fan, vx(fan, "v:x"), vx(fan, "v:y"));
  c.expect(!count.is_finite(), "fan count infinite");
  if (!count.is_finite()) {
    const auto& wt = count.witness();
    const Index from = std::max<Index>(abs_index(wt.threshold), 1);
    const auto trace = oracle::window_convergence_probe(
        fan, {oracle::ProbeQuery::Kind::kPathCount, "v:x", "v:y"}, {from, from + wt.step, from + 2 * wt.step});
    c.expect(trace.grows_from(from), "fan growth " + trace.describe());
  }
  return c.report();
}

bool criterion9() {
  Criterion c{9, "duality with the opposite quiver"};
  for (const char* name : {"ex1", "ex2", "ex3", "ex4", "ex5"}) {
    const auto q = fixture(name);
    const auto op = q.opposite();
    const Window w(q, 3);
    for (const auto& a : w.vertices()) {
      const std::string tag = std::string(name) + " " + q.vertex_id(a);
      const auto pq = predecessors(q, a);
      const auto so = successors(op, a);
      c.expect(pq.set == so.set && pq.cardinality.describe(q) == so.cardinality.describe(op), "pred/succ " + tag);
      const auto sq = successors(q, a);
      const auto po = predecessors(op, a);
      c.expect(sq.set == po.set && sq.cardinality.describe(q) == po.cardinality.describe(op), "succ/pred " + tag);
      c.expect(out_neighbors(q, a).set == in_neighbors(op, a).set, "out/in " + tag);
      c.expect(in_neighbors(q, a).set == out_neighbors(op, a).set, "in/out " + tag);
      for (const auto& b : w.vertices()) {
        c.expect(path_count(q, a, b).count() == path_count(op, b, a).count(), "paths " + tag);
      }
    }
    std::vector<SupportDescription> supports{SupportDescription::everything(q)};
    const Analyzer an(q, 4);
    for (const auto& cls : an.enumerate_tail_classes().classes) supports.push_back(an.class_support(cls));
    for (const auto& s : supports) {
      c.expect(has_left_infinite_path(q, s).has_value() == has_right_infinite_path(op, s).has_value(),
               std::string(name) + " left/right");
      c.expect(has_right_infinite_path(q, s).has_value() == has_left_infinite_path(op, s).has_value(),
               std::string(name) + " right/left");
      c.expect(in_image(q, s) == out_image(op, s), std::string(name) + " images");
    }
  }
  return c.report();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (const auto& run : criteria) {
    try {
      if (!run()) ++failed;
    } catch (const std::exception& e) {
      std::cout << "criterion raised: " << e.what() << "\n";
      ++failed;
    }
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
