#include <doctest.h>

#include "fixtures.hpp"
#include "qinj/classify.hpp"
#include "qinj/linrep.hpp"

using namespace qinj;

namespace {

const YpVerdict& y_verdict(const InjectiveCatalog& c, const std::string& id) {
  for (const auto& [cls, v] : c.y_classes) {
    if (cls.id == id) return v;
  }
  FAIL("class " << id << " missing");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("ia criterion") {
  const auto ex1 = fixture("ex1");
  const auto v1 = ia_fp(ex1, vx(ex1, "r:a:7"));
  CHECK(v1.yes);
  CHECK(v1.predecessors.size() == 8);
  REQUIRE(v1.out_lists.size() == 8);
  CHECK(v1.out_lists[0].size() == 1);

  const auto ex2 = fixture("ex2");
  const auto v2 = ia_fp(ex2, vx(ex2, "r:a:0"));
  CHECK_FALSE(v2.yes);
  CHECK(v2.failure == IaVerdict::Failure::kInfinitePredecessors);
  REQUIRE(v2.predecessor_witness.has_value());

  const auto ex3 = fixture("ex3");
  const auto v3 = ia_fp(ex3, vx(ex3, "r:b:4"));
  CHECK_FALSE(v3.yes);
  CHECK(v3.failure == IaVerdict::Failure::kInfiniteOutDegree);
  CHECK(ex3.vertex_id(*v3.offending) == "v:v0");
}

TEST_CASE("yp criterion order") {
  const auto ex1 = fixture("ex1");
  const Classifier c1(ex1);
  const auto e1 = c1.analyzer().enumerate_tail_classes();
  const auto y1 = c1.yp_fp(e1.classes.at(0));
  CHECK(y1.yes);
  CHECK(y1.uniform->bound == 1);
  CHECK(y1.boundary->cardinality.describe(ex1) == "finite 0");

  const auto ex4 = fixture("ex4");
  const auto c4 = classify(ex4);
  const auto& a4 = y_verdict(c4, "(a,+)");
  CHECK(a4.failure == YpVerdict::Failure::kInfiniteBoundary);
  CHECK(a4.top->top_finite);
  CHECK(a4.uniform->bounded);
  CHECK(y_verdict(c4, "(b,+)").failure == YpVerdict::Failure::kNotUniform);

  const auto ex5 = fixture("ex5");
  const auto& b5 = y_verdict(classify(ex5), "(b,+)");
  CHECK(b5.reason() == "not top finite");
  CHECK_FALSE(b5.uniform.has_value());
  CHECK_FALSE(b5.boundary.has_value());
}

TEST_CASE("catalogs of the five examples") {
  auto shapes = [](const InjectiveCatalog& c) {
    std::vector<std::string> out;
    for (const auto& r : c.ia_rays) out.push_back(r.describe());
    return out;
  };
  auto ys = [](const InjectiveCatalog& c) {
    std::vector<std::string> out;
    for (const auto& [cls, v] : c.y_classes) out.push_back(cls.id + (v.yes ? " yes" : " no"));
    return out;
  };
  const auto c1 = classify(fixture("ex1"));
  CHECK(shapes(c1) == std::vector<std::string>{"all yes"});
  CHECK(ys(c1) == std::vector<std::string>{"(a,+) yes"});

  const auto c2 = classify(fixture("ex2"));
  CHECK(shapes(c2) == std::vector<std::string>{"all no"});
  CHECK(ys(c2) == std::vector<std::string>{"(a,+) no"});

  const auto c3 = classify(fixture("ex3"));
  REQUIRE(c3.ia_core.size() == 1);
  CHECK_FALSE(c3.ia_core[0].yes);
  CHECK(shapes(c3) == std::vector<std::string>{"all no"});
  CHECK(ys(c3) == std::vector<std::string>{"(b,+) no"});

  const auto c4 = classify(fixture("ex4"));
  CHECK(shapes(c4) == std::vector<std::string>{"all yes", "all yes"});
  CHECK(ys(c4) == std::vector<std::string>{"(a,+) no", "(b,+) no"});

  const auto c5 = classify(fixture("ex5"));
  CHECK(shapes(c5) == std::vector<std::string>{"all yes", "all no"});
  CHECK(ys(c5) == std::vector<std::string>{"(a,+) yes", "(b,+) no"});
  CHECK(y_verdict(c5, "(a,+)").boundary->set.describe(fixture("ex5")) == "finite {r:b:0, r:b:1}");
}

TEST_CASE("ray verdict shapes") {
  // a[0] and a[1] receive arrows from a fan-out vertex; larger indices do not.
  const auto q = parse(
      "quiver mixed\nvertex x\nray a domain nat\nfamily x -> a[i] for i >= 0\n"
      "family a[i] -> a[i+1] for i >= 0\n");
  const auto c = classify(q);
  REQUIRE(c.ia_rays.size() == 1);
  CHECK(c.ia_rays[0].describe() == "all no");

  const auto q2 = parse(
      "quiver drain\nvertex y\nray a domain nat\nray b domain int\nfamily b[i] -> y for i >= 2\n"
      "arrow y -> a[1]\narrow a[1] -> a[0]\narrow a[2] -> a[0]\n");
  const auto c2 = classify(q2);
  CHECK(c2.ia_rays[0].shape == RayVerdict::Shape::kYesOn);
  CHECK(c2.ia_rays[0].yes.describe() == "i >= 2");
  CHECK(c2.ia_rays[1].describe() == "all yes");
}

TEST_CASE("per-ray verdicts agree with pointwise evaluation") {
  for (const char* name : {"ex1", "ex2", "ex3", "ex4", "ex5"}) {
    const auto q = fixture(name);
    const Classifier cl(q);
    const Index limit = 2 * cl.analyzer().stabilization_index();
    for (int r = 0; r < q.ray_count(); ++r) {
      const NodeId ray = q.ray_node(r);
      const auto verdict = cl.ray_verdict(ray);
      const bool nat = q.ray_of(ray).domain == Domain::kNat;
      for (Index i = nat ? 0 : -limit; i <= limit; ++i) {
        CHECK(verdict.yes.contains(i) == ia_fp(q, {ray, i}).yes);
      }
    }
  }
}

TEST_CASE("criterion and construction cohere") {
  // Yes on I_a with finite support: the window representation is fp.
  const auto ex1 = fixture("ex1");
  for (Index i = 0; i < 4; ++i) {
    const VertexRef a = vx(ex1, "r:a:" + std::to_string(i));
    REQUIRE(ia_fp(ex1, a).yes);
    CHECK(is_fd_rep_fp(ex1, build_I(ex1, a, i + 2)).finitely_presented);
  }
  // Yes on Y: builds on windows and restriction maps are surjective.
  for (const char* name : {"ex1", "ex5"}) {
    const auto q = fixture(name);
    const auto cat = classify(q);
    for (const auto& [c, v] : cat.y_classes) {
      if (!v.yes) continue;
      CHECK(is_predecessor_closed(q, v.support));
      const auto y = build_Y(q, c, 5);
      const Window& w = *y.window;
      for (std::size_t a = 0; a < w.arrows().size(); ++a) {
        const Path p{w.arrows()[a].source, {w.arrows()[a]}};
        CHECK(check_restriction_surjective(y, p.source, {p}));
      }
    }
  }
}

TEST_CASE("interval finiteness is required") {
  const auto fan = parse(
      "quiver f\nvertex x, y\nray r domain nat\nfamily x -> r[i] for i >= 0\n"
      "family r[i+1] -> r[i] for i >= 0\narrow r[0] -> y\n");
  CHECK_THROWS_AS(classify(fan), NotIntervalFinite);
  const auto cyc = parse("quiver c\nvertex x, y\narrow x -> y\narrow y -> x\n");
  CHECK_THROWS_AS(classify(cyc), NotIntervalFinite);
}

TEST_CASE("branching families are reported") {
  const auto q = parse("quiver p\nray a domain nat\nfamily a[i] -> a[i+1] for i >= 0\nfamily a[i] -> a[i+1] for i >= 0\n");
  const auto c = classify(q);
  CHECK(c.y_classes.empty());
  CHECK(c.infinite_class_families.size() == 1);
  CHECK(c.ia_rays[0].describe() == "all yes");
}
