#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qinj/linrep.hpp"

using namespace qinj;

namespace {

TailClass class_of(const QuiverDescription& q, const std::string& id) {
  const auto e = Analyzer(q, 4).enumerate_tail_classes();
  const TailClass* c = find_class(e, id);
  REQUIRE(c != nullptr);
  return *c;
}

std::vector<std::size_t> dims_on(const RepWindow& m, const std::vector<std::string>& ids) {
  std::vector<std::size_t> out;
  for (const auto& id : ids) out.push_back(m.dim(vx(m.description(), id)));
  return out;
}

Path path_of(const QuiverDescription& q, VertexRef from, const std::vector<std::pair<int, Index>>& steps) {
  Path p{from, {}};
  for (const auto& [family, i] : steps) p.arrows.push_back(*q.instantiate(family, i));
  return p;
}

}  // namespace

TEST_CASE("matrix elimination") {
  Matrix m(3, 3);
  const int values[3][3] = {{2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = values[r][c];
  CHECK(rank(m) == 2);
  const Matrix k = kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(pivot_columns(m) == std::vector<std::size_t>{0, 1});
  CHECK(column_basis(m).cols() == 2);

  Matrix b(3, 1);
  b(0, 0) = 2;
  b(1, 0) = 1;
  b(2, 0) = 5;
  const auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m * *x == b);
  b(1, 0) = 7;
  CHECK_FALSE(solve(m, b).has_value());

  CHECK(format(Rational(3, 6)) == "1/2");
  CHECK(format(Rational(-4)) == "-4/1");
  CHECK(rank(Matrix(0, 5)) == 0);
  CHECK(kernel(Matrix(0, 3)).cols() == 3);
}

TEST_CASE("apply_path") {
  const auto ex1 = fixture("ex1");
  const auto p = build_P(ex1, vx(ex1, "r:a:0"), 3);
  CHECK(apply_path(p, Path{vx(ex1, "r:a:1"), {}}) == Matrix::identity(1));
  CHECK(apply_path(p, path_of(ex1, vx(ex1, "r:a:0"), {{0, 0}, {0, 1}})) == Matrix::identity(1));
  const auto zero = RepWindow::zero(p.window);
  CHECK(apply_path(zero, path_of(ex1, vx(ex1, "r:a:0"), {{0, 0}})).rows() == 0);
  CHECK_THROWS_AS(apply_path(p, path_of(ex1, vx(ex1, "r:a:3"), {{0, 3}})), std::out_of_range);
}

TEST_CASE("projectives and injectives") {
  const auto ex1 = fixture("ex1");
  CHECK(dims_on(build_P(ex1, vx(ex1, "r:a:0"), 3), {"r:a:0", "r:a:1", "r:a:2", "r:a:3"}) ==
        std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(dims_on(build_I(ex1, vx(ex1, "r:a:2"), 4), {"r:a:0", "r:a:1", "r:a:2", "r:a:3", "r:a:4"}) ==
        std::vector<std::size_t>{1, 1, 1, 0, 0});

  const auto ex3 = fixture("ex3");
  const auto p3 = build_P(ex3, vx(ex3, "v:v0"), 3);
  CHECK(p3.dim(vx(ex3, "r:b:2")) == 3);
  CHECK(p3.basis_labels[p3.window->position(vx(ex3, "r:b:2"))] ==
        std::vector<std::string>{"alpha@2", "beta@1.alpha@1", "beta@1.beta@0.alpha@0"});

  const auto ex4 = fixture("ex4");
  CHECK(dims_on(build_P(ex4, vx(ex4, "r:b:0"), 2), {"r:a:0", "r:a:1", "r:a:2", "r:b:0", "r:b:1", "r:b:2"}) ==
        std::vector<std::size_t>{0, 0, 0, 1, 1, 1});
  CHECK(build_I(ex4, vx(ex4, "r:b:2"), 3).dim(vx(ex4, "r:a:1")) == 2);

  const auto ex5 = fixture("ex5");
  const auto i5 = build_I(ex5, vx(ex5, "r:a:0"), 2);
  CHECK(i5.total_dimension() == 1);
  CHECK(i5.dim(vx(ex5, "r:a:0")) == 1);

  for (const char* name : {"ex1", "ex3", "ex4", "ex5"}) {
    const auto q = fixture(name);
    const Window w(q, 3);
    for (const auto& a : w.vertices()) {
      CHECK(build_P(q, a, 3).well_formed());
      CHECK(build_I(q, a, 3).well_formed());
    }
  }
}

TEST_CASE("composition identities") {
  // apply_path(m, q p) = apply_path(m, q) apply_path(m, p) along window paths.
  const auto ex4 = fixture("ex4");
  const auto m = build_I(ex4, vx(ex4, "r:b:3"), 3);
  const auto paths = window_paths_from(*m.window, vx(ex4, "r:a:0"));
  for (const auto& per_vertex : paths) {
    for (const auto& p : per_vertex) {
      for (std::size_t cut = 0; cut <= p.length(); ++cut) {
        Path head{p.source, {p.arrows.begin(), p.arrows.begin() + cut}};
        Path tail{head.target(), {p.arrows.begin() + cut, p.arrows.end()}};
        CHECK(apply_path(m, p) == apply_path(m, tail) * apply_path(m, head));
      }
    }
  }
}

TEST_CASE("tail representations") {
  const auto ex1 = fixture("ex1");
  const auto y1 = build_Y(ex1, class_of(ex1, "(a,+)"), 3);
  for (std::size_t v = 0; v < y1.window->size(); ++v) CHECK(y1.dims[v] == 1);
  for (const auto& x : y1.maps) CHECK(x == Matrix::identity(1));

  const auto ex5 = fixture("ex5");
  const auto y5 = build_Y(ex5, class_of(ex5, "(a,+)"), 3);
  CHECK(dims_on(y5, {"r:a:0", "r:a:3", "r:b:-3", "r:b:0", "r:b:3"}) == std::vector<std::size_t>{1, 1, 0, 0, 0});

  const auto ex4 = fixture("ex4");
  try {
    build_Y(ex4, class_of(ex4, "(b,+)"), 2);
    FAIL("expected InfiniteDimensionAt");
  } catch (const InfiniteDimensionAt& e) {
    CHECK(ex4.vertex_id(e.vertex) == "r:a:0");
  }

  // Y as the limit of I along the tail.
  for (const char* name : {"ex1", "ex5"}) {
    const auto q = fixture(name);
    const auto y = build_Y(q, class_of(q, "(a,+)"), 5);
    const auto i = build_I(q, vx(q, "r:a:5"), 5);
    CHECK(y.dims == i.dims);
  }
}

TEST_CASE("socle and radical") {
  const auto ex1 = fixture("ex1");
  const auto s = socle(build_I(ex1, vx(ex1, "r:a:2"), 4));
  CHECK(s.rep.dims == std::vector<std::size_t>{0, 0, 1, 0, 0});
  CHECK(s.rep.well_formed());
  const auto r = radical(build_P(ex1, vx(ex1, "r:a:0"), 3));
  CHECK(r.rep.dims == std::vector<std::size_t>{0, 1, 1, 1});
  CHECK(r.boundary == std::vector<bool>{false, false, false, false});
  CHECK(s.boundary.back());  // a[4] -> a[5] leaves the window

  const auto zero = RepWindow::zero(std::make_shared<const Window>(ex1, 3));
  CHECK(socle(zero).rep.is_zero());
  CHECK(radical(zero).rep.is_zero());
}

TEST_CASE("hom isomorphisms") {
  const auto ex1 = fixture("ex1");
  const auto h1 = hom_from_projective(build_P(ex1, vx(ex1, "r:a:0"), 3), vx(ex1, "r:a:0"));
  CHECK(h1.dimension == 1);
  CHECK(h1.hom_dimension == 1);
  CHECK(h1.round_trip);

  const auto zero = RepWindow::zero(std::make_shared<const Window>(ex1, 3));
  CHECK(hom_from_projective(zero, vx(ex1, "r:a:1")).hom_dimension == 0);
  CHECK(hom_to_injective(zero, vx(ex1, "r:a:1")).hom_dimension == 0);

  const auto ex4 = fixture("ex4");
  const auto h4 = hom_from_projective(build_I(ex4, vx(ex4, "r:b:2"), 3), vx(ex4, "r:a:1"));
  CHECK(h4.dimension == 2);
  CHECK(h4.hom_dimension == 2);
  CHECK(h4.round_trip);

  const auto h2 = hom_to_injective(build_P(ex1, vx(ex1, "r:a:0"), 4), vx(ex1, "r:a:2"));
  CHECK(h2.hom_dimension == 1);
  CHECK(h2.round_trip);

  const auto y = build_Y(ex1, class_of(ex1, "(a,+)"), 3);
  const auto h3 = hom_to_injective(y, vx(ex1, "r:a:1"));
  CHECK(h3.dimension == 1);
  CHECK(h3.round_trip);
}

TEST_CASE("restriction surjectivity") {
  const auto ex1 = fixture("ex1");
  const auto i1 = build_I(ex1, vx(ex1, "r:a:3"), 4);
  CHECK(check_restriction_surjective(i1, vx(ex1, "r:a:0"), {path_of(ex1, vx(ex1, "r:a:0"), {{0, 0}})}));

  const auto ex5 = fixture("ex5");
  const auto y5 = build_Y(ex5, class_of(ex5, "(a,+)"), 3);
  CHECK(check_restriction_surjective(y5, vx(ex5, "r:a:0"), {path_of(ex5, vx(ex5, "r:a:0"), {{0, 0}})}));

  const auto p5 = build_P(ex5, vx(ex5, "r:a:0"), 2);
  const Path up = path_of(ex5, vx(ex5, "r:a:0"), {{0, 0}});
  const Path across{vx(ex5, "r:a:0"), {ex5.single(0)}};
  CHECK_FALSE(check_restriction_surjective(p5, vx(ex5, "r:a:0"), {up, across}));

  // Divisible path sets violate the precondition.
  const Path longer = path_of(ex1, vx(ex1, "r:a:0"), {{0, 0}, {0, 1}});
  CHECK_THROWS_AS(check_restriction_surjective(i1, vx(ex1, "r:a:0"), {path_of(ex1, vx(ex1, "r:a:0"), {{0, 0}}), longer}),
                  PreconditionError);
}

TEST_CASE("eventual tail bijectivity") {
  const auto ex1 = fixture("ex1");
  const auto c1 = class_of(ex1, "(a,+)");
  const auto t1 = eventual_tail_bijectivity(build_Y(ex1, c1, 6), c1);
  CHECK(t1.ok);
  CHECK(t1.z == 0);

  const auto ti = eventual_tail_bijectivity(build_I(ex1, vx(ex1, "r:a:4"), 8), c1);
  CHECK_FALSE(ti.ok);
  REQUIRE(ti.failure.has_value());
  CHECK(ti.failure->source.index >= 4);

  const auto ex5 = fixture("ex5");
  const auto c5 = class_of(ex5, "(a,+)");
  const auto t5 = eventual_tail_bijectivity(build_Y(ex5, c5, 6), c5);
  CHECK(t5.ok);
  CHECK(t5.z == 0);

  CHECK_THROWS_AS(eventual_tail_bijectivity(build_Y(ex1, c1, 1), c1), std::invalid_argument);
}

TEST_CASE("generated subrepresentations and quotients") {
  const auto ex1 = fixture("ex1");
  const auto y = build_Y(ex1, class_of(ex1, "(a,+)"), 5);
  const auto sub = subrep_generated(y, {{vx(ex1, "r:a:2"), Matrix::identity(1)}});
  CHECK(sub.rep.dims == std::vector<std::size_t>{0, 0, 1, 1, 1, 1});
  const auto quo = quotient(y, sub);
  CHECK(quo.dims == std::vector<std::size_t>{1, 1, 0, 0, 0, 0});
  CHECK(quo.well_formed());

  CHECK(subrep_generated(y, {}).rep.is_zero());

  std::map<VertexRef, Matrix> all;
  for (const auto& v : y.window->vertices()) all.emplace(v, Matrix::identity(1));
  const auto full = subrep_generated(y, all);
  CHECK(full.rep.dims == y.dims);
  CHECK(quotient(y, full).is_zero());

  CHECK_THROWS(subrep_generated(y, {{vx(ex1, "r:a:2"), Matrix::identity(2)}}));
}

TEST_CASE("finite dimensional finite presentation") {
  const auto ex3 = fixture("ex3");
  const auto f3 = is_fd_rep_fp(ex3, build_I(ex3, vx(ex3, "r:b:1"), 4));
  CHECK_FALSE(f3.finitely_presented);
  REQUIRE(f3.witness.has_value());
  CHECK(ex3.vertex_id(*f3.witness) == "v:v0");

  const auto ex1 = fixture("ex1");
  CHECK(is_fd_rep_fp(ex1, build_I(ex1, vx(ex1, "r:a:2"), 5)).finitely_presented);
  CHECK(is_fd_rep_fp(ex1, RepWindow::zero(std::make_shared<const Window>(ex1, 3))).finitely_presented);
  CHECK_THROWS_AS(is_fd_rep_fp(ex1, build_P(ex1, vx(ex1, "r:a:0"), 3)), PreconditionError);
}

TEST_CASE("direct sums") {
  const auto ex4 = fixture("ex4");
  auto w = std::make_shared<const Window>(ex4, 3);
  const auto a = build_I(w, vx(ex4, "r:b:2"));
  const auto b = build_I(w, vx(ex4, "r:a:1"));
  const auto s = direct_sum({a, b, a});
  CHECK(s.well_formed());
  CHECK(s.total_dimension() == 2 * a.total_dimension() + b.total_dimension());
  const auto soc = socle(s);
  CHECK(soc.rep.dim(vx(ex4, "r:b:2")) == 2);
  CHECK(soc.rep.dim(vx(ex4, "r:a:1")) == 1);
  CHECK(soc.rep.total_dimension() == 3);
}

TEST_CASE("dump and dot are deterministic") {
  const auto ex1 = fixture("ex1");
  const auto y = build_Y(ex1, class_of(ex1, "(a,+)"), 4);
  CHECK(dump(y, "Y") == dump(build_Y(ex1, class_of(ex1, "(a,+)"), 4), "Y"));
  const std::string d = dump(y, "Y (a,+)");
  CHECK(d.find("vertex r:a:3 dim 1") != std::string::npos);
  CHECK(d.find("arrow alpha@0 r:a:0 -> r:a:1 1x1\n  1/1\n") != std::string::npos);
  const std::string g = dot(build_I(ex1, vx(ex1, "r:a:2"), 4), "I");
  CHECK(g.rfind("digraph", 0) == 0);
  CHECK(g.find("style=dashed") != std::string::npos);
}
