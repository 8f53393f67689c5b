#include <algorithm>
#include <ostream>
#include <random>

#include "qinj/cli.hpp"
#include "qinj/linrep.hpp"
#include "qinj/oracle.hpp"

namespace qinj {

namespace {

Index abs_index(Index i) { return i < 0 ? -i : i; }

// Brute enumeration and dense window matrices are only attempted below
// these sizes; larger cases are reported as skipped.
constexpr unsigned long kMaxBrutePaths = 20000;
constexpr unsigned long kMaxWindowDim = 48;

struct Tally {
  std::ostream& out;
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;

  void skip(const std::string& name, const std::string& detail) {
    ++skipped;
    out << "skip " << name << ": " << detail << "\n";
  }

  void record(bool ok, const std::string& name, const std::string& detail) {
    ++checks;
    if (!ok) ++mismatches;
    out << (ok ? "ok " : "MISMATCH ") << name << ": " << detail << "\n";
  }
};

std::vector<VertexRef> vertices_up_to(const QuiverDescription& q, Index radius) {
  std::vector<VertexRef> out;
  for (int c = 0; c < q.core_count(); ++c) out.push_back({c, 0});
  for (int r = 0; r < q.ray_count(); ++r) {
    const bool nat = q.rays()[r].domain == Domain::kNat;
    for (Index i = nat ? 0 : -radius; i <= radius; ++i) out.push_back({q.ray_node(r), i});
  }
  return out;
}

std::vector<std::size_t> ranks(const oracle::BruteRep& m) {
  std::vector<std::size_t> out;
  for (const auto& x : m.maps) out.push_back(oracle::brute_rank(x));
  return out;
}

}  // namespace

std::size_t oracle_compare(const QuiverDescription& q, Index window, std::uint64_t seed, std::ostream& out) {
  Tally t{out};
  std::mt19937_64 rng(seed);
  const auto params = analysis_parameters(q, 0);
  const Index near = 2;
  const auto vs = vertices_up_to(q, near);

  // Path counts: the symbolic count against brute enumeration on a window
  // past the stabilization index of the pair.
  const Analyzer an(q, near);
  for (const auto& a : vs) {
    for (const auto& b : vs) {
      const Cardinality c = an.path_count(a, b);
      if (!c.is_finite()) {
        t.record(false, "paths " + q.vertex_id(a) + " " + q.vertex_id(b), "infinite on an interval finite quiver");
        continue;
      }
      if (c.count() > kMaxBrutePaths) {
        t.skip("paths " + q.vertex_id(a) + " " + q.vertex_id(b), "symbolic " + c.count().get_str());
        continue;
      }
      const Index r = params.stabilization_index(std::max(abs_index(a.index), abs_index(b.index))) + 1;
      const auto g = oracle::expand(q, r);
      const std::size_t brute = oracle::brute_paths(g, g.at(q.vertex_id(a)), g.at(q.vertex_id(b))).size();
      t.record(c.count() == brute, "paths " + q.vertex_id(a) + " " + q.vertex_id(b),
               "symbolic " + c.count().get_str() + ", brute " + std::to_string(brute));
    }
  }

  // Neighbourhood sizes: window probes stabilize on finite answers and grow
  // along the witness of infinite ones.
  for (const auto& a : vs) {
    for (const auto kind : {oracle::ProbeQuery::Kind::kPredecessors, oracle::ProbeQuery::Kind::kSuccessors}) {
      const bool pred = kind == oracle::ProbeQuery::Kind::kPredecessors;
      const VertexSet s = pred ? predecessors(q, a) : successors(q, a);
      const Index start = params.stabilization_index(abs_index(a.index));
      std::vector<std::int64_t> radii;
      Index from = start;
      Index step = 1;
      if (!s.cardinality.is_finite()) {
        from = std::max(start, abs_index(s.cardinality.witness().threshold));
        step = s.cardinality.witness().step;
      }
      for (int k = 0; k < 3; ++k) radii.push_back(from + k * step);
      const auto trace = oracle::window_convergence_probe(q, {kind, q.vertex_id(a), ""}, radii);
      const std::string name = std::string(pred ? "pred " : "succ ") + q.vertex_id(a);
      if (s.cardinality.is_finite()) {
        t.record(trace.constant_from(from) && trace.values.back() == s.cardinality.count(), name,
                 s.cardinality.describe(q) + ", probe " + trace.describe());
      } else {
        t.record(trace.grows_from(from), name, s.cardinality.describe(q) + ", probe " + trace.describe());
      }
    }
  }

  // Window representations: dimensions and map ranks of P_a and I_a, then
  // socle and radical dimensions of I_a, for a seeded sample of vertices.
  auto sample = vertices_up_to(q, std::min<Index>(window, 3));
  std::shuffle(sample.begin(), sample.end(), rng);
  if (sample.size() > 6) sample.resize(6);
  const auto g = oracle::expand(q, window);
  auto w = std::make_shared<const Window>(q, window);
  // Largest fibre of P_a / I_a on the window, bounded through the symbolic
  // counts of the analyzer (its window contains this one).
  const Analyzer wide(q, window);
  const Window& ww = wide.window();
  auto largest_fibre = [&](const VertexRef& a, bool proj) {
    mpz_class best = 0;
    const std::size_t pa = ww.position(a);
    const auto from_a = wide.count_paths_from(a);
    for (std::size_t v = 0; v < ww.size(); ++v) {
      if (!w->contains(ww.vertices()[v])) continue;
      const mpz_class c = proj ? from_a[v] : wide.count_paths_from(ww.vertices()[v])[pa];
      if (c > best) best = c;
    }
    return best;
  };
  for (const auto& a : sample) {
    const std::size_t ga = g.at(q.vertex_id(a));
    for (const bool proj : {true, false}) {
      const mpz_class largest = largest_fibre(a, proj);
      if (largest > kMaxWindowDim) {
        t.skip(std::string(proj ? "P " : "I ") + q.vertex_id(a), "fibre dimension up to " + largest.get_str());
        continue;
      }
      const RepWindow m = proj ? build_P(w, a) : build_I(w, a);
      const auto mine = oracle::read_dump(g, dump(m, "compare"));
      const auto brute = proj ? oracle::brute_P(g, ga) : oracle::brute_I(g, ga);
      const std::string name = std::string(proj ? "P " : "I ") + q.vertex_id(a);
      t.record(mine.dims == brute.dims && ranks(mine) == ranks(brute), name,
               "total dimension " + std::to_string(m.total_dimension()));
      if (proj) continue;
      const auto soc = socle(m);
      const auto rad = radical(m);
      const auto soc_dump = oracle::read_dump(g, dump(soc.rep, "socle"));
      const auto rad_dump = oracle::read_dump(g, dump(rad.rep, "radical"));
      t.record(soc_dump.dims == oracle::brute_socle(g, brute), "socle " + name, "dimensions agree");
      t.record(rad_dump.dims == oracle::brute_radical(g, brute), "radical " + name, "dimensions agree");
    }
  }

  t.out << "checks: " << t.checks << ", mismatches: " << t.mismatches << ", skipped: " << t.skipped << "\n";
  return t.mismatches;
}

}  // namespace qinj
