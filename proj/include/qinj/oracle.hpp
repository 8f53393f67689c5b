#ifndef QINJ_ORACLE_HPP
#define QINJ_ORACLE_HPP

// Brute-force engine on explicit finite quivers. Nothing here reuses the
// window, path enumeration or elimination code of the main library: the
// description is expanded by hand and everything is plain enumeration and
// dense Gaussian elimination.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qinj/qdl.hpp"

namespace qinj::oracle {

struct ExplicitQuiver {
  struct Arrow {
    std::string label;
    std::size_t source = 0;
    std::size_t target = 0;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> find(const std::string& vertex) const;
  std::size_t at(const std::string& vertex) const;  // throws out_of_range
};

// Core vertices plus ray vertices with |index| <= radius; arrows whose two
// endpoints survive. Ids follow the canonical "v:x" / "r:a:i" syntax.
ExplicitQuiver expand(const QuiverDescription& q, std::int64_t radius);

class CycleDetected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A path is its list of arrow indices (first arrow first); the trivial path
// is the empty list.
using BrutePath = std::vector<std::size_t>;

// All paths a -> b by depth-first search, arrows tried in list order.
std::vector<BrutePath> brute_paths(const ExplicitQuiver& g, std::size_t a, std::size_t b);
void require_acyclic(const ExplicitQuiver& g);
// Vertices with a path into / out of v (v itself included).
std::vector<std::size_t> brute_predecessors(const ExplicitQuiver& g, std::size_t v);
std::vector<std::size_t> brute_successors(const ExplicitQuiver& g, std::size_t v);

// ---------------------------------------------------------------------------
// Dense exact linear algebra

using Dense = std::vector<std::vector<mpq_class>>;  // row-major

std::size_t brute_rank(Dense m);

struct BruteRep {
  std::vector<std::size_t> dims;  // by explicit vertex
  std::vector<Dense> maps;        // by explicit arrow, dims[t] x dims[s]
};

BruteRep brute_P(const ExplicitQuiver& g, std::size_t a);
BruteRep brute_I(const ExplicitQuiver& g, std::size_t a);
// dim of the intersection of kernels of outgoing maps / sum of incoming images.
std::vector<std::size_t> brute_socle(const ExplicitQuiver& g, const BruteRep& m);
std::vector<std::size_t> brute_radical(const ExplicitQuiver& g, const BruteRep& m);

// Reads the text dump of a window representation onto g.
BruteRep read_dump(const ExplicitQuiver& g, const std::string& text);

// ---------------------------------------------------------------------------
// Window convergence probes

struct ProbeQuery {
  enum class Kind { kPathCount, kPredecessors, kSuccessors };
  Kind kind = Kind::kPathCount;
  std::string a;
  std::string b;  // path counts only
};

struct ProbeTrace {
  std::vector<std::int64_t> radii;
  std::vector<mpz_class> values;

  bool constant_from(std::int64_t radius) const;
  // Strict growth over three consecutive probed radii, all >= radius.
  bool grows_from(std::int64_t radius) const;
  std::string describe() const;
};

ProbeTrace window_convergence_probe(const QuiverDescription& q, const ProbeQuery& query,
                                    const std::vector<std::int64_t>& radii);

// ---------------------------------------------------------------------------
// Random fragment quivers

// Source text of a random description: at most two rays, two core
// vertices, four families and three single arrows, shifts in [-1, 1].
std::string random_fragment_text(std::mt19937_64& rng);
// Samples random_fragment_text until the result is acyclic and interval
// finite (the rejection test uses the main library's decision procedures).
QuiverDescription random_fragment(std::mt19937_64& rng);
// The branching fixture: two parallel ascending families on one nat ray.
std::string branching_fixture_text();

}  // namespace qinj::oracle

#endif  // QINJ_ORACLE_HPP
