#ifndef QINJ_LINREP_HPP
#define QINJ_LINREP_HPP

// Representations of window truncations over the rationals: the projective,
// injective and tail-class representations P_a, I_a, Y_[p], their socle and
// radical, Hom evaluation through the Yoneda isomorphisms, and the rank
// conditions an injective object has to satisfy.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qinj/qdl.hpp"
#include "qinj/regions.hpp"

namespace qinj {

using Rational = mpq_class;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  Matrix transposed() const;
  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& which) const;
  Matrix rows_range(std::size_t from, std::size_t count) const;

  static Matrix stack(const std::vector<Matrix>& blocks, std::size_t cols);  // vertical
  static Matrix join(const std::vector<Matrix>& blocks, std::size_t rows);   // horizontal

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Fraction-free (Bareiss) elimination on the integer rescaling of each row.
std::size_t rank(const Matrix& m);
// Pivot columns of the row echelon form.
std::vector<std::size_t> pivot_columns(const Matrix& m);
// Columns spanning the null space, one per free variable.
Matrix kernel(const Matrix& m);
// Independent columns of m spanning its column space.
Matrix column_basis(const Matrix& m);
// X with a * X = b, when it exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::string format(const Rational& x);  // always "p/q"

// ---------------------------------------------------------------------------

struct RepWindow {
  std::shared_ptr<const Window> window;
  std::vector<std::size_t> dims;                       // by window vertex position
  std::vector<Matrix> maps;                            // by window arrow position
  std::vector<std::vector<std::string>> basis_labels;  // empty when absent

  static RepWindow zero(std::shared_ptr<const Window> w);

  const QuiverDescription& description() const { return window->description(); }
  std::size_t dim(const VertexRef& v) const { return dims[window->position(v)]; }
  const Matrix& map(const ArrowRef& a) const;
  std::size_t total_dimension() const;
  bool is_zero() const { return total_dimension() == 0; }
  // Every map has shape dims(target) x dims(source).
  bool well_formed() const;
};

struct MorphismWindow {
  std::shared_ptr<const RepWindow> source;
  std::shared_ptr<const RepWindow> target;
  std::vector<Matrix> components;  // by window vertex position
  bool natural() const;
};

class InfiniteDimensionAt : public std::runtime_error {
 public:
  InfiniteDimensionAt(VertexRef v, const std::string& message)
      : std::runtime_error(message), vertex(v) {}
  VertexRef vertex;
};

Matrix apply_path(const RepWindow& m, const Path& p);

// Block diagonal sum of representations on one window.
RepWindow direct_sum(const std::vector<RepWindow>& parts);

// All paths inside the window from / into a vertex, in canonical order.
std::vector<std::vector<Path>> window_paths_from(const Window& w, const VertexRef& a);
std::vector<std::vector<Path>> window_paths_into(const Window& w, const VertexRef& a);

RepWindow build_P(const QuiverDescription& q, const VertexRef& a, Index n);
RepWindow build_I(const QuiverDescription& q, const VertexRef& a, Index n);
RepWindow build_P(std::shared_ptr<const Window> w, const VertexRef& a);
RepWindow build_I(std::shared_ptr<const Window> w, const VertexRef& a);
// Throws InfiniteDimensionAt at the first window vertex with unbounded
// path counts into the tail.
RepWindow build_Y(const QuiverDescription& q, const TailClass& c, Index n);

struct SubRepWindow {
  RepWindow rep;
  std::vector<Matrix> inclusion;  // by vertex: dims(ambient) x dims(sub), full column rank
  std::vector<bool> boundary;     // vertices whose value is truncated by the window
};

SubRepWindow socle(const RepWindow& m);
SubRepWindow radical(const RepWindow& m);

// Seeds are column vectors per vertex.
SubRepWindow subrep_generated(const RepWindow& m, const std::map<VertexRef, Matrix>& seeds);
RepWindow quotient(const RepWindow& m, const SubRepWindow& sub);

// Lemma-level Hom evaluation: dim Hom(P_a, M) = dim M(a) through eta and its
// inverse x -> (p -> M(p) x); dually Hom(M, I_a) = M(a)^*.
struct HomIso {
  std::size_t dimension = 0;      // dim M(a)
  std::size_t hom_dimension = 0;  // dim Hom from the naturality equations
  std::vector<MorphismWindow> realized;  // images of the basis of M(a) (resp. dual basis)
  bool round_trip = false;
};

HomIso hom_from_projective(const RepWindow& m, const VertexRef& a);
HomIso hom_to_injective(const RepWindow& m, const VertexRef& a);
// Basis of the space of morphisms m -> n (naturality null space).
std::vector<MorphismWindow> hom_basis(std::shared_ptr<const RepWindow> m,
                                      std::shared_ptr<const RepWindow> n);

// Throws PreconditionError if some p_i = u p_j.
bool check_restriction_surjective(const RepWindow& i, const VertexRef& a, const std::vector<Path>& paths);

struct TailBijectivity {
  bool ok = false;
  Index z = 0;                        // first entry index with bijective maps to the edge
  std::optional<ArrowRef> failure;    // last non-bijective tail arrow
  Index required_radius = 0;
};
// Throws std::invalid_argument when the window is too small for the class.
TailBijectivity eventual_tail_bijectivity(const RepWindow& i, const TailClass& c);

struct FpCheck {
  bool finitely_presented = true;
  std::optional<VertexRef> witness;  // support vertex with infinite out-degree
};
// Corollary level test for finite dimensional representations whose support
// lies strictly inside the window; throws PreconditionError otherwise.
FpCheck is_fd_rep_fp(const QuiverDescription& q, const RepWindow& m);

std::string dump(const RepWindow& m, const std::string& title);
std::string dot(const RepWindow& m, const std::string& title);

}  // namespace qinj

#endif  // QINJ_LINREP_HPP
