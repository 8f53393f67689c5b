#include <stdexcept>

#include "qinj/linrep.hpp"

namespace qinj {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += x * o(k, j);
    }
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::column(std::size_t c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<std::size_t>& which) const {
  Matrix out(rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < which.size(); ++j) out(i, j) = (*this)(i, which[j]);
  }
  return out;
}

Matrix Matrix::rows_range(std::size_t from, std::size_t count) const {
  Matrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(from + i, j);
  }
  return out;
}

Matrix Matrix::stack(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("stack: column mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i, ++r) {
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
    }
  }
  return out;
}

Matrix Matrix::join(const std::vector<Matrix>& blocks, std::size_t rows) {
  std::vector<Matrix> t;
  for (const auto& b : blocks) t.push_back(b.transposed());
  return stack(t, rows).transposed();
}

namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // row echelon form, integer entries
  std::vector<std::size_t> pivots;           // pivot column per leading row
};

Echelon bareiss(const Matrix& m) {
  Echelon e;
  e.rows.assign(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      e.rows[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
    }
  }
  auto& a = e.rows;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return bareiss(m).pivots.size(); }

std::vector<std::size_t> pivot_columns(const Matrix& m) { return bareiss(m).pivots; }

Matrix kernel(const Matrix& m) {
  const Echelon e = bareiss(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix out(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    std::vector<Rational> x(m.cols());
    x[free[k]] = 1;
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
      const std::size_t pc = e.pivots[r];
      Rational sum = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (x[j] != 0 && e.rows[r][j] != 0) sum += Rational(e.rows[r][j]) * x[j];
      }
      x[pc] = -sum / Rational(e.rows[r][pc]);
    }
    for (std::size_t i = 0; i < m.cols(); ++i) out(i, k) = x[i];
  }
  return out;
}

Matrix column_basis(const Matrix& m) { return m.columns(pivot_columns(m)); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  // Gauss-Jordan on [a | b].
  const std::size_t n = a.cols();
  Matrix aug = Matrix::join({a, b}, a.rows());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < aug.rows(); ++c) {
    std::size_t p = r;
    while (p < aug.rows() && aug(p, c) == 0) ++p;
    if (p == aug.rows()) continue;
    for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(p, j), aug(r, j));
    const Rational inv = 1 / aug(r, c);
    for (std::size_t j = 0; j < aug.cols(); ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == r || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      for (std::size_t j = 0; j < aug.cols(); ++j) aug(i, j) -= f * aug(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < aug.rows(); ++i) {
    for (std::size_t j = n; j < aug.cols(); ++j) {
      if (aug(i, j) != 0) return std::nullopt;
    }
  }
  Matrix x(n, b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[k], j) = aug(k, n + j);
  }
  return x;
}

std::string format(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

}  // namespace qinj
