#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ringcodes/enumerate.hpp"
#include "ringcodes/ring.hpp"

namespace ringcodes {

// Dense s x l matrix over a Ring, row-major.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
  }

  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw ShapeError("entry count does not match dimensions");
    for (Elem e : data_) {
      if (!ring_.contains(e)) throw InvalidParameter("matrix entry outside the ring");
    }
  }

  // Integer literals reduced into the ring, e.g. from_ints(Z20, {{1, 2}, {0, 0}}).
  static Matrix from_ints(const Ring& ring, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t s = rows.size();
    const std::size_t l = s == 0 ? 0 : rows.begin()->size();
    std::vector<Elem> entries;
    for (const auto& row : rows) {
      if (row.size() != l) throw ShapeError("ragged matrix literal");
      for (auto v : row) entries.push_back(ring.from_int(v));
    }
    return Matrix(ring, s, l, std::move(entries));
  }

  static Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  RingElement at(std::size_t i, std::size_t j) const { return {ring_, (*this)(i, j)}; }

  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& entries() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.ring_ == b.ring_;
  }

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.ring(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
  if (a.cols() != b.rows()) {
    throw ShapeError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const Ring& r = a.ring();
  Matrix c(r, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = r.add(c(i, j), r.mul(aik, b(k, j)));
    }
  }
  return c;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

inline Matrix scale(const Matrix& a, Elem lambda) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.ring().mul(lambda, a(i, j));
  return c;
}

namespace detail {

// Laplace expansion along the first remaining row; cols lists the live columns.
inline Elem laplace(const Matrix& a, std::size_t row, std::vector<std::size_t>& cols) {
  const Ring& r = a.ring();
  if (cols.size() == 1) return a(row, cols[0]);
  Elem det = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Elem entry = a(row, cols[k]);
    if (entry == 0) continue;
    const std::size_t removed = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    const Elem term = r.mul(entry, laplace(a, row + 1, cols));
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), removed);
    det = (k % 2 == 0) ? r.add(det, term) : r.sub(det, term);
  }
  return det;
}

inline Elem minor_det(const Matrix& a, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = a.rows();
  if (n == 1) return a.ring().one();
  Matrix m(a.ring(), n - 1, n - 1);
  for (std::size_t i = 0, mi = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, mj = 0; j < n; ++j) {
      if (j == skip_col) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  std::vector<std::size_t> cols(n - 1);
  for (std::size_t j = 0; j < n - 1; ++j) cols[j] = j;
  return laplace(m, 0, cols);
}

}  // namespace detail

// Division-free, so valid in the presence of zero divisors.
inline RingElement determinant(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols[j] = j;
  return {a.ring(), detail::laplace(a, 0, cols)};
}

inline bool is_nonsingular(const Matrix& a) { return is_unit(determinant(a)); }

// det(A)^{-1} adj(A), checked against A * A^{-1} = I before returning.
inline Matrix adjugate_inverse(const Matrix& a) {
  const RingElement det = determinant(a);
  const auto det_inv = a.ring().inverse(det.value());
  if (!det_inv) throw NotInvertible("matrix is singular: det = " + det.to_string() + " is not a unit");
  const Ring& r = a.ring();
  const std::size_t n = a.rows();
  Matrix inv(r, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Elem cof = detail::minor_det(a, i, j);
      if ((i + j) % 2 == 1) cof = r.neg(cof);
      inv(j, i) = r.mul(*det_inv, cof);
    }
  }
  if (!(mat_mul(a, inv) == Matrix::identity(r, n))) throw NotInvertible("adjugate check failed");
  return inv;
}

enum class GramKind { Diagonal, AntiDiagonal, Other };

inline const char* to_string(GramKind kind) {
  switch (kind) {
    case GramKind::Diagonal: return "diag";
    case GramKind::AntiDiagonal: return "adiag";
    case GramKind::Other: return "other";
  }
  return "other";
}

// Shape of A A^t. lambdas[i] sits at (i, i) for Diagonal and at (i, s-1-i) for AntiDiagonal.
struct GramShape {
  GramKind kind = GramKind::Other;
  std::vector<Elem> lambdas;

  friend bool operator==(const GramShape&, const GramShape&) = default;
};

inline Matrix gram_matrix(const Matrix& a) { return mat_mul(a, transpose(a)); }

inline bool is_diagonal(const Matrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (i != j && g(i, j) != 0) return false;
  return true;
}

inline bool is_anti_diagonal(const Matrix& g) {
  if (!g.is_square()) return false;
  const std::size_t s = g.rows();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (j != s - 1 - i && g(i, j) != 0) return false;
  return true;
}

inline bool is_upper_triangular(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i && j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

inline bool is_lower_triangular(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

inline Matrix diag_matrix(const Ring& ring, std::span<const Elem> lambdas) {
  Matrix m(ring, lambdas.size(), lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) m(i, i) = lambdas[i];
  return m;
}

inline Matrix adiag_matrix(const Ring& ring, std::span<const Elem> lambdas) {
  const std::size_t s = lambdas.size();
  Matrix m(ring, s, s);
  for (std::size_t i = 0; i < s; ++i) m(i, s - 1 - i) = lambdas[i];
  return m;
}

// When A A^t is both diagonal and anti-diagonal (s = 1, or zero), Diagonal wins.
inline GramShape classify_gram(const Matrix& a) {
  const Matrix g = gram_matrix(a);
  const std::size_t s = g.rows();
  GramShape shape;
  if (is_diagonal(g)) {
    shape.kind = GramKind::Diagonal;
    for (std::size_t i = 0; i < s; ++i) shape.lambdas.push_back(g(i, i));
  } else if (is_anti_diagonal(g)) {
    shape.kind = GramKind::AntiDiagonal;
    for (std::size_t i = 0; i < s; ++i) shape.lambdas.push_back(g(i, s - 1 - i));
  }
  return shape;
}

// A A^t = I with A nonsingular, i.e. A = (A^{-1})^t.
inline bool is_orthogonal_matrix(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("orthogonality needs a square matrix");
  return is_nonsingular(a) && gram_matrix(a) == Matrix::identity(a.ring(), a.rows());
}

// Rows independent over R: the only x in R^s with xA = 0 is x = 0.
inline bool has_full_rank(const Matrix& a, const Budget& budget = {}) {
  // a unit determinant already rules out a nonzero left kernel
  if (a.is_square() && is_nonsingular(a)) return true;
  const std::size_t candidates = checked_power(a.ring().size(), a.rows());
  if (candidates > budget.max_candidates) {
    throw BudgetExceeded("full-rank kernel search", candidates, budget.max_candidates);
  }
  const auto found = partition_first_coordinate(a.ring().size(), [&](Elem lo, Elem hi) {
    bool kernel_vector = false;
    enumerate_row_combinations(a.ring(), a.entries(), a.rows(), a.cols(), lo, hi, [&](std::span<const Elem> x, std::span<const Elem> xa) {
      bool nonzero_x = false;
      for (Elem v : x) nonzero_x |= v != 0;
      if (!nonzero_x) return true;
      for (Elem v : xa)
        if (v != 0) return true;
      kernel_vector = true;
      return false;
    });
    return kernel_vector;
  });
  for (bool f : found)
    if (f) return false;
  return true;
}

}  // namespace ringcodes
