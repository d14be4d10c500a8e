// Dense exact matrices over Z[w], Z[i] and their fraction fields.
//
// Determinant and rank use fraction-free (Bareiss) elimination inside the
// ring; solve and kernel work over the fraction field; hnf_span computes a
// canonical echelon basis of a module span over the Euclidean ring.
#pragma once

#include "hermlat/rings.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace hermlat {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
using Vec = std::vector<T>;

inline bool is_zero_value(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero_value(const mpq_class& x) { return sgn(x) == 0; }
template <class T>
  requires requires(const T& x) { x.is_zero(); }
bool is_zero_value(const T& x) {
  return x.is_zero();
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("Matrix: data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(std::span<const T> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Rows given as vectors of equal length.
  static Matrix from_rows(std::span<const Vec<T>> rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("Matrix::from_rows: ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<T> row(std::size_t i) const {
    return Vec<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vec<T> col(std::size_t j) const {
    Vec<T> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  std::vector<Vec<T>> row_list() const {
    std::vector<Vec<T>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DimensionError("matmul: inner dimensions differ");
    Matrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (is_zero_value(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          const T& ykj = y(k, j);
          if (!is_zero_value(ykj)) out(i, j) += xik * ykj;
        }
      }
    return out;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionError("matrix add: shape mismatch");
    Matrix out = x;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += y.data_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionError("matrix sub: shape mismatch");
    Matrix out = x;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= y.data_[k];
    return out;
  }
  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix out = x;
    for (auto& v : out.data_) v = s * v;
    return out;
  }
  friend Vec<T> operator*(const Matrix& x, const Vec<T>& v) {
    if (x.cols_ != v.size()) throw DimensionError("matrix-vector: dimension mismatch");
    Vec<T> out(x.rows_, T(0));
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j)
        if (!is_zero_value(x(i, j)) && !is_zero_value(v[j])) out[i] += x(i, j) * v[j];
    return out;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == (i == j ? T(1) : T(0)))) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

// ---------------------------------------------------------------------------
// conjugation and lifting between the ring and its fraction field

template <QuadraticRing R>
Matrix<R> adjoint(const Matrix<R>& a) {
  Matrix<R> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j).conj();
  return t;
}

template <QuadraticRing R>
Matrix<Fraction<R>> adjoint(const Matrix<Fraction<R>>& a) {
  Matrix<Fraction<R>> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j).conj();
  return t;
}

template <QuadraticRing R>
Vec<R> conj(const Vec<R>& v) {
  Vec<R> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

template <QuadraticRing R>
Matrix<Fraction<R>> to_fraction(const Matrix<R>& a) {
  std::vector<Fraction<R>> d(a.data().begin(), a.data().end());
  return Matrix<Fraction<R>>(a.rows(), a.cols(), std::move(d));
}

template <QuadraticRing R>
Vec<Fraction<R>> to_fraction(const Vec<R>& v) {
  return Vec<Fraction<R>>(v.begin(), v.end());
}

template <QuadraticRing R>
bool is_integral(const Matrix<Fraction<R>>& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](const auto& x) { return x.is_integral(); });
}

template <QuadraticRing R>
bool is_integral(const Vec<Fraction<R>>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_integral(); });
}

/// Throws ArithmeticError unless every entry is integral.
template <QuadraticRing R>
Matrix<R> to_integral(const Matrix<Fraction<R>>& a) {
  std::vector<R> d;
  d.reserve(a.data().size());
  for (const auto& x : a.data()) d.push_back(x.integral_value());
  return Matrix<R>(a.rows(), a.cols(), std::move(d));
}

template <QuadraticRing R>
std::optional<Vec<R>> to_integral(const Vec<Fraction<R>>& v) {
  if (!is_integral(v)) return std::nullopt;
  Vec<R> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.num());
  return out;
}

/// Scales a fraction-field vector by the lcm of its denominators.
template <QuadraticRing R>
Vec<R> clear_denominators(const Vec<Fraction<R>>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  Vec<R> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.num().scaled(l / x.den()));
  return out;
}

// ---------------------------------------------------------------------------
// fraction-free elimination

namespace detail {

/// Bareiss elimination in place. Returns the rank; `sign` records the parity
/// of row swaps and `last_pivot` the final leading minor when full rank.
template <QuadraticRing R>
std::size_t bareiss(Matrix<R>& m, int& sign) {
  sign = 1;
  R prev(1);
  std::size_t rank = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(rank, j));
      sign = -sign;
    }
    const R pivot = m(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        R v = pivot * m(i, j) - m(i, c) * m(rank, j);
        m(i, j) = exact_div(v, prev);
      }
      m(i, c) = R(0);
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace detail

template <QuadraticRing R>
R determinant(const Matrix<R>& a) {
  if (!a.is_square()) throw DimensionError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return R(1);
  Matrix<R> m = a;
  int sign = 1;
  // Column-by-column Bareiss keeps the leading minor on the diagonal when the
  // matrix is nonsingular; a skipped column means rank < n.
  R prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return R(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = R(0);
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

template <QuadraticRing R>
std::size_t rank(const Matrix<R>& a) {
  Matrix<R> m = a;
  int sign = 1;
  return detail::bareiss(m, sign);
}

// ---------------------------------------------------------------------------
// fraction-field elimination

template <QuadraticRing R>
struct RowEchelon {
  Matrix<Fraction<R>> reduced;      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <QuadraticRing R>
RowEchelon<R> row_reduce(Matrix<Fraction<R>> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Fraction<R> inv = Fraction<R>(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Fraction<R> f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Solves A x = b for square nonsingular A over the fraction field.
template <QuadraticRing R>
Vec<Fraction<R>> solve_linear(const Matrix<Fraction<R>>& a, const Vec<Fraction<R>>& b) {
  if (!a.is_square()) throw DimensionError("solve_linear: matrix is not square");
  if (a.rows() != b.size()) throw DimensionError("solve_linear: right-hand side has wrong length");
  const std::size_t n = a.rows();
  Matrix<Fraction<R>> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto ech = row_reduce<R>(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots.back() >= n) throw SingularMatrixError("solve_linear: singular matrix");
  return ech.reduced.col(n);
}

template <QuadraticRing R>
Vec<Fraction<R>> solve_linear(const Matrix<R>& a, const Vec<R>& b) {
  return solve_linear<R>(to_fraction(a), to_fraction(b));
}

template <QuadraticRing R>
Matrix<Fraction<R>> inverse(const Matrix<Fraction<R>>& a) {
  if (!a.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  Matrix<Fraction<R>> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Fraction<R>(1);
  }
  auto ech = row_reduce<R>(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots.back() >= n) throw SingularMatrixError("inverse: singular matrix");
  Matrix<Fraction<R>> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

template <QuadraticRing R>
Matrix<Fraction<R>> inverse(const Matrix<R>& a) {
  return inverse<R>(to_fraction(a));
}

/// Basis of {v : A v = 0} over the fraction field; dimension cols - rank.
template <QuadraticRing R>
std::vector<Vec<Fraction<R>>> kernel(const Matrix<Fraction<R>>& a) {
  auto ech = row_reduce<R>(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vec<Fraction<R>>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<Fraction<R>> v(a.cols());
    v[free] = Fraction<R>(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <QuadraticRing R>
std::vector<Vec<Fraction<R>>> kernel(const Matrix<R>& a) {
  return kernel<R>(to_fraction(a));
}

// ---------------------------------------------------------------------------
// Hermite normal form over Z[w] / Z[i]

/// Canonical basis (as matrix rows) of the module spanned by `vectors`.
/// Row echelon shape; each pivot is the canonical associate; entries above a
/// pivot are canonical remainders modulo it. Two spans are equal iff their
/// normal forms are equal.
template <QuadraticRing R>
Matrix<R> hnf_span(std::span<const Vec<R>> vectors) {
  if (vectors.empty()) return Matrix<R>();
  const std::size_t n = vectors.front().size();
  std::vector<Vec<R>> rows;
  for (const auto& v : vectors) {
    if (v.size() != n) throw DimensionError("hnf_span: vectors of different length");
    if (std::any_of(v.begin(), v.end(), [](const R& x) { return !x.is_zero(); })) rows.push_back(v);
  }
  auto axpy = [n](Vec<R>& dst, const R& q, const Vec<R>& src) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < n; ++j)
      if (!src[j].is_zero()) dst[j] -= q * src[j];
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    // gcd-style reduction of column c among rows r..end
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c].is_zero()) continue;
        if (best == rows.size() || rows[i][c].norm() < rows[best][c].norm()) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c].is_zero()) continue;
        auto qr = euclidean_div(rows[i][c], rows[r][c]);
        axpy(rows[i], qr.quotient, rows[r]);
        if (!rows[i][c].is_zero()) done = false;
      }
      if (done) break;
    }
    if (r >= rows.size() || rows[r][c].is_zero()) continue;
    auto [unit, pivot] = canonical_associate(rows[r][c]);
    for (auto& x : rows[r]) x = unit * x;
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][c].is_zero()) continue;
      R rem = canonical_remainder(rows[i][c], pivot);
      R q = exact_div(rows[i][c] - rem, pivot);
      axpy(rows[i], q, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return Matrix<R>::from_rows(rows);
}

template <QuadraticRing R>
Matrix<R> hnf_span(const Matrix<R>& rows) {
  auto list = rows.row_list();
  return hnf_span<R>(std::span<const Vec<R>>(list));
}

}  // namespace hermlat
