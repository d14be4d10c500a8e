// Hermitian lattices given as spans of vectors in an ambient space with an
// exact Hermitian Gram matrix.
//
// Forms are linear in the first argument and conjugate-linear in the second:
//   <x, y> = sum_ij x_i G_ij conj(y_j).
#pragma once

#include "hermlat/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hermlat {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <QuadraticRing R>
R inner(const Vec<R>& x, const Vec<R>& y, const Matrix<R>& gram) {
  if (x.size() != gram.rows() || y.size() != gram.cols())
    throw DimensionError("inner: vector length does not match the Gram matrix");
  R sum(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const R& g = gram(i, j);
      if (g.is_zero() || y[j].is_zero()) continue;
      sum += x[i] * g * y[j].conj();
    }
  }
  return sum;
}

template <QuadraticRing R>
R norm(const Vec<R>& x, const Matrix<R>& gram) {
  return inner(x, x, gram);
}

/// Row vector c with <x, r> = c . x for every x, i.e. c_i = sum_j G_ij conj(r_j).
template <QuadraticRing R>
Vec<R> functional_of(const Vec<R>& r, const Matrix<R>& gram) {
  Vec<R> c(gram.rows(), R(0));
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (!gram(i, j).is_zero() && !r[j].is_zero()) c[i] += gram(i, j) * r[j].conj();
  return c;
}

template <QuadraticRing R>
bool is_hermitian(const Matrix<R>& g) {
  return g.is_square() && adjoint(g) == g;
}

/// A module over Z[w] or Z[i] spanned by vectors in the ambient space, with
/// the ambient Gram matrix. The stored basis is the Hermite normal form of the
/// generators, so two lattices are equal iff their bases are equal.
template <QuadraticRing R>
class HermitianLattice {
 public:
  HermitianLattice(Matrix<R> ambient_gram, std::span<const Vec<R>> generators)
      : gram_(std::move(ambient_gram)) {
    if (!is_hermitian(gram_)) throw LatticeError("HermitianLattice: ambient Gram matrix is not Hermitian");
    for (const auto& v : generators)
      if (v.size() != gram_.rows()) throw DimensionError("HermitianLattice: generator has wrong length");
    basis_ = hnf_span<R>(generators);
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t c = 0;
      while (basis_(i, c).is_zero()) ++c;
      pivots_.push_back(c);
    }
  }

  HermitianLattice(Matrix<R> ambient_gram, const Matrix<R>& generator_rows)
      : HermitianLattice(std::move(ambient_gram), std::span<const Vec<R>>(generator_rows.row_list())) {}

  /// The full coordinate lattice R^n with the given Gram.
  static HermitianLattice ambient(Matrix<R> gram) {
    const auto n = gram.rows();
    return HermitianLattice(std::move(gram), Matrix<R>::identity(n));
  }

  static constexpr char ring_tag() { return R::kTag; }
  std::size_t ambient_dim() const { return gram_.rows(); }
  std::size_t rank() const { return basis_.rows(); }
  const Matrix<R>& gram() const { return gram_; }
  /// Basis vectors as rows.
  const Matrix<R>& basis() const { return basis_; }
  Vec<R> basis_vector(std::size_t i) const { return basis_.row(i); }

  /// Gram matrix of the basis: entry (j, k) is <b_j, b_k>.
  Matrix<R> basis_gram() const { return basis_ * gram_ * adjoint(basis_); }

  R inner(const Vec<R>& x, const Vec<R>& y) const { return hermlat::inner(x, y, gram_); }

  /// Coordinates c with x = sum c_j b_j over the fraction field, or nullopt
  /// when x is outside the span.
  std::optional<Vec<Fraction<R>>> rational_coordinates(const Vec<R>& x) const {
    if (x.size() != ambient_dim()) throw DimensionError("rational_coordinates: wrong length");
    // basis_ is in echelon form: solve the triangular system on pivot columns
    const std::size_t k = rank();
    Vec<Fraction<R>> c(k);
    for (std::size_t t = 0; t < k; ++t) {
      Fraction<R> acc(x[pivots_[t]]);
      for (std::size_t s = 0; s < t; ++s)
        if (!basis_(s, pivots_[t]).is_zero()) acc -= c[s] * Fraction<R>(basis_(s, pivots_[t]));
      c[t] = acc / Fraction<R>(basis_(t, pivots_[t]));
    }
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      Fraction<R> acc;
      for (std::size_t t = 0; t < k; ++t)
        if (!basis_(t, j).is_zero()) acc += c[t] * Fraction<R>(basis_(t, j));
      if (!(acc == Fraction<R>(x[j]))) return std::nullopt;
    }
    return c;
  }

  /// Integral coordinates in the basis, or nullopt if x is not in the lattice.
  std::optional<Vec<R>> coordinates(const Vec<R>& x) const {
    auto c = rational_coordinates(x);
    if (!c) return std::nullopt;
    return to_integral<R>(*c);
  }

  bool contains(const Vec<R>& x) const { return coordinates(x).has_value(); }

  friend bool operator==(const HermitianLattice& x, const HermitianLattice& y) {
    return x.gram_ == y.gram_ && x.basis_ == y.basis_;
  }

 private:
  Matrix<R> gram_;
  Matrix<R> basis_;
  std::vector<std::size_t> pivots_;
};

template <QuadraticRing R>
HermitianLattice<R> sublattice_span(const HermitianLattice<R>& lat, std::span<const Vec<R>> vectors) {
  return HermitianLattice<R>(lat.gram(), vectors);
}

template <QuadraticRing R>
bool span_equals(const HermitianLattice<R>& x, const HermitianLattice<R>& y) {
  return x == y;
}

// ---------------------------------------------------------------------------
// p-modularity: L = p L*

struct ThetaDualityReport {
  /// every <b_j, b_k> is divisible by p  (L contained in p L*)
  bool inner_products_divisible = false;
  /// p * Gram^{-1} is integral          (p L* contained in L)
  bool scaled_inverse_integral = false;
  bool holds() const { return inner_products_divisible && scaled_inverse_integral; }
};

template <QuadraticRing R>
ThetaDualityReport theta_duality_report(const Matrix<R>& basis_gram, const R& p) {
  ThetaDualityReport rep;
  rep.inner_products_divisible =
      std::all_of(basis_gram.data().begin(), basis_gram.data().end(), [&](const R& x) { return divides(p, x); });
  Matrix<Fraction<R>> inv;
  try {
    inv = inverse<R>(basis_gram);
  } catch (const SingularMatrixError&) {
    throw LatticeError("check_theta_duality: Gram matrix is singular");
  }
  rep.scaled_inverse_integral = is_integral<R>(Fraction<R>(p) * inv);
  return rep;
}

template <QuadraticRing R>
ThetaDualityReport theta_duality_report(const HermitianLattice<R>& lat, const R& p) {
  return theta_duality_report(lat.basis_gram(), p);
}

template <QuadraticRing R>
bool check_theta_duality(const HermitianLattice<R>& lat, const R& p) {
  return theta_duality_report(lat, p).holds();
}

// ---------------------------------------------------------------------------
// the underlying Z-lattice

using IntMatrix = Matrix<Integer>;

class NonIntegralFormError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// Gram matrix of b(x, y) = (2/3) Re<x, y> on the Z-basis {b_j, w b_j} of an
/// Eisenstein lattice. Throws NonIntegralFormError if some entry is not an
/// integer, which happens for lattices that are not theta-modular.
IntMatrix underlying_z_gram(const HermitianLattice<EisensteinInt>& lat);

/// Same as underlying_z_gram, starting from a basis Gram matrix.
IntMatrix underlying_z_gram(const Matrix<EisensteinInt>& basis_gram);

/// Exact determinant of an integer matrix (Bareiss).
Integer determinant(const IntMatrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class DegenerateFormError : public LatticeError {
 public:
  using LatticeError::LatticeError;
};

/// Inertia of a nondegenerate symmetric integer matrix, by exact symmetric
/// elimination over Q with symmetric pivoting.
Signature signature(const IntMatrix& sym);

// ---------------------------------------------------------------------------
// the lattices themselves

/// The 16 root vectors indexed by the Y555 node labels, in ambient Z[w]^14
/// (three blocks of four coordinates, then the hyperbolic cell).
std::vector<std::pair<std::string, Vec<EisensteinInt>>> y555_seed_vectors();

/// diag(-1 x12) plus the hyperbolic cell with <x,y>_H = theta x13 conj(y14) +
/// conj(theta) x14 conj(y13).
Matrix<EisensteinInt> eisenstein_ambient_gram();

/// The rank-14 Eisenstein lattice spanned by the Y555 seed roots.
HermitianLattice<EisensteinInt> build_l_diag();

/// Ten Y333 seed vectors in ambient Z[i]^8 (three blocks of two coordinates,
/// then the Gaussian hyperbolic cell).
std::vector<std::pair<std::string, Vec<GaussianInt>>> y333_gaussian_seed_vectors();

/// diag(-1 x6) plus the cell with <x,y>_H = (1+i) x7 conj(y8) + (1-i) x8 conj(y7).
Matrix<GaussianInt> gaussian_ambient_gram();

/// The rank-8 Gaussian lattice spanned by the Y333 seed roots.
HermitianLattice<GaussianInt> build_gaussian_lattice();

}  // namespace hermlat
