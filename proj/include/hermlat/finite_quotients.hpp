// Finite quotients: reduction of lattice isometries modulo the prime, the
// induced F_2 quadratic form, BFS closure of matrix groups and Schreier-Sims
// orders of matrix groups over F_2 and F_3.
#pragma once

#include "hermlat/lattice.hpp"
#include "hermlat/reflection.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hermlat {

class QuotientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square matrix over F_p (p = 2 or 3), entries stored as 0..p-1.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(unsigned p, std::size_t n);
  static FpMatrix identity(unsigned p, std::size_t n);

  unsigned modulus() const { return p_; }
  std::size_t size() const { return n_; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, unsigned v) { a_[i * n_ + j] = static_cast<std::uint8_t>(v % p_); }
  const std::vector<std::uint8_t>& entries() const { return a_; }

  bool is_identity() const;
  /// y = M x for a column vector x.
  std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& x) const;

  friend FpMatrix operator*(const FpMatrix& x, const FpMatrix& y);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  unsigned p_ = 2;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> a_;
};

/// Entry-wise reduction modulo the ring prime (F_3 for Z[w], F_2 for Z[i]).
template <QuadraticRing R>
FpMatrix reduce_mod_prime(const Matrix<R>& m) {
  if (!m.is_square()) throw DimensionError("reduce_mod_prime: matrix is not square");
  const unsigned p = R::kTag == 'E' ? 3 : 2;
  FpMatrix out(p, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, reduce_mod(m(i, j), R::prime()).value());
  return out;
}

/// Matrix K of an ambient map M on the lattice basis: M b_j = sum_k K_kj b_k.
/// Throws QuotientError when M does not map the lattice into itself.
template <QuadraticRing R, class T>
Matrix<R> lattice_action(const Matrix<T>& m, const HermitianLattice<R>& lat) {
  if (m.rows() != lat.ambient_dim() || m.cols() != lat.ambient_dim())
    throw DimensionError("lattice_action: matrix does not match the ambient dimension");
  const std::size_t k = lat.rank();
  Matrix<R> out(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Vec<R> b = lat.basis_vector(j);
    Vec<Fraction<R>> image(lat.ambient_dim());
    for (std::size_t i = 0; i < lat.ambient_dim(); ++i)
      for (std::size_t t = 0; t < lat.ambient_dim(); ++t)
        if (!b[t].is_zero()) image[i] += Fraction<R>(m(i, t)) * Fraction<R>(b[t]);
    auto integral = to_integral<R>(image);
    auto coords = integral ? lat.coordinates(*integral) : std::nullopt;
    if (!coords) throw QuotientError("lattice_action: matrix does not preserve the lattice");
    for (std::size_t i = 0; i < k; ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

/// Action on lat / (prime * lat) in the lattice basis. `m` acts on
/// coordinates in the basis of `lat` and must preserve its Gram form.
template <QuadraticRing R>
FpMatrix reduce_lattice_isometry(const GroupElement<R>& m, const HermitianLattice<R>& lat) {
  if (m.rows() != lat.rank() || m.cols() != lat.rank())
    throw DimensionError("reduce_lattice_isometry: matrix does not match the lattice rank");
  if (!preserves_form(m, lat.basis_gram()))
    throw QuotientError("reduce_lattice_isometry: matrix does not preserve the lattice form");
  return reduce_mod_prime(m);
}

// ---------------------------------------------------------------------------
// quadratic forms over F_2; vectors are bitmasks (bit k = coordinate k)

class QuadraticFormF2 {
 public:
  /// From the full value table (size 2^n, q(0) = 0).
  QuadraticFormF2(std::size_t n, std::vector<std::uint8_t> values);
  /// q(x) = sum_k diag_k x_k + sum_{k<l} cross_kl x_k x_l.
  static QuadraticFormF2 from_polynomial(std::size_t n, const std::vector<std::uint8_t>& diag,
                                         const std::vector<std::vector<std::uint8_t>>& cross);
  /// Orthogonal sum of m hyperbolic planes.
  static QuadraticFormF2 plus_type(std::size_t m);
  /// m - 1 hyperbolic planes plus the anisotropic plane x^2 + xy + y^2.
  static QuadraticFormF2 minus_type(std::size_t m);

  std::size_t dimension() const { return n_; }
  unsigned operator()(std::uint32_t x) const { return values_.at(x); }
  unsigned polar(std::uint32_t x, std::uint32_t y) const { return values_[x ^ y] ^ values_[x] ^ values_[y]; }
  /// Rank of the polarization over F_2.
  std::size_t polar_rank() const;
  bool is_nondegenerate() const { return polar_rank() == n_; }
  std::size_t zero_count() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> values_;
};

/// q([x]) = (<x,x>/2) mod 2 on lat / (1+i) lat. Throws QuotientError when a
/// basis inner product is not divisible by 1+i.
QuadraticFormF2 induced_quadratic_form(const HermitianLattice<GaussianInt>& lat);

/// Image of a vector (bitmask) under an F_2 matrix.
std::uint32_t apply_f2(const FpMatrix& m, std::uint32_t x);

enum class FormType { kPlus, kMinus };

struct FormTypeResult {
  FormType type;
  std::size_t isotropic_count;  // zeros of q, the zero vector included
};

/// Type of a nondegenerate even-dimensional form, by comparison of zero
/// counts with the reference forms. Throws QuotientError otherwise.
FormTypeResult form_type(const QuadraticFormF2& q);

const char* to_string(FormType t);

// ---------------------------------------------------------------------------
// group orders

struct ClosureResult {
  std::optional<std::uint64_t> order;  // empty when the cap was exceeded
  std::uint64_t cap = 0;
  bool exceeds_cap() const { return !order.has_value(); }
};

inline constexpr std::uint64_t kDefaultClosureCap = 2'000'000;

namespace detail {

enum class EntryArithmetic { kEisenstein, kGaussian, kModP };

/// Closure of square matrices with `width` machine integers per entry.
ClosureResult packed_closure(std::size_t n, std::size_t width, EntryArithmetic arith, unsigned p,
                             const std::vector<std::vector<std::int64_t>>& generators, std::uint64_t cap);

}  // namespace detail

/// Breadth-first closure from the identity under right multiplication by the
/// generators. Ring matrices are first restricted to the coordinates moved by
/// some generator; entries must then fit in machine integers.
template <QuadraticRing R>
ClosureResult bfs_group_closure(const std::vector<Matrix<R>>& generators, std::uint64_t cap = kDefaultClosureCap) {
  if (generators.empty()) return {1, cap};
  const std::size_t n = generators.front().rows();
  std::vector<bool> moved(n, false);
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionError("bfs_group_closure: generators differ in size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(g(i, j) == R(i == j ? 1 : 0))) moved[i] = moved[j] = true;
  }
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (moved[i]) support.push_back(i);
  const std::size_t s = support.size();
  std::vector<std::vector<std::int64_t>> packed;
  for (const auto& g : generators) {
    std::vector<std::int64_t> v;
    v.reserve(2 * s * s);
    for (std::size_t i : support)
      for (std::size_t j : support) {
        if (!g(i, j).a().fits_slong_p() || !g(i, j).b().fits_slong_p())
          throw QuotientError("bfs_group_closure: generator entries too large");
        v.push_back(g(i, j).a().get_si());
        v.push_back(g(i, j).b().get_si());
      }
    packed.push_back(std::move(v));
  }
  const auto arith = R::kTag == 'E' ? detail::EntryArithmetic::kEisenstein : detail::EntryArithmetic::kGaussian;
  return detail::packed_closure(s, 2, arith, 0, packed, cap);
}

ClosureResult bfs_group_closure(const std::vector<FpMatrix>& generators, std::uint64_t cap = kDefaultClosureCap);

/// Order of the group generated by invertible F_p matrices acting on the
/// nonzero vectors of F_p^n (p^n - 1 points, at most 4095), by Schreier-Sims
/// with greedy base selection.
Integer schreier_sims_order(const std::vector<FpMatrix>& generators);

}  // namespace hermlat
