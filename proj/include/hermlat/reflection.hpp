// Complex reflections (triflections over Z[w], tetraflections over Z[i]),
// word evaluation, element orders and braid/commute tests.
#pragma once

#include "hermlat/lattice.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hermlat {

class ReflectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Isometry of an ambient Hermitian form, acting on column vectors.
template <QuadraticRing R>
using GroupElement = Matrix<R>;

/// x -> x - (1 - mu) <x, r> / <r, r> r. Sends r to mu r and fixes r-perp.
/// Throws ReflectionError when r does not have the root norm of the ring or
/// when the resulting matrix is not integral.
template <QuadraticRing R>
GroupElement<R> complex_reflection(const Vec<R>& r, const R& mu, const Matrix<R>& gram) {
  const R rr = norm(r, gram);
  if (!(rr == R(R::kRootNorm)))
    throw ReflectionError("complex_reflection: vector does not have norm " + std::to_string(R::kRootNorm));
  if (!is_unit(mu)) throw ReflectionError("complex_reflection: eigenvalue is not a unit");
  const std::size_t n = gram.rows();
  const Vec<R> f = functional_of(r, gram);
  const Fraction<R> c = Fraction<R>(R(1) - mu) / Fraction<R>(rr);
  Matrix<R> m = Matrix<R>::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (f[j].is_zero()) continue;
      const Fraction<R> entry = c * Fraction<R>(r[i] * f[j]);
      if (!entry.is_integral())
        throw ReflectionError("complex_reflection: matrix is not integral (inner products not divisible by the prime)");
      m(i, j) -= entry.num();
    }
  }
  return m;
}

/// Triflection (mu = w) or tetraflection (mu = i) in r.
template <QuadraticRing R>
GroupElement<R> reflection(const Vec<R>& r, const Matrix<R>& gram) {
  return complex_reflection(r, R::reflection_unit(), gram);
}

template <QuadraticRing R>
Vec<R> scale(const R& u, const Vec<R>& v) {
  Vec<R> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(u * x);
  return out;
}

/// Whether the reflection in u*r equals the reflection in r.
template <QuadraticRing R>
bool unit_rescaling_invariance(const Vec<R>& r, const R& u, const R& mu, const Matrix<R>& gram) {
  if (!is_unit(u)) throw ReflectionError("unit_rescaling_invariance: scalar is not a unit");
  return complex_reflection(scale(u, r), mu, gram) == complex_reflection(r, mu, gram);
}

/// Entry-wise conjugate.
template <QuadraticRing R>
Matrix<R> conj(const Matrix<R>& m) {
  return adjoint(m).transpose();
}

/// <Mx, My> = <x, y> for the form x^T G conj(y), i.e. M^T G conj(M) = G.
template <QuadraticRing R>
bool preserves_form(const GroupElement<R>& m, const Matrix<R>& gram) {
  return m.transpose() * gram * conj(m) == gram;
}

/// Inverse of an isometry of `gram`, as (G conj(M) G^{-1})^T. Falls back to
/// fraction-field inversion when m does not preserve the form.
template <QuadraticRing R>
GroupElement<R> isometry_inverse(const GroupElement<R>& m, const Matrix<R>& gram,
                                 const Matrix<Fraction<R>>& gram_inverse) {
  if (preserves_form(m, gram)) return to_integral<R>((to_fraction(gram * conj(m)) * gram_inverse).transpose());
  return to_integral<R>(inverse<R>(m));
}

template <QuadraticRing R>
GroupElement<R> isometry_inverse(const GroupElement<R>& m, const Matrix<R>& gram) {
  return isometry_inverse(m, gram, inverse<R>(gram));
}

/// The defining properties of a reflection in a root r. The isometry test is
/// stated as adjoint(M) H M = H for H = G^T, the Gram matrix of the same form
/// written as <x, y> = y^dagger H x.
struct ReflectionContract {
  bool integral = false;
  bool has_reflection_order = false;
  bool isometry = false;
  bool scales_root = false;
  bool rank_one = false;
  bool ok() const { return integral && has_reflection_order && isometry && scales_root && rank_one; }
};

template <QuadraticRing R>
ReflectionContract check_reflection_contract(const Vec<R>& r, const Matrix<R>& gram) {
  ReflectionContract c;
  GroupElement<R> m;
  try {
    m = reflection(r, gram);
  } catch (const ReflectionError&) {
    return c;
  }
  c.integral = true;
  GroupElement<R> power = GroupElement<R>::identity(gram.rows());
  for (int k = 0; k < R::kReflectionOrder; ++k) power = power * m;
  c.has_reflection_order = power.is_identity() && !m.is_identity();
  const Matrix<R> h = gram.transpose();
  c.isometry = adjoint(m) * h * m == h;
  c.scales_root = m * r == scale(R::reflection_unit(), r);
  c.rank_one = rank(m - GroupElement<R>::identity(gram.rows())) == 1;
  return c;
}

// ---------------------------------------------------------------------------
// words

struct Letter {
  std::string label;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using GroupWord = std::vector<Letter>;

/// Whitespace separated labels; a trailing ' marks an inverse ("a b1' c1").
GroupWord parse_word(std::string_view text);
std::string format_word(const GroupWord& w);

class UnknownLabelError : public ReflectionError {
 public:
  using ReflectionError::ReflectionError;
};

/// Left-to-right product of the assigned matrices; inverse letters use the
/// exact isometry inverse.
template <QuadraticRing R>
GroupElement<R> word_to_matrix(const GroupWord& w, const std::map<std::string, GroupElement<R>>& assignment,
                               const Matrix<R>& gram) {
  GroupElement<R> out = GroupElement<R>::identity(gram.rows());
  std::map<std::string, GroupElement<R>> inverses;
  Matrix<Fraction<R>> gram_inv;
  for (const auto& letter : w) {
    auto it = assignment.find(letter.label);
    if (it == assignment.end()) throw UnknownLabelError("word_to_matrix: unassigned label '" + letter.label + "'");
    if (!letter.inverse) {
      out = out * it->second;
      continue;
    }
    auto inv = inverses.find(letter.label);
    if (inv == inverses.end()) {
      if (gram_inv.rows() == 0) gram_inv = inverse<R>(gram);
      inv = inverses.emplace(letter.label, isometry_inverse(it->second, gram, gram_inv)).first;
    }
    out = out * inv->second;
  }
  return out;
}

/// Least k in [1, cap] with m^k = I, or nullopt.
template <QuadraticRing R>
std::optional<std::size_t> element_order(const GroupElement<R>& m, std::size_t cap = 200) {
  if (cap == 0) throw std::invalid_argument("element_order: cap must be at least 1");
  if (!m.is_square()) throw DimensionError("element_order: matrix is not square");
  GroupElement<R> power = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  return std::nullopt;
}

/// Least k in [1, cap] with m^k a scalar unit matrix.
template <QuadraticRing R>
std::optional<std::size_t> projective_order(const GroupElement<R>& m, std::size_t cap = 200) {
  if (cap == 0) throw std::invalid_argument("projective_order: cap must be at least 1");
  const std::size_t n = m.rows();
  GroupElement<R> power = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    for (const R& u : R::units())
      if (power == u * GroupElement<R>::identity(n)) return k;
    power = power * m;
  }
  return std::nullopt;
}

template <class T>
bool braids(const Matrix<T>& m, const Matrix<T>& n) {
  return m * n * m == n * m * n;
}

template <class T>
bool commutes(const Matrix<T>& m, const Matrix<T>& n) {
  return m * n == n * m;
}

}  // namespace hermlat
