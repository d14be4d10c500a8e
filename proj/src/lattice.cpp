#include "hermlat/lattice.hpp"

#include <array>

namespace hermlat {

namespace {

using E = EisensteinInt;
using G = GaussianInt;

// Row of the Y555 table for chain 1; rows for chains 2 and 3 cycle the three
// blocks of four coordinates. Coordinates 12, 13 are the hyperbolic cell.
struct TableRow {
  const char* letter;
  std::vector<std::pair<std::size_t, E>> entries;
};

std::vector<TableRow> y555_chain_rows() {
  const E th = E::theta();
  const E th_bar = th.conj();
  return {
      {"b", {{3, th_bar}, {13, E(1)}}},
      {"c", {{1, E(1)}, {2, E(1)}, {3, E(1)}}},
      {"d", {{1, th}}},
      {"e", {{0, E(-1)}, {1, E(-1)}, {2, E(1)}}},
      {"f", {{0, th_bar}}},
  };
}

}  // namespace

std::vector<std::pair<std::string, Vec<E>>> y555_seed_vectors() {
  constexpr std::size_t kDim = 14;
  constexpr std::size_t kBlock = 4;
  std::vector<std::pair<std::string, Vec<E>>> out;
  Vec<E> a(kDim, E(0));
  a[12] = E(1);
  a[13] = E::omega_bar();
  out.emplace_back("a", std::move(a));
  const auto rows = y555_chain_rows();
  for (std::size_t chain = 0; chain < 3; ++chain) {
    for (const auto& row : rows) {
      Vec<E> v(kDim, E(0));
      for (const auto& [coord, value] : row.entries) {
        if (coord < 3 * kBlock) {
          const std::size_t block = (coord / kBlock + chain) % 3;
          v[block * kBlock + coord % kBlock] = value;
        } else {
          v[coord] = value;
        }
      }
      out.emplace_back(std::string(row.letter) + std::to_string(chain + 1), std::move(v));
    }
  }
  return out;
}

Matrix<E> eisenstein_ambient_gram() {
  Matrix<E> g(14, 14);
  for (std::size_t i = 0; i < 12; ++i) g(i, i) = E(-1);
  g(12, 13) = E::theta();
  g(13, 12) = E::theta().conj();
  return g;
}

HermitianLattice<E> build_l_diag() {
  std::vector<Vec<E>> gens;
  for (auto& [label, v] : y555_seed_vectors()) gens.push_back(v);
  return HermitianLattice<E>(eisenstein_ambient_gram(), std::span<const Vec<E>>(gens));
}

std::vector<std::pair<std::string, Vec<G>>> y333_gaussian_seed_vectors() {
  constexpr std::size_t kDim = 8;
  constexpr std::size_t kBlock = 2;
  const G p = G::prime();
  const G p_bar = p.conj();
  // Same pattern as the Eisenstein table: conj(theta) -> 1-i, theta -> 1+i,
  // conj(w) -> -i in the cell coordinates.
  struct GRow {
    const char* letter;
    std::vector<std::pair<std::size_t, G>> entries;
  };
  const std::vector<GRow> rows = {
      {"b", {{1, p_bar}, {7, G(1)}}},
      {"c", {{0, G(1)}, {1, G(1)}}},
      {"d", {{0, p}}},
  };
  std::vector<std::pair<std::string, Vec<G>>> out;
  Vec<G> a(kDim, G(0));
  a[6] = G(1);
  a[7] = -G::i();
  out.emplace_back("a", std::move(a));
  for (std::size_t chain = 0; chain < 3; ++chain) {
    for (const auto& row : rows) {
      Vec<G> v(kDim, G(0));
      for (const auto& [coord, value] : row.entries) {
        if (coord < 3 * kBlock) {
          const std::size_t block = (coord / kBlock + chain) % 3;
          v[block * kBlock + coord % kBlock] = value;
        } else {
          v[coord] = value;
        }
      }
      out.emplace_back(std::string(row.letter) + std::to_string(chain + 1), std::move(v));
    }
  }
  return out;
}

Matrix<G> gaussian_ambient_gram() {
  Matrix<G> g(8, 8);
  for (std::size_t i = 0; i < 6; ++i) g(i, i) = G(-1);
  g(6, 7) = G::prime();
  g(7, 6) = G::prime().conj();
  return g;
}

HermitianLattice<G> build_gaussian_lattice() {
  std::vector<Vec<G>> gens;
  for (auto& [label, v] : y333_gaussian_seed_vectors()) gens.push_back(v);
  return HermitianLattice<G>(gaussian_ambient_gram(), std::span<const Vec<G>>(gens));
}

// ---------------------------------------------------------------------------

IntMatrix underlying_z_gram(const Matrix<E>& m) {
  if (!m.is_square()) throw DimensionError("underlying_z_gram: basis Gram is not square");
  const std::size_t n = m.rows();
  IntMatrix z(2 * n, 2 * n);
  const E w = E::omega();
  const E w_bar = w.conj();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      // <w^s b_j, w^t b_k> = w^s conj(w)^t <b_j, b_k>
      const std::array<E, 4> values{m(j, k), w_bar * m(j, k), w * m(j, k), m(j, k)};
      for (std::size_t s = 0; s < 2; ++s) {
        for (std::size_t t = 0; t < 2; ++t) {
          const Integer twice_re = values[2 * s + t].twice_real();
          // (2/3) Re = twice_re / 3
          if (!mpz_divisible_ui_p(twice_re.get_mpz_t(), 3))
            throw NonIntegralFormError("underlying_z_gram: (2/3)Re<x,y> is not an integer");
          z(2 * j + s, 2 * k + t) = twice_re / 3;
        }
      }
    }
  }
  return z;
}

IntMatrix underlying_z_gram(const HermitianLattice<E>& lat) { return underlying_z_gram(lat.basis_gram()); }

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Signature signature(const IntMatrix& sym) {
  if (!sym.is_square()) throw DimensionError("signature: matrix is not square");
  const std::size_t n = sym.rows();
  Matrix<mpq_class> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sym(i, j) != sym(j, i)) throw LatticeError("signature: matrix is not symmetric");
      a(i, j) = sym(i, j);
    }
  auto swap_sym = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      // every remaining diagonal entry is zero; make one nonzero by the
      // congruence x_i -> x_i + x_j, which sets a_ii = 2 a_ij
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) throw DegenerateFormError("signature: form is degenerate");
      for (std::size_t j = 0; j < n; ++j) a(bi, j) += a(bj, j);
      for (std::size_t i = 0; i < n; ++i) a(i, bi) += a(i, bj);
      p = bi;
    }
    swap_sym(k, p);
    const mpq_class pivot = a(k, k);
    (sgn(pivot) > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const mpq_class f = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = 0;
  }
  return sig;
}

}  // namespace hermlat
