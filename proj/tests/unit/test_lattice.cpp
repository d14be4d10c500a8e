#include "hermlat/root_search.hpp"

#include <doctest.h>

using namespace hermlat;
using E = EisensteinInt;
using G = GaussianInt;

namespace {

const HermitianLattice<E>& l_diag() {
  static const auto lat = build_l_diag();
  return lat;
}

Vec<E> seed(const std::string& label) { return seed_y555_roots().root(label); }

}  // namespace

TEST_CASE("inner examples") {
  const auto& lat = l_diag();
  const Vec<E> a = seed("a");
  Vec<E> expected_a(14, E(0));
  expected_a[12] = E(1);
  expected_a[13] = E::omega_bar();
  CHECK(a == expected_a);
  CHECK(lat.inner(a, a) == E(-3));
  CHECK(lat.inner(a, seed("b1")) == E::theta());
  CHECK(lat.inner(seed("b1"), seed("b2")) == E(0));
  CHECK(lat.inner(seed("b1"), seed("c1")) == E::theta());
  CHECK(lat.inner(seed("c1"), seed("e1")) == E(0));
}

TEST_CASE("inner is sesquilinear") {
  const auto& g = l_diag().gram();
  const Vec<E> x = seed("c2"), y = seed("d2");
  const E s(2, -1);
  Vec<E> sx(14), sy(14);
  for (int k = 0; k < 14; ++k) sx[k] = s * x[k], sy[k] = s * y[k];
  CHECK(inner(sx, y, g) == s * inner(x, y, g));
  CHECK(inner(x, sy, g) == conj(s) * inner(x, y, g));
  CHECK(inner(x, y, g) == conj(inner(y, x, g)));
  CHECK_THROWS_AS(inner(Vec<E>(3, E(0)), y, g), DimensionError);
}

TEST_CASE("ambient Gram") {
  const auto g = eisenstein_ambient_gram();
  REQUIRE(g.rows() == 14);
  for (int i = 0; i < 12; ++i) CHECK(g(i, i) == E(-1));
  CHECK(g(12, 13) == E::theta());
  CHECK(g(13, 12) == conj(E::theta()));
  CHECK(g(12, 12) == E(0));
  CHECK(is_hermitian(g));
  const auto gg = gaussian_ambient_gram();
  CHECK(gg(6, 7) == G(1, 1));
  CHECK(gg(7, 6) == G(1, -1));
  CHECK(is_hermitian(gg));
}

TEST_CASE("build_L_diag examples") {
  const auto& lat = l_diag();
  CHECK(lat.rank() == 14);
  for (const auto& v : seed_y555_roots().vectors()) CHECK(lat.contains(v));
  Vec<E> e1(14, E(0));
  e1[0] = E(1);
  CHECK_FALSE(lat.contains(e1));
  for (std::size_t i = 0; i < lat.rank(); ++i) CHECK(lat.basis_vector(i).size() == 14);
}

TEST_CASE("build_gaussian_lattice examples") {
  const auto lat = build_gaussian_lattice();
  CHECK(lat.rank() == 8);
  const auto g = lat.basis_gram();
  for (std::size_t j = 0; j < 8; ++j) {
    CHECK(g(j, j).is_real());
    CHECK(mpz_even_p(g(j, j).a().get_mpz_t()));
    for (std::size_t k = 0; k < 8; ++k) CHECK(divides(G(1, 1), g(j, k)));
  }
}

TEST_CASE("lattice construction errors") {
  Matrix<E> bad = Matrix<E>::identity(2);
  bad(0, 1) = E(1, 1);
  CHECK_THROWS_AS(HermitianLattice<E>(bad, Matrix<E>::identity(2)), LatticeError);
  CHECK_THROWS_AS(HermitianLattice<E>(Matrix<E>::identity(2), std::vector<Vec<E>>{{E(1)}}), DimensionError);
}

TEST_CASE("check_theta_duality examples") {
  CHECK(check_theta_duality(l_diag(), E::theta()));
  CHECK_FALSE(check_theta_duality(HermitianLattice<E>::ambient(eisenstein_ambient_gram()), E::theta()));
  CHECK(check_theta_duality(build_gaussian_lattice(), G(1, 1)));
  const auto r = theta_duality_report(HermitianLattice<E>::ambient(eisenstein_ambient_gram()), E::theta());
  CHECK_FALSE(r.inner_products_divisible);
  // theta * inverse of diag(-1) is integral, so only the first inclusion fails
  CHECK(r.scaled_inverse_integral);
}

TEST_CASE("theta-duality needs a nonsingular Gram") {
  const auto deg = HermitianLattice<E>(eisenstein_ambient_gram(), std::vector<Vec<E>>{});
  CHECK(deg.rank() == 0);
  Matrix<E> g(2, 2);
  g(0, 0) = E(-3);
  const HermitianLattice<E> singular(g, Matrix<E>::identity(2));
  CHECK_THROWS(check_theta_duality(singular, E::theta()));
}

TEST_CASE("sublattice_span and span_equals examples") {
  const auto& lat = l_diag();
  const auto roots = seed_y555_roots().vectors();
  CHECK(span_equals(sublattice_span(lat, std::span<const Vec<E>>(roots)), lat));
  const std::vector<Vec<E>> block{seed("c1"), seed("d1"), seed("e1"), seed("f1")};
  const auto s = sublattice_span(lat, std::span<const Vec<E>>(block));
  CHECK(s.rank() == 4);
  CHECK(check_theta_duality(s, E::theta()));
  const std::vector<Vec<E>> just_a{seed("a")};
  CHECK(sublattice_span(lat, std::span<const Vec<E>>(just_a)).rank() == 1);
  const std::vector<Vec<E>> fewer(roots.begin(), roots.begin() + 10);
  CHECK_FALSE(span_equals(sublattice_span(lat, std::span<const Vec<E>>(fewer)), lat));
}

TEST_CASE("underlying_Z_gram examples") {
  const IntMatrix z = underlying_z_gram(l_diag());
  REQUIRE(z.rows() == 28);
  for (std::size_t i = 0; i < 28; ++i) {
    CHECK(mpz_even_p(z(i, i).get_mpz_t()));
    for (std::size_t j = 0; j < 28; ++j) CHECK(z(i, j) == z(j, i));
  }
  CHECK(abs(determinant(z)) == 1);
  const auto sig = signature(z);
  CHECK(sig.positive == 2);
  CHECK(sig.negative == 26);
}

TEST_CASE("underlying_Z_gram rejects lattices without theta-duality") {
  CHECK_THROWS_AS(underlying_z_gram(HermitianLattice<E>::ambient(eisenstein_ambient_gram())), NonIntegralFormError);
}

TEST_CASE("Z-form of a root pair matches (2/3) Re") {
  // <x, w y> = conj(w) <x, y>, so the entry for (x, w y) uses conj(w)
  const auto g = l_diag().gram();
  const Vec<E> x = seed("a"), y = seed("b1");
  const HermitianLattice<E> two(g, std::vector<Vec<E>>{x, y});
  const auto bg = two.basis_gram();
  const auto z = underlying_z_gram(bg);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          const Vec<E> u = two.basis_vector(j), v = two.basis_vector(k);
          Vec<E> us = u, vt = v;
          for (auto& c : us) c = s ? E::omega() * c : c;
          for (auto& c : vt) c = t ? E::omega() * c : c;
          const E ip = inner(us, vt, g);
          CHECK(3 * z(2 * j + s, 2 * k + t) == ip.twice_real());
        }
}

TEST_CASE("signature examples") {
  // Z-form of the hyperbolic cell
  Matrix<E> cell(2, 2);
  cell(0, 1) = E::theta();
  cell(1, 0) = conj(E::theta());
  const auto sig = signature(underlying_z_gram(cell));
  CHECK(sig.positive == 2);
  CHECK(sig.negative == 2);
  IntMatrix one(1, 1);
  one(0, 0) = 1;
  CHECK(signature(one) == Signature{1, 0});
  IntMatrix hyp(2, 2);
  hyp(0, 1) = hyp(1, 0) = 1;
  CHECK(signature(hyp) == Signature{1, 1});
  IntMatrix zero(2, 2);
  CHECK_THROWS_AS(signature(zero), DegenerateFormError);
}

TEST_CASE("coordinates round trip") {
  const auto& lat = l_diag();
  const auto x = seed("d3");
  const auto c = lat.coordinates(x);
  REQUIRE(c.has_value());
  Vec<E> back(14, E(0));
  for (std::size_t j = 0; j < lat.rank(); ++j)
    for (std::size_t k = 0; k < 14; ++k) back[k] += (*c)[j] * lat.basis()(j, k);
  CHECK(back == x);
}
