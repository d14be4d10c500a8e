#include "hermlat/root_search.hpp"

#include <doctest.h>

using namespace hermlat;
using E = EisensteinInt;
using G = GaussianInt;

namespace {

struct Setup {
  HermitianLattice<E> lat = build_l_diag();
  RootConfiguration<E> seeds = seed_y555_roots();
  Matrix<E> gram = lat.basis_gram();
  std::map<std::string, Matrix<E>> refl = seeds.reflections(lat);
  Vec<E> coords(const std::string& l) const { return *lat.coordinates(seeds.root(l)); }
};

const Setup& setup() {
  static const Setup s;
  return s;
}

}  // namespace

TEST_CASE("complex_reflection in f1 is diag(w, 1, ..., 1) on ambient coordinates") {
  const auto g = eisenstein_ambient_gram();
  Vec<E> f1(14, E(0));
  f1[0] = conj(E::theta());
  CHECK(setup().seeds.root("f1") == f1);
  const auto m = complex_reflection(f1, E::omega(), g);
  auto expected = Matrix<E>::identity(14);
  expected(0, 0) = E::omega();
  CHECK(m == expected);
}

TEST_CASE("triflections send r to w r and fix r-perp") {
  const auto& s = setup();
  for (const auto& l : s.seeds.labels()) {
    const auto r = s.coords(l);
    const auto& m = s.refl.at(l);
    CHECK(m * r == scale(E::omega(), r));
    for (const auto& other : s.seeds.labels()) {
      const auto x = s.coords(other);
      if (inner(x, r, s.gram).is_zero()) CHECK(m * x == x);
    }
  }
}

TEST_CASE("reflection contract on all seeds") {
  const auto& s = setup();
  for (const auto& l : s.seeds.labels()) {
    const auto c = check_reflection_contract(s.coords(l), s.gram);
    CHECK(c.integral);
    CHECK(c.has_reflection_order);
    CHECK(c.isometry);
    CHECK(c.scales_root);
    CHECK(c.rank_one);
    CHECK(preserves_form(s.refl.at(l), s.gram));
  }
}

TEST_CASE("complex_reflection errors") {
  const auto g = eisenstein_ambient_gram();
  Vec<E> e1(14, E(0));
  e1[0] = E(1);
  CHECK_THROWS_AS(complex_reflection(e1, E::omega(), g), ReflectionError);  // norm -1
  CHECK_THROWS_AS(complex_reflection(setup().seeds.root("a"), E(2), g), ReflectionError);
  // norm -3 but inner products with e1 not divisible by theta
  Vec<E> v(14, E(0));
  v[0] = E(1);
  v[1] = E(1);
  v[2] = E(1);
  CHECK_THROWS_AS(complex_reflection(v, E::omega(), g), ReflectionError);
  const auto c = check_reflection_contract(v, g);
  CHECK_FALSE(c.ok());
}

TEST_CASE("tetraflections have order 4") {
  const auto lat = build_gaussian_lattice();
  const auto seeds = seed_y333_gaussian_roots();
  const auto gram = lat.basis_gram();
  for (const auto& l : seeds.labels()) {
    const auto r = *lat.coordinates(seeds.root(l));
    const auto m = reflection(r, gram);
    CHECK(element_order(m) == 4u);
    CHECK(m * r == scale(G::i(), r));
    CHECK(check_reflection_contract(r, gram).ok());
  }
}

TEST_CASE("unit_rescaling_invariance examples") {
  const auto& s = setup();
  CHECK(unit_rescaling_invariance(s.coords("a"), E(1), E::omega(), s.gram));
  CHECK(unit_rescaling_invariance(s.coords("a"), E::omega(), E::omega(), s.gram));
  CHECK(unit_rescaling_invariance(s.coords("d1"), -E::omega_bar(), E::omega(), s.gram));
}

TEST_CASE("parse_word") {
  CHECK(parse_word("").empty());
  const auto w = parse_word("a b1' c1");
  REQUIRE(w.size() == 3);
  CHECK(w[1].label == "b1");
  CHECK(w[1].inverse);
  CHECK_FALSE(w[0].inverse);
  CHECK(format_word(w) == "a b1' c1");
  CHECK_THROWS_AS(parse_word("a '"), ReflectionError);
}

TEST_CASE("word_to_matrix examples") {
  const auto& s = setup();
  CHECK(word_to_matrix(parse_word(""), s.refl, s.gram).is_identity());
  CHECK(word_to_matrix(parse_word("a a a"), s.refl, s.gram).is_identity());
  CHECK(word_to_matrix(parse_word("a a'"), s.refl, s.gram).is_identity());
  CHECK(word_to_matrix(parse_word("a b1"), s.refl, s.gram) == s.refl.at("a") * s.refl.at("b1"));
  const auto spider = word_to_matrix(parse_word("a b1 c1 a b2 c2 a b3 c3"), s.refl, s.gram);
  CHECK(element_order(spider, 100) == 20u);
  CHECK_THROWS_AS(word_to_matrix(parse_word("a zz"), s.refl, s.gram), UnknownLabelError);
}

TEST_CASE("element_order examples") {
  const auto& s = setup();
  CHECK(element_order(Matrix<E>::identity(14)) == 1u);
  for (const auto& [l, m] : s.refl) CHECK(element_order(m) == 3u);
  const auto spider = word_to_matrix(parse_word("a b1 c1 a b2 c2 a b3 c3"), s.refl, s.gram);
  CHECK_FALSE(element_order(spider, 19).has_value());
  CHECK(element_order(isometry_inverse(spider, s.gram), 100) == 20u);
}

TEST_CASE("projective order divides the order") {
  const auto& s = setup();
  const auto spider = word_to_matrix(parse_word("a b1 c1 a b2 c2 a b3 c3"), s.refl, s.gram);
  const auto p = projective_order(spider);
  REQUIRE(p.has_value());
  CHECK(20 % *p == 0);
  CHECK(projective_order(E::omega() * Matrix<E>::identity(3)) == 1u);
  CHECK(element_order(E::omega() * Matrix<E>::identity(3)) == 3u);
}

TEST_CASE("braids and commutes examples") {
  const auto& s = setup();
  CHECK(commutes(s.refl.at("a"), s.refl.at("a")));
  CHECK(braids(s.refl.at("a"), s.refl.at("b1")));
  CHECK_FALSE(commutes(s.refl.at("a"), s.refl.at("b1")));
  CHECK(commutes(s.refl.at("a"), s.refl.at("c1")));
  CHECK_FALSE(braids(s.refl.at("a"), s.refl.at("c1")));
}

TEST_CASE("isometry inverse") {
  const auto& s = setup();
  const auto m = word_to_matrix(parse_word("a c2 f3 b1"), s.refl, s.gram);
  CHECK((m * isometry_inverse(m, s.gram)).is_identity());
  CHECK(preserves_form(m, s.gram));
}
