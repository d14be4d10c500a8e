#include "hermlat/root_search.hpp"

#include <doctest.h>

#include <set>

using namespace hermlat;
using E = EisensteinInt;
using G = GaussianInt;

namespace {

struct Setup {
  HermitianLattice<E> lat = build_l_diag();
  RootConfiguration<E> seeds = seed_y555_roots();
  DiagramGraph p3 = projective_plane_incidence(3);
  ExtensionResult<E> ext = extend_to_26_detailed(seeds);
};

const Setup& setup() {
  static const Setup s;
  return s;
}

std::vector<InnerConstraint<E>> constraints_for(const Vec<E>& x, const std::string& skip = {}) {
  const auto& s = setup();
  std::vector<InnerConstraint<E>> cs;
  for (const auto& l : s.seeds.labels())
    if (l != skip) cs.push_back({s.seeds.root(l), s.lat.inner(x, s.seeds.root(l))});
  return cs;
}

}  // namespace

TEST_CASE("seed_y555_roots examples") {
  const auto& s = setup();
  CHECK(s.seeds.size() == 16);
  CHECK(s.seeds.labels() == y_diagram(5, 5, 5).labels());
  for (const auto& l : s.seeds.labels()) CHECK(s.lat.inner(s.seeds.root(l), s.seeds.root(l)) == E(-3));
  CHECK(s.lat.inner(s.seeds.root("a"), s.seeds.root("b1")) == E::theta());
  CHECK(s.lat.inner(s.seeds.root("b1"), s.seeds.root("c1")) == E::theta());
  CHECK(s.lat.inner(s.seeds.root("c1"), s.seeds.root("e1")) == E(0));
  CHECK(check_configuration(s.seeds, y_diagram(5, 5, 5), s.lat).ok());
  CHECK_THROWS(s.seeds.root("zz"));
}

TEST_CASE("block permutations of the seed table") {
  const auto& s = setup();
  // b2..f2 and b3..f3 are b1..f1 with the first three 4-blocks permuted
  for (const char* stem : {"b", "c", "d", "e", "f"}) {
    const auto v1 = s.seeds.root(std::string(stem) + "1");
    const auto v2 = s.seeds.root(std::string(stem) + "2");
    const auto v3 = s.seeds.root(std::string(stem) + "3");
    std::multiset<std::string> b1, b2, b3;
    for (int blk = 0; blk < 3; ++blk) {
      std::string k1, k2, k3;
      for (int j = 0; j < 4; ++j) {
        k1 += to_string(v1[4 * blk + j]) + ",";
        k2 += to_string(v2[4 * blk + j]) + ",";
        k3 += to_string(v3[4 * blk + j]) + ",";
      }
      b1.insert(k1), b2.insert(k2), b3.insert(k3);
    }
    CHECK(b1 == b2);
    CHECK(b1 == b3);
    CHECK(v1[12] == v2[12]);
    CHECK(v1[13] == v3[13]);
  }
}

TEST_CASE("check_configuration detects bad data") {
  const auto& s = setup();
  auto bad = s.seeds;
  Vec<E> e1(14, E(0));
  e1[0] = E(1);
  bad.set("a", e1);
  const auto c = check_configuration(bad, y_diagram(5, 5, 5), s.lat);
  CHECK_FALSE(c.ok());
  CHECK_FALSE(c.all_roots_have_root_norm);
  CHECK_FALSE(c.problems.empty());
  auto missing = RootConfiguration<E>("L_diag", "Y555");
  missing.set("a", s.seeds.root("a"));
  CHECK_FALSE(check_configuration(missing, y_diagram(5, 5, 5), s.lat).ok());
}

TEST_CASE("solve_root_for_constraints examples") {
  const auto& s = setup();
  // the 15 seeds other than a span only rank 13, so a's own constraint is kept
  const auto a = s.seeds.root("a");
  const auto sol = solve_root_for_constraints(s.lat, constraints_for(a), E(-3));
  REQUIRE(sol.size() == 1);
  CHECK(sol[0] == a);
  const auto b1 = s.seeds.root("b1");
  const auto sol_b1 = solve_root_for_constraints(s.lat, constraints_for(b1, "b1"), E(-3));
  REQUIRE(sol_b1.size() == 1);
  CHECK(sol_b1[0] == b1);

  auto perturbed = constraints_for(a);
  perturbed[0].target = perturbed[0].target + E(1);
  CHECK(solve_root_for_constraints(s.lat, perturbed, E(-3)).empty());

  // the new nodes of the 26-node graph
  const auto& ext = s.ext;
  std::set<std::string> seeded;
  for (const auto& [seed, node] : embedding_labels(y_diagram(5, 5, 5), s.p3, ext.embedding)) seeded.insert(node);
  std::size_t fresh = 0;
  for (const auto& l : ext.configuration.labels()) {
    if (seeded.contains(l)) continue;
    ++fresh;
    const auto sol2 = solve_root_for_constraints(s.lat, constraints_for(ext.configuration.root(l)), E(-3));
    REQUIRE(sol2.size() == 1);
    CHECK(sol2[0] == ext.configuration.root(l));
  }
  CHECK(fresh == 10);
}

TEST_CASE("constraint solver needs spanning roots") {
  const auto& s = setup();
  std::vector<InnerConstraint<E>> few{{s.seeds.root("a"), E(0)}};
  CHECK_THROWS_AS(solve_root_for_constraints(s.lat, few, E(-3)), SearchError);
  CHECK_THROWS_AS(solve_root_for_constraints(s.lat, constraints_for(s.seeds.root("a"), "a"), E(-3)), SearchError);
}

TEST_CASE("extend_to_26 examples") {
  const auto& s = setup();
  const auto& c = s.ext.configuration;
  CHECK(c.size() == 26);
  CHECK(check_configuration(c, s.p3, s.lat).ok());
  CHECK(verify_assignment(s.p3, c.reflections(s.lat)).pass());
  // seeds unchanged in the raw extension
  const auto labels = embedding_labels(y_diagram(5, 5, 5), s.p3, s.ext.embedding);
  for (const auto& [seed, node] : labels) CHECK(s.ext.raw.root(node) == s.seeds.root(seed));
  // and equal up to units after normalization, with identical triflections
  const auto raw_refl = s.ext.raw.reflections(s.lat);
  const auto norm_refl = c.reflections(s.lat);
  for (const auto& l : c.labels()) CHECK(raw_refl.at(l) == norm_refl.at(l));
  // point roots pairwise orthogonal
  for (std::size_t i = 0; i < s.p3.size(); ++i)
    for (std::size_t j = i + 1; j < s.p3.size(); ++j)
      if (s.p3.kind(i) == s.p3.kind(j))
        CHECK(s.lat.inner(c.root(s.p3.label(i)), c.root(s.p3.label(j))).is_zero());
}

TEST_CASE("extend_to_26 is deterministic") {
  const auto& s = setup();
  CHECK(extend_to_26(s.seeds) == s.ext.configuration);
}

TEST_CASE("extension search exhaustion reports the partial assignment") {
  const auto& s = setup();
  // a seed of the wrong norm admits no extension
  auto broken = s.seeds;
  auto a = s.seeds.root("a");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += s.seeds.root("b1")[k];
  broken.set("a", a);
  try {
    (void)extend_configuration(broken, y_diagram(5, 5, 5), s.p3, *embed_subgraph(y_diagram(5, 5, 5), s.p3), s.lat,
                               "L_diag");
    FAIL("expected SearchExhausted");
  } catch (const SearchExhausted<E>& e) {
    CHECK(e.partial().size() >= 16);
  }
}

TEST_CASE("normalize_units examples") {
  const auto& s = setup();
  const auto& c = s.ext.configuration;
  for (std::size_t i = 0; i < s.p3.size(); ++i) {
    if (s.p3.kind(i) != NodeKind::kPoint) continue;
    for (std::size_t j : s.p3.neighbors(i))
      CHECK(s.lat.inner(c.root(s.p3.label(i)), c.root(s.p3.label(j))) == E::theta());
  }
  CHECK(normalize_units(c, s.p3, s.lat.gram()) == c);
  const auto once = normalize_units(s.ext.raw, s.p3, s.lat.gram());
  CHECK(normalize_units(once, s.p3, s.lat.gram()) == once);
  CHECK_THROWS_AS(normalize_units(s.seeds, y_diagram(5, 5, 5), s.lat.gram()), SearchError);
}

TEST_CASE("common_fixed_point examples") {
  const auto& s = setup();
  const auto& c = s.ext.configuration;
  std::vector<Vec<E>> points, lines;
  for (std::size_t i = 0; i < s.p3.size(); ++i)
    (s.p3.kind(i) == NodeKind::kPoint ? points : lines).push_back(c.root(s.p3.label(i)));
  for (const auto* vs : {&points, &lines}) {
    const auto fp = common_fixed_point(*vs, s.lat.gram());
    CHECK(fp.one_dimensional());
    REQUIRE(fp.representative.has_value());
    CHECK(fp.representative_norm.is_real());
    CHECK(sgn(fp.representative_norm.a()) > 0);
    for (const auto& r : *vs) CHECK(s.lat.inner(*fp.representative, r).is_zero());
  }
  const auto single = common_fixed_point(std::vector<Vec<E>>{points[0]}, s.lat.gram());
  CHECK(single.kernel_basis.size() == 13);
  CHECK_FALSE(single.one_dimensional());
}

TEST_CASE("enumerate_short_vectors examples") {
  const auto& s = setup();
  const HermitianLattice<E> e8(s.lat.gram(), std::vector<Vec<E>>{s.seeds.root("c1"), s.seeds.root("d1"),
                                                                  s.seeds.root("e1"), s.seeds.root("f1")});
  const auto vs = enumerate_short_vectors(e8, Integer(3));
  std::size_t roots = 0;
  for (const auto& v : vs) roots += e8.inner(v, v) == E(-3);
  CHECK(roots == 240);
  CHECK(vs.size() == 241);

  const auto zero = enumerate_short_vectors(e8, Integer(0));
  REQUIRE(zero.size() == 1);
  for (const auto& x : zero[0]) CHECK(x.is_zero());

  const HermitianLattice<E> line(s.lat.gram(), std::vector<Vec<E>>{s.seeds.root("a")});
  const auto six = enumerate_short_vectors(line, Integer(3));
  std::size_t multiples = 0;
  for (const auto& v : six)
    for (const auto& u : E::units()) multiples += v == scale(u, s.seeds.root("a"));
  CHECK(six.size() == 7);
  CHECK(multiples == 6);
}

TEST_CASE("enumerate_short_vectors errors") {
  const auto& s = setup();
  CHECK_THROWS_AS(enumerate_short_vectors(s.lat, Integer(3)), LatticeError);  // indefinite
  const HermitianLattice<E> e8(s.lat.gram(), std::vector<Vec<E>>{s.seeds.root("c1"), s.seeds.root("d1"),
                                                                  s.seeds.root("e1"), s.seeds.root("f1")});
  CHECK_THROWS_AS(enumerate_short_vectors(e8, Integer(12), 1000), EnumerationLimitError);
  CHECK_THROWS(enumerate_short_vectors(e8, Integer(-1)));
}

TEST_CASE("build_gaussian_configuration examples") {
  const auto lat = build_gaussian_lattice();
  const auto c = build_gaussian_configuration();
  const auto g = projective_plane_incidence(2);
  CHECK(c.size() == 14);
  for (const auto& l : c.labels()) CHECK(lat.inner(c.root(l), c.root(l)) == G(-2));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const G ip = lat.inner(c.root(g.label(i)), c.root(g.label(j)));
      CHECK((g.adjacent(i, j) ? is_unit_times_prime(ip) : ip.is_zero()));
    }
  CHECK(verify_assignment(g, c.reflections(lat)).pass());
  const auto seeds = seed_y333_gaussian_roots();
  CHECK(seeds.size() == 10);
  CHECK(check_configuration(seeds, y_diagram(3, 3, 3), lat).ok());
}
