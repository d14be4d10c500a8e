#include "hermlat/root_search.hpp"

#include <doctest.h>

#include <set>

using namespace hermlat;
using E = EisensteinInt;

TEST_CASE("y_diagram examples") {
  CHECK(y_diagram(5, 5, 5).size() == 16);
  CHECK(y_diagram(5, 5, 0).size() == 11);
  CHECK(y_diagram(0, 0, 0).size() == 1);
  const auto y = y_diagram(5, 5, 5);
  CHECK(y.edge_count() == 15);
  CHECK(y.label(0) == "a");
  CHECK(y.is_connected());
  CHECK(y.id() == "Y555");
  CHECK_THROWS_AS(y_diagram(30, 1, 1), DiagramError);
}

TEST_CASE("projective_plane_incidence examples") {
  const auto p3 = projective_plane_incidence(3);
  CHECK(p3.size() == 26);
  CHECK(p3.edge_count() == 52);
  for (std::size_t i = 0; i < p3.size(); ++i) CHECK(p3.degree(i) == 4);
  const auto p2 = projective_plane_incidence(2);
  CHECK(p2.size() == 14);
  for (std::size_t i = 0; i < p2.size(); ++i) CHECK(p2.degree(i) == 3);
  CHECK(p3.is_connected());
  CHECK(p3.is_bipartite());
  CHECK(p2.is_connected());
  CHECK(p2.is_bipartite());
  CHECK(p3.has_bipartition());
  CHECK_THROWS_AS(projective_plane_incidence(5), DiagramError);
}

TEST_CASE("projective coordinates") {
  const auto p3 = projective_plane_incidence(3);
  for (std::size_t i = 0; i < p3.size(); ++i) {
    const auto c = projective_coordinates(p3.label(i));
    CHECK(c.size() == 3);
  }
  CHECK_THROWS_AS(projective_coordinates("a"), DiagramError);
}

TEST_CASE("graph construction errors") {
  CHECK_THROWS_AS(DiagramGraph("g", {"x", "x"}, {}), DiagramError);
  CHECK_THROWS_AS(DiagramGraph("g", {"x", "y"}, {{"x", "x"}}), DiagramError);
  CHECK_THROWS_AS(DiagramGraph("g", {"x", "y"}, {{"x", "z"}}), DiagramError);
  CHECK_THROWS_AS(DiagramGraph("g", {"x", "y"}, {{"x", "y"}}, {NodeKind::kPoint, NodeKind::kPoint}), DiagramError);
  CHECK_THROWS_AS(DiagramGraph("g", {"x", "y"}, {}, {NodeKind::kPoint}), DiagramError);
}

TEST_CASE("verify_assignment examples") {
  const auto lat = build_l_diag();
  const auto seeds = seed_y555_roots();
  const auto refl = seeds.reflections(lat);
  const auto y = y_diagram(5, 5, 5);
  const auto rep = verify_assignment(y, refl);
  CHECK(rep.pass());
  CHECK(rep.pairs.size() == 120);
  CHECK(rep.matched() == 120);

  const auto c26 = extend_to_26(seeds);
  const auto rep26 = verify_assignment(projective_plane_incidence(3), c26.reflections(lat));
  CHECK(rep26.pass());
  CHECK(rep26.pairs.size() == 325);

  auto swapped = refl;
  std::swap(swapped.at("a"), swapped.at("c1"));
  const auto bad = verify_assignment(y, swapped);
  CHECK_FALSE(bad.pass());
  std::set<std::string> named;
  for (const auto& f : bad.failures()) named.insert(f.u + "-" + f.v);
  CHECK((named.contains("a-b2") || named.contains("b2-a")));
  CHECK_FALSE((named.contains("a-b1") || named.contains("b1-a")));
  CHECK_FALSE(named.empty());
}

TEST_CASE("verify_assignment needs every node") {
  std::map<std::string, Matrix<E>> partial{{"a", Matrix<E>::identity(2)}};
  CHECK_THROWS(verify_assignment(y_diagram(1, 0, 0), partial));
}

TEST_CASE("a pair that both braids and commutes fails") {
  // identical matrices commute and braid
  const DiagramGraph g("g", {"x", "y"}, {{"x", "y"}});
  std::map<std::string, Matrix<E>> same{{"x", Matrix<E>::identity(2)}, {"y", Matrix<E>::identity(2)}};
  CHECK_FALSE(verify_assignment(g, same).pass());
}

TEST_CASE("embed_subgraph examples") {
  CHECK(embed_subgraph(y_diagram(5, 5, 5), projective_plane_incidence(3)).has_value());
  CHECK(embed_subgraph(y_diagram(0, 0, 0), projective_plane_incidence(2)).has_value());
  CHECK_FALSE(embed_subgraph(y_diagram(5, 5, 5), projective_plane_incidence(2)).has_value());
  CHECK(embed_subgraph(y_diagram(3, 3, 3), projective_plane_incidence(2)).has_value());
  // a triangle is not an induced subgraph of a bipartite graph
  const DiagramGraph tri("K3", {"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  CHECK_FALSE(embed_subgraph(tri, projective_plane_incidence(3)).has_value());
}

TEST_CASE("embeddings are deterministic and induced") {
  const auto small = y_diagram(3, 3, 3), big = projective_plane_incidence(2);
  const auto e1 = embed_subgraph(small, big), e2 = embed_subgraph(small, big);
  CHECK(e1 == e2);
  const auto all = all_embeddings(small, big);
  REQUIRE_FALSE(all.empty());
  CHECK(all.front() == *e1);
  for (const auto& e : all)
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = 0; j < small.size(); ++j)
        if (i != j) CHECK(small.adjacent(i, j) == big.adjacent(e[i], e[j]));
  const auto labels = embedding_labels(small, big, *e1);
  CHECK(labels.size() == small.size());
}

TEST_CASE("count_graph_automorphisms examples") {
  CHECK(count_graph_automorphisms(projective_plane_incidence(3)) == 11232);
  const DiagramGraph k4("K4", {"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
  CHECK(count_graph_automorphisms(k4) == 24);
  CHECK(count_graph_automorphisms(projective_plane_incidence(2)) == 336);
  CHECK(count_graph_automorphisms(y_diagram(5, 5, 5)) == 6);
  std::vector<std::string> many;
  for (int i = 0; i < 31; ++i) many.push_back("n" + std::to_string(i));
  CHECK_THROWS_AS(count_graph_automorphisms(DiagramGraph("big", many, {})), DiagramError);
}
