// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "properties.hpp"

using namespace hermlat;
using props::E;
using props::G;
using props::fixtures;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int n, const char* title, double limit_s, Result (*body)()) {
  const auto start = Clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs <= limit_s;
  const bool ok = r.pass && in_time;
  failures += !ok;
  std::printf("%s %2d %-28s %8.2fs (limit %gs)  %s%s\n", ok ? "PASS" : "FAIL", n, title, secs, limit_s,
              r.detail.c_str(), in_time ? "" : " [too slow]");
  std::fflush(stdout);
}

double search_secs = 0;

const ExtensionResult<E>& extension() {
  static const ExtensionResult<E> ext = [] {
    const auto start = Clock::now();
    auto e = extend_to_26_detailed(fixtures().seeds);
    search_secs = std::chrono::duration<double>(Clock::now() - start).count();
    return e;
  }();
  return ext;
}

Result seed_roots() {
  const auto& f = fixtures();
  std::size_t norms = 0;
  for (const auto& l : f.seeds.labels()) norms += f.l_diag.inner(f.seeds.root(l), f.seeds.root(l)) == E(-3);
  const auto rep = verify_assignment(y_diagram(5, 5, 5), f.seed_reflections);
  return {f.seeds.size() == 16 && norms == 16 && rep.pairs.size() == 120 && rep.pass(),
          "norms " + std::to_string(norms) + "/16, relations " + std::to_string(rep.matched()) + "/" +
              std::to_string(rep.pairs.size())};
}

Result reflection_contract() {
  const auto& f = fixtures();
  const auto gram = f.l_diag.basis_gram();
  std::size_t ok = 0, total = 0;
  for (const auto* c : {&f.seeds, &extension().configuration})
    for (const auto& l : c->labels()) {
      ++total;
      const auto coords = f.l_diag.coordinates(c->root(l));
      ok += coords && check_reflection_contract(*coords, gram).ok();
    }
  return {ok == total && total == 42, std::to_string(ok) + "/" + std::to_string(total) + " triflections"};
}

Result theta_duality() {
  const auto rep = theta_duality_report(fixtures().l_diag, E::theta());
  return {rep.inner_products_divisible && rep.scaled_inverse_integral,
          std::string("L in theta L*: ") + (rep.inner_products_divisible ? "yes" : "no") +
              ", theta L* in L: " + (rep.scaled_inverse_integral ? "yes" : "no")};
}

Result span() {
  const auto& f = fixtures();
  const HermitianLattice<E> spanned(f.l_diag.gram(), f.seeds.vectors());
  bool blocks = true;
  for (const char* i : {"1", "2", "3"}) {
    std::vector<Vec<E>> gens;
    for (const char* stem : {"c", "d", "e", "f"}) gens.push_back(f.seeds.root(std::string(stem) + i));
    const HermitianLattice<E> s(f.l_diag.gram(), gens);
    blocks = blocks && s.rank() == 4 && check_theta_duality(s, E::theta());
  }
  const bool equal = spanned == f.l_diag;
  return {equal && spanned.rank() == 14 && blocks,
          "rank " + std::to_string(spanned.rank()) + (equal ? ", equals L" : ", differs from L") +
              (blocks ? ", E8 blocks theta-modular" : ", E8 block check failed")};
}

Result z_form() {
  const auto z = underlying_z_gram(fixtures().l_diag);
  bool even = z.rows() == 28 && z.cols() == 28;
  for (std::size_t i = 0; even && i < z.rows(); ++i) {
    even = z(i, i) % 2 == 0;
    for (std::size_t j = 0; even && j < z.cols(); ++j) even = z(i, j) == z(j, i);
  }
  const auto sig = signature(z);
  const Integer det = determinant(z);
  return {even && sig == Signature{2, 26} && abs(det) == 1,
          std::string(even ? "even" : "not even") + ", signature (" + std::to_string(sig.positive) + "," +
              std::to_string(sig.negative) + "), det " + det.get_str()};
}

Result spider() {
  const auto& f = fixtures();
  const auto m = word_to_matrix(parse_word("a b1 c1 a b2 c2 a b3 c3"), f.seed_reflections, f.l_diag.basis_gram());
  const auto order = element_order(m, 100);
  return {order == 20u, order ? "order " + std::to_string(*order) : "exceeds cap 100"};
}

Result configuration26() {
  const auto& f = fixtures();
  const auto& c = extension().configuration;
  const auto g = projective_plane_incidence(3);
  std::size_t bad_inner = 0, points = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.kind(i) != NodeKind::kPoint) continue;
    ++points;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      const E ip = f.l_diag.inner(c.root(g.label(i)), c.root(g.label(j)));
      bad_inner += !(ip == (g.adjacent(i, j) ? E::theta() : E(0)));
    }
  }
  const auto rep = verify_assignment(g, c.reflections(f.l_diag));
  char search[64];
  std::snprintf(search, sizeof search, "search %.2fs, ", search_secs);
  return {search_secs < 60 && c.size() == 26 && points == 13 && bad_inner == 0 && rep.pairs.size() == 325 &&
              rep.pass(),
          search + std::to_string(c.size()) + " roots, " + std::to_string(bad_inner) + " bad point inner products, relations " +
              std::to_string(rep.matched()) + "/" + std::to_string(rep.pairs.size())};
}

Result fixed_points() {
  const auto& f = fixtures();
  const auto& c = extension().configuration;
  const auto g = projective_plane_incidence(3);
  std::vector<Vec<E>> pts, lines;
  for (std::size_t i = 0; i < g.size(); ++i)
    (g.kind(i) == NodeKind::kPoint ? pts : lines).push_back(c.root(g.label(i)));
  std::string detail;
  bool ok = true;
  for (const auto& [name, vs] : {std::pair{"P", &pts}, std::pair{"L", &lines}}) {
    const auto fp = common_fixed_point(*vs, f.l_diag.gram());
    const bool good = fp.one_dimensional() && fp.representative_norm.is_real() && sgn(fp.representative_norm.a()) > 0;
    ok = ok && good;
    detail += std::string(name) + ": kernel dim " + std::to_string(fp.kernel_basis.size()) +
              (fp.representative ? ", norm " + to_string(fp.representative_norm) : "") + "; ";
  }
  return {ok, detail};
}

Result coxeter() {
  const std::vector<std::vector<std::string>> chains{
      {"d1"}, {"d1", "e1"}, {"d1", "e1", "f1"}, {"c1", "d1", "e1", "f1"}, {"b1", "c1", "d1", "e1", "f1"}};
  const std::uint64_t expected[] = {3, 24, 648, 155520};
  bool ok = true;
  std::string detail;
  for (std::size_t k = 0; k < 4; ++k) {
    auto gens = props::chain_generators(chains[k]);
    const auto r = bfs_group_closure(gens);
    std::reverse(gens.begin(), gens.end());
    const auto r2 = bfs_group_closure(gens);
    ok = ok && r.order == expected[k] && r2.order == r.order;
    detail += "A" + std::to_string(k + 1) + "=" + (r.order ? std::to_string(*r.order) : "cap") + " ";
  }
  const auto a5 = bfs_group_closure(props::chain_generators(chains[4]), 2'000'000);
  ok = ok && a5.exceeds_cap();
  detail += std::string("A5 ") + (a5.exceeds_cap() ? "exceeds cap 2000000" : "finite");
  return {ok, detail};
}

Result gaussian() {
  const auto& f = fixtures();
  const auto& c = f.gauss_config;
  const auto g = projective_plane_incidence(2);
  bool roots_ok = c.size() == 14;
  for (std::size_t i = 0; i < g.size(); ++i) {
    roots_ok = roots_ok && f.l_gauss.inner(c.root(g.label(i)), c.root(g.label(i))) == G(-2);
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const G ip = f.l_gauss.inner(c.root(g.label(i)), c.root(g.label(j)));
      roots_ok = roots_ok && (g.adjacent(i, j) ? is_unit_times_prime(ip) : ip.is_zero());
    }
  }
  bool orders = true;
  for (const auto& [l, m] : f.gauss_reflections) orders = orders && element_order(m, 10) == 4u;
  const bool relations = verify_assignment(g, f.gauss_reflections).pass();

  const auto q = induced_quadratic_form(f.l_gauss);
  std::size_t zeros = 0;
  for (std::uint32_t x = 0; x < 256; ++x) zeros += q(x) == 0;
  const auto reference = QuadraticFormF2::minus_type(4);
  bool reduced_ok = true;
  std::vector<FpMatrix> gens;
  for (const auto& [l, m] : f.gauss_reflections) {
    const auto t = reduce_lattice_isometry(m, f.l_gauss);
    reduced_ok = reduced_ok && (t * t).is_identity() && !t.is_identity();
    for (std::uint32_t x = 0; x < 256; ++x) reduced_ok = reduced_ok && q(apply_f2(t, x)) == q(x);
    gens.push_back(t);
  }
  const auto type = form_type(q);
  const Integer order = schreier_sims_order(gens);
  const bool form_ok = type.type == FormType::kMinus && zeros == 120 && reference.zero_count() == zeros;
  return {roots_ok && orders && relations && reduced_ok && form_ok && order == 394813440,
          std::string(roots_ok ? "roots ok" : "roots bad") + ", tetraflections " +
              (orders && relations ? "ok" : "bad") + ", reductions " + (reduced_ok ? "ok" : "bad") + ", form " +
              to_string(type.type) + " with " + std::to_string(zeros) + " isotropic, order " + order.get_str()};
}

Result oracle() {
  const auto& f = fixtures();
  const HermitianLattice<E> e8(f.l_diag.gram(), std::vector<Vec<E>>{f.seeds.root("c1"), f.seeds.root("d1"),
                                                                     f.seeds.root("e1"), f.seeds.root("f1")});
  std::size_t roots = 0;
  for (const auto& v : enumerate_short_vectors(e8, Integer(3))) roots += e8.inner(v, v) == E(-3);
  const auto agree = props::oracle_agreement_rank2();
  return {roots == 240 && agree.ok(), std::to_string(roots) + " roots of norm -3, rank-2 agreement " +
                                          std::to_string(agree.trials - agree.failures) + "/" +
                                          std::to_string(agree.trials)};
}

Result properties() {
  std::size_t passed = 0, total = 0;
  std::string first;
  for (const auto& p : props::all_properties()) {
    const auto o = p.run();
    ++total;
    if (o.ok())
      ++passed;
    else if (first.empty())
      first = ", first failure: " + o.name + " (" + o.first_failure + ")";
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " properties" + first};
}

}  // namespace

int main() {
  (void)fixtures();
  (void)extension();
  criterion(1, "seed root validity", 1, seed_roots);
  criterion(2, "reflection contract", 1, reflection_contract);
  criterion(3, "theta duality", 1, theta_duality);
  criterion(4, "span", 5, span);
  criterion(5, "underlying Z-form", 10, z_form);
  criterion(6, "spider order", 1, spider);
  criterion(7, "26-root configuration", 5, configuration26);
  criterion(8, "fixed points", 5, fixed_points);
  criterion(9, "coxeter quotients", 120, coxeter);
  criterion(10, "gaussian configuration", 120, gaussian);
  criterion(11, "oracle equivalence", 30, oracle);
  criterion(12, "property suites", 60, properties);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
