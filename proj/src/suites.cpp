#include "hermlat/suites.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <sstream>
#include <random>

namespace hermlat {

using E = EisensteinInt;
using G = GaussianInt;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    default:
      return "skip";
  }
}

namespace {

CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::kPass;
  if (s == "fail") return CheckStatus::kFail;
  if (s == "skip") return CheckStatus::kSkip;
  throw FormatError("unknown check status " + s);
}

}  // namespace

bool VerificationReport::pass() const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kSkip) continue;
    if (c.status == CheckStatus::kFail) return false;
    any = true;
  }
  return any;
}

void VerificationReport::canonicalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& x, const Check& y) { return x.id < y.id; });
}

Json VerificationReport::to_json() const {
  Json out;
  out["suite"] = suite;
  out["toolkit_version"] = toolkit_version;
  out["input_hashes"] = input_hashes;
  Json list = Json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : checks) {
    Json e;
    e["id"] = c.id;
    e["description"] = c.description;
    e["status"] = to_string(c.status);
    e["witness"] = c.witness;
    list.push_back(std::move(e));
    ++counts[static_cast<int>(c.status)];
  }
  out["checks"] = list;
  out["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skip", counts[2]}};
  out["status"] = pass() ? "pass" : "fail";
  return out;
}

VerificationReport VerificationReport::from_json(const Json& j) {
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.toolkit_version = j.at("toolkit_version").get<std::string>();
  r.input_hashes = j.at("input_hashes").get<std::map<std::string, std::string>>();
  for (const auto& e : j.at("checks")) {
    Check c;
    c.id = e.at("id").get<std::string>();
    c.description = e.at("description").get<std::string>();
    c.status = status_from_string(e.at("status").get<std::string>());
    c.witness = e.at("witness");
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::filesystem::path default_data_dir() { return HERMLAT_DATA_DIR; }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lattice", "y555", "spider", "extend26", "gaussian", "coxeter"};
  return names;
}

std::filesystem::path certificate_path(const std::filesystem::path& config) {
  auto p = config;
  return p.replace_extension(".cert.json");
}

// ---------------------------------------------------------------------------

namespace {

const char* const kLatticeDiag = "L_diag";
const char* const kLatticeGauss = "L_gauss";
const char* const kSpiderWord = "a b1 c1 a b2 c2 a b3 c3";

std::filesystem::path lattice_file(const std::string& id) { return std::filesystem::path("lattices") / (id + ".json"); }

class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, const SuiteOptions& options) : options_(options) {
    report_.suite = std::move(suite);
    report_.toolkit_version = HERMLAT_VERSION;
  }

  const SuiteOptions& options() const { return options_; }

  void check(const std::string& id, const std::string& description, bool ok, Json witness = Json::object()) {
    report_.checks.push_back({report_.suite + "." + id, description, ok ? CheckStatus::kPass : CheckStatus::kFail,
                              std::move(witness)});
  }

  /// Reads a data file and records its hash.
  std::string read_text(const std::filesystem::path& rel) {
    const auto full = options_.data_dir / rel;
    std::ifstream in(full, std::ios::binary);
    if (!in) throw FormatError("missing input file " + full.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    report_.input_hashes[rel.generic_string()] = sha256_hex(buf.str());
    return buf.str();
  }

  Json read_json(const std::filesystem::path& rel) {
    const std::string text = read_text(rel);
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw FormatError("malformed JSON in " + rel.generic_string() + ": " + e.what());
    }
  }

  template <QuadraticRing R>
  HermitianLattice<R> load_lattice(const std::string& id) {
    return lattice_from_json<R>(read_json(lattice_file(id)));
  }

  DiagramGraph load_graph(const std::string& id) {
    return graph_from_json(read_json(std::filesystem::path("diagrams") / (id + ".json")));
  }

  VerificationReport finish() {
    report_.canonicalize();
    return std::move(report_);
  }

 private:
  const SuiteOptions& options_;
  VerificationReport report_;
};

template <QuadraticRing R>
Json scalar_json(const R& x) {
  return scalar_to_json(x);
}

template <QuadraticRing R>
HermitianLattice<R> span_of(const Matrix<R>& gram, const std::vector<Vec<R>>& vs) {
  return HermitianLattice<R>(gram, std::span<const Vec<R>>(vs));
}

bool same_graph(const DiagramGraph& x, const DiagramGraph& y) {
  return x.id() == y.id() && x.labels() == y.labels() && x.edges() == y.edges();
}

template <QuadraticRing R>
Json contract_json(const ReflectionContract& c) {
  return {{"integral", c.integral},
          {"order", c.has_reflection_order ? R::kReflectionOrder : 0},
          {"isometry", c.isometry},
          {"scales_root", c.scales_root},
          {"rank_one", c.rank_one}};
}

// inner products inside a configuration file against the certificate
template <QuadraticRing R>
void check_certificate(SuiteBuilder& b, const std::string& config_text, const Json& cert,
                       const RootConfiguration<R>& config, const Matrix<R>& gram) {
  bool hash_ok = cert.value("configuration_sha256", "") == sha256_hex(config_text);
  std::size_t mismatches = 0, entries = 0;
  for (const auto& e : cert.at("inner_products")) {
    ++entries;
    const auto u = e.at("u").get<std::string>(), v = e.at("v").get<std::string>();
    if (!config.contains(u) || !config.contains(v) ||
        !(inner(config.root(u), config.root(v), gram) == scalar_from_json<R>(e.at("inner"))))
      ++mismatches;
  }
  const std::size_t n = config.size();
  const bool ok = hash_ok && mismatches == 0 && entries == n * (n + 1) / 2;
  b.check("certificate", "certificate hash and all recorded inner products match the configuration", ok,
          {{"hash_matches", hash_ok}, {"entries", entries}, {"mismatches", mismatches}});
}

template <QuadraticRing R>
Json assignment_witness(const AssignmentReport& rep) {
  Json failures = Json::array();
  for (const auto& f : rep.failures()) failures.push_back(f.u + "-" + f.v);
  return {{"matched", rep.matched()}, {"total", rep.pairs.size()}, {"failures", failures}};
}

// ---------------------------------------------------------------------------

void lattice_suite(SuiteBuilder& b) {
  const auto lat = b.load_lattice<E>(kLatticeDiag);
  const auto seeds = seed_y555_roots();
  const E th = E::theta();

  b.check("L_diag.gram_hermitian", "ambient Gram matrix is Hermitian", is_hermitian(lat.gram()));
  b.check("L_diag.ambient_form", "ambient Gram is diag(-1 x12) plus the hyperbolic cell",
          lat.gram() == eisenstein_ambient_gram());
  b.check("L_diag.rank", "lattice has rank 14", lat.rank() == 14, {{"rank", lat.rank()}});
  const auto seed_span = span_of(lat.gram(), seeds.vectors());
  b.check("L_diag.spanned_by_seed_roots", "the 16 seed roots span exactly the lattice",
          span_equals(seed_span, lat), {{"seed_span_rank", seed_span.rank()}});

  const auto td = theta_duality_report(lat, th);
  b.check("L_diag.theta_dual.inner_products_divisible", "all basis inner products divisible by theta (L in theta L*)",
          td.inner_products_divisible);
  b.check("L_diag.theta_dual.scaled_inverse_integral", "theta times the inverse Gram is integral (theta L* in L)",
          td.scaled_inverse_integral);

  for (int i = 1; i <= 3; ++i) {
    const std::string s = std::to_string(i);
    const auto block =
        span_of(lat.gram(), {seeds.root("c" + s), seeds.root("d" + s), seeds.root("e" + s), seeds.root("f" + s)});
    b.check("L_diag.e8_block_" + s, "span of c" + s + "..f" + s + " has rank 4 and satisfies S = theta S*",
            block.rank() == 4 && check_theta_duality(block, th), {{"rank", block.rank()}});
  }
  Vec<E> e1(lat.ambient_dim(), E(0));
  e1[0] = E(1);
  b.check("L_diag.standard_vector_excluded", "ambient e_1 (norm -1) is not in the lattice", !lat.contains(e1));

  try {
    const IntMatrix z = underlying_z_gram(lat);
    bool even = true;
    for (std::size_t i = 0; i < z.rows(); ++i) even = even && mpz_even_p(z(i, i).get_mpz_t());
    b.check("L_diag.zform.even", "underlying Z-form (kappa = 2/3) is 28x28 and even", even && z.rows() == 28,
            {{"size", z.rows()}});
    const Signature sig = signature(z);
    b.check("L_diag.zform.signature", "underlying Z-form has signature (2,26)", sig.positive == 2 && sig.negative == 26,
            {{"positive", sig.positive}, {"negative", sig.negative}});
    const Integer det = determinant(z);
    b.check("L_diag.zform.unimodular", "underlying Z-form has |det| = 1", abs(det) == 1,
            {{"determinant", integer_to_json(det)}});
  } catch (const NonIntegralFormError& e) {
    b.check("L_diag.zform.even", "underlying Z-form (kappa = 2/3) is 28x28 and even", false, {{"error", e.what()}});
    b.check("L_diag.zform.signature", "underlying Z-form has signature (2,26)", false, {{"error", e.what()}});
    b.check("L_diag.zform.unimodular", "underlying Z-form has |det| = 1", false, {{"error", e.what()}});
  }

  {
    const auto block = span_of(lat.gram(), {seeds.root("c1"), seeds.root("d1"), seeds.root("e1"), seeds.root("f1")});
    const auto vs = enumerate_short_vectors(block, Integer(3));
    const auto roots = static_cast<std::size_t>(
        std::count_if(vs.begin(), vs.end(), [&](const Vec<E>& v) { return block.inner(v, v) == E(-3); }));
    b.check("L_diag.e8_short_vectors", "the E8 block has exactly 240 vectors of norm -3", roots == 240,
            {{"norm_minus_3", roots}, {"total_with_zero", vs.size()}});
  }

  {
    std::mt19937_64 rng(b.options().seed);
    std::uniform_int_distribution<long> coeff(-2, 2);
    const auto roots = seeds.vectors();
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      Vec<E> v(lat.ambient_dim(), E(0));
      for (const auto& r : roots) {
        const E c(coeff(rng), coeff(rng));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * r[k];
      }
      Vec<E> w = v;
      w[0] += E(1);
      ok = lat.contains(v) && !lat.contains(w);
    }
    b.check("L_diag.random_membership", "random combinations of seed roots lie in the lattice, shifts by e_1 do not",
            ok, {{"seed", b.options().seed}, {"trials", 50}});
  }

  const auto glat = b.load_lattice<G>(kLatticeGauss);
  const auto gseeds = seed_y333_gaussian_roots();
  b.check("L_gauss.ambient_form", "Gaussian ambient Gram is diag(-1 x6) plus the (1+i) cell",
          glat.gram() == gaussian_ambient_gram());
  b.check("L_gauss.rank", "Gaussian lattice has rank 8", glat.rank() == 8, {{"rank", glat.rank()}});
  b.check("L_gauss.spanned_by_seed_roots", "the 10 Gaussian seed roots span exactly the lattice",
          span_equals(span_of(glat.gram(), gseeds.vectors()), glat));
  const auto gtd = theta_duality_report(glat, G::prime());
  b.check("L_gauss.prime_dual.inner_products_divisible", "all basis inner products divisible by 1+i",
          gtd.inner_products_divisible);
  b.check("L_gauss.prime_dual.scaled_inverse_integral", "(1+i) times the inverse Gram is integral",
          gtd.scaled_inverse_integral);
  const auto gg = glat.basis_gram();
  bool even_norms = true;
  for (std::size_t i = 0; i < gg.rows(); ++i)
    even_norms = even_norms && gg(i, i).is_real() && mpz_even_p(gg(i, i).a().get_mpz_t());
  b.check("L_gauss.even_norms", "basis norms are even integers", even_norms);
}

void y555_suite(SuiteBuilder& b) {
  const auto lat = b.load_lattice<E>(kLatticeDiag);
  const auto graph = b.load_graph("Y555");
  const auto seeds = seed_y555_roots();
  b.check("diagram", "diagram file is the Y555 graph", same_graph(graph, y_diagram(5, 5, 5)));
  const auto gram = lat.basis_gram();
  for (const auto& l : seeds.labels()) {
    const E n = lat.inner(seeds.root(l), seeds.root(l));
    b.check("norm." + l, "root " + l + " has norm -3", n == E(-3), {{"norm", scalar_json(n)}});
    auto coords = lat.coordinates(seeds.root(l));
    const auto c = coords ? check_reflection_contract(*coords, gram) : ReflectionContract{};
    b.check("triflection." + l, "triflection in " + l + ": integral, order 3, isometry, r -> w r, rank(M - I) = 1",
            c.ok(), contract_json<E>(c));
  }
  const auto refl = seeds.reflections(lat);
  const auto rep = verify_assignment(graph, refl);
  bool criterion = true;
  for (const auto& pc : rep.pairs) {
    const E ip = lat.inner(seeds.root(pc.u), seeds.root(pc.v));
    const bool braid = pc.expected == Relation::kBraid;
    b.check("pair." + pc.u + "." + pc.v,
            pc.u + " and " + pc.v + (braid ? " braid and do not commute" : " commute and do not braid"), pc.ok(),
            {{"expected", braid ? "braid" : "commute"},
             {"braids", pc.braids},
             {"commutes", pc.commutes},
             {"inner", scalar_json(ip)}});
    criterion = criterion && (ip.is_zero() == pc.commutes) && ((ip.norm() == 3) == pc.braids);
  }
  b.check("inner_product_criterion", "inner = 0 iff commute and |inner|^2 = 3 iff braid, on all seed pairs",
          criterion);

  std::mt19937_64 rng(b.options().seed);
  std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
  bool invariant = true;
  Json tried = Json::array();
  for (int k = 0; k < 5; ++k) {
    const auto& l = seeds.labels()[pick(rng)];
    tried.push_back(l);
    const auto coords = *lat.coordinates(seeds.root(l));
    for (const E& u : E::units()) invariant = invariant && unit_rescaling_invariance(coords, u, E::omega(), gram);
  }
  b.check("unit_rescaling", "triflections are unchanged when a root is scaled by any of the 6 units", invariant,
          {{"seed", b.options().seed}, {"roots", tried}});
}

void spider_suite(SuiteBuilder& b) {
  const auto lat = b.load_lattice<E>(kLatticeDiag);
  const auto seeds = seed_y555_roots();
  const auto refl = seeds.reflections(lat);
  const auto gram = lat.basis_gram();
  const auto s = word_to_matrix(parse_word(kSpiderWord), refl, gram);
  const auto order = element_order(s, b.options().order_cap);
  Json w = {{"word", kSpiderWord}, {"cap", b.options().order_cap}};
  w["order"] = order ? Json(*order) : Json("exceeds_cap");
  b.check("order", "the spider word a b1 c1 a b2 c2 a b3 c3 has order 20", order && *order == 20, w);
  const auto inv_order = element_order(isometry_inverse(s, gram), b.options().order_cap);
  b.check("inverse_order", "the inverse of the spider word has the same order", inv_order == order);
  b.check("isometry", "the spider word preserves the lattice form", preserves_form(s, gram));
}

struct LoadedConfig {
  std::string text;
  Json json;
  Json certificate;
};

LoadedConfig load_config(SuiteBuilder& b, const std::string& file, bool search,
                         SearchArtifacts (*searcher)()) {
  LoadedConfig out;
  if (search) {
    auto art = searcher();
    out.text = art.configuration_text;
    out.certificate = Json::parse(art.certificate_text);
  } else {
    const std::filesystem::path rel = std::filesystem::path("configs") / file;
    out.text = b.read_text(rel);
    out.certificate = b.read_json(certificate_path(rel));
  }
  out.json = Json::parse(out.text);
  return out;
}

void extend26_suite(SuiteBuilder& b) {
  const auto lat = b.load_lattice<E>(kLatticeDiag);
  const auto graph = b.load_graph("P2F3");
  b.check("diagram", "diagram file is the incidence graph of P2(F3)", same_graph(graph, projective_plane_incidence(3)));
  const auto loaded = load_config(b, "extend26.json", b.options().search, &search_extend26);
  const auto config = configuration_from_json<E>(loaded.json);
  check_certificate(b, loaded.text, loaded.certificate, config, lat.gram());

  b.check("root_count", "26 roots, one per node of the incidence graph",
          config.size() == 26 && config.labels() == graph.labels(), {{"roots", config.size()}});
  const auto cc = check_configuration(config, graph, lat);
  b.check("roots_valid", "every root has norm -3 and lies in the lattice; inner products are 0 or unit * theta",
          cc.ok(), {{"problems", cc.problems}});

  bool normalized = true;
  std::size_t incident = 0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.kind(i) != NodeKind::kPoint) continue;
    for (std::size_t j = 0; j < graph.size(); ++j) {
      if (graph.kind(j) != NodeKind::kLine) continue;
      const E ip = lat.inner(config.root(graph.label(i)), config.root(graph.label(j)));
      if (graph.adjacent(i, j)) {
        ++incident;
        normalized = normalized && ip == E::theta();
      } else {
        normalized = normalized && ip.is_zero();
      }
    }
  }
  b.check("normalized_incidence", "<p, l> = theta for every incident point-line pair and 0 otherwise",
          normalized && incident == 52, {{"incident_pairs", incident}});

  const auto rep = verify_assignment(graph, config.reflections(lat));
  b.check("relations", "all 325 triflection pairs braid or commute according to the incidence graph",
          rep.pass() && rep.pairs.size() == 325, assignment_witness<E>(rep));

  const auto seeds = seed_y555_roots();
  bool preserved = loaded.json.contains("seed_map");
  Json units = Json::object();
  if (preserved) {
    const auto seed_map = loaded.json.at("seed_map").get<std::map<std::string, std::string>>();
    preserved = seed_map.size() == 16;
    for (const auto& [seed, node] : seed_map) {
      if (!seeds.contains(seed) || !config.contains(node)) {
        preserved = false;
        continue;
      }
      std::optional<E> unit;
      for (const E& u : E::units())
        if (scale(u, seeds.root(seed)) == config.root(node)) unit = u;
      preserved = preserved && unit.has_value();
      if (unit) units[seed] = scalar_json(*unit);
    }
  }
  b.check("seeds_preserved", "the 16 embedded nodes carry the seed roots up to units (same triflections)", preserved,
          {{"units", units}});

  std::vector<Vec<E>> points, lines;
  for (std::size_t i = 0; i < graph.size(); ++i)
    (graph.kind(i) == NodeKind::kPoint ? points : lines).push_back(config.root(graph.label(i)));
  auto gram_is_minus3 = [&](const std::vector<Vec<E>>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (!(lat.inner(vs[i], vs[j]) == E(i == j ? -3 : 0))) return false;
    return true;
  };
  b.check("point_roots_orthogonal", "the 13 point roots have Gram matrix -3 I", gram_is_minus3(points));
  b.check("line_roots_orthogonal", "the 13 line roots have Gram matrix -3 I", gram_is_minus3(lines));

  for (const auto& [name, vs] : {std::pair{"P", &points}, std::pair{"L", &lines}}) {
    const auto fp = common_fixed_point(*vs, lat.gram());
    Json w = {{"kernel_dimension", fp.kernel_basis.size()}};
    bool ok = fp.one_dimensional() && fp.representative_norm.is_real() && sgn(fp.representative_norm.a()) > 0;
    if (fp.representative) {
      w["representative"] = vector_to_json(*fp.representative);
      w["norm"] = scalar_json(fp.representative_norm);
    }
    b.check(std::string("fixed_point.") + name,
            std::string("the ") + (name[0] == 'P' ? "point" : "line") +
                " mirrors meet in a single positive-norm point",
            ok, w);
  }
  const auto autos = count_graph_automorphisms(graph);
  b.check("graph_automorphisms", "the incidence graph has 11232 automorphisms (dualities included)", autos == 11232,
          {{"count", autos}});
}

void gaussian_suite(SuiteBuilder& b) {
  const auto lat = b.load_lattice<G>(kLatticeGauss);
  const auto graph = b.load_graph("P2F2");
  b.check("diagram", "diagram file is the incidence graph of P2(F2)", same_graph(graph, projective_plane_incidence(2)));
  const auto loaded = load_config(b, "gaussian14.json", b.options().search, &search_gaussian);
  const auto config = configuration_from_json<G>(loaded.json);
  check_certificate(b, loaded.text, loaded.certificate, config, lat.gram());

  b.check("root_count", "14 roots, one per node of the incidence graph",
          config.size() == 14 && config.labels() == graph.labels(), {{"roots", config.size()}});
  const auto cc = check_configuration(config, graph, lat);
  b.check("roots_valid", "every root has norm -2 and lies in the lattice; inner products are 0 or unit * (1+i)",
          cc.ok(), {{"problems", cc.problems}});
  b.check("lattice_prime_dual", "the Gaussian lattice satisfies L = (1+i) L*", check_theta_duality(lat, G::prime()));

  const auto gram = lat.basis_gram();
  bool contracts = true;
  for (const auto& l : config.labels()) {
    auto coords = lat.coordinates(config.root(l));
    contracts = contracts && coords && check_reflection_contract(*coords, gram).ok();
  }
  b.check("tetraflections", "every tetraflection is integral, has order 4, is an isometry and scales its root by i",
          contracts);
  const auto refl = config.reflections(lat);
  const auto rep = verify_assignment(graph, refl);
  b.check("relations", "all 91 tetraflection pairs braid or commute according to the incidence graph",
          rep.pass() && rep.pairs.size() == 91, assignment_witness<G>(rep));

  const auto q = induced_quadratic_form(lat);
  std::vector<FpMatrix> reduced;
  bool involutions = true, preserve = true;
  for (const auto& [l, m] : refl) {
    reduced.push_back(reduce_lattice_isometry(m, lat));
    const auto& t = reduced.back();
    involutions = involutions && (t * t).is_identity() && !t.is_identity();
    for (std::uint32_t v = 0; v < (1u << q.dimension()); ++v) preserve = preserve && q(apply_f2(t, v)) == q(v);
  }
  b.check("reduced_involutions", "reductions mod 1+i of the tetraflections are involutions", involutions);
  b.check("reduced_preserve_form", "reductions mod 1+i preserve the induced quadratic form on all 256 vectors",
          preserve);

  bool anisotropic = true;
  for (const auto& l : config.labels()) {
    const auto c = *lat.coordinates(config.root(l));
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (reduce_mod(c[k], G::prime()).value() != 0) mask |= 1u << k;
    anisotropic = anisotropic && q(mask) == 1;
  }
  b.check("roots_anisotropic", "q([r]) = 1 for every configuration root", anisotropic);

  const auto ft = form_type(q);
  const auto reference = QuadraticFormF2::minus_type(4).zero_count();
  b.check("form_type", "the induced form is of minus type with 120 isotropic vectors (zero included)",
          ft.type == FormType::kMinus && ft.isotropic_count == 120 && reference == 120,
          {{"type", to_string(ft.type)}, {"isotropic", ft.isotropic_count}, {"reference_minus", reference}});

  const Integer order = schreier_sims_order(reduced);
  // |O_8^-(2)| as the full orthogonal group: 2 q^12 (q^4 + 1)(q^2 - 1)(q^4 - 1)(q^6 - 1), q = 2
  const Integer formula = Integer(2) * 4096 * 17 * 3 * 15 * 63;
  b.check("group_order", "Schreier-Sims order of the reduced group is 394813440 = 2 |O8-(2)|",
          order == 394813440 && formula == order,
          {{"order", integer_to_json(order)}, {"formula", integer_to_json(formula)}});
}

std::vector<std::vector<std::string>> coxeter_chains() {
  return {{"d1"}, {"d1", "e1"}, {"d1", "e1", "f1"}, {"c1", "d1", "e1", "f1"}, {"b1", "c1", "d1", "e1", "f1"}};
}

void coxeter_suite(SuiteBuilder& b) {
  const auto lat = b.load_lattice<E>(kLatticeDiag);
  const auto seeds = seed_y555_roots();
  const auto refl = seeds.reflections(lat);
  const std::uint64_t expected[] = {3, 24, 648, 155520};
  const auto chains = coxeter_chains();
  for (std::size_t n = 1; n <= chains.size(); ++n) {
    std::vector<Matrix<E>> gens;
    for (const auto& l : chains[n - 1]) gens.push_back(refl.at(l));
    const std::string id = "A" + std::to_string(n);
    if (n <= 4) {
      const auto r = bfs_group_closure(gens, b.options().bfs_cap);
      std::reverse(gens.begin(), gens.end());
      const auto r2 = bfs_group_closure(gens, b.options().bfs_cap);
      b.check(id + ".order", id + " chain of triflections generates a group of order " + std::to_string(expected[n - 1]),
              r.order && *r.order == expected[n - 1],
              {{"generators", chains[n - 1]}, {"order", r.order ? Json(*r.order) : Json("exceeds_cap")}});
      b.check(id + ".generator_order_independence", "reversing the generators gives the same order",
              r.order == r2.order);
    } else {
      const auto r = bfs_group_closure(gens, b.options().bfs_cap);
      b.check(id + ".exceeds_cap", id + " chain closure exceeds the cap", r.exceeds_cap(),
              {{"generators", chains[n - 1]}, {"cap", b.options().bfs_cap},
               {"order", r.order ? Json(*r.order) : Json("exceeds_cap")}});
    }
  }
  // A2 reduced mod theta on the span of d1, e1: Schreier-Sims against BFS
  RootConfiguration<E> a2("A2", "A2");
  a2.set("d1", seeds.root("d1"));
  a2.set("e1", seeds.root("e1"));
  const auto sub = span_of(lat.gram(), a2.vectors());
  std::vector<FpMatrix> f3;
  for (const auto& [l, m] : a2.reflections(sub)) f3.push_back(reduce_lattice_isometry(m, sub));
  const auto bfs = bfs_group_closure(f3);
  const Integer ss = schreier_sims_order(f3);
  b.check("A2.mod_theta_agreement", "Schreier-Sims and BFS agree on the A2 group reduced mod theta",
          bfs.order && Integer(static_cast<unsigned long>(*bfs.order)) == ss,
          {{"bfs", bfs.order ? Json(*bfs.order) : Json("exceeds_cap")}, {"schreier_sims", integer_to_json(ss)}});
}

}  // namespace

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  using Fn = void (*)(SuiteBuilder&);
  static const std::map<std::string, Fn> suites{{"lattice", &lattice_suite},   {"y555", &y555_suite},
                                                {"spider", &spider_suite},     {"extend26", &extend26_suite},
                                                {"gaussian", &gaussian_suite}, {"coxeter", &coxeter_suite}};
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown verification target: " + name);
  SuiteBuilder b(name, options);
  try {
    it->second(b);
  } catch (const std::exception& e) {
    b.check("aborted", "suite ran to completion", false, {{"error", e.what()}});
  }
  return b.finish();
}

VerificationReport run_all_suites(const SuiteOptions& options) {
  const auto& names = suite_names();
  std::vector<VerificationReport> parts(names.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(options.threads, names.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < names.size(); k = next++) parts[k] = run_suite(names[k], options);
  };
  std::vector<std::future<void>> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();

  VerificationReport all;
  all.suite = "all";
  all.toolkit_version = HERMLAT_VERSION;
  for (auto& p : parts) {
    all.input_hashes.insert(p.input_hashes.begin(), p.input_hashes.end());
    for (auto& c : p.checks) all.checks.push_back(std::move(c));
  }
  all.canonicalize();
  return all;
}

// ---------------------------------------------------------------------------

namespace {

template <QuadraticRing R>
SearchArtifacts artifacts(const ExtensionResult<R>& ext, const DiagramGraph& small, const DiagramGraph& big,
                          const Matrix<R>& gram) {
  SearchArtifacts out;
  out.configuration_text =
      dump_canonical(configuration_to_json(ext.configuration, embedding_labels(small, big, ext.embedding)));
  out.certificate_text = dump_canonical(certificate_to_json(ext.configuration, gram, sha256_hex(out.configuration_text)));
  return out;
}

}  // namespace

SearchArtifacts search_extend26() {
  const auto ext = extend_to_26_detailed(seed_y555_roots());
  return artifacts(ext, y_diagram(5, 5, 5), projective_plane_incidence(3), eisenstein_ambient_gram());
}

SearchArtifacts search_gaussian() {
  const auto ext = build_gaussian_configuration_detailed();
  return artifacts(ext, y_diagram(3, 3, 3), projective_plane_incidence(2), gaussian_ambient_gram());
}

void export_canonical_data(const std::filesystem::path& dir) {
  write_text_file(dir / lattice_file(kLatticeDiag), dump_canonical(lattice_to_json(build_l_diag(), kLatticeDiag)));
  write_text_file(dir / lattice_file(kLatticeGauss),
                  dump_canonical(lattice_to_json(build_gaussian_lattice(), kLatticeGauss)));
  for (const auto& g : {y_diagram(5, 5, 5), y_diagram(3, 3, 3), projective_plane_incidence(3),
                        projective_plane_incidence(2)})
    write_text_file(dir / "diagrams" / (g.id() + ".json"), dump_canonical(graph_to_json(g)));
  write_text_file(dir / "configs" / "y555_seeds.json", dump_canonical(configuration_to_json(seed_y555_roots())));
  write_text_file(dir / "configs" / "y333_seeds.json",
                  dump_canonical(configuration_to_json(seed_y333_gaussian_roots())));
}

namespace {

template <QuadraticRing R>
WordOrderResult word_order_in(const Json& config_json, const std::filesystem::path& data_dir, const std::string& word,
                              std::size_t cap) {
  const auto config = configuration_from_json<R>(config_json);
  const auto lat = lattice_from_json<R>(read_json_file(data_dir / lattice_file(config.lattice_id())));
  const auto refl = config.reflections(lat);
  const auto m = word_to_matrix(parse_word(word), refl, lat.basis_gram());
  return {element_order(m, cap), cap};
}

}  // namespace

WordOrderResult word_order(const std::string& word, const std::filesystem::path& config_path,
                           const std::filesystem::path& data_dir, std::size_t cap) {
  const Json j = read_json_file(config_path);
  if (ring_of(j) == 'E') return word_order_in<E>(j, data_dir, word, cap);
  return word_order_in<G>(j, data_dir, word, cap);
}

}  // namespace hermlat
