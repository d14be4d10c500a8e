// JSON serialization of scalars, matrices, lattices, graphs and root
// configurations, plus SHA-256 file hashes.
#pragma once

#include "hermlat/diagrams.hpp"
#include "hermlat/lattice.hpp"
#include "hermlat/root_search.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>

namespace hermlat {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kConfigFormatVersion = 1;

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// Scalar as the pair [a, b].
template <QuadraticRing R>
Json scalar_to_json(const R& x) {
  return Json::array({integer_to_json(x.a()), integer_to_json(x.b())});
}

template <QuadraticRing R>
R scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("scalar must be a pair [a, b]");
  return R(integer_from_json(j[0]), integer_from_json(j[1]));
}

template <QuadraticRing R>
Json vector_to_json(const Vec<R>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <QuadraticRing R>
Vec<R> vector_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("vector must be an array of scalars");
  Vec<R> v;
  for (const auto& x : j) v.push_back(scalar_from_json<R>(x));
  return v;
}

template <QuadraticRing R>
Json matrix_to_json(const Matrix<R>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

template <QuadraticRing R>
Matrix<R> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a nonempty array of rows");
  std::vector<Vec<R>> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json<R>(r));
    if (rows.back().size() != rows.front().size()) throw FormatError("matrix rows differ in length");
  }
  return Matrix<R>::from_rows(rows);
}

std::string ring_tag_string(char tag);

template <QuadraticRing R>
void expect_ring(const Json& j) {
  if (!j.contains("ring") || j.at("ring") != ring_tag_string(R::kTag))
    throw FormatError(std::string("expected ring tag \"") + R::kTag + "\"");
}

/// Ring tag of a lattice or configuration document ('E' or 'G').
char ring_of(const Json& j);

/// {id, ring, ambient_gram, basis}
template <QuadraticRing R>
Json lattice_to_json(const HermitianLattice<R>& lat, const std::string& id) {
  Json out;
  out["id"] = id;
  out["ring"] = ring_tag_string(R::kTag);
  out["ambient_gram"] = matrix_to_json(lat.gram());
  out["basis"] = matrix_to_json(lat.basis());
  return out;
}

/// Reads a lattice document. The basis is re-normalized, so a file whose
/// basis is not in normal form still yields the lattice it spans.
template <QuadraticRing R>
HermitianLattice<R> lattice_from_json(const Json& j) {
  expect_ring<R>(j);
  const Matrix<R> gram = matrix_from_json<R>(j.at("ambient_gram"));
  const Matrix<R> basis = matrix_from_json<R>(j.at("basis"));
  if (basis.cols() != gram.rows()) throw FormatError("lattice basis does not match the ambient dimension");
  return HermitianLattice<R>(gram, basis);
}

Json graph_to_json(const DiagramGraph& g);
DiagramGraph graph_from_json(const Json& j);

/// {format_version, lattice_id, diagram_id, ring, roots: {label: vector}, [seed_map]}
template <QuadraticRing R>
Json configuration_to_json(const RootConfiguration<R>& c, const std::map<std::string, std::string>& seed_map = {}) {
  Json out;
  out["format_version"] = kConfigFormatVersion;
  out["lattice_id"] = c.lattice_id();
  out["diagram_id"] = c.diagram_id();
  out["ring"] = ring_tag_string(R::kTag);
  out["node_order"] = c.labels();
  Json roots = Json::object();
  for (const auto& l : c.labels()) roots[l] = vector_to_json(c.root(l));
  out["roots"] = roots;
  if (!seed_map.empty()) out["seed_map"] = seed_map;
  return out;
}

template <QuadraticRing R>
RootConfiguration<R> configuration_from_json(const Json& j) {
  expect_ring<R>(j);
  if (j.value("format_version", 0) != kConfigFormatVersion) throw FormatError("unsupported configuration format version");
  RootConfiguration<R> c(j.at("lattice_id").get<std::string>(), j.at("diagram_id").get<std::string>());
  const Json& roots = j.at("roots");
  std::vector<std::string> order;
  if (j.contains("node_order")) {
    order = j.at("node_order").get<std::vector<std::string>>();
  } else {
    for (const auto& [k, v] : roots.items()) order.push_back(k);
  }
  for (const auto& l : order) {
    if (!roots.contains(l)) throw FormatError("configuration has no root for node " + l);
    c.set(l, vector_from_json<R>(roots.at(l)));
  }
  if (roots.size() != order.size()) throw FormatError("configuration node_order does not list every root");
  return c;
}

/// Pairwise inner products of a configuration, for independent re-checking.
template <QuadraticRing R>
Json certificate_to_json(const RootConfiguration<R>& c, const Matrix<R>& gram, const std::string& config_sha256) {
  Json out;
  out["format_version"] = kConfigFormatVersion;
  out["lattice_id"] = c.lattice_id();
  out["diagram_id"] = c.diagram_id();
  out["ring"] = ring_tag_string(R::kTag);
  out["configuration_sha256"] = config_sha256;
  Json pairs = Json::array();
  const auto& labels = c.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t k = i; k < labels.size(); ++k) {
      Json e;
      e["u"] = labels[i];
      e["v"] = labels[k];
      e["inner"] = scalar_to_json(inner(c.root(labels[i]), c.root(labels[k]), gram));
      pairs.push_back(std::move(e));
    }
  out["inner_products"] = pairs;
  return out;
}

/// Canonical text form: two-space indentation and a trailing newline.
std::string dump_canonical(const Json& j);

Json read_json_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& text);

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& p);

}  // namespace hermlat
