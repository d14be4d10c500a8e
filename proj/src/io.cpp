#include "hermlat/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace hermlat {

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw FormatError("malformed integer string");
    return out;
  }
  throw FormatError("integer must be a JSON integer or decimal string");
}

std::string ring_tag_string(char tag) { return std::string(1, tag); }

char ring_of(const Json& j) {
  const std::string r = j.value("ring", "");
  if (r != "E" && r != "G") throw FormatError("document has no ring tag \"E\" or \"G\"");
  return r[0];
}

namespace {

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::kPoint:
      return "point";
    case NodeKind::kLine:
      return "line";
    default:
      return "plain";
  }
}

NodeKind kind_from_name(const std::string& s) {
  if (s == "point") return NodeKind::kPoint;
  if (s == "line") return NodeKind::kLine;
  if (s == "plain") return NodeKind::kPlain;
  throw FormatError("unknown node kind " + s);
}

}  // namespace

Json graph_to_json(const DiagramGraph& g) {
  Json out;
  out["id"] = g.id();
  out["nodes"] = g.labels();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  out["edges"] = edges;
  if (g.has_bipartition()) {
    Json kinds = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) kinds.push_back(kind_name(g.kind(i)));
    out["kinds"] = kinds;
  }
  return out;
}

DiagramGraph graph_from_json(const Json& j) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a label pair");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  std::vector<NodeKind> kinds;
  if (j.contains("kinds"))
    for (const auto& k : j.at("kinds")) kinds.push_back(kind_from_name(k.get<std::string>()));
  return DiagramGraph(j.at("id").get<std::string>(), j.at("nodes").get<std::vector<std::string>>(), edges,
                      std::move(kinds));
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw FormatError("cannot open " + p.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("malformed JSON in " + p.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw FormatError("cannot write " + p.string());
  out << text;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string sha256_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FormatError("cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

}  // namespace hermlat
