// Diagram graphs: Y_pqr, incidence graphs of P^2(F_q), relation checks of
// matrix assignments, induced-subgraph embeddings and automorphism counts.
#pragma once

#include "hermlat/linalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hermlat {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NodeKind { kPlain, kPoint, kLine };

/// Simple labeled graph. Edges mean "braid", non-edges "commute".
class DiagramGraph {
 public:
  DiagramGraph(std::string id, std::vector<std::string> labels,
               const std::vector<std::pair<std::string, std::string>>& edges, std::vector<NodeKind> kinds = {});

  const std::string& id() const { return id_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t require_index(const std::string& label) const;

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * size() + j] != 0; }
  std::size_t degree(std::size_t i) const { return neighbors_[i].size(); }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return neighbors_[i]; }
  std::size_t edge_count() const;
  /// Edges as label pairs (i < j in node order).
  std::vector<std::pair<std::string, std::string>> edges() const;

  NodeKind kind(std::size_t i) const { return kinds_[i]; }
  bool has_bipartition() const;
  bool is_connected() const;
  bool is_bipartite() const;

 private:
  std::string id_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<NodeKind> kinds_;
};

/// Central node "a" with chains b1,c1,... of lengths p, q, r.
DiagramGraph y_diagram(std::size_t p, std::size_t q, std::size_t r);

/// Incidence graph of the points and lines of P^2(F_q), q in {2, 3}. Labels
/// are "P" or "L" followed by the canonical coordinates (first nonzero entry
/// equal to 1), e.g. "P012"; point x lies on line y iff x . y = 0.
DiagramGraph projective_plane_incidence(unsigned q);

/// Coordinates of a node of a projective plane incidence graph.
std::vector<unsigned> projective_coordinates(const std::string& label);

// ---------------------------------------------------------------------------

enum class Relation { kBraid, kCommute };

struct PairCheck {
  std::string u;
  std::string v;
  Relation expected = Relation::kCommute;
  bool braids = false;
  bool commutes = false;
  /// the expected relation holds and the other one does not
  bool ok() const {
    return expected == Relation::kBraid ? (braids && !commutes) : (commutes && !braids);
  }
};

struct AssignmentReport {
  std::vector<PairCheck> pairs;
  std::size_t matched() const;
  bool pass() const { return matched() == pairs.size(); }
  std::vector<PairCheck> failures() const;
};

/// Checks every unordered pair of nodes: adjacent nodes must braid and not
/// commute, the others must commute and not braid.
template <class T>
AssignmentReport verify_assignment(const DiagramGraph& g, const std::map<std::string, Matrix<T>>& assign) {
  AssignmentReport rep;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!assign.contains(g.label(i))) throw DiagramError("verify_assignment: node '" + g.label(i) + "' unassigned");
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& m = assign.at(g.label(i));
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto& n = assign.at(g.label(j));
      PairCheck pc;
      pc.u = g.label(i);
      pc.v = g.label(j);
      pc.expected = g.adjacent(i, j) ? Relation::kBraid : Relation::kCommute;
      const Matrix<T> mn = m * n;
      const Matrix<T> nm = n * m;
      pc.commutes = mn == nm;
      pc.braids = mn * m == n * m * n;
      rep.pairs.push_back(std::move(pc));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

/// Node map small -> big (by index) preserving adjacency and non-adjacency.
using Embedding = std::vector<std::size_t>;

/// First induced-subgraph embedding in the deterministic search order, or
/// nullopt. Small nodes are placed most-connected-first; candidates are tried
/// by decreasing degree, then label.
std::optional<Embedding> embed_subgraph(const DiagramGraph& small, const DiagramGraph& big);

using EmbeddingVisitor = std::function<bool(const Embedding&)>;

/// Calls visit on each embedding in search order until it returns false.
void for_each_embedding(const DiagramGraph& small, const DiagramGraph& big, const EmbeddingVisitor& visit);

/// Every induced-subgraph embedding, in search order.
std::vector<Embedding> all_embeddings(const DiagramGraph& small, const DiagramGraph& big);

/// Order of the automorphism group, by backtracking (at most 30 nodes).
std::uint64_t count_graph_automorphisms(const DiagramGraph& g);

/// Embedding as a label map.
std::map<std::string, std::string> embedding_labels(const DiagramGraph& small, const DiagramGraph& big,
                                                    const Embedding& e);

}  // namespace hermlat
