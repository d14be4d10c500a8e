#include "hermlat/diagrams.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

namespace hermlat {

DiagramGraph::DiagramGraph(std::string id, std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& edges,
                           std::vector<NodeKind> kinds)
    : id_(std::move(id)), labels_(std::move(labels)), kinds_(std::move(kinds)) {
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!index_.emplace(labels_[i], i).second) throw DiagramError("DiagramGraph: duplicate label " + labels_[i]);
  if (kinds_.empty()) kinds_.assign(n, NodeKind::kPlain);
  if (kinds_.size() != n) throw DiagramError("DiagramGraph: node kind list has wrong length");
  adj_.assign(n * n, 0);
  neighbors_.assign(n, {});
  for (const auto& [u, v] : edges) {
    const std::size_t i = require_index(u);
    const std::size_t j = require_index(v);
    if (i == j) throw DiagramError("DiagramGraph: loop at " + u);
    if (adj_[i * n + j]) continue;
    adj_[i * n + j] = adj_[j * n + i] = 1;
    neighbors_[i].push_back(j);
    neighbors_[j].push_back(i);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  if (has_bipartition()) {
    for (const auto& [u, v] : edges)
      if (kinds_[require_index(u)] == kinds_[require_index(v)])
        throw DiagramError("DiagramGraph: edge " + u + "-" + v + " inside one part");
  }
}

std::optional<std::size_t> DiagramGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DiagramGraph::require_index(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw DiagramError("DiagramGraph '" + id_ + "': unknown node " + label);
  return *i;
}

std::size_t DiagramGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : neighbors_) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<std::string, std::string>> DiagramGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j : neighbors_[i])
      if (i < j) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

bool DiagramGraph::has_bipartition() const {
  return std::any_of(kinds_.begin(), kinds_.end(), [](NodeKind k) { return k != NodeKind::kPlain; });
}

bool DiagramGraph::is_connected() const {
  if (size() == 0) return true;
  std::vector<bool> seen(size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : neighbors_[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        queue.push_back(v);
      }
  }
  return count == size();
}

bool DiagramGraph::is_bipartite() const {
  std::vector<int> color(size(), -1);
  for (std::size_t s = 0; s < size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : neighbors_[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

DiagramGraph y_diagram(std::size_t p, std::size_t q, std::size_t r) {
  const std::size_t lengths[3] = {p, q, r};
  if (std::max({p, q, r}) > 25) throw DiagramError("y_diagram: chains longer than 25 are not supported");
  std::vector<std::string> labels{"a"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t chain = 0; chain < 3; ++chain) {
    std::string prev = "a";
    for (std::size_t k = 0; k < lengths[chain]; ++k) {
      std::string label = std::string(1, static_cast<char>('b' + k)) + std::to_string(chain + 1);
      labels.push_back(label);
      edges.emplace_back(prev, label);
      prev = std::move(label);
    }
  }
  return DiagramGraph("Y" + std::to_string(p) + std::to_string(q) + std::to_string(r), std::move(labels), edges);
}

namespace {

std::vector<std::vector<unsigned>> projective_points(unsigned q) {
  std::vector<std::vector<unsigned>> pts;
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y)
      for (unsigned z = 0; z < q; ++z) {
        std::vector<unsigned> v{x, y, z};
        auto first = std::find_if(v.begin(), v.end(), [](unsigned c) { return c != 0; });
        if (first != v.end() && *first == 1) pts.push_back(std::move(v));
      }
  return pts;
}

std::string coordinate_string(const std::vector<unsigned>& v) {
  std::string s;
  for (unsigned c : v) s += static_cast<char>('0' + c);
  return s;
}

}  // namespace

DiagramGraph projective_plane_incidence(unsigned q) {
  if (q != 2 && q != 3) throw DiagramError("projective_plane_incidence: only q = 2 and q = 3 are supported");
  const auto pts = projective_points(q);
  std::vector<std::string> labels;
  std::vector<NodeKind> kinds;
  for (const auto& p : pts) {
    labels.push_back("P" + coordinate_string(p));
    kinds.push_back(NodeKind::kPoint);
  }
  for (const auto& l : pts) {
    labels.push_back("L" + coordinate_string(l));
    kinds.push_back(NodeKind::kLine);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& p : pts)
    for (const auto& l : pts) {
      unsigned dot = 0;
      for (std::size_t k = 0; k < 3; ++k) dot += p[k] * l[k];
      if (dot % q == 0) edges.emplace_back("P" + coordinate_string(p), "L" + coordinate_string(l));
    }
  return DiagramGraph("P2F" + std::to_string(q), std::move(labels), edges, std::move(kinds));
}

std::vector<unsigned> projective_coordinates(const std::string& label) {
  if (label.size() != 4 || (label[0] != 'P' && label[0] != 'L'))
    throw DiagramError("projective_coordinates: not a projective plane label: " + label);
  std::vector<unsigned> v;
  for (std::size_t k = 1; k < 4; ++k) v.push_back(static_cast<unsigned>(label[k] - '0'));
  return v;
}

// ---------------------------------------------------------------------------

std::size_t AssignmentReport::matched() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.ok(); }));
}

std::vector<PairCheck> AssignmentReport::failures() const {
  std::vector<PairCheck> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out), [](const PairCheck& p) { return !p.ok(); });
  return out;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const DiagramGraph& small, const DiagramGraph& big) : small_(small), big_(big) {
    order_ = placement_order();
    candidates_.resize(big.size());
    std::iota(candidates_.begin(), candidates_.end(), 0);
    std::stable_sort(candidates_.begin(), candidates_.end(), [&](std::size_t x, std::size_t y) {
      if (big.degree(x) != big.degree(y)) return big.degree(x) > big.degree(y);
      return big.label(x) < big.label(y);
    });
  }

  /// Calls visit for each embedding; stops when visit returns false.
  void run(const std::function<bool(const Embedding&)>& visit) {
    if (small_.size() > big_.size()) return;
    map_.assign(small_.size(), kUnset);
    used_.assign(big_.size(), false);
    visit_ = &visit;
    stopped_ = false;
    extend(0);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // most placed neighbours first, then degree, then label
  std::vector<std::size_t> placement_order() const {
    const std::size_t n = small_.size();
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> placed_nb(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t u = 0; u < n; ++u) {
        if (placed[u]) continue;
        if (best == n) {
          best = u;
          continue;
        }
        auto key = [&](std::size_t x) {
          return std::tuple(placed_nb[x], small_.degree(x));
        };
        if (key(u) > key(best) || (key(u) == key(best) && small_.label(u) < small_.label(best))) best = u;
      }
      placed[best] = true;
      order.push_back(best);
      for (std::size_t v : small_.neighbors(best)) ++placed_nb[v];
    }
    return order;
  }

  void extend(std::size_t depth) {
    if (stopped_) return;
    if (depth == order_.size()) {
      if (!(*visit_)(map_)) stopped_ = true;
      return;
    }
    const std::size_t u = order_[depth];
    for (std::size_t cand : candidates_) {
      if (used_[cand] || big_.degree(cand) < small_.degree(u)) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t w = order_[k];
        consistent = small_.adjacent(u, w) == big_.adjacent(cand, map_[w]);
      }
      if (!consistent) continue;
      map_[u] = cand;
      used_[cand] = true;
      extend(depth + 1);
      used_[cand] = false;
      map_[u] = kUnset;
      if (stopped_) return;
    }
  }

  const DiagramGraph& small_;
  const DiagramGraph& big_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> candidates_;
  Embedding map_;
  std::vector<bool> used_;
  const std::function<bool(const Embedding&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

std::optional<Embedding> embed_subgraph(const DiagramGraph& small, const DiagramGraph& big) {
  std::optional<Embedding> found;
  EmbeddingSearch search(small, big);
  search.run([&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

void for_each_embedding(const DiagramGraph& small, const DiagramGraph& big, const EmbeddingVisitor& visit) {
  EmbeddingSearch search(small, big);
  search.run(visit);
}

std::vector<Embedding> all_embeddings(const DiagramGraph& small, const DiagramGraph& big) {
  std::vector<Embedding> out;
  EmbeddingSearch search(small, big);
  search.run([&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::uint64_t count_graph_automorphisms(const DiagramGraph& g) {
  if (g.size() > 30) throw DiagramError("count_graph_automorphisms: graph has more than 30 nodes");
  std::uint64_t count = 0;
  EmbeddingSearch search(g, g);
  search.run([&](const Embedding&) {
    ++count;
    return true;
  });
  return count;
}

std::map<std::string, std::string> embedding_labels(const DiagramGraph& small, const DiagramGraph& big,
                                                    const Embedding& e) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < e.size(); ++i) out.emplace(small.label(i), big.label(e[i]));
  return out;
}

}  // namespace hermlat
