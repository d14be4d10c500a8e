// Root configurations: the Y555 seed table, exact constrained root solving,
// extension of the seeds along an induced embedding of diagrams, unit
// normalization, common fixed points and a short-vector enumerator used as an
// independent oracle.
#pragma once

#include "hermlat/diagrams.hpp"
#include "hermlat/lattice.hpp"
#include "hermlat/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hermlat {

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Roots attached to diagram nodes, in a fixed label order.
template <QuadraticRing R>
class RootConfiguration {
 public:
  RootConfiguration() = default;
  RootConfiguration(std::string lattice_id, std::string diagram_id)
      : lattice_id_(std::move(lattice_id)), diagram_id_(std::move(diagram_id)) {}

  const std::string& lattice_id() const { return lattice_id_; }
  const std::string& diagram_id() const { return diagram_id_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(const std::string& label) const { return roots_.contains(label); }

  const Vec<R>& root(const std::string& label) const {
    auto it = roots_.find(label);
    if (it == roots_.end()) throw SearchError("RootConfiguration: no root for node " + label);
    return it->second;
  }

  void set(const std::string& label, Vec<R> v) {
    if (!roots_.contains(label)) labels_.push_back(label);
    roots_[label] = std::move(v);
  }

  /// Triflection / tetraflection matrix for every node, acting on coordinates
  /// with respect to the basis of `lat` (where they are integral).
  std::map<std::string, GroupElement<R>> reflections(const HermitianLattice<R>& lat) const {
    const Matrix<R> g = lat.basis_gram();
    std::map<std::string, GroupElement<R>> out;
    for (const auto& l : labels_) {
      auto c = lat.coordinates(roots_.at(l));
      if (!c) throw SearchError("RootConfiguration: root " + l + " is not in the lattice");
      out.emplace(l, reflection(*c, g));
    }
    return out;
  }

  std::vector<Vec<R>> vectors() const {
    std::vector<Vec<R>> out;
    for (const auto& l : labels_) out.push_back(roots_.at(l));
    return out;
  }

  friend bool operator==(const RootConfiguration& x, const RootConfiguration& y) {
    return x.lattice_id_ == y.lattice_id_ && x.diagram_id_ == y.diagram_id_ && x.labels_ == y.labels_ &&
           x.roots_ == y.roots_;
  }

 private:
  std::string lattice_id_;
  std::string diagram_id_;
  std::vector<std::string> labels_;
  std::map<std::string, Vec<R>> roots_;
};

/// The 16 table roots on the Y555 nodes.
RootConfiguration<EisensteinInt> seed_y555_roots();

/// Ten Gaussian roots on the Y333 nodes, built by analogy with the Y555 table.
RootConfiguration<GaussianInt> seed_y333_gaussian_roots();

// ---------------------------------------------------------------------------
// validation of a configuration against a diagram

struct ConfigurationCheck {
  bool all_roots_have_root_norm = true;
  bool all_roots_in_lattice = true;
  /// 0 for non-adjacent nodes, unit * prime for adjacent ones
  bool inner_product_pattern = true;
  std::vector<std::string> problems;
  bool ok() const { return all_roots_have_root_norm && all_roots_in_lattice && inner_product_pattern; }
};

template <QuadraticRing R>
bool is_unit_times_prime(const R& x) {
  return x.norm() == R::prime().norm() && divides(R::prime(), x);
}

template <QuadraticRing R>
ConfigurationCheck check_configuration(const RootConfiguration<R>& config, const DiagramGraph& g,
                                       const HermitianLattice<R>& lat) {
  ConfigurationCheck out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& u = g.label(i);
    if (!config.contains(u)) {
      out.inner_product_pattern = false;
      out.problems.push_back("node " + u + " has no root");
      return out;
    }
    const auto& r = config.root(u);
    if (!(lat.inner(r, r) == R(R::kRootNorm))) {
      out.all_roots_have_root_norm = false;
      out.problems.push_back("root " + u + " has norm " + to_string(lat.inner(r, r)));
    }
    if (!lat.contains(r)) {
      out.all_roots_in_lattice = false;
      out.problems.push_back("root " + u + " is not in the lattice");
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const R ip = lat.inner(config.root(g.label(i)), config.root(g.label(j)));
      const bool good = g.adjacent(i, j) ? is_unit_times_prime(ip) : ip.is_zero();
      if (!good) {
        out.inner_product_pattern = false;
        out.problems.push_back("<" + g.label(i) + "," + g.label(j) + "> = " + to_string(ip));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// constrained solving

template <QuadraticRing R>
struct InnerConstraint {
  Vec<R> root;
  R target;
};

/// Solves <x, r_k> = t_k for a fixed list of roots r_k whose functionals span
/// the dual of the ambient space. The square subsystem on a maximal
/// independent subset is inverted once; remaining constraints are verified.
template <QuadraticRing R>
class ConstraintSolver {
 public:
  ConstraintSolver(std::vector<Vec<R>> roots, const Matrix<R>& gram) : roots_(std::move(roots)) {
    const std::size_t n = gram.rows();
    for (const auto& r : roots_) functionals_.push_back(functional_of(r, gram));
    // greedy maximal independent subset, in the given order
    std::vector<Vec<R>> chosen_rows;
    for (std::size_t k = 0; k < functionals_.size() && independent_.size() < n; ++k) {
      chosen_rows.push_back(functionals_[k]);
      if (rank(Matrix<R>::from_rows(chosen_rows)) == chosen_rows.size()) {
        independent_.push_back(k);
      } else {
        chosen_rows.pop_back();
      }
    }
    if (independent_.size() < n)
      throw SearchError("ConstraintSolver: constraint roots do not span the ambient space");
    square_inverse_ = inverse<R>(Matrix<R>::from_rows(chosen_rows));
  }

  const std::vector<std::size_t>& independent_subset() const { return independent_; }

  /// The unique x over the fraction field meeting the independent constraints,
  /// or nullopt if it violates one of the others.
  std::optional<Vec<Fraction<R>>> solve(const Vec<R>& targets) const {
    if (targets.size() != roots_.size()) throw DimensionError("ConstraintSolver::solve: wrong number of targets");
    const std::size_t n = square_inverse_.rows();
    Vec<Fraction<R>> x(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const R& t = targets[independent_[k]];
        if (!t.is_zero() && !square_inverse_(i, k).is_zero()) x[i] += square_inverse_(i, k) * Fraction<R>(t);
      }
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      Fraction<R> acc;
      for (std::size_t i = 0; i < n; ++i)
        if (!functionals_[k][i].is_zero()) acc += Fraction<R>(functionals_[k][i]) * x[i];
      if (!(acc == Fraction<R>(targets[k]))) return std::nullopt;
    }
    return x;
  }

 private:
  std::vector<Vec<R>> roots_;
  std::vector<Vec<R>> functionals_;
  std::vector<std::size_t> independent_;
  Matrix<Fraction<R>> square_inverse_;
};

/// Lattice vectors x with <x, r_k> = t_k for all constraints and <x, x> equal
/// to norm_target. The constraint roots must span the ambient space, so the
/// result has at most one element; an empty result means no solution.
template <QuadraticRing R>
std::vector<Vec<R>> solve_root_for_constraints(const HermitianLattice<R>& lat,
                                               const std::vector<InnerConstraint<R>>& constraints,
                                               const R& norm_target) {
  std::vector<Vec<R>> roots;
  Vec<R> targets;
  for (const auto& c : constraints) {
    roots.push_back(c.root);
    targets.push_back(c.target);
  }
  ConstraintSolver<R> solver(std::move(roots), lat.gram());
  auto x = solver.solve(targets);
  if (!x) return {};
  auto xi = to_integral<R>(*x);
  if (!xi || !lat.contains(*xi) || !(lat.inner(*xi, *xi) == norm_target)) return {};
  return {std::move(*xi)};
}

// ---------------------------------------------------------------------------
// extension along an embedding

/// Deepest partial assignment reached when a search is exhausted.
template <QuadraticRing R>
class SearchExhausted : public SearchError {
 public:
  SearchExhausted(const std::string& what, RootConfiguration<R> partial)
      : SearchError(what), partial_(std::move(partial)) {}
  const RootConfiguration<R>& partial() const { return partial_; }

 private:
  RootConfiguration<R> partial_;
};

class NormalizationObstruction : public SearchError {
 public:
  using SearchError::SearchError;
};

/// Rescales roots by units along a BFS spanning tree of the bipartite graph so
/// that <p, l> = prime for every incident point p and line l. Throws
/// NormalizationObstruction if a non-tree edge cannot be matched.
template <QuadraticRing R>
RootConfiguration<R> normalize_units(const RootConfiguration<R>& config, const DiagramGraph& g,
                                     const Matrix<R>& gram) {
  if (!g.has_bipartition()) throw SearchError("normalize_units: graph has no point/line bipartition");
  const R target = R::prime();
  std::vector<std::optional<Vec<R>>> scaled(g.size());
  auto point_line_inner = [&](std::size_t i, const Vec<R>& vi, std::size_t, const Vec<R>& vj) {
    return g.kind(i) == NodeKind::kPoint ? inner(vi, vj, gram) : inner(vj, vi, gram);
  };
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (scaled[start]) continue;
    scaled[start] = config.root(g.label(start));
    std::vector<std::size_t> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v : g.neighbors(u)) {
        if (scaled[v]) continue;
        const Vec<R>& rv = config.root(g.label(v));
        // pick the unit s with <p, l> = target after scaling v by s
        const R ip = point_line_inner(u, *scaled[u], v, rv);
        std::optional<Vec<R>> chosen;
        for (const R& s : R::units()) {
          Vec<R> cand = scale(s, rv);
          if (point_line_inner(u, *scaled[u], v, cand) == target) {
            chosen = std::move(cand);
            break;
          }
        }
        if (!chosen)
          throw NormalizationObstruction("normalize_units: <" + g.label(u) + "," + g.label(v) + "> = " +
                                         to_string(ip) + " is not a unit multiple of the prime");
        scaled[v] = std::move(chosen);
        queue.push_back(v);
      }
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j : g.neighbors(i)) {
      if (g.kind(i) != NodeKind::kPoint) continue;
      if (!(inner(*scaled[i], *scaled[j], gram) == target))
        throw NormalizationObstruction("normalize_units: non-tree edge " + g.label(i) + "-" + g.label(j) +
                                       " cannot be normalized");
    }
  RootConfiguration<R> out(config.lattice_id(), config.diagram_id());
  for (const auto& label : config.labels()) {
    auto idx = g.index_of(label);
    out.set(label, idx ? *scaled[*idx] : config.root(label));
  }
  return out;
}

struct ExtensionOptions {
  /// backtrack when the complete configuration cannot be unit-normalized
  bool require_normalizable = false;
};

/// Extends seed roots on the nodes of `small` to every node of `big`, given
/// an induced embedding. New nodes get targets 0 (non-adjacent seeds) or
/// u * prime (adjacent seeds) with u running over the units in their fixed
/// order; the seeds determine each new root, and new roots are checked
/// against one another as the backtracking proceeds.
template <QuadraticRing R>
RootConfiguration<R> extend_configuration(const RootConfiguration<R>& seeds, const DiagramGraph& small,
                                          const DiagramGraph& big, const Embedding& embedding,
                                          const HermitianLattice<R>& lat, const std::string& lattice_id,
                                          ExtensionOptions options = {}) {
  if (embedding.size() != small.size()) throw SearchError("extend_configuration: embedding has wrong size");
  std::vector<std::optional<std::size_t>> seed_of(big.size());
  std::vector<Vec<R>> seed_roots;
  for (std::size_t i = 0; i < small.size(); ++i) {
    seed_of[embedding[i]] = i;
    seed_roots.push_back(seeds.root(small.label(i)));
  }
  const ConstraintSolver<R> solver(seed_roots, lat.gram());

  std::vector<std::size_t> fresh;
  for (std::size_t v = 0; v < big.size(); ++v)
    if (!seed_of[v]) fresh.push_back(v);
  auto unconstrained_degree = [&](std::size_t v) {
    std::size_t d = 0;
    for (std::size_t w : big.neighbors(v))
      if (!seed_of[w]) ++d;
    return d;
  };
  std::stable_sort(fresh.begin(), fresh.end(), [&](std::size_t x, std::size_t y) {
    const auto dx = unconstrained_degree(x), dy = unconstrained_degree(y);
    if (dx != dy) return dx < dy;
    return big.label(x) < big.label(y);
  });

  std::vector<Vec<R>> placed(big.size());
  std::vector<bool> has(big.size(), false);
  for (std::size_t v = 0; v < big.size(); ++v)
    if (seed_of[v]) {
      placed[v] = seed_roots[*seed_of[v]];
      has[v] = true;
    }

  auto snapshot = [&]() {
    RootConfiguration<R> c(lattice_id, big.id());
    for (std::size_t v = 0; v < big.size(); ++v)
      if (has[v]) c.set(big.label(v), placed[v]);
    return c;
  };

  const R norm_target(R::kRootNorm);
  const auto& units = R::units();
  std::size_t deepest = 0;
  RootConfiguration<R> deepest_partial = snapshot();
  std::optional<RootConfiguration<R>> result;

  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k > deepest) {
      deepest = k;
      deepest_partial = snapshot();
    }
    if (k == fresh.size()) {
      RootConfiguration<R> c = snapshot();
      if (options.require_normalizable) {
        try {
          normalize_units(c, big, lat.gram());
        } catch (const NormalizationObstruction&) {
          return false;
        }
      }
      result = std::move(c);
      return true;
    }
    const std::size_t v = fresh[k];
    std::vector<std::size_t> adjacent_seeds;
    for (std::size_t i = 0; i < small.size(); ++i)
      if (big.adjacent(v, embedding[i])) adjacent_seeds.push_back(i);
    std::vector<std::size_t> choice(adjacent_seeds.size(), 0);
    while (true) {
      Vec<R> targets(small.size(), R(0));
      for (std::size_t s = 0; s < adjacent_seeds.size(); ++s)
        targets[adjacent_seeds[s]] = units[choice[s]] * R::prime();
      if (auto x = solver.solve(targets)) {
        if (auto xi = to_integral<R>(*x); xi && lat.inner(*xi, *xi) == norm_target && lat.contains(*xi)) {
          bool consistent = true;
          for (std::size_t j = 0; j < k && consistent; ++j) {
            const std::size_t w = fresh[j];
            const R ip = lat.inner(*xi, placed[w]);
            consistent = big.adjacent(v, w) ? is_unit_times_prime(ip) : ip.is_zero();
          }
          if (consistent) {
            placed[v] = std::move(*xi);
            has[v] = true;
            if (place(k + 1)) return true;
            has[v] = false;
          }
        }
      }
      // next unit tuple, first position varying slowest
      std::size_t pos = choice.size();
      while (pos > 0 && ++choice[pos - 1] == units.size()) choice[--pos] = 0;
      if (pos == 0) break;
    }
    return false;
  };

  if (!place(0))
    throw SearchExhausted<R>("extend_configuration: search exhausted after placing " + std::to_string(deepest) +
                                 " of " + std::to_string(fresh.size()) + " new roots",
                             deepest_partial);
  // report in big-graph node order
  RootConfiguration<R> ordered(lattice_id, big.id());
  for (std::size_t v = 0; v < big.size(); ++v) ordered.set(big.label(v), result->root(big.label(v)));
  return ordered;
}

template <QuadraticRing R>
struct ExtensionResult {
  RootConfiguration<R> configuration;  // final (unit-normalized where applicable)
  RootConfiguration<R> raw;            // as found, seeds unchanged
  Embedding embedding;                 // seed node index -> big node index
};

/// The 26-root configuration on the incidence graph of P^2(F_3), extending
/// the Y555 seeds along `embedding`. When omitted, embeddings are tried in
/// search order until one admits a normalizable extension.
ExtensionResult<EisensteinInt> extend_to_26_detailed(const RootConfiguration<EisensteinInt>& seeds,
                                                     std::optional<Embedding> embedding = std::nullopt);

inline RootConfiguration<EisensteinInt> extend_to_26(const RootConfiguration<EisensteinInt>& seeds,
                                                     std::optional<Embedding> embedding = std::nullopt) {
  return extend_to_26_detailed(seeds, std::move(embedding)).configuration;
}

/// The 14-root Gaussian configuration on the incidence graph of P^2(F_2).
ExtensionResult<GaussianInt> build_gaussian_configuration_detailed();

inline RootConfiguration<GaussianInt> build_gaussian_configuration() {
  return build_gaussian_configuration_detailed().configuration;
}

// ---------------------------------------------------------------------------
// fixed points

template <QuadraticRing R>
struct FixedPointResult {
  std::vector<Vec<Fraction<R>>> kernel_basis;
  /// kernel generator scaled to be integral (when the kernel is 1-dimensional)
  std::optional<Vec<R>> representative;
  R representative_norm;
  bool one_dimensional() const { return kernel_basis.size() == 1; }
};

/// Common kernel of the functionals x -> <x, r_k>.
template <QuadraticRing R>
FixedPointResult<R> common_fixed_point(const std::vector<Vec<R>>& roots, const Matrix<R>& gram) {
  std::vector<Vec<R>> rows;
  for (const auto& r : roots) rows.push_back(functional_of(r, gram));
  FixedPointResult<R> out;
  out.kernel_basis = kernel<R>(Matrix<R>::from_rows(rows));
  if (out.one_dimensional()) {
    out.representative = clear_denominators<R>(out.kernel_basis.front());
    out.representative_norm = norm(*out.representative, gram);
  }
  return out;
}

// ---------------------------------------------------------------------------
// short vectors

class EnumerationLimitError : public SearchError {
 public:
  using SearchError::SearchError;
};

/// All vectors v of a negative-definite Eisenstein lattice with |<v,v>| <=
/// bound (zero included), by Fincke-Pohst enumeration on the underlying
/// Z-lattice with exact rational bounds. Throws EnumerationLimitError when
/// more than max_nodes search nodes would be visited.
std::vector<Vec<EisensteinInt>> enumerate_short_vectors(const HermitianLattice<EisensteinInt>& lat,
                                                        const Integer& bound,
                                                        std::size_t max_nodes = 50'000'000);

}  // namespace hermlat
