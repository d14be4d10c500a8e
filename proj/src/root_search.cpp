#include "hermlat/root_search.hpp"

#include <cmath>

namespace hermlat {

using E = EisensteinInt;
using G = GaussianInt;

RootConfiguration<E> seed_y555_roots() {
  RootConfiguration<E> c("L_diag", "Y555");
  for (auto& [label, v] : y555_seed_vectors()) c.set(label, std::move(v));
  return c;
}

RootConfiguration<G> seed_y333_gaussian_roots() {
  RootConfiguration<G> c("L_gauss", "Y333");
  for (auto& [label, v] : y333_gaussian_seed_vectors()) c.set(label, std::move(v));
  return c;
}

namespace {

template <QuadraticRing R>
ExtensionResult<R> extend_first(const RootConfiguration<R>& seeds, const DiagramGraph& small, const DiagramGraph& big,
                                const HermitianLattice<R>& lat, ExtensionOptions opts, const std::string& what) {
  std::optional<ExtensionResult<R>> found;
  std::optional<SearchExhausted<R>> last_failure;
  EmbeddingVisitor visit = [&](const Embedding& e) {
    try {
      auto raw = extend_configuration(seeds, small, big, e, lat, seeds.lattice_id(), opts);
      found = ExtensionResult<R>{raw, raw, e};
      return false;
    } catch (const SearchExhausted<R>& ex) {
      last_failure = ex;
      return true;
    }
  };
  for_each_embedding(small, big, visit);
  if (!found) {
    if (last_failure) throw *last_failure;
    throw SearchError(what + ": " + small.id() + " does not embed in " + big.id());
  }
  return *found;
}

}  // namespace

ExtensionResult<E> extend_to_26_detailed(const RootConfiguration<E>& seeds, std::optional<Embedding> embedding) {
  const DiagramGraph small = y_diagram(5, 5, 5);
  const DiagramGraph big = projective_plane_incidence(3);
  const HermitianLattice<E> lat = build_l_diag();
  ExtensionOptions opts;
  opts.require_normalizable = true;
  ExtensionResult<E> out;
  if (embedding) {
    auto raw = extend_configuration(seeds, small, big, *embedding, lat, seeds.lattice_id(), opts);
    out = {raw, raw, *embedding};
  } else {
    out = extend_first(seeds, small, big, lat, opts, "extend_to_26");
  }
  out.configuration = normalize_units(out.raw, big, lat.gram());
  return out;
}

ExtensionResult<G> build_gaussian_configuration_detailed() {
  return extend_first(seed_y333_gaussian_roots(), y_diagram(3, 3, 3), projective_plane_incidence(2),
                      build_gaussian_lattice(), ExtensionOptions{}, "build_gaussian_configuration");
}

// ---------------------------------------------------------------------------

namespace {

class FinckePohst {
 public:
  FinckePohst(const IntMatrix& positive, const Integer& bound, std::size_t max_nodes)
      : n_(positive.rows()), q_(n_, n_), z_(n_, 0), bound_(bound), max_nodes_(max_nodes) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) q_(i, j) = positive(i, j);
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(q_(i, i)) <= 0) throw LatticeError("enumerate_short_vectors: lattice is not negative definite");
      for (std::size_t j = i + 1; j < n_; ++j) {
        q_(j, i) = q_(i, j);
        q_(i, j) /= q_(i, i);
      }
      for (std::size_t k = i + 1; k < n_; ++k)
        for (std::size_t l = k; l < n_; ++l) q_(k, l) -= q_(k, i) * q_(i, l);
    }
  }

  std::vector<std::vector<Integer>> run() {
    if (n_ == 0) return {{}};
    descend(n_ - 1, mpq_class(bound_));
    return std::move(found_);
  }

 private:
  void descend(std::size_t i, const mpq_class& budget) {
    mpq_class center = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (z_[j] != 0) center += q_(i, j) * z_[j];
    const double radius = std::sqrt(std::max(0.0, mpq_class(budget / q_(i, i)).get_d()));
    const double mid = -center.get_d();
    const auto lo = static_cast<long>(std::floor(mid - radius)) - 1;
    const auto hi = static_cast<long>(std::ceil(mid + radius)) + 1;
    for (long v = lo; v <= hi; ++v) {
      if (++nodes_ > max_nodes_)
        throw EnumerationLimitError("enumerate_short_vectors: more than " + std::to_string(max_nodes_) +
                                    " search nodes");
      const mpq_class shifted = center + v;
      const mpq_class term = q_(i, i) * shifted * shifted;
      if (term > budget) continue;
      z_[i] = v;
      if (i == 0) {
        found_.emplace_back(z_.begin(), z_.end());
      } else {
        descend(i - 1, budget - term);
      }
    }
    z_[i] = 0;
  }

  std::size_t n_;
  Matrix<mpq_class> q_;
  std::vector<long> z_;
  Integer bound_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<Integer>> found_;
};

}  // namespace

std::vector<Vec<E>> enumerate_short_vectors(const HermitianLattice<E>& lat, const Integer& bound,
                                            std::size_t max_nodes) {
  if (sgn(bound) < 0) throw std::invalid_argument("enumerate_short_vectors: bound must be non-negative");
  const IntMatrix z = underlying_z_gram(lat);
  IntMatrix positive(z.rows(), z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) positive(i, j) = -z(i, j);
  // Z-norm is (2/3) of the Hermitian norm
  const Integer z_bound = (2 * bound) / 3;
  FinckePohst fp(positive, z_bound, max_nodes);
  std::vector<Vec<E>> out;
  const std::size_t dim = lat.ambient_dim();
  for (const auto& coeffs : fp.run()) {
    Vec<E> v(dim, E(0));
    for (std::size_t j = 0; j < lat.rank(); ++j) {
      const E c(coeffs[2 * j], coeffs[2 * j + 1]);
      if (c.is_zero()) continue;
      const auto& b = lat.basis_vector(j);
      for (std::size_t k = 0; k < dim; ++k) v[k] += c * b[k];
    }
    const E nv = lat.inner(v, v);
    if (abs(nv.a()) <= bound) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hermlat
