#pragma once

#include "fibrant/algebra.hpp"

#include <cstdint>

namespace fibrant {

struct invalid_module : std::runtime_error {
  explicit invalid_module(const std::string& what) : std::runtime_error(what) {}
};

struct algebra_mismatch : std::logic_error {
  algebra_mismatch() : std::logic_error("modules over different algebras") {}
};

/// A finite-dimensional representation of the algebra's quiver satisfying
/// its relations. Immutable after construction.
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const Matrix& arrow_map(std::size_t arrow) const { return arrow_maps_[arrow]; }
  const std::vector<Matrix>& arrow_maps() const { return arrow_maps_; }

  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  std::uint64_t id() const { return id_; }
  /// Hash of the dimension vector and arrow-map entries; equal for
  /// structurally equal modules.
  std::uint64_t content_hash() const { return content_hash_; }

  /// Dimension vectors and matrices equal on the nose.
  bool structurally_equal(const Module& o) const;

  /// Matrix of the action of a path (product of arrow maps, first arrow
  /// applied first); the identity for the trivial path.
  Matrix path_action(const Path& p) const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> arrow_maps_;
  std::uint64_t id_ = 0;
  std::uint64_t content_hash_ = 0;
};

Module zero_module(const AlgebraPtr& a);

class Morphism {
 public:
  Morphism() = default;
  Morphism(Module source, Module target, std::vector<Matrix> vertex_maps);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& vertex_map(std::size_t v) const { return vertex_maps_[v]; }
  const std::vector<Matrix>& vertex_maps() const { return vertex_maps_; }

  bool is_zero_map() const;
  bool structurally_equal(const Morphism& o) const;

  /// All vertex maps stacked into one coordinate column.
  Matrix vectorize() const;

 private:
  Module source_, target_;
  std::vector<Matrix> vertex_maps_;
};

/// Structural (on-the-nose) equality.
inline bool operator==(const Module& a, const Module& b) { return a.structurally_equal(b); }
inline bool operator==(const Morphism& a, const Morphism& b) { return a.structurally_equal(b); }

Morphism identity_morphism(const Module& m);
Morphism zero_morphism(const Module& source, const Module& target);
/// g after f
Morphism compose(const Morphism& g, const Morphism& f);
Morphism add(const Morphism& a, const Morphism& b);
Morphism scale(const Scalar& s, const Morphism& f);

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);

/// Deterministically ordered basis of Hom(m, n) as solutions of the
/// intertwining system. Results are cached per (m, n) identity.
std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

/// Morphism with the given coordinates in hom_basis(m, n).
Morphism hom_from_coords(const Module& m, const Module& n, const Matrix& coords);
/// Coordinates of f in hom_basis(source, target).
Matrix hom_coords(const Morphism& f);

struct SubquotientPair {
  Module object;
  Morphism map;  // inclusion for kernels, projection for cokernels
};

SubquotientPair kernel(const Morphism& f);
SubquotientPair cokernel(const Morphism& f);

struct DirectSum {
  Module sum;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& algebra);
inline DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw std::logic_error("direct_sum of empty list needs an algebra");
  return direct_sum(parts, parts.front().algebra());
}
/// Block morphism with one row, [f_1 ... f_k]: sum of sources -> target.
Morphism row_morphism(const std::vector<Morphism>& components, const Module& domain_sum);
/// Block morphism with one column: source -> sum of targets.
Morphism column_morphism(const std::vector<Morphism>& components, const Module& codomain_sum);

/// k-duality: module over the opposite algebra, vertex spaces dualized.
Module dualize(const Module& m);
/// Contravariant on morphisms: dualize(f): D(target) -> D(source).
Morphism dualize(const Morphism& f);

/// True when some linear combination of hom-basis elements is invertible
/// (searched deterministically; may miss isomorphisms over tiny fields).
bool is_isomorphic(const Module& m, const Module& n);

std::string describe(const Module& m);
std::string describe(const Morphism& f);

}  // namespace fibrant
