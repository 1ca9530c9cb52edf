#pragma once

#include "fibrant/module.hpp"

namespace fibrant {

struct resolution_overflow : std::runtime_error {
  explicit resolution_overflow(const std::string& what) : std::runtime_error(what) {}
};

/// Indecomposable projective at each vertex: paths out of the vertex
/// modulo relations, with left multiplication as the arrow action.
std::vector<Module> projective_indecomposables(const AlgebraPtr& a);
/// Dually, vector-space duals of the opposite-algebra projectives.
std::vector<Module> injective_indecomposables(const AlgebraPtr& a);

Module projective_at(const AlgebraPtr& a, std::size_t vertex);

/// Morphism P_vertex -> m sending the vertex generator to the given
/// element of m at that vertex (a dim-by-1 column).
Morphism morphism_from_projective(const AlgebraPtr& a, std::size_t vertex, const Module& m,
                                  const Matrix& element);

/// Regular module A = direct sum of the projective indecomposables.
Module regular_module(const AlgebraPtr& a);

struct ProjectiveCover {
  Module cover;
  Morphism map;  // epi cover -> m
};

/// Projective cover assembled from top(m) = m / rad m.
ProjectiveCover projective_cover(const Module& m);

struct Resolution {
  std::vector<Module> terms;       // P_0, P_1, ...
  std::vector<Morphism> boundary;  // d_i : P_{i+1} -> P_i (boundary[0] = d_1)
  Morphism augmentation;           // P_0 -> m
};

/// Minimal projective resolution truncated at `length` (terms up to
/// P_length); stops early once a kernel vanishes. Throws
/// resolution_overflow if the module has not resolved within the bound.
Resolution minimal_projective_resolution(const Module& m, std::size_t length,
                                         bool allow_truncation = true);

/// dim Ext^i(m, n) from a minimal projective resolution of m.
std::size_t ext_dim(std::size_t i, const Module& m, const Module& n);

/// Acyclic quiver and no relations.
bool is_hereditary(const AlgebraPtr& a);

}  // namespace fibrant
