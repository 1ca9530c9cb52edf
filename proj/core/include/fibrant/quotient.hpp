#pragma once

#include "fibrant/verifier.hpp"

namespace fibrant {

/// Hom(x, y) in the additive quotient by the ideal of morphisms factoring
/// through add u.
struct QuotientHom {
  std::vector<Morphism> ambient_basis;
  std::vector<Morphism> ideal_basis;
  std::size_t quotient_dim = 0;
};

QuotientHom quotient_hom(const Module& x, const Module& y, const Module& u);

/// f invertible in the additive quotient by add u: existence of separate
/// one-sided inverses modulo the factoring ideal, each a linear solve.
bool quotient_iso_check(const Morphism& f, const Module& u);

/// Homotopy hom-group of the model structure: quotient hom by the core
/// generator after cofibrant replacement (factor 0 -> x as a cofibration
/// followed by a trivial fibration and take the middle object).
QuotientHom ho_hom(const ModelStructure& ms, const Module& x, const Module& y);

/// Cofibrant replacement of x through the structure's (cofibration,
/// trivial fibration) factorization of 0 -> x.
Module cofibrant_replacement(const ModelStructure& ms, const Module& x);

/// Morphism-level homotopy-category criterion: over morphisms between
/// cofibrant objects, weak equivalence agrees with invertibility in the
/// quotient by the core generator.
AxiomReport check_theorem_quotient_criterion(const ModelStructure& ms, const Sample& sample);

}  // namespace fibrant
