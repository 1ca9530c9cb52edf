#pragma once

#include "fibrant/module.hpp"

#include <optional>

namespace fibrant {

/// Witness for a splitting short exact sequence
///   0 -> A --forward--> B --cokernel_part--> C -> 0
/// with retraction * forward = id_A, cokernel_part * section = id_C, and
/// forward * retraction + section * cokernel_part = id_B.
struct SplitData {
  Morphism forward;
  Morphism retraction;
  Morphism cokernel_part;
  Morphism section;
};

bool split_identities_hold(const SplitData& s);

/// Full splitting data iff some retraction of f exists.
std::optional<SplitData> split_mono_check(const Morphism& f);
/// Full splitting data iff some section of g exists (g as cokernel_part).
std::optional<SplitData> split_epi_check(const Morphism& g);

/// Basis of the subspace of Hom(x, y) of morphisms factoring through
/// add u, returned as a subset of the pairwise composites.
std::vector<Morphism> factor_ideal_basis(const Module& x, const Module& u, const Module& y);
/// Matrix whose columns are the vectorized factor-ideal basis.
Matrix factor_ideal_matrix(const Module& x, const Module& u, const Module& y);

/// x a direct summand of a finite power of u; decided by id_x lying in
/// the factor-through ideal of End(x).
bool add_membership(const Module& x, const Module& u);

/// Evaluation morphism u^d -> b, d = dim Hom(u, b); every morphism from
/// add u to b factors through it.
Morphism right_approximation(const Module& u, const Module& b);
/// Dually b -> u^d with d = dim Hom(b, u).
Morphism left_approximation(const Module& b, const Module& u);

/// Post-composition Hom(u, source f) -> Hom(u, target f) surjective.
bool hom_epic_check(const Module& u, const Morphism& f);
/// Pre-composition Hom(target f, u) -> Hom(source f, u) surjective.
bool co_hom_epic_check(const Morphism& f, const Module& u);

struct LiftingProblem {
  Morphism top;     // u : A -> C
  Morphism left;    // f : A -> B
  Morphism right;   // g : C -> D
  Morphism bottom;  // v : B -> D
};

bool commutes(const LiftingProblem& p);

/// h : B -> C with h*left = top and right*h = bottom, when one exists.
/// Throws std::logic_error if the square does not commute.
std::optional<Morphism> solve_lifting(const LiftingProblem& p);

/// Verify the retract-diagram identities: phi/psi pairs satisfy
/// psi1*phi1 = id, psi2*phi2 = id and both squares commute, exhibiting g
/// as a retract of f.
bool verify_retract(const Morphism& g, const Morphism& f, const Morphism& phi1,
                    const Morphism& psi1, const Morphism& phi2, const Morphism& psi2);

}  // namespace fibrant
