#pragma once

#include "fibrant/additive.hpp"

#include <functional>
#include <optional>
#include <string>

namespace fibrant {

/// A class of morphisms given by a membership oracle.
struct MorphismClass {
  std::string description;
  std::function<bool(const Morphism&)> decide;

  bool contains(const Morphism& f) const { return decide(f); }
};

/// A class of objects given by a membership oracle.
struct ObjectClass {
  std::string description;
  std::function<bool(const Module&)> decide;

  bool contains(const Module& m) const { return decide(m); }
};

/// A factorization f = second * first.
struct Factorization {
  Morphism first;
  Morphism second;
};

/// A weak factorization system (cofib, tfib) in which tfib admits
/// right cancellation and cofib-cap-tfib is generated by a single object:
/// the input datum for deriving a model structure.
struct Fwfs {
  AlgebraPtr algebra;
  MorphismClass cofib;
  MorphismClass tfib;
  /// Additive generator of the trivially fibrant-projective objects
  /// (the objects x with 0 -> x in cofib and x -> 0 in tfib).
  Module tc_generator;
  /// Additive generator of the trivial objects, when the instance has one.
  std::optional<Module> tf_generator;
  /// Factor any morphism as (cofibration, trivial fibration).
  std::function<Factorization(const Morphism&)> factor;
};

/// The five distinguished classes of a model structure in which every
/// object is fibrant, together with its distinguished object classes.
struct ModelStructure {
  AlgebraPtr algebra;
  MorphismClass cofib;
  MorphismClass tcofib;
  MorphismClass fib;
  MorphismClass tfib;
  MorphismClass weq;
  ObjectClass cofibrant;        // 0 -> x a cofibration
  ObjectClass trivial_objects;  // x -> 0 a weak equivalence
  ObjectClass core;             // cofibrant and trivial
  Module tc_generator;
  /// Additive generator of the trivial objects, when the instance has one
  /// (for example add(m) in the Hom(-, add m)-epic structures).
  std::optional<Module> tf_generator;
  std::function<Factorization(const Morphism&)> factor_cofib_tfib;
  std::function<Factorization(const Morphism&)> factor_tcofib_fib;
};

/// Memoize a decider by the serialized morphism or module; deciders are
/// pure, and the verification suites ask about the same items repeatedly.
MorphismClass memoized(MorphismClass c);
ObjectClass memoized(ObjectClass c);

/// Trivially cofibrant maps: split monomorphisms whose cokernel lies in
/// add(tc_generator).
bool tcofib_membership(const Morphism& f, const Module& tc_generator);

/// Fibrations: morphisms on which Hom(tc_generator, -) is surjective.
bool fib_membership(const Morphism& f, const Module& tc_generator);

/// Weak equivalences: f with (f, t) : A + U -> B a trivial fibration,
/// where t : U -> B is the right add(tc_generator)-approximation.
bool weq_membership(const Morphism& f, const Fwfs& s);

/// Factor f as (trivial cofibration, fibration):
/// A >--(1,0)--> A + U --(f,t)--> B with t the right approximation of B.
Factorization factorize_tcofib_fib(const Morphism& f, const Module& tc_generator);

/// Derive the full model structure from the factorization system.
ModelStructure derive_structure(const Fwfs& s);

/// Verification sample: objects and morphisms to quantify over.
struct Sample {
  std::vector<Module> objects;
  std::vector<Morphism> morphisms;
};

struct CheckLine {
  std::string axiom;
  bool passed;
  std::string detail;  // counterexample description when failed
};

struct Report {
  std::vector<CheckLine> lines;
  bool all_passed() const;
  std::string to_string() const;  // one "AXIOM <name> PASS|FAIL" line each
};

/// Check the factorization-system axioms over the sample: closure of the
/// two classes under composition and retracts, the lifting property,
/// factorization, right cancellation of tfib, and that the distinguished
/// core objects form add(tc_generator).
Report verify_fwfs(const Fwfs& s, const Sample& sample);

}  // namespace fibrant
