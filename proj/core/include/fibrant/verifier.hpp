#pragma once

#include "fibrant/fwfs.hpp"
#include "fibrant/sample.hpp"

namespace fibrant {

struct AxiomReport {
  std::string axiom;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  /// Notes about checks that were skipped (e.g. no finite generator).
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  std::string to_string() const;
};

/// Two-out-of-three: any two of weq(f), weq(g), weq(gf) force the third.
AxiomReport check_two_out_of_three(const ModelStructure& ms, const Sample& sample);

/// Every commuting square with a cofibration on the left, a fibration on
/// the right, and a weak equivalence on either side has a diagonal lift.
AxiomReport check_lifting_axiom(const ModelStructure& ms, const Sample& sample);

/// Constructively generated retracts (direct-summand compressions) stay
/// in each of the three classes.
AxiomReport check_retract_axiom(const ModelStructure& ms, const Sample& sample);

/// Both factorization oracles return composable pairs in the advertised
/// classes.
AxiomReport check_factorization_axiom(const ModelStructure& ms, const Sample& sample);

/// Round trip between factorization systems and model structures: the
/// derived structure restricts back to the input classes, and the classes
/// recomputed from the derived structure agree with the derived deciders.
AxiomReport check_correspondence(const Fwfs& s, const Sample& sample);

/// Splitting behaviour of the distinguished classes: cofibrations are
/// epic under Hom(-, trivial generator) when one exists, fibrations are
/// epic under Hom(core generator, -), trivial cofibrations are split
/// monos, and trivial fibrations with cofibrant target are split epis.
AxiomReport check_split_lemma(const ModelStructure& ms, const Sample& sample);

/// Run every check; the harness exit status should be nonzero iff any
/// report records a failure.
std::vector<AxiomReport> check_all(const ModelStructure& ms, const Fwfs& s,
                                   const Sample& sample);

std::string render_reports(const std::vector<AxiomReport>& reports);
bool all_passed(const std::vector<AxiomReport>& reports);

}  // namespace fibrant
