#include "doctest.h"

#include "fibrant/verifier.hpp"
#include "fixtures.hpp"

using namespace fibrant;

TEST_CASE("Frobenius structure over the dual numbers") {
  auto a = fixtures::dual_numbers();
  Module reg = fixtures::dual_numbers_regular(a);
  Module k = fixtures::dual_numbers_simple(a);
  Fwfs s = build_w_structure(a, reg);

  // 0 -> k is a cofibration (Hom(-, add A)-epic from the zero object).
  CHECK(s.cofib.contains(zero_morphism(zero_module(a), k)));
  // The projection A ->> k is not a trivial fibration: not split.
  Morphism proj(reg, k, {Matrix::from_rows({{Rational(1), Rational(0)}}, a->field())});
  CHECK_FALSE(s.tfib.contains(proj));
  // Factorization oracle produces members of the advertised classes.
  Factorization fac = s.factor(proj);
  CHECK(compose(fac.second, fac.first) == proj);
  CHECK(s.cofib.contains(fac.first));
  CHECK(s.tfib.contains(fac.second));
}

TEST_CASE("injective w-structure picks the injective cogenerator") {
  auto a = fixtures::a2();
  Fwfs s = build_injective_w_structure(a);
  // Injectives of kA2: I1 = S1 and I2 = P1, total dims (2, 1).
  CHECK(s.tc_generator.dims() == std::vector<std::size_t>{2, 1});
  REQUIRE(s.tf_generator.has_value());
  CHECK(add_membership(fixtures::a2_p1(a), *s.tf_generator));
  CHECK(add_membership(fixtures::a2_s1(a), *s.tf_generator));
  CHECK_FALSE(add_membership(fixtures::a2_s2(a), *s.tf_generator));
}

TEST_CASE("tilting construction validates its preconditions") {
  auto a = fixtures::a2();
  CHECK_THROWS_AS(build_tilting_omega_structure(a, fixtures::a2_s2(a)), not_tilting);

  Quiver loop;
  loop.vertex_count = 1;
  loop.arrows = {{0, 0, "x"}};
  Relation r;
  r.terms.push_back({Rational(1), {0, 0}});
  auto nonhereditary = Algebra::make(loop, {r}, Field::rationals());
  CHECK_THROWS_AS(
      build_tilting_omega_structure(nonhereditary, fixtures::dual_numbers_regular(nonhereditary)),
      std::invalid_argument);
}

TEST_CASE("tilting classes and approximation oracles") {
  auto a = fixtures::a2();
  Module t = fixtures::a2_t(a);
  TiltingInstance inst = build_tilting_omega_structure(a, t);
  Module s1 = fixtures::a2_s1(a);
  Module s2 = fixtures::a2_s2(a);
  Module p1 = fixtures::a2_p1(a);

  // X-class is all of mod kA2 for this T; Y-class is Ext-orthogonality.
  CHECK(inst.data.x_class.contains(s2));
  CHECK(inst.data.x_class.contains(direct_sum({s1, s2}, a).sum));
  CHECK(inst.data.y_class.contains(p1));
  CHECK_FALSE(inst.data.y_class.contains(s2));

  // Special preenvelope of S2: mono into a Y-object with X-cokernel.
  Morphism env = inst.data.preenvelope_oracle(s2);
  CHECK(is_mono(env));
  CHECK(inst.data.y_class.contains(env.target()));
  CHECK(inst.data.x_class.contains(cokernel(env).object));
  CHECK(ext_dim(1, t, env.target()) == 0);

  // Special precover of S1 + S2: epi from an X-object with Y-kernel.
  Morphism pre = inst.data.precover_oracle(direct_sum({s1, s2}, a).sum);
  CHECK(is_epi(pre));
  CHECK(inst.data.x_class.contains(pre.source()));
  CHECK(inst.data.y_class.contains(kernel(pre).object));
}

TEST_CASE("relationship report flags the expected landmarks") {
  auto a = fixtures::dual_numbers();
  Module reg = fixtures::dual_numbers_regular(a);
  Fwfs s = build_w_structure(a, reg);
  ModelStructure ms = derive_structure(s);
  SampleOptions opt;
  opt.random_per_pair = 1;
  Sample sample = build_sample({fixtures::dual_numbers_simple(a), reg}, a, opt);
  RelationshipReport rep = relationship_report(ms, sample);
  CHECK(rep.generator_matches_projectives);
  CHECK(rep.trivial_matches_injectives);
  CHECK(rep.frobenius);
  CHECK(rep.cofib_is_mono_with_cofibrant_cokernel);
  CHECK(rep.fib_is_epi);
  CHECK(rep.ext_witnesses.empty());
}

TEST_CASE("injective w-structure is not a cotorsion pair: ext witness") {
  auto a = fixtures::a2();
  Fwfs s = build_injective_w_structure(a);
  ModelStructure ms = derive_structure(s);
  SampleOptions opt;
  opt.random_per_pair = 1;
  Sample sample =
      build_sample({fixtures::a2_p1(a), fixtures::a2_s1(a), fixtures::a2_s2(a)}, a, opt);
  RelationshipReport rep = relationship_report(ms, sample);
  CHECK_FALSE(rep.ext_witnesses.empty());
  // concrete witness: Ext^1(S1, S2) = 1 against the injective S1
  CHECK(ext_dim(1, fixtures::a2_s1(a), fixtures::a2_s2(a)) == 1);
}

TEST_CASE("dual transport round trip and dual axioms") {
  auto a = fixtures::a2();
  Fwfs s = build_injective_w_structure(a);
  Cwfs dual = dual_of_fwfs(s);
  Fwfs back = dual_of_cwfs(dual);
  CHECK(back.algebra.get() == s.algebra.get());

  SampleOptions opt;
  opt.random_per_pair = 1;
  Sample sample =
      build_sample({fixtures::a2_p1(a), fixtures::a2_s1(a), fixtures::a2_s2(a)}, a, opt);
  for (const auto& f : sample.morphisms) {
    CHECK(back.cofib.contains(f) == s.cofib.contains(f));
    CHECK(back.tfib.contains(f) == s.tfib.contains(f));
  }

  Sample op_sample;
  for (const auto& x : sample.objects) op_sample.objects.push_back(dualize(x));
  for (const auto& f : sample.morphisms) op_sample.morphisms.push_back(dualize(f));
  Report r = verify_cwfs(dual, op_sample);
  CHECK(r.all_passed());
  bool saw_left_cancellation = false;
  for (const auto& line : r.lines) {
    if (line.axiom == "left-cancellation") saw_left_cancellation = true;
  }
  CHECK(saw_left_cancellation);
}

TEST_CASE("corrupting a decider is caught by the axiom suite") {
  auto a = fixtures::dual_numbers();
  Module reg = fixtures::dual_numbers_regular(a);
  Fwfs s = build_w_structure(a, reg);
  SampleOptions opt;
  opt.random_per_pair = 1;
  Sample sample = build_sample({fixtures::dual_numbers_simple(a), reg}, a, opt);
  REQUIRE(verify_fwfs(s, sample).all_passed());

  Fwfs broken_cofib = s;
  auto cofib_decide = s.cofib.decide;
  broken_cofib.cofib =
      MorphismClass{"corrupted", [cofib_decide](const Morphism& f) { return !cofib_decide(f); }};
  CHECK_FALSE(verify_fwfs(broken_cofib, sample).all_passed());

  Fwfs broken_tfib = s;
  auto tfib_decide = s.tfib.decide;
  broken_tfib.tfib =
      MorphismClass{"corrupted", [tfib_decide](const Morphism& f) { return !tfib_decide(f); }};
  CHECK_FALSE(verify_fwfs(broken_tfib, sample).all_passed());
}
