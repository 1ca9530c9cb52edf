#include "fibrant/quotient.hpp"

namespace fibrant {

namespace {

// True iff target lies in the span of columns(lhs) for the stacked
// vectorized morphisms.
bool representable(const std::vector<Morphism>& generators, const Matrix& target) {
  if (target.is_zero()) return true;
  if (generators.empty()) return false;
  Matrix span(target.rows(), generators.size(), target.field());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    Matrix col = generators[j].vectorize();
    for (std::size_t i = 0; i < target.rows(); ++i) span.at(i, j) = col.at(i, 0);
  }
  return column_space_membership(span, target);
}

}  // namespace

QuotientHom quotient_hom(const Module& x, const Module& y, const Module& u) {
  QuotientHom q;
  q.ambient_basis = hom_basis(x, y);
  q.ideal_basis = factor_ideal_basis(x, u, y);
  q.quotient_dim = q.ambient_basis.size() - q.ideal_basis.size();
  return q;
}

bool quotient_iso_check(const Morphism& f, const Module& u) {
  const Module& x = f.source();
  const Module& y = f.target();
  // Left inverse: g1 * f = id_x modulo morphisms factoring through add u.
  {
    std::vector<Morphism> generators;
    for (const auto& g : hom_basis(y, x)) generators.push_back(compose(g, f));
    for (const auto& h : factor_ideal_basis(x, u, x)) generators.push_back(h);
    if (!representable(generators, identity_morphism(x).vectorize())) return false;
  }
  // Right inverse: f * g2 = id_y modulo the ideal at y.
  {
    std::vector<Morphism> generators;
    for (const auto& g : hom_basis(y, x)) generators.push_back(compose(f, g));
    for (const auto& h : factor_ideal_basis(y, u, y)) generators.push_back(h);
    if (!representable(generators, identity_morphism(y).vectorize())) return false;
  }
  return true;
}

Module cofibrant_replacement(const ModelStructure& ms, const Module& x) {
  if (ms.cofibrant.contains(x)) return x;
  Morphism from_zero = zero_morphism(zero_module(x.algebra()), x);
  Factorization fac = ms.factor_cofib_tfib(from_zero);
  return fac.first.target();
}

QuotientHom ho_hom(const ModelStructure& ms, const Module& x, const Module& y) {
  Module qx = cofibrant_replacement(ms, x);
  Module qy = cofibrant_replacement(ms, y);
  return quotient_hom(qx, qy, ms.tc_generator);
}

AxiomReport check_theorem_quotient_criterion(const ModelStructure& ms, const Sample& sample) {
  AxiomReport report{"quotient-criterion"};
  for (const auto& f : sample.morphisms) {
    if (!ms.cofibrant.contains(f.source()) || !ms.cofibrant.contains(f.target())) continue;
    ++report.checked;
    bool weq = ms.weq.contains(f);
    bool iso = quotient_iso_check(f, ms.tc_generator);
    if (weq != iso) {
      report.failures.push_back("weak equivalence and quotient invertibility disagree at " +
                                describe(f));
    }
  }
  return report;
}

}  // namespace fibrant
