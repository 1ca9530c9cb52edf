#include "fibrant/additive.hpp"

#include <stdexcept>

namespace fibrant {

bool split_identities_hold(const SplitData& s) {
  const Module& a = s.forward.source();
  const Module& b = s.forward.target();
  const Module& c = s.cokernel_part.target();
  Morphism id_a = identity_morphism(a);
  Morphism id_b = identity_morphism(b);
  Morphism id_c = identity_morphism(c);
  if (!(compose(s.retraction, s.forward) == id_a)) return false;
  if (!(compose(s.cokernel_part, s.section) == id_c)) return false;
  Morphism mid = add(compose(s.forward, s.retraction), compose(s.section, s.cokernel_part));
  return mid == id_b;
}

std::optional<SplitData> split_mono_check(const Morphism& f) {
  if (!is_mono(f)) return std::nullopt;
  const Module& a = f.source();
  const Module& b = f.target();
  // Find r : B -> A with r*f = id_A, linearly over the hom basis of (B, A).
  auto basis = hom_basis(b, a);
  if (basis.empty()) {
    if (a.total_dim() != 0) return std::nullopt;
  }
  Matrix id_vec = identity_morphism(a).vectorize();
  std::size_t vec_len = id_vec.rows();
  Matrix system(vec_len, basis.size(), a.algebra()->field());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Matrix col = compose(basis[j], f).vectorize();
    for (std::size_t i = 0; i < vec_len; ++i) system.at(i, j) = col.at(i, 0);
  }
  auto sol = solve(system, id_vec);
  if (!sol && vec_len > 0) return std::nullopt;
  Morphism r = zero_morphism(b, a);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (sol) r = add(r, scale(sol->at(j, 0), basis[j]));
  }
  // Cokernel projection and a compatible section.
  auto ck = cokernel(f);
  Morphism pi = ck.map;
  const Module& c = pi.target();
  // s = (id_B - f*r) lifted through pi: solve pi * s = id_C with
  // s * pi = id_B - f*r.  Take s acting on representatives: for each
  // vertex choose s_v with pi_v s_v = id and s_v pi_v = (id - f r)_v.
  Morphism comp = add(identity_morphism(b), scale(Scalar(Rational(-1), a.algebra()->field()),
                                                  compose(f, r)));
  std::vector<Matrix> s_maps;
  s_maps.reserve(b.dims().size());
  for (std::size_t v = 0; v < b.dims().size(); ++v) {
    // comp_v = s_v * pi_v and pi_v has full row rank; solve columnwise.
    // s_v = comp_v * pi_v^+ where pi_v^+ is any right inverse; obtain it
    // by solving pi_v * X = id.
    const Matrix& pv = pi.vertex_maps()[v];
    Matrix idc = Matrix::identity(pv.rows(), pv.field());
    Matrix right_inv(pv.cols(), pv.rows(), pv.field());
    for (std::size_t jcol = 0; jcol < pv.rows(); ++jcol) {
      Matrix e(pv.rows(), 1, pv.field());
      e.at(jcol, 0) = one_of(pv.field());
      auto x = solve(pv, e);
      if (!x) return std::nullopt;
      for (std::size_t i = 0; i < pv.cols(); ++i) right_inv.at(i, jcol) = x->at(i, 0);
    }
    s_maps.push_back(comp.vertex_maps()[v] * right_inv);
  }
  Morphism section(c, b, s_maps);
  SplitData data{f, r, pi, section};
  if (!split_identities_hold(data)) return std::nullopt;
  return data;
}

std::optional<SplitData> split_epi_check(const Morphism& g) {
  if (!is_epi(g)) return std::nullopt;
  const Module& b = g.source();
  const Module& c = g.target();
  auto basis = hom_basis(c, b);
  Matrix id_vec = identity_morphism(c).vectorize();
  std::size_t vec_len = id_vec.rows();
  Matrix system(vec_len, basis.size(), c.algebra()->field());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Matrix col = compose(g, basis[j]).vectorize();
    for (std::size_t i = 0; i < vec_len; ++i) system.at(i, j) = col.at(i, 0);
  }
  auto sol = solve(system, id_vec);
  if (!sol && vec_len > 0) return std::nullopt;
  Morphism s = zero_morphism(c, b);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (sol) s = add(s, scale(sol->at(j, 0), basis[j]));
  }
  auto kr = kernel(g);
  Morphism inc = kr.map;
  const Module& a = inc.source();
  // Retraction r : B -> A with r*inc = id_A and inc*r = id_B - s*g.
  Morphism comp = add(identity_morphism(b), scale(Scalar(Rational(-1), b.algebra()->field()),
                                                  compose(s, g)));
  std::vector<Matrix> r_maps;
  r_maps.reserve(b.dims().size());
  for (std::size_t v = 0; v < b.dims().size(); ++v) {
    // inc_v has full column rank; r_v = inc_v^+ * comp_v where inc_v^+ is
    // a left inverse, obtained by solving inc_v^T * X = id via transpose.
    const Matrix& iv = inc.vertex_maps()[v];
    Matrix left_inv(iv.cols(), iv.rows(), iv.field());
    Matrix ivt = iv.transpose();
    for (std::size_t jcol = 0; jcol < iv.cols(); ++jcol) {
      Matrix e(iv.cols(), 1, iv.field());
      e.at(jcol, 0) = one_of(iv.field());
      auto x = solve(ivt, e);
      if (!x) return std::nullopt;
      for (std::size_t i = 0; i < iv.rows(); ++i) left_inv.at(jcol, i) = x->at(i, 0);
    }
    r_maps.push_back(left_inv * comp.vertex_maps()[v]);
  }
  Morphism r(b, a, r_maps);
  SplitData data{inc, r, g, s};
  if (!split_identities_hold(data)) return std::nullopt;
  return data;
}

namespace {

// All pairwise composites x -> u -> y, plus their vectorizations stacked
// as columns.
std::pair<std::vector<Morphism>, Matrix> composite_span(const Module& x, const Module& u,
                                                        const Module& y) {
  auto in = hom_basis(x, u);
  auto out = hom_basis(u, y);
  std::vector<Morphism> composites;
  composites.reserve(in.size() * out.size());
  for (const auto& b : out) {
    for (const auto& a : in) composites.push_back(compose(b, a));
  }
  std::size_t vec_len = zero_morphism(x, y).vectorize().rows();
  Matrix span(vec_len, composites.size(), x.algebra()->field());
  for (std::size_t j = 0; j < composites.size(); ++j) {
    Matrix col = composites[j].vectorize();
    for (std::size_t i = 0; i < vec_len; ++i) span.at(i, j) = col.at(i, 0);
  }
  return {std::move(composites), std::move(span)};
}

}  // namespace

std::vector<Morphism> factor_ideal_basis(const Module& x, const Module& u, const Module& y) {
  auto [composites, span] = composite_span(x, u, y);
  std::vector<Morphism> result;
  for (std::size_t j : independent_columns(span)) result.push_back(composites[j]);
  return result;
}

Matrix factor_ideal_matrix(const Module& x, const Module& u, const Module& y) {
  auto basis = factor_ideal_basis(x, u, y);
  std::size_t vec_len = zero_morphism(x, y).vectorize().rows();
  Matrix out(vec_len, basis.size(), x.algebra()->field());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Matrix col = basis[j].vectorize();
    for (std::size_t i = 0; i < vec_len; ++i) out.at(i, j) = col.at(i, 0);
  }
  return out;
}

bool add_membership(const Module& x, const Module& u) {
  if (x.total_dim() == 0) return true;
  auto [composites, span] = composite_span(x, u, x);
  Matrix id_vec = identity_morphism(x).vectorize();
  if (span.cols() == 0) return id_vec.is_zero();
  return column_space_membership(span, id_vec);
}

Morphism right_approximation(const Module& u, const Module& b) {
  auto basis = hom_basis(u, b);
  if (basis.empty()) {
    Module z = zero_module(u.algebra());
    return zero_morphism(z, b);
  }
  std::vector<Module> parts(basis.size(), u);
  auto sum = direct_sum(parts, u.algebra());
  return row_morphism(basis, sum.sum);
}

Morphism left_approximation(const Module& b, const Module& u) {
  auto basis = hom_basis(b, u);
  if (basis.empty()) {
    Module z = zero_module(u.algebra());
    return zero_morphism(b, z);
  }
  std::vector<Module> parts(basis.size(), u);
  auto sum = direct_sum(parts, u.algebra());
  return column_morphism(basis, sum.sum);
}

bool hom_epic_check(const Module& u, const Morphism& f) {
  // Post-composition with f maps Hom(u, A) onto Hom(u, B) iff every basis
  // element of Hom(u, B) lies in the span of {f * g : g in Hom(u, A)}.
  auto from = hom_basis(u, f.source());
  auto to = hom_basis(u, f.target());
  if (to.empty()) return true;
  std::size_t vec_len = zero_morphism(u, f.target()).vectorize().rows();
  Matrix span(vec_len, from.size(), u.algebra()->field());
  for (std::size_t j = 0; j < from.size(); ++j) {
    Matrix col = compose(f, from[j]).vectorize();
    for (std::size_t i = 0; i < vec_len; ++i) span.at(i, j) = col.at(i, 0);
  }
  Matrix targets(vec_len, to.size(), u.algebra()->field());
  for (std::size_t j = 0; j < to.size(); ++j) {
    Matrix col = to[j].vectorize();
    for (std::size_t i = 0; i < vec_len; ++i) targets.at(i, j) = col.at(i, 0);
  }
  return rank(span) == rank(Matrix::hconcat(span, targets));
}

bool co_hom_epic_check(const Morphism& f, const Module& u) {
  auto from = hom_basis(f.target(), u);
  auto to = hom_basis(f.source(), u);
  if (to.empty()) return true;
  std::size_t vec_len = zero_morphism(f.source(), u).vectorize().rows();
  Matrix span(vec_len, from.size(), u.algebra()->field());
  for (std::size_t j = 0; j < from.size(); ++j) {
    Matrix col = compose(from[j], f).vectorize();
    for (std::size_t i = 0; i < vec_len; ++i) span.at(i, j) = col.at(i, 0);
  }
  Matrix targets(vec_len, to.size(), u.algebra()->field());
  for (std::size_t j = 0; j < to.size(); ++j) {
    Matrix col = to[j].vectorize();
    for (std::size_t i = 0; i < vec_len; ++i) targets.at(i, j) = col.at(i, 0);
  }
  return rank(span) == rank(Matrix::hconcat(span, targets));
}

bool commutes(const LiftingProblem& p) {
  return compose(p.right, p.top) == compose(p.bottom, p.left);
}

std::optional<Morphism> solve_lifting(const LiftingProblem& p) {
  if (!commutes(p)) throw std::logic_error("lifting problem does not commute");
  const Module& b = p.left.target();
  const Module& c = p.right.source();
  auto basis = hom_basis(b, c);
  // Unknown h = sum c_j basis[j]; equations h*left = top and right*h = bottom.
  Matrix top_vec = p.top.vectorize();
  Matrix bottom_vec = p.bottom.vectorize();
  std::size_t rows1 = top_vec.rows();
  std::size_t rows2 = bottom_vec.rows();
  const Field& field = b.algebra()->field();
  Matrix system(rows1 + rows2, basis.size(), field);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Matrix c1 = compose(basis[j], p.left).vectorize();
    Matrix c2 = compose(p.right, basis[j]).vectorize();
    for (std::size_t i = 0; i < rows1; ++i) system.at(i, j) = c1.at(i, 0);
    for (std::size_t i = 0; i < rows2; ++i) system.at(rows1 + i, j) = c2.at(i, 0);
  }
  Matrix rhs = Matrix::vconcat(top_vec, bottom_vec);
  auto sol = solve(system, rhs);
  if (!sol) {
    if (rhs.is_zero()) return zero_morphism(b, c);
    return std::nullopt;
  }
  Morphism h = zero_morphism(b, c);
  for (std::size_t j = 0; j < basis.size(); ++j) h = add(h, scale(sol->at(j, 0), basis[j]));
  return h;
}

bool verify_retract(const Morphism& g, const Morphism& f, const Morphism& phi1,
                    const Morphism& psi1, const Morphism& phi2, const Morphism& psi2) {
  if (!(compose(psi1, phi1) == identity_morphism(g.source()))) return false;
  if (!(compose(psi2, phi2) == identity_morphism(g.target()))) return false;
  if (!(compose(f, phi1) == compose(phi2, g))) return false;
  if (!(compose(g, psi1) == compose(psi2, f))) return false;
  return true;
}

}  // namespace fibrant
