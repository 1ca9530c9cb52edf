#include "fibrant/resolution.hpp"

namespace fibrant {

Module projective_at(const AlgebraPtr& a, std::size_t v) {
  const Quiver& q = a->quiver();
  const Field f = a->field();
  std::vector<std::size_t> dims(q.vertex_count);
  for (std::size_t w = 0; w < q.vertex_count; ++w) dims[w] = a->basis_paths(v, w).size();
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Arrow& arr = q.arrows[ai];
    const auto& from = a->basis_paths(v, arr.source);
    Matrix m(dims[arr.target], dims[arr.source], f);
    for (std::size_t c = 0; c < from.size(); ++c) {
      Path p = from[c];
      p.arrows.push_back(ai);
      p.target = arr.target;
      Matrix coords = a->path_coordinates(p);
      for (std::size_t r = 0; r < coords.rows(); ++r) m.at(r, c) = coords.at(r, 0);
    }
    maps.push_back(std::move(m));
  }
  return Module(a, std::move(dims), std::move(maps));
}

std::vector<Module> projective_indecomposables(const AlgebraPtr& a) {
  std::vector<Module> out;
  for (std::size_t v = 0; v < a->quiver().vertex_count; ++v) out.push_back(projective_at(a, v));
  return out;
}

std::vector<Module> injective_indecomposables(const AlgebraPtr& a) {
  auto op = a->opposite();
  std::vector<Module> out;
  for (std::size_t v = 0; v < a->quiver().vertex_count; ++v)
    out.push_back(dualize(projective_at(op, v)));
  return out;
}

Morphism morphism_from_projective(const AlgebraPtr& a, std::size_t vertex, const Module& m,
                                  const Matrix& element) {
  const Quiver& q = a->quiver();
  if (element.rows() != m.dims()[vertex] || element.cols() != 1)
    throw dimension_mismatch("generator element shape");
  std::vector<Matrix> maps;
  for (std::size_t w = 0; w < q.vertex_count; ++w) {
    const auto& paths = a->basis_paths(vertex, w);
    Matrix mw(m.dims()[w], paths.size(), a->field());
    for (std::size_t c = 0; c < paths.size(); ++c) {
      Matrix img = m.path_action(paths[c]) * element;
      for (std::size_t r = 0; r < img.rows(); ++r) mw.at(r, c) = img.at(r, 0);
    }
    maps.push_back(std::move(mw));
  }
  return Morphism(projective_at(a, vertex), m, std::move(maps));
}

Module regular_module(const AlgebraPtr& a) {
  return direct_sum(projective_indecomposables(a), a).sum;
}

ProjectiveCover projective_cover(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  const Quiver& q = a->quiver();
  const Field f = a->field();
  // rad m at a vertex is spanned by the images of all incoming arrow maps
  std::vector<std::pair<std::size_t, Matrix>> generators;  // (vertex, element)
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    Matrix rad(m.dims()[v], 0, f);
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai)
      if (q.arrows[ai].target == v) rad = Matrix::hconcat(rad, m.arrow_map(ai));
    Matrix span = rad;
    std::size_t span_rank = rank(span);
    for (std::size_t i = 0; i < m.dims()[v]; ++i) {
      Matrix unit(m.dims()[v], 1, f);
      unit.at(i, 0) = one_of(f);
      Matrix cand = Matrix::hconcat(span, unit);
      std::size_t cand_rank = rank(cand);
      if (cand_rank > span_rank) {
        span = std::move(cand);
        span_rank = cand_rank;
        generators.emplace_back(v, unit);
      }
    }
  }
  if (generators.empty()) {
    Module z = zero_module(a);
    Morphism zm = zero_morphism(z, m);
    return {std::move(z), std::move(zm)};
  }
  std::vector<Module> parts;
  std::vector<Morphism> comps;
  for (const auto& [v, elt] : generators) {
    comps.push_back(morphism_from_projective(a, v, m, elt));
    parts.push_back(comps.back().source());
  }
  DirectSum ds = direct_sum(parts, a);
  Morphism cover = row_morphism(comps, ds.sum);
  return {ds.sum, std::move(cover)};
}

Resolution minimal_projective_resolution(const Module& m, std::size_t length,
                                         bool allow_truncation) {
  Resolution res;
  ProjectiveCover c0 = projective_cover(m);
  res.terms.push_back(c0.cover);
  res.augmentation = c0.map;
  Morphism into_prev = c0.map;  // epi P_i -> (current kernel target)
  for (std::size_t i = 0; i < length; ++i) {
    SubquotientPair k = kernel(into_prev);
    if (k.object.is_zero()) return res;
    ProjectiveCover c = projective_cover(k.object);
    res.terms.push_back(c.cover);
    res.boundary.push_back(compose(k.map, c.map));
    into_prev = c.map;
  }
  // the last kernel may still be nonzero
  if (!allow_truncation && !kernel(into_prev).object.is_zero())
    throw resolution_overflow("module not resolved within bound " + std::to_string(length));
  return res;
}

namespace {

// matrix (in hom bases) of precomposition Hom(p, n) -> Hom(q, n) with d: q -> p
Matrix precomposition_matrix(const Module& p, const Module& q, const Morphism& d,
                             const Module& n) {
  auto from = hom_basis(p, n);
  auto to = hom_basis(q, n);
  const Field f = n.algebra()->field();
  Matrix basis_to(zero_morphism(q, n).vectorize().rows(), to.size(), f);
  for (std::size_t j = 0; j < to.size(); ++j) {
    Matrix col = to[j].vectorize();
    for (std::size_t i = 0; i < col.rows(); ++i) basis_to.at(i, j) = col.at(i, 0);
  }
  Matrix t(to.size(), from.size(), f);
  for (std::size_t j = 0; j < from.size(); ++j) {
    Matrix v = compose(from[j], d).vectorize();
    auto x = solve(basis_to, v);
    if (!x) throw std::logic_error("precomposition left the hom space");
    for (std::size_t i = 0; i < to.size(); ++i) t.at(i, j) = x->at(i, 0);
  }
  return t;
}

}  // namespace

std::size_t ext_dim(std::size_t i, const Module& m, const Module& n) {
  if (i < 1) throw std::logic_error("ext_dim needs i >= 1");
  Resolution res = minimal_projective_resolution(m, i + 1);
  auto term = [&](std::size_t j) -> const Module* {
    return j < res.terms.size() ? &res.terms[j] : nullptr;
  };
  const Module* pi = term(i);
  if (!pi) return 0;
  std::size_t dim_hom_i = hom_dim(*pi, n);
  // kernel of T_i : Hom(P_i, n) -> Hom(P_{i+1}, n)
  std::size_t ker_dim = dim_hom_i;
  if (const Module* pnext = term(i + 1)) {
    Matrix ti = precomposition_matrix(*pi, *pnext, res.boundary[i], n);
    ker_dim = dim_hom_i - rank(ti);
  }
  // image of T_{i-1} : Hom(P_{i-1}, n) -> Hom(P_i, n)
  const Module* pprev = term(i - 1);
  Matrix tprev = precomposition_matrix(*pprev, *pi, res.boundary[i - 1], n);
  return ker_dim - rank(tprev);
}

bool is_hereditary(const AlgebraPtr& a) {
  if (!a->relations().empty()) return false;
  // acyclic: no path of positive length returns to its source
  const Quiver& q = a->quiver();
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    std::vector<bool> reached(q.vertex_count, false);
    std::vector<std::size_t> stack{v};
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      for (const auto& arr : q.arrows) {
        if (arr.source != cur) continue;
        if (arr.target == v) return false;
        if (!reached[arr.target]) {
          reached[arr.target] = true;
          stack.push_back(arr.target);
        }
      }
    }
  }
  return true;
}

}  // namespace fibrant
