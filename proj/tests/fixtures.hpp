#pragma once

#include "fibrant/instances.hpp"
#include "fibrant/sample.hpp"

namespace fixtures {

using namespace fibrant;

/// k[x]/(x^2): one vertex, one loop, relation x*x = 0.
inline AlgebraPtr dual_numbers() {
  Quiver q;
  q.vertex_count = 1;
  q.arrows = {{0, 0, "x"}};
  Relation r;
  r.terms.push_back({Rational(1), {0, 0}});
  return Algebra::make(q, {r}, Field::rationals());
}

/// Simple module k of the dual numbers: x acts by zero on a line.
inline Module dual_numbers_simple(const AlgebraPtr& a) {
  return Module(a, {1}, {Matrix::zero(1, 1, a->field())});
}

/// Regular module A = k[x]/(x^2): x acts as the nilpotent Jordan block.
inline Module dual_numbers_regular(const AlgebraPtr& a) {
  Matrix x = Matrix::zero(2, 2, a->field());
  x.at(1, 0) = Scalar(1, a->field());
  return Module(a, {2}, {x});
}

/// Path algebra of the A2 quiver 0 -> 1.
inline AlgebraPtr a2() {
  Quiver q;
  q.vertex_count = 2;
  q.arrows = {{0, 1, "a"}};
  return Algebra::make(q, {}, Field::rationals());
}

inline Module a2_p1(const AlgebraPtr& a) {
  return Module(a, {1, 1}, {Matrix::from_rows({{Rational(1)}}, a->field())});
}

inline Module a2_s1(const AlgebraPtr& a) {
  return Module(a, {1, 0}, {Matrix::zero(0, 1, a->field())});
}

inline Module a2_s2(const AlgebraPtr& a) {
  return Module(a, {0, 1}, {Matrix::zero(1, 0, a->field())});
}

/// The tilting module T = P1 + S1 in a fixed basis.
inline Module a2_t(const AlgebraPtr& a) {
  return Module(a, {2, 1}, {Matrix::from_rows({{Rational(1), Rational(0)}}, a->field())});
}

/// The canonical epi P1 ->> S1.
inline Morphism a2_p1_to_s1(const Module& p1, const Module& s1) {
  return Morphism(p1, s1,
                  {Matrix::from_rows({{Rational(1)}}, p1.algebra()->field()),
                   Matrix::zero(0, 1, p1.algebra()->field())});
}

/// The inclusion S2 >-> P1 of the radical.
inline Morphism a2_s2_to_p1(const Module& s2, const Module& p1) {
  return Morphism(s2, p1,
                  {Matrix::zero(1, 0, p1.algebra()->field()),
                   Matrix::from_rows({{Rational(1)}}, p1.algebra()->field())});
}

}  // namespace fixtures
