#include "doctest.h"

#include "fibrant/matrix.hpp"

#include <random>

using namespace fibrant;

namespace {

Matrix random_integer_matrix(std::mt19937_64& rng, Field f) {
  std::uniform_int_distribution<int> size(0, 5);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::size_t rows = size(rng);
  std::size_t cols = size(rng);
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar(entry(rng), f);
  return m;
}

Matrix change_field(const Matrix& m, Field f) {
  Matrix out(m.rows(), m.cols(), f);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = Scalar(m.at(r, c).value(), f);
  return out;
}

}  // namespace

TEST_CASE("rank of a dependent-row matrix") {
  Field f = Field::rationals();
  Matrix m = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, f);
  CHECK(rank(m) == 1);
}

TEST_CASE("rank of identity and zero") {
  Field f = Field::rationals();
  CHECK(rank(Matrix::identity(4, f)) == 4);
  CHECK(rank(Matrix::zero(3, 5, f)) == 0);
  CHECK(rank(Matrix::zero(0, 0, f)) == 0);
}

TEST_CASE("solve returns a substituting solution and detects inconsistency") {
  Field f = Field::rationals();
  Matrix a = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}, f);
  Matrix b = Matrix::from_rows({{Rational(5)}, {Rational(11)}}, f);
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  Matrix singular = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, f);
  Matrix off = Matrix::from_rows({{Rational(0)}, {Rational(1)}}, f);
  CHECK_FALSE(solve(singular, off).has_value());
}

TEST_CASE("kernel basis columns are killed and count matches rank-nullity") {
  Field f = Field::rationals();
  Matrix m = Matrix::from_rows({{Rational(1), Rational(2), Rational(3)},
                                {Rational(2), Rational(4), Rational(6)}},
                               f);
  Matrix k = kernel_basis(m);
  CHECK(k.cols() == m.cols() - rank(m));
  CHECK((m * k).is_zero());
}

TEST_CASE("independent_columns picks a maximal independent subset") {
  Field f = Field::rationals();
  Matrix m = Matrix::from_rows({{Rational(1), Rational(2), Rational(0)},
                                {Rational(2), Rational(4), Rational(1)}},
                               f);
  auto cols = independent_columns(m);
  REQUIRE(cols.size() == 2);
  CHECK(cols[0] == 0);
  CHECK(cols[1] == 2);
}

TEST_CASE("inverse round trip") {
  Field f = Field::rationals();
  Matrix a = Matrix::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}}, f);
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(2, f));
  Matrix singular = Matrix::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}, f);
  CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("prime field arithmetic canonicalizes residues") {
  Field f5 = Field::prime(5);
  Scalar a(7, f5);
  CHECK(a.value() == 2);
  Scalar inv = Scalar(3, f5).inverse();
  CHECK((Scalar(3, f5) * inv).value() == 1);
}

TEST_CASE("random matrices: rank-nullity, solve substitution, rational vs F_101 rank") {
  std::mt19937_64 rng(0xC0FFEE);
  Field q = Field::rationals();
  Field f101 = Field::prime(101);
  for (int i = 0; i < 200; ++i) {
    Matrix m = random_integer_matrix(rng, q);
    std::size_t r = rank(m);
    CHECK(r + kernel_basis(m).cols() == m.cols());
    CHECK(rank(change_field(m, f101)) == r);

    if (m.cols() > 0) {
      Matrix y(m.cols(), 1, q);
      std::uniform_int_distribution<int> entry(-5, 5);
      for (std::size_t c = 0; c < m.cols(); ++c) y.at(c, 0) = Scalar(entry(rng), q);
      Matrix b = m * y;
      auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(m * *x == b);
    }
  }
}
