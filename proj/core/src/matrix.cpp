#include "fibrant/matrix.hpp"

#include <sstream>

namespace fibrant {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, zero_of(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one_of(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, Field f) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw dimension_mismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(rows[i][j], f);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("add");
  Matrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_mismatch("sub");
  Matrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw dimension_mismatch("mul");
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& e : r.entries_) e *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix r(rows_, 1, field_);
  for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
  return r;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw dimension_mismatch("hconcat");
  Matrix r(a.rows_, a.cols_ + b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw dimension_mismatch("vconcat");
  Matrix r(a.rows_ + b.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

Matrix Matrix::submatrix_cols(std::size_t first, std::size_t count) const {
  Matrix r(rows_, count, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r.at(i, j) = at(i, first + j);
  return r;
}

Matrix Matrix::vectorize() const {
  Matrix r(rows_ * cols_, 1, field_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.at(i, 0) = entries_[i];
  return r;
}

namespace {

struct Echelon {
  Matrix m;                        // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per pivot row
};

Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::size_t> independent_columns(const Matrix& m) { return rref(m).pivots; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw dimension_mismatch("solve");
  Echelon e = rref(Matrix::hconcat(a, b));
  // consistent iff no pivot lands in the b block
  for (std::size_t p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(e.pivots[r], j) = e.m.at(r, a.cols() + j);
  return x;
}

Matrix kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pi < e.pivots.size() && e.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(m.cols(), free_cols.size(), m.field());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k.at(fc, j) = one_of(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k.at(e.pivots[r], j) = -e.m.at(r, fc);
  }
  return k;
}

bool column_space_membership(const Matrix& m, const Matrix& v) {
  if (v.cols() != 1 || v.rows() != m.rows()) throw dimension_mismatch("membership");
  return solve(m, v).has_value();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.rows(), m.field()));
  if (!x) return std::nullopt;
  if (!(m * *x == Matrix::identity(m.rows(), m.field()))) return std::nullopt;
  return x;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << m.at(i, j).str();
      if (j + 1 < m.cols()) os << ",";
    }
    os << "]";
    if (i + 1 < m.rows()) os << ",";
  }
  os << "]";
  return os.str();
}

}  // namespace fibrant
