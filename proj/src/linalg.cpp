#include "eo/linalg.hpp"

#include <stdexcept>

namespace eo::linalg {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("field mismatch");
}

}  // namespace

Matrix::Matrix(gf::FiniteField field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix::Matrix(gf::FiniteField field, int rows, int cols, std::vector<Elt> row_major)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (data_.size() != static_cast<std::size_t>(rows) * cols) throw std::invalid_argument("matrix data size mismatch");
  for (Elt v : data_)
    if (!field_.is_element(v)) throw std::invalid_argument("matrix entry is not a field element");
}

Matrix Matrix::identity(const gf::FiniteField& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

std::vector<Matrix::Elt> Matrix::row(int r) const {
  return std::vector<Elt>(data_.begin() + static_cast<std::size_t>(r) * cols_,
                          data_.begin() + static_cast<std::size_t>(r + 1) * cols_);
}

Matrix mul(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  const gf::FiniteField& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Matrix::Elt aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        out.set(i, j, f.add(out.at(i, j), f.mul(aik, b.at(k, j))));
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(j, i, m.at(i, j));
  return out;
}

Matrix frobenius(const Matrix& m, int power) {
  Matrix out = m;
  const gf::FiniteField& f = m.field();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, f.frobenius(m.at(i, j), power));
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("column mismatch in vstack");
  std::vector<Matrix::Elt> data = a.data();
  data.insert(data.end(), b.data().begin(), b.data().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

bool is_zero(const Matrix& m) {
  for (Matrix::Elt v : m.data())
    if (v != 0) return false;
  return true;
}

RowReduction rref(const Matrix& m) {
  const gf::FiniteField& f = m.field();
  Matrix a = m;
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) {
        const Matrix::Elt t = a.at(r, j);
        a.set(r, j, a.at(piv, j));
        a.set(piv, j, t);
      }
    const Matrix::Elt inv = f.inv(a.at(r, col));
    for (int j = 0; j < a.cols(); ++j) a.set(r, j, f.mul(inv, a.at(r, j)));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Matrix::Elt c = a.at(i, col);
      if (c == 0) continue;
      for (int j = 0; j < a.cols(); ++j) a.set(i, j, f.sub(a.at(i, j), f.mul(c, a.at(r, j))));
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

Matrix row_space(const Matrix& m) {
  RowReduction rr = rref(m);
  const int r = static_cast<int>(rr.pivot_cols.size());
  std::vector<Matrix::Elt> data(rr.reduced.data().begin(),
                                rr.reduced.data().begin() + static_cast<std::size_t>(r) * m.cols());
  return Matrix(m.field(), r, m.cols(), std::move(data));
}

Matrix null_space(const Matrix& m) {
  const gf::FiniteField& f = m.field();
  RowReduction rr = rref(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Matrix::Elt> rows;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    std::vector<Matrix::Elt> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(fc)] = f.one();
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
      v[static_cast<std::size_t>(rr.pivot_cols[r])] = f.neg(rr.reduced.at(static_cast<int>(r), fc));
    rows.insert(rows.end(), v.begin(), v.end());
  }
  const int k = n - static_cast<int>(rr.pivot_cols.size());
  return row_space(Matrix(f, k, n, std::move(rows)));
}

Matrix solve(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw std::invalid_argument("solve needs square a and matching b");
  const gf::FiniteField& f = a.field();
  const int n = a.rows();
  Matrix aug(f, n, n + b.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) aug.set(i, n + j, b.at(i, j));
  }
  RowReduction red = rref(aug);
  if (static_cast<int>(red.pivot_cols.size()) < n || red.pivot_cols[static_cast<std::size_t>(n) - 1] != n - 1)
    throw std::invalid_argument("singular system");
  Matrix x(f, n, b.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < b.cols(); ++j) x.set(i, j, red.reduced.at(i, n + j));
  return x;
}

bool subspace_contains(const Matrix& space, const std::vector<Matrix::Elt>& vec) {
  if (static_cast<int>(vec.size()) != space.cols()) throw std::invalid_argument("vector length mismatch");
  Matrix stacked = vstack(space, Matrix(space.field(), 1, space.cols(), vec));
  return rank(stacked) == space.rows();
}

bool subspace_leq(const Matrix& sub, const Matrix& space) {
  check_same_field(sub, space);
  if (sub.cols() != space.cols()) throw std::invalid_argument("ambient dimension mismatch");
  return rank(vstack(space, sub)) == space.rows();
}

Matrix subspace_intersection(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("ambient dimension mismatch");
  // x in a ∩ b  <=>  Da x = 0 and Db x = 0 for the annihilators of a and b.
  Matrix da = null_space(a);
  Matrix db = null_space(b);
  if (da.rows() == 0) return b;  // a is the full space
  if (db.rows() == 0) return a;
  return null_space(vstack(da, db));
}

Matrix zero_subspace(const gf::FiniteField& field, int n) { return Matrix(field, 0, n); }

Matrix full_subspace(const gf::FiniteField& field, int n) { return Matrix::identity(field, n); }

}  // namespace eo::linalg
