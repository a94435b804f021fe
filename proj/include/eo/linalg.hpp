#pragma once

/*
  Dense linear algebra over a FiniteField: row reduction, rank, kernels and
  row spaces, linear solving, entrywise Frobenius.

  Subspaces of F^n are represented by their reduced-echelon basis rows with
  zero rows dropped, so equal subspaces have equal matrices and set
  membership is syntactic.
*/

#include <cstdint>
#include <vector>

#include "eo/gf.hpp"

namespace eo::linalg {

class Matrix {
 public:
  using Elt = gf::FiniteField::Elt;

  Matrix(gf::FiniteField field, int rows, int cols);  // zero matrix
  Matrix(gf::FiniteField field, int rows, int cols, std::vector<Elt> row_major);

  static Matrix identity(const gf::FiniteField& field, int n);

  const gf::FiniteField& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elt at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Elt v) { data_[static_cast<std::size_t>(r) * cols_ + c] = v; }
  const std::vector<Elt>& data() const { return data_; }

  std::vector<Elt> row(int r) const;

  bool operator==(const Matrix&) const = default;

 private:
  gf::FiniteField field_;
  int rows_;
  int cols_;
  std::vector<Elt> data_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix frobenius(const Matrix& m, int power);  // entrywise sigma^power
Matrix vstack(const Matrix& a, const Matrix& b);
bool is_zero(const Matrix& m);

struct RowReduction {
  Matrix reduced;
  std::vector<int> pivot_cols;
};
RowReduction rref(const Matrix& m);

int rank(const Matrix& m);

// Canonical basis of the row space: reduced echelon rows, zero rows dropped.
// The result of this function is the canonical representation of a subspace.
Matrix row_space(const Matrix& m);

// Canonical basis of {x : m x = 0} (x as column vector), given as rows.
Matrix null_space(const Matrix& m);

// Solves a x = b for invertible square a; throws std::invalid_argument when
// singular.
Matrix solve(const Matrix& a, const Matrix& b);

// Subspace helpers; arguments must be canonical bases over the same field.
bool subspace_contains(const Matrix& space, const std::vector<Matrix::Elt>& vec);
bool subspace_leq(const Matrix& sub, const Matrix& space);
Matrix subspace_intersection(const Matrix& a, const Matrix& b);
Matrix zero_subspace(const gf::FiniteField& field, int n);
Matrix full_subspace(const gf::FiniteField& field, int n);

}  // namespace eo::linalg
