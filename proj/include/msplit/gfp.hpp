#pragma once

// Exact arithmetic and exact linear algebra over prime fields GF(p).
// All values are canonical residues in [0, p), so equality is plain
// entry-wise comparison.

#include <vector>

#include "msplit/errors.hpp"

namespace msplit {

// Ground-set size limit enforced when matroids are built from user input.
// Override with the MSPLIT_MAX_ELEMENTS environment variable.
int element_cap();

class PrimeModulus {
 public:
  explicit PrimeModulus(int p);
  int value() const { return p_; }
  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  int p_;
};

class FieldElement {
 public:
  FieldElement(long long value, PrimeModulus mod);
  int value() const { return value_; }
  PrimeModulus modulus() const { return mod_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(FieldElement o) const;
  FieldElement operator-(FieldElement o) const;
  FieldElement operator*(FieldElement o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;  // throws ZeroInverse on 0

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  PrimeModulus mod_;
  int value_;
};

FieldElement fe_inv(FieldElement x);

class FieldVector {
 public:
  FieldVector(PrimeModulus mod, std::vector<int> entries);
  PrimeModulus modulus() const { return mod_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }
  bool all_nonzero() const;

  friend bool operator==(const FieldVector&, const FieldVector&) = default;

 private:
  PrimeModulus mod_;
  std::vector<int> entries_;
};

class FieldMatrix {
 public:
  FieldMatrix(PrimeModulus mod, int rows, int cols);  // zero-filled
  static FieldMatrix from_rows(PrimeModulus mod, const std::vector<std::vector<int>>& rows);

  PrimeModulus modulus() const { return mod_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, long long v);

  std::vector<int> row(int r) const;
  std::vector<int> column(int c) const;
  std::vector<std::vector<int>> row_vectors() const;

  FieldMatrix columns(const std::vector<int>& which) const;  // nonempty selection
  FieldMatrix with_row_appended(const std::vector<int>& row) const;
  FieldMatrix with_column_appended(const std::vector<int>& col) const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeModulus mod_;
  int rows_;
  int cols_;
  std::vector<int> a_;  // row-major
};

struct RrefResult {
  FieldMatrix reduced;
  std::vector<int> pivot_cols;
  int rank;
};

// Gauss-Jordan reduction; row space is preserved.
RrefResult rref(const FieldMatrix& m);
int rank_of(const FieldMatrix& m);

// Basis of the right null space {x : m x = 0}, in the canonical form where
// each free column carries a unit entry (free columns in ascending order).
std::vector<FieldVector> kernel_basis(const FieldMatrix& m);

// True iff v is a GF(p)-linear combination of the rows of m.
bool row_space_contains(const FieldMatrix& m, const FieldVector& v);

// Column-subset helpers for the matroid layer. An empty selection has rank 0
// and an empty kernel.
int rank_of_columns(const FieldMatrix& m, const std::vector<int>& cols);
std::vector<FieldVector> kernel_of_columns(const FieldMatrix& m, const std::vector<int>& cols);

}  // namespace msplit
