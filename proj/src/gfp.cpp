#include "msplit/gfp.hpp"

#include <algorithm>
#include <cstdlib>

namespace msplit {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int reduce(long long v, int p) {
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

// Extended Euclid; a must be in [1, p).
int inverse_mod(int a, int p) {
  int t = 0, new_t = 1;
  int r = p, new_r = a;
  while (new_r != 0) {
    int q = r / new_r;
    int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return t < 0 ? t + p : t;
}

// Matrices one row/column larger than the element cap still arise internally
// (split appends a row, element splitting a column).
int matrix_dim_cap() { return std::max(21, element_cap() + 1); }

}  // namespace

int element_cap() {
  static const int cap = [] {
    if (const char* s = std::getenv("MSPLIT_MAX_ELEMENTS")) {
      int v = std::atoi(s);
      if (v >= 1) return v;
    }
    return 20;
  }();
  return cap;
}

PrimeModulus::PrimeModulus(int p) : p_(p) {
  if (!is_prime(p)) throw NotPrime(p);
}

FieldElement::FieldElement(long long value, PrimeModulus mod)
    : mod_(mod), value_(reduce(value, mod.value())) {}

FieldElement FieldElement::operator+(FieldElement o) const {
  return FieldElement(static_cast<long long>(value_) + o.value_, mod_);
}

FieldElement FieldElement::operator-(FieldElement o) const {
  return FieldElement(static_cast<long long>(value_) - o.value_, mod_);
}

FieldElement FieldElement::operator*(FieldElement o) const {
  return FieldElement(static_cast<long long>(value_) * o.value_, mod_);
}

FieldElement FieldElement::operator-() const { return FieldElement(-static_cast<long long>(value_), mod_); }

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw ZeroInverse();
  return FieldElement(inverse_mod(value_, mod_.value()), mod_);
}

FieldElement fe_inv(FieldElement x) { return x.inverse(); }

FieldVector::FieldVector(PrimeModulus mod, std::vector<int> entries)
    : mod_(mod), entries_(std::move(entries)) {
  for (int& e : entries_) e = reduce(e, mod_.value());
}

bool FieldVector::all_nonzero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e != 0; });
}

FieldMatrix::FieldMatrix(PrimeModulus mod, int rows, int cols)
    : mod_(mod), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 1 || cols < 1) throw DimensionMismatch("matrix must have at least one row and column");
  if (rows > matrix_dim_cap() || cols > matrix_dim_cap())
    throw SizeCapExceeded("matrix dimensions exceed the supported cap of " +
                          std::to_string(matrix_dim_cap()));
}

FieldMatrix FieldMatrix::from_rows(PrimeModulus mod, const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw DimensionMismatch("matrix must have at least one row and column");
  FieldMatrix m(mod, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.cols_)
      throw DimensionMismatch("ragged rows");
    for (int c = 0; c < m.cols_; ++c) m.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

void FieldMatrix::set(int r, int c, long long v) {
  a_[static_cast<std::size_t>(r) * cols_ + c] = reduce(v, mod_.value());
}

std::vector<int> FieldMatrix::row(int r) const {
  std::vector<int> out(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
  return out;
}

std::vector<int> FieldMatrix::column(int c) const {
  std::vector<int> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
  return out;
}

std::vector<std::vector<int>> FieldMatrix::row_vectors() const {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

FieldMatrix FieldMatrix::columns(const std::vector<int>& which) const {
  if (which.empty()) throw DimensionMismatch("empty column selection");
  FieldMatrix m(mod_, rows_, static_cast<int>(which.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < which.size(); ++j) m.set(r, static_cast<int>(j), at(r, which[j]));
  return m;
}

FieldMatrix FieldMatrix::with_row_appended(const std::vector<int>& row) const {
  if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("row length mismatch");
  FieldMatrix m(mod_, rows_ + 1, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.set(r, c, at(r, c));
  for (int c = 0; c < cols_; ++c) m.set(rows_, c, row[static_cast<std::size_t>(c)]);
  return m;
}

FieldMatrix FieldMatrix::with_column_appended(const std::vector<int>& col) const {
  if (static_cast<int>(col.size()) != rows_) throw DimensionMismatch("column length mismatch");
  FieldMatrix m(mod_, rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m.set(r, c, at(r, c));
    m.set(r, cols_, col[static_cast<std::size_t>(r)]);
  }
  return m;
}

RrefResult rref(const FieldMatrix& m) {
  const int p = m.modulus().value();
  FieldMatrix red = m;
  std::vector<int> pivots;
  int pivot_row = 0;
  for (int c = 0; c < red.cols() && pivot_row < red.rows(); ++c) {
    int sel = -1;
    for (int r = pivot_row; r < red.rows(); ++r) {
      if (red.at(r, c) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) {
      for (int k = 0; k < red.cols(); ++k) {
        int tmp = red.at(sel, k);
        red.set(sel, k, red.at(pivot_row, k));
        red.set(pivot_row, k, tmp);
      }
    }
    const int inv = inverse_mod(red.at(pivot_row, c), p);
    for (int k = 0; k < red.cols(); ++k)
      red.set(pivot_row, k, static_cast<long long>(red.at(pivot_row, k)) * inv);
    for (int r = 0; r < red.rows(); ++r) {
      if (r == pivot_row) continue;
      const int f = red.at(r, c);
      if (f == 0) continue;
      for (int k = 0; k < red.cols(); ++k)
        red.set(r, k, red.at(r, k) - static_cast<long long>(f) * red.at(pivot_row, k));
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return RrefResult{std::move(red), std::move(pivots), pivot_row};
}

int rank_of(const FieldMatrix& m) { return rref(m).rank; }

std::vector<FieldVector> kernel_basis(const FieldMatrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  const int p = m.modulus().value();
  std::vector<FieldVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<int> v(static_cast<std::size_t>(m.cols()), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (int i = 0; i < rr.rank; ++i) {
      const int entry = rr.reduced.at(i, f);
      if (entry != 0) v[static_cast<std::size_t>(rr.pivot_cols[static_cast<std::size_t>(i)])] = p - entry;
    }
    basis.emplace_back(m.modulus(), std::move(v));
  }
  return basis;
}

bool row_space_contains(const FieldMatrix& m, const FieldVector& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("vector length must equal column count");
  if (std::all_of(v.entries().begin(), v.entries().end(), [](int e) { return e == 0; })) return true;
  return rank_of(m) == rank_of(m.with_row_appended(v.entries()));
}

int rank_of_columns(const FieldMatrix& m, const std::vector<int>& cols) {
  if (cols.empty()) return 0;
  return rank_of(m.columns(cols));
}

std::vector<FieldVector> kernel_of_columns(const FieldMatrix& m, const std::vector<int>& cols) {
  if (cols.empty()) return {};
  return kernel_basis(m.columns(cols));
}

}  // namespace msplit
