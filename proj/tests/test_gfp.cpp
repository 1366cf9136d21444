#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "msplit/gfp.hpp"

using namespace msplit;

namespace {

// Independent oracle: scan all residues for the inverse.
int inverse_by_scan(int x, int p) {
  for (int y = 1; y < p; ++y) {
    if ((x * y) % p == 1) return y;
  }
  return -1;
}

// Small deterministic generator for property checks.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

FieldMatrix random_matrix(Rng& rng, PrimeModulus p, int rows, int cols) {
  FieldMatrix m(p, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, rng.below(p.value()));
  return m;
}

std::vector<int> mat_vec(const FieldMatrix& m, const FieldVector& x) {
  std::vector<int> out(static_cast<std::size_t>(m.rows()), 0);
  for (int r = 0; r < m.rows(); ++r) {
    long long acc = 0;
    for (int c = 0; c < m.cols(); ++c) acc += static_cast<long long>(m.at(r, c)) * x.at(c);
    out[static_cast<std::size_t>(r)] = static_cast<int>(acc % m.modulus().value());
  }
  return out;
}

}  // namespace

TEST_CASE("prime modulus validation") {
  CHECK(PrimeModulus(2).value() == 2);
  CHECK(PrimeModulus(13).value() == 13);
  CHECK_THROWS_AS(PrimeModulus(1), NotPrime);
  CHECK_THROWS_AS(PrimeModulus(4), NotPrime);
  CHECK_THROWS_AS(PrimeModulus(9), NotPrime);
  CHECK_THROWS_AS(PrimeModulus(-7), NotPrime);
}

TEST_CASE("field element canonical residues") {
  const PrimeModulus p(5);
  CHECK(FieldElement(-1, p).value() == 4);
  CHECK(FieldElement(7, p).value() == 2);
  CHECK((FieldElement(3, p) + FieldElement(4, p)).value() == 2);
  CHECK((FieldElement(3, p) * FieldElement(4, p)).value() == 2);
  CHECK((-FieldElement(2, p)).value() == 3);
}

TEST_CASE("inverses") {
  CHECK(fe_inv(FieldElement(2, PrimeModulus(3))).value() == 2);
  CHECK(fe_inv(FieldElement(1, PrimeModulus(5))).value() == 1);
  // Frozen from the residue scan oracle.
  CHECK(inverse_by_scan(3, 7) == 5);
  CHECK(fe_inv(FieldElement(3, PrimeModulus(7))).value() == 5);
  CHECK_THROWS_AS(fe_inv(FieldElement(0, PrimeModulus(7))), ZeroInverse);

  for (int p : {2, 3, 5, 7, 11}) {
    const PrimeModulus mod(p);
    for (int x = 1; x < p; ++x) {
      const FieldElement fx(x, mod);
      CHECK((fx * fe_inv(fx)).value() == 1);
      CHECK(fe_inv(fe_inv(fx)) == fx);
      CHECK(fe_inv(fx).value() == inverse_by_scan(x, p));
    }
  }
}

TEST_CASE("rref on small matrices") {
  const PrimeModulus p3(3);
  const PrimeModulus p2(2);

  const auto identity = rref(FieldMatrix::from_rows(p3, {{1, 0}, {0, 1}}));
  CHECK(identity.rank == 2);
  CHECK(identity.pivot_cols == std::vector<int>{0, 1});

  const auto duplicated = rref(FieldMatrix::from_rows(p2, {{1, 1}, {1, 1}}));
  CHECK(duplicated.rank == 1);
  CHECK(duplicated.pivot_cols == std::vector<int>{0});

  const auto f1 = rref(FieldMatrix::from_rows(p3, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
  CHECK(f1.rank == 2);
  CHECK(f1.pivot_cols == std::vector<int>{0, 1});
}

TEST_CASE("kernel basis") {
  const PrimeModulus p3(3);
  // Columns of the rank-2 four-element fixture restricted to {a,b,c}.
  const auto k1 = kernel_basis(FieldMatrix::from_rows(p3, {{1, 0, 1}, {0, 1, 1}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1.front().entries() == std::vector<int>{2, 2, 1});  // proportional to (1,1,2)

  const auto k2 = kernel_basis(FieldMatrix::from_rows(PrimeModulus(2), {{1, 0}, {0, 1}}));
  CHECK(k2.empty());

  const auto k3 = kernel_basis(FieldMatrix::from_rows(p3, {{1, 1}}));
  REQUIRE(k3.size() == 1);
  CHECK(k3.front().entries() == std::vector<int>{2, 1});  // proportional to (1,2)
}

TEST_CASE("row space membership") {
  const PrimeModulus p2(2);
  const auto k4 =
      FieldMatrix::from_rows(p2, {{1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 1, 1}});
  CHECK(row_space_contains(k4, FieldVector(p2, {1, 0, 0, 1, 0, 1})));
  CHECK(row_space_contains(k4, FieldVector(p2, {0, 0, 0, 0, 0, 0})));

  const PrimeModulus p3(3);
  const auto f1 = FieldMatrix::from_rows(p3, {{1, 0, 1, 1}, {0, 1, 1, 2}});
  CHECK_FALSE(row_space_contains(f1, FieldVector(p3, {0, 1, 1, 1})));
  CHECK_THROWS_AS(row_space_contains(f1, FieldVector(p3, {1, 0})), DimensionMismatch);
}

TEST_CASE("linear algebra properties on random matrices") {
  Rng rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const int pv = std::vector<int>{2, 3, 5}[static_cast<std::size_t>(rng.below(3))];
    const PrimeModulus p(pv);
    const int rows = 1 + rng.below(4);
    const int cols = 1 + rng.below(6);
    const FieldMatrix m = random_matrix(rng, p, rows, cols);

    const auto kernel = kernel_basis(m);
    for (const auto& b : kernel) {
      const auto prod = mat_vec(m, b);
      CHECK(std::all_of(prod.begin(), prod.end(), [](int e) { return e == 0; }));
    }
    CHECK(rank_of(m) + static_cast<int>(kernel.size()) == cols);

    const auto rr = rref(m);
    CHECK(rref(rr.reduced).reduced == rr.reduced);

    for (int r = 0; r < rows; ++r) CHECK(row_space_contains(m, FieldVector(p, m.row(r))));
  }
}

TEST_CASE("size caps stay loud") {
  const PrimeModulus p(2);
  CHECK_THROWS_AS(FieldMatrix(p, 40, 2), SizeCapExceeded);
  CHECK_THROWS_AS(FieldMatrix(p, 2, 40), SizeCapExceeded);
  CHECK_THROWS_AS(FieldMatrix(p, 0, 2), DimensionMismatch);
}
