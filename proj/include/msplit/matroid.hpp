#pragma once

// Represented matroids over GF(p): rank/independence oracles, exhaustive
// circuit and basis enumeration, duality, girth, Tutte and vertical
// connectivity, and decompositions into disjoint circuits.
//
// Everything here is exhaustive by design; ground sets are capped (see
// element_cap()) so misuse stays loud rather than slow.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msplit/gfp.hpp"
#include "msplit/subset.hpp"

namespace msplit {

struct Circuit {
  GroundSubset members;
  FieldVector coeffs;  // indexed by members in column order; first coefficient 1
};

struct Basis {
  GroundSubset members;
};

class Matroid {
 public:
  // Validated construction from user input: rejects loops always and coloops
  // unless allow_coloops is set (instance files produced by the split
  // commands legitimately contain coloops).
  static Matroid from_matrix(PrimeModulus mod, const FieldMatrix& matrix,
                             const std::vector<std::string>& labels, bool allow_coloops = false);

  // Internal construction for derived matroids (duals, split results):
  // loops/coloops permitted, size caps relaxed by the derived row/column.
  static Matroid derived(PrimeModulus mod, const FieldMatrix& matrix,
                         const std::vector<std::string>& labels);

  PrimeModulus modulus() const { return mod_; }
  const FieldMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  const std::string& label(int i) const { return ground_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& label) const;  // -1 when absent

  GroundSubset subset_from_labels(const std::vector<std::string>& labels) const;
  std::string set_to_string(const GroundSubset& s) const;  // "{a,b,c}"

  int rank() const;
  int rank_of(const GroundSubset& s) const;
  bool is_independent(const GroundSubset& s) const;

  // All inclusion-minimal dependent subsets in canonical (size, lex) order,
  // each with its normalized dependency vector.
  std::vector<Circuit> circuits() const;
  FieldVector circuit_coefficients(const GroundSubset& c) const;  // throws NotACircuit

  std::vector<Basis> bases() const;

  // Standard-form dual; may contain loops/coloops, so it is a derived matroid.
  Matroid dual() const;
  bool is_cocircuit(const GroundSubset& t) const;

  // Size of the smallest circuit; 0 when there is no circuit.
  int girth() const;

  // Some partition E = X + Y with min(|X|,|Y|) >= k and
  // r(X) + r(Y) - r(M) <= k-1, if one exists.
  std::optional<std::pair<GroundSubset, GroundSubset>> connectivity_separation(int k) const;
  bool is_n_connected(int n) const;
  bool is_connected() const { return is_n_connected(2); }
  // Vertical variant: cardinality condition replaced by min(r(X),r(Y)) >= k.
  bool is_vertically_n_connected(int n) const;

  // Partition of the ground set into pairwise disjoint circuits.
  std::optional<std::vector<Circuit>> eulerian_decomposition() const;
  std::vector<std::vector<Circuit>> all_eulerian_decompositions() const;

 private:
  Matroid(PrimeModulus mod, FieldMatrix matrix, std::vector<std::string> ground)
      : mod_(mod), matrix_(std::move(matrix)), ground_(std::move(ground)) {}

  void check_subset(const GroundSubset& s) const;

  PrimeModulus mod_;
  FieldMatrix matrix_;
  std::vector<std::string> ground_;
};

}  // namespace msplit
