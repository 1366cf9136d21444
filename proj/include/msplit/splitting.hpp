#pragma once

// Splitting (M_T) and element splitting (M'_T) of a represented matroid:
// construction of the derived matroids, PT/NPT circuit classification, the
// predicted circuit and basis families, the split rank function, triviality,
// connectivity criteria, and decompositions into disjoint circuits whose
// T-meeting members pair up.

#include <optional>
#include <string>
#include <vector>

#include "msplit/matroid.hpp"

namespace msplit {

enum class CircuitClass { Disjoint, PT, NPT };
const char* to_string(CircuitClass k);

struct ClassifiedCircuit {
  Circuit circuit;
  CircuitClass klass;
  FieldElement t_sum;  // sum of dependency coefficients over C and T
};

enum class PairMode { UnionInC2, BothPT };

struct DecompositionPair {
  Circuit first;
  Circuit second;
  PairMode mode;
};

struct PTDecomposition {
  std::vector<DecompositionPair> pairs;
  std::vector<Circuit> singles;  // each lies in C0
};

class SplitInstance {
 public:
  // T must be a nonempty proper subset of the ground set.
  static SplitInstance make(const Matroid& base, const GroundSubset& t);

  const Matroid& base() const { return base_; }
  const Matroid& split() const { return split_; }    // M_T
  const Matroid& esplit() const { return esplit_; }  // M'_T
  const GroundSubset& t() const { return t_; }
  const std::string& z_label() const { return z_label_; }
  int z_index() const { return base_.size(); }  // z is the last esplit column

  // True iff the T indicator row lies in the row space of the base matrix,
  // i.e. rank(A_T) = rank(A); the split then changes nothing.
  bool is_trivial() const;

  ClassifiedCircuit classify(const Circuit& c) const;
  // As above from a bare set; throws NotACircuit when it is not one.
  ClassifiedCircuit classify_set(const GroundSubset& c) const;
  const std::vector<ClassifiedCircuit>& classified_circuits() const;
  std::vector<Circuit> npt_circuits() const;
  std::vector<Circuit> c0() const;  // PT circuits plus circuits disjoint from T

  // Witness that d is destroyed-circuit + independent-set shaped, contains no
  // C0 member, and carries a full-support dependency of the split matrix.
  std::optional<FieldVector> pt_dependent_witness(const GroundSubset& d) const;

  const std::vector<GroundSubset>& c1() const;  // minimal PT-dependent sets
  const std::vector<GroundSubset>& c2() const;  // minimal disjoint-NPT-pair unions
  std::vector<GroundSubset> cz() const;         // {C + z : C NPT}, esplit universe

  std::vector<GroundSubset> predicted_circuits_split() const;
  std::vector<GroundSubset> predicted_circuits_esplit() const;  // esplit universe

  // Basis families; require an NPT circuit (throws NoNptCircuit otherwise).
  std::vector<GroundSubset> predicted_bases_split() const;
  std::vector<GroundSubset> predicted_bases_esplit() const;  // esplit universe

  // Rank formulas, computed from the base matroid rather than the matrices.
  int split_rank(const GroundSubset& s) const;   // r(S) or r(S)+1
  int esplit_rank(const GroundSubset& s) const;  // rank of S+z, always r(S)+1

  struct ConnectivityCondition {
    bool holds;
    std::optional<GroundSubset> witness;  // least X failing the condition
  };
  // Whether every proper nonempty X has an NPT circuit inside X or inside
  // E-X; when it holds (and the base is connected), splitting preserves
  // connectivity.
  ConnectivityCondition connectivity_condition() const;

  struct NconnHypotheses {
    bool n_connected;
    bool vertically_connected;  // vertically (n+1)-connected
    bool size_ok;               // |E| >= 2(n-1)
    bool girth_ok;              // girth >= n+1
    bool t_large_enough;        // |T| >= n
    bool all_hold;
  };
  NconnHypotheses nconn_hypotheses(int n) const;

  struct NconnCriterion {
    bool holds;
    std::optional<GroundSubset> witness;  // least (n-1)-set hit by every NPT circuit
  };
  // Whether every (n-1)-element subset is avoided by some NPT circuit.
  NconnCriterion nconn_criterion(int n) const;

  // Search the base matroid's circuit decompositions for one whose T-meeting
  // circuits pair up (union in C2, or both PT) with all leftovers in C0.
  // Throws NotEulerian when no circuit decomposition exists at all.
  std::optional<PTDecomposition> pt_decomposition() const;

  // A circuit decomposition containing exactly one NPT circuit, if any.
  std::optional<std::vector<Circuit>> one_npt_decomposition() const;

 private:
  SplitInstance(Matroid base, GroundSubset t, Matroid split, Matroid esplit, std::string z_label)
      : base_(std::move(base)),
        t_(t),
        split_(std::move(split)),
        esplit_(std::move(esplit)),
        z_label_(std::move(z_label)) {}

  bool contains_c0_member(const GroundSubset& s) const;
  std::vector<std::uint32_t> npt_masks() const;

  Matroid base_;
  GroundSubset t_;
  Matroid split_;
  Matroid esplit_;
  std::string z_label_;

  // Lazily computed families; single-threaded fill, identical on recompute.
  mutable std::optional<std::vector<ClassifiedCircuit>> classified_;
  mutable std::optional<std::vector<GroundSubset>> c1_;
  mutable std::optional<std::vector<GroundSubset>> c2_;
};

}  // namespace msplit
