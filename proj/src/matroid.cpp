#include "msplit/matroid.hpp"

#include <algorithm>
#include <set>

namespace msplit {

namespace {

constexpr int kMaxUserRows = 16;

void validate_labels(const std::vector<std::string>& labels, int cols) {
  if (static_cast<int>(labels.size()) != cols)
    throw DimensionMismatch("one label per matrix column required");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw LabelCollision(l);
  }
}

}  // namespace

Matroid Matroid::from_matrix(PrimeModulus mod, const FieldMatrix& matrix,
                             const std::vector<std::string>& labels, bool allow_coloops) {
  if (!(matrix.modulus() == mod)) throw DimensionMismatch("matrix modulus mismatch");
  if (matrix.cols() > element_cap())
    throw SizeCapExceeded("ground set larger than the cap of " + std::to_string(element_cap()) +
                          " elements");
  if (matrix.rows() > kMaxUserRows)
    throw SizeCapExceeded("representation has more than " + std::to_string(kMaxUserRows) + " rows");
  validate_labels(labels, matrix.cols());

  for (int c = 0; c < matrix.cols(); ++c) {
    bool zero = true;
    for (int r = 0; r < matrix.rows(); ++r) {
      if (matrix.at(r, c) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) throw LoopPresent(labels[static_cast<std::size_t>(c)]);
  }

  Matroid m(mod, matrix, labels);
  if (!allow_coloops) {
    // e is a coloop iff removing it drops the rank.
    const int full_rank = m.rank();
    for (int c = 0; c < matrix.cols(); ++c) {
      if (matrix.cols() == 1 ||
          m.rank_of(GroundSubset::full(m.size()).without(c)) != full_rank)
        throw ColoopPresent(labels[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

Matroid Matroid::derived(PrimeModulus mod, const FieldMatrix& matrix,
                         const std::vector<std::string>& labels) {
  if (!(matrix.modulus() == mod)) throw DimensionMismatch("matrix modulus mismatch");
  validate_labels(labels, matrix.cols());
  return Matroid(mod, matrix, labels);
}

int Matroid::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (ground_[static_cast<std::size_t>(i)] == label) return i;
  }
  return -1;
}

GroundSubset Matroid::subset_from_labels(const std::vector<std::string>& labels) const {
  std::uint32_t bits = 0;
  for (const auto& l : labels) {
    const int i = index_of(l);
    if (i < 0) throw ValidationError("unknown element label '" + l + "'");
    bits |= (1u << i);
  }
  return GroundSubset(bits, size());
}

std::string Matroid::set_to_string(const GroundSubset& s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    out += ground_[static_cast<std::size_t>(i)];
    first = false;
  }
  out += "}";
  return out;
}

void Matroid::check_subset(const GroundSubset& s) const {
  if (s.universe() != size()) throw ForeignSubset();
}

int Matroid::rank() const { return rank_of(GroundSubset::full(size())); }

int Matroid::rank_of(const GroundSubset& s) const {
  check_subset(s);
  return rank_of_columns(matrix_, s.indices());
}

bool Matroid::is_independent(const GroundSubset& s) const { return rank_of(s) == s.size(); }

std::vector<Circuit> Matroid::circuits() const {
  const int n = size();
  std::vector<Circuit> out;
  std::vector<std::uint32_t> found;
  for (int k = 1; k <= n; ++k) {
    detail::for_each_combination(n, k, [&](std::uint32_t mask) {
      for (std::uint32_t c : found) {
        if ((mask & c) == c) return;  // proper superset of a known circuit
      }
      const GroundSubset s(mask, n);
      const auto kernel = kernel_of_columns(matrix_, s.indices());
      if (kernel.empty()) return;  // independent
      // With smaller circuits pruned, a dependent set here is minimal:
      // nullity 1 and full support.
      const FieldVector& v = kernel.front();
      if (kernel.size() != 1 || !v.all_nonzero())
        throw Error("internal: pruned dependent set is not a circuit");
      const FieldElement lead(v.at(0), mod_);
      const FieldElement scale = lead.inverse();
      std::vector<int> coeffs(v.entries());
      for (int& e : coeffs) e = (FieldElement(e, mod_) * scale).value();
      out.push_back(Circuit{s, FieldVector(mod_, std::move(coeffs))});
      found.push_back(mask);
    });
  }
  return out;
}

FieldVector Matroid::circuit_coefficients(const GroundSubset& c) const {
  check_subset(c);
  if (c.is_empty()) throw NotACircuit("empty set is not a circuit");
  const auto kernel = kernel_of_columns(matrix_, c.indices());
  if (kernel.size() != 1 || !kernel.front().all_nonzero())
    throw NotACircuit("set " + set_to_string(c) + " is not a circuit");
  const FieldVector& v = kernel.front();
  const FieldElement scale = FieldElement(v.at(0), mod_).inverse();
  std::vector<int> coeffs(v.entries());
  for (int& e : coeffs) e = (FieldElement(e, mod_) * scale).value();
  return FieldVector(mod_, std::move(coeffs));
}

std::vector<Basis> Matroid::bases() const {
  const int n = size();
  const int r = rank();
  std::vector<Basis> out;
  detail::for_each_combination(n, r, [&](std::uint32_t mask) {
    const GroundSubset s(mask, n);
    if (rank_of(s) == r) out.push_back(Basis{s});
  });
  return out;
}

Matroid Matroid::dual() const {
  // Rows of the dual representation = basis of the null space of the
  // primal representation (canonical kernel form).
  const auto kernel = kernel_basis(matrix_);
  FieldMatrix dm(mod_, std::max<int>(1, static_cast<int>(kernel.size())), size());
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (int c = 0; c < size(); ++c) dm.set(static_cast<int>(i), c, kernel[i].at(c));
  return Matroid::derived(mod_, dm, ground_);
}

bool Matroid::is_cocircuit(const GroundSubset& t) const {
  check_subset(t);
  if (t.is_empty()) return false;
  const Matroid d = dual();
  const auto kernel = kernel_of_columns(d.matrix(), t.indices());
  return kernel.size() == 1 && kernel.front().all_nonzero();
}

int Matroid::girth() const {
  const auto cs = circuits();
  return cs.empty() ? 0 : cs.front().members.size();
}

std::optional<std::pair<GroundSubset, GroundSubset>> Matroid::connectivity_separation(int k) const {
  const int n = size();
  if (n < 2) return std::nullopt;
  const int total_rank = rank();
  const std::uint32_t all = GroundSubset::full(n).bits();
  // Element 0 stays on the X side; (X,Y) and (Y,X) are the same separation.
  for (std::uint32_t x = 1; x < all; x += 2) {
    const std::uint32_t y = all & ~x;
    const GroundSubset xs(x, n), ys(y, n);
    if (xs.size() < k || ys.size() < k) continue;
    if (rank_of(xs) + rank_of(ys) - total_rank <= k - 1) return std::make_pair(xs, ys);
  }
  return std::nullopt;
}

bool Matroid::is_n_connected(int n) const {
  for (int k = 1; k < n; ++k) {
    if (connectivity_separation(k).has_value()) return false;
  }
  return true;
}

bool Matroid::is_vertically_n_connected(int n) const {
  const int sz = size();
  if (sz < 2) return true;
  const int total_rank = rank();
  const std::uint32_t all = GroundSubset::full(sz).bits();
  for (int k = 1; k < n; ++k) {
    for (std::uint32_t x = 1; x < all; x += 2) {
      const GroundSubset xs(x, sz), ys(all & ~x, sz);
      const int rx = rank_of(xs), ry = rank_of(ys);
      if (rx < k || ry < k) continue;
      if (rx + ry - total_rank <= k - 1) return false;
    }
  }
  return true;
}

namespace {

// Exact cover of the ground set by disjoint circuits, branching on the
// lowest uncovered element; circuit order keeps results deterministic.
void cover_circuits(const std::vector<Circuit>& circuits, std::uint32_t all, std::uint32_t covered,
                    std::vector<Circuit>& current, std::vector<std::vector<Circuit>>& results,
                    bool first_only, bool& done) {
  if (done) return;
  if (covered == all) {
    results.push_back(current);
    if (first_only) done = true;
    return;
  }
  const std::uint32_t uncovered = all & ~covered;
  const std::uint32_t lowest = uncovered & (~uncovered + 1u);
  for (const Circuit& c : circuits) {
    const std::uint32_t cm = c.members.bits();
    if (!(cm & lowest) || (cm & covered)) continue;
    current.push_back(c);
    cover_circuits(circuits, all, covered | cm, current, results, first_only, done);
    current.pop_back();
    if (done) return;
  }
}

}  // namespace

std::optional<std::vector<Circuit>> Matroid::eulerian_decomposition() const {
  const auto cs = circuits();
  std::vector<std::vector<Circuit>> results;
  std::vector<Circuit> current;
  bool done = false;
  cover_circuits(cs, GroundSubset::full(size()).bits(), 0, current, results, true, done);
  if (results.empty()) return std::nullopt;
  return results.front();
}

std::vector<std::vector<Circuit>> Matroid::all_eulerian_decompositions() const {
  const auto cs = circuits();
  std::vector<std::vector<Circuit>> results;
  std::vector<Circuit> current;
  bool done = false;
  cover_circuits(cs, GroundSubset::full(size()).bits(), 0, current, results, false, done);
  return results;
}

}  // namespace msplit
