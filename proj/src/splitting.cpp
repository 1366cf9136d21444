#include "msplit/splitting.hpp"

#include <algorithm>
#include <set>

namespace msplit {

const char* to_string(CircuitClass k) {
  switch (k) {
    case CircuitClass::Disjoint: return "DISJOINT";
    case CircuitClass::PT: return "PT";
    case CircuitClass::NPT: return "NPT";
  }
  return "?";
}

SplitInstance SplitInstance::make(const Matroid& base, const GroundSubset& t) {
  if (t.universe() != base.size()) throw ForeignSubset();
  if (t.is_empty()) throw EmptySplitSet();
  if (t.size() == base.size()) throw FullSplitSet();

  std::vector<int> indicator(static_cast<std::size_t>(base.size()), 0);
  for (int i : t.indices()) indicator[static_cast<std::size_t>(i)] = 1;
  FieldMatrix split_matrix = base.matrix().with_row_appended(indicator);

  std::string z = "z";
  while (base.index_of(z) >= 0) z += "'";

  std::vector<int> z_col(static_cast<std::size_t>(split_matrix.rows()), 0);
  z_col.back() = 1;
  FieldMatrix esplit_matrix = split_matrix.with_column_appended(z_col);

  std::vector<std::string> esplit_labels = base.ground();
  esplit_labels.push_back(z);

  Matroid split = Matroid::derived(base.modulus(), split_matrix, base.ground());
  Matroid esplit = Matroid::derived(base.modulus(), esplit_matrix, esplit_labels);
  return SplitInstance(base, t, std::move(split), std::move(esplit), std::move(z));
}

bool SplitInstance::is_trivial() const {
  std::vector<int> indicator(static_cast<std::size_t>(base_.size()), 0);
  for (int i : t_.indices()) indicator[static_cast<std::size_t>(i)] = 1;
  return row_space_contains(base_.matrix(), FieldVector(base_.modulus(), indicator));
}

ClassifiedCircuit SplitInstance::classify(const Circuit& c) const {
  if (c.members.universe() != base_.size()) throw ForeignSubset();
  const PrimeModulus p = base_.modulus();
  FieldElement sum(0, p);
  const auto idx = c.members.indices();
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (t_.contains(idx[j])) sum = sum + FieldElement(c.coeffs.at(static_cast<int>(j)), p);
  }
  CircuitClass k;
  if (!c.members.intersects(t_)) {
    k = CircuitClass::Disjoint;
  } else {
    k = sum.is_zero() ? CircuitClass::PT : CircuitClass::NPT;
  }
  return ClassifiedCircuit{c, k, sum};
}

ClassifiedCircuit SplitInstance::classify_set(const GroundSubset& c) const {
  return classify(Circuit{c, base_.circuit_coefficients(c)});
}

const std::vector<ClassifiedCircuit>& SplitInstance::classified_circuits() const {
  if (!classified_) {
    std::vector<ClassifiedCircuit> out;
    for (const Circuit& c : base_.circuits()) out.push_back(classify(c));
    classified_ = std::move(out);
  }
  return *classified_;
}

std::vector<Circuit> SplitInstance::npt_circuits() const {
  std::vector<Circuit> out;
  for (const auto& cc : classified_circuits()) {
    if (cc.klass == CircuitClass::NPT) out.push_back(cc.circuit);
  }
  return out;
}

std::vector<Circuit> SplitInstance::c0() const {
  std::vector<Circuit> out;
  for (const auto& cc : classified_circuits()) {
    if (cc.klass != CircuitClass::NPT) out.push_back(cc.circuit);
  }
  return out;
}

bool SplitInstance::contains_c0_member(const GroundSubset& s) const {
  for (const auto& cc : classified_circuits()) {
    if (cc.klass != CircuitClass::NPT && cc.circuit.members.subset_of(s)) return true;
  }
  return false;
}

std::vector<std::uint32_t> SplitInstance::npt_masks() const {
  std::vector<std::uint32_t> out;
  for (const auto& cc : classified_circuits()) {
    if (cc.klass == CircuitClass::NPT) out.push_back(cc.circuit.members.bits());
  }
  return out;
}

std::optional<FieldVector> SplitInstance::pt_dependent_witness(const GroundSubset& d) const {
  if (d.universe() != base_.size()) throw ForeignSubset();
  if (!d.intersects(t_)) return std::nullopt;
  if (contains_c0_member(d)) return std::nullopt;

  // Some NPT circuit inside d whose complement in d is independent.
  bool shaped = false;
  for (const auto& cc : classified_circuits()) {
    if (cc.klass != CircuitClass::NPT) continue;
    if (!cc.circuit.members.subset_of(d)) continue;
    if (base_.is_independent(d.minus(cc.circuit.members))) {
      shaped = true;
      break;
    }
  }
  if (!shaped) return std::nullopt;

  // Full-support vector in the null space of the split-matrix columns of d.
  const auto kernel = kernel_of_columns(split_.matrix(), d.indices());
  if (kernel.empty()) return std::nullopt;
  const PrimeModulus p = base_.modulus();
  const int dim = static_cast<int>(kernel.size());
  const int len = d.size();
  std::vector<int> combo(static_cast<std::size_t>(dim), 0);
  // Odometer over all coefficient tuples, skipping the zero tuple; the first
  // full-support combination (lexicographic tuple order) is the witness.
  while (true) {
    int i = dim - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == p.value() - 1) {
      combo[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];

    std::vector<int> v(static_cast<std::size_t>(len), 0);
    for (int b = 0; b < dim; ++b) {
      const int c = combo[static_cast<std::size_t>(b)];
      if (c == 0) continue;
      for (int j = 0; j < len; ++j)
        v[static_cast<std::size_t>(j)] =
            (FieldElement(v[static_cast<std::size_t>(j)], p) +
             FieldElement(c, p) * FieldElement(kernel[static_cast<std::size_t>(b)].at(j), p))
                .value();
    }
    if (std::all_of(v.begin(), v.end(), [](int e) { return e != 0; })) {
      const FieldElement scale = FieldElement(v[0], p).inverse();
      for (int& e : v) e = (FieldElement(e, p) * scale).value();
      return FieldVector(p, std::move(v));
    }
  }
  return std::nullopt;
}

const std::vector<GroundSubset>& SplitInstance::c1() const {
  if (!c1_) {
    const int n = base_.size();
    std::vector<GroundSubset> out;
    std::vector<std::uint32_t> found;
    for (int k = 2; k <= n; ++k) {
      detail::for_each_combination(n, k, [&](std::uint32_t mask) {
        for (std::uint32_t f : found) {
          if ((mask & f) == f) return;  // superset of a recorded minimal set
        }
        const GroundSubset d(mask, n);
        if (pt_dependent_witness(d).has_value()) {
          out.push_back(d);
          found.push_back(mask);
        }
      });
    }
    c1_ = std::move(out);
  }
  return *c1_;
}

const std::vector<GroundSubset>& SplitInstance::c2() const {
  if (!c2_) {
    const int n = base_.size();
    const auto npt = npt_masks();
    const auto& c1_family = c1();
    std::set<std::uint32_t> unions;
    for (std::size_t i = 0; i < npt.size(); ++i) {
      for (std::size_t j = i + 1; j < npt.size(); ++j) {
        if (npt[i] & npt[j]) continue;
        const std::uint32_t u = npt[i] | npt[j];
        const GroundSubset us(u, n);
        if (contains_c0_member(us)) continue;
        bool blocked = false;
        for (const auto& m : c1_family) {
          if (m.subset_of(us)) {
            blocked = true;
            break;
          }
        }
        if (!blocked) unions.insert(u);
      }
    }
    // Reduce to inclusion-minimal members of the surviving family.
    std::vector<GroundSubset> out;
    for (std::uint32_t u : unions) {
      bool minimal = true;
      for (std::uint32_t v : unions) {
        if (v != u && (u & v) == v) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.emplace_back(u, n);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    c2_ = std::move(out);
  }
  return *c2_;
}

std::vector<GroundSubset> SplitInstance::cz() const {
  const int zu = base_.size() + 1;
  std::vector<GroundSubset> out;
  for (const Circuit& c : npt_circuits()) out.push_back(c.members.extended(zu).with(z_index()));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<GroundSubset> SplitInstance::predicted_circuits_split() const {
  std::set<std::uint32_t> masks;
  for (const Circuit& c : c0()) masks.insert(c.members.bits());
  for (const auto& s : c1()) masks.insert(s.bits());
  for (const auto& s : c2()) masks.insert(s.bits());
  std::vector<GroundSubset> out;
  for (std::uint32_t m : masks) out.emplace_back(m, base_.size());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<GroundSubset> SplitInstance::predicted_circuits_esplit() const {
  const int zu = base_.size() + 1;
  std::vector<GroundSubset> out;
  for (const auto& s : predicted_circuits_split()) out.push_back(s.extended(zu));
  for (const auto& s : cz()) out.push_back(s);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<GroundSubset> SplitInstance::predicted_bases_split() const {
  const auto npt = npt_masks();
  if (npt.empty()) throw NoNptCircuit();
  const int n = base_.size();
  const auto& c1_family = c1();
  std::set<std::uint32_t> masks;
  for (const Basis& b : base_.bases()) {
    for (int x = 0; x < n; ++x) {
      if (b.members.contains(x)) continue;
      const GroundSubset cand = b.members.with(x);
      if (contains_c0_member(cand)) continue;
      bool blocked = false;
      for (const auto& m : c1_family) {
        if (m.subset_of(cand)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) masks.insert(cand.bits());
    }
  }
  std::vector<GroundSubset> out;
  for (std::uint32_t m : masks) out.emplace_back(m, n);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<GroundSubset> SplitInstance::predicted_bases_esplit() const {
  const int zu = base_.size() + 1;
  std::vector<GroundSubset> out;
  for (const auto& s : predicted_bases_split()) out.push_back(s.extended(zu));
  for (const Basis& b : base_.bases()) out.push_back(b.members.extended(zu).with(z_index()));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

int SplitInstance::split_rank(const GroundSubset& s) const {
  if (s.universe() != base_.size()) throw ForeignSubset();
  const int r = base_.rank_of(s);
  for (std::uint32_t m : npt_masks()) {
    if ((s.bits() & m) == m) return r + 1;
  }
  return r;
}

int SplitInstance::esplit_rank(const GroundSubset& s) const {
  if (s.universe() != base_.size()) throw ForeignSubset();
  return base_.rank_of(s) + 1;
}

SplitInstance::ConnectivityCondition SplitInstance::connectivity_condition() const {
  const int n = base_.size();
  const auto npt = npt_masks();
  const std::uint32_t all = GroundSubset::full(n).bits();
  auto has_npt_inside = [&](std::uint32_t s) {
    for (std::uint32_t m : npt) {
      if ((s & m) == m) return true;
    }
    return false;
  };
  for (int k = 1; k < n; ++k) {
    ConnectivityCondition failed{false, std::nullopt};
    bool found_fail = false;
    detail::for_each_combination(n, k, [&](std::uint32_t x) {
      if (found_fail) return;
      if (!has_npt_inside(x) && !has_npt_inside(all & ~x)) {
        failed.witness = GroundSubset(x, n);
        found_fail = true;
      }
    });
    if (found_fail) return failed;
  }
  return ConnectivityCondition{true, std::nullopt};
}

SplitInstance::NconnHypotheses SplitInstance::nconn_hypotheses(int n) const {
  NconnHypotheses h{};
  h.n_connected = base_.is_n_connected(n);
  h.vertically_connected = base_.is_vertically_n_connected(n + 1);
  h.size_ok = base_.size() >= 2 * (n - 1);
  h.girth_ok = base_.girth() >= n + 1;
  h.t_large_enough = t_.size() >= n;
  h.all_hold = h.n_connected && h.vertically_connected && h.size_ok && h.girth_ok && h.t_large_enough;
  return h;
}

SplitInstance::NconnCriterion SplitInstance::nconn_criterion(int n) const {
  const int sz = base_.size();
  const auto npt = npt_masks();
  NconnCriterion result{true, std::nullopt};
  bool failed = false;
  detail::for_each_combination(sz, n - 1, [&](std::uint32_t s) {
    if (failed) return;
    for (std::uint32_t m : npt) {
      if ((m & s) == 0) return;  // this circuit avoids s
    }
    result.holds = false;
    result.witness = GroundSubset(s, sz);
    failed = true;
  });
  return result;
}

namespace {

// Backtracking pairing of the T-meeting circuits of one decomposition.
bool pair_up(const std::vector<ClassifiedCircuit>& tm, std::vector<bool>& used,
             const std::vector<GroundSubset>& c2_family,
             std::vector<DecompositionPair>& pairs, std::vector<Circuit>& pt_singles) {
  std::size_t i = 0;
  while (i < used.size() && used[i]) ++i;
  if (i == used.size()) return true;
  used[i] = true;
  // Option: leave unpaired; requires membership in C0, i.e. class PT.
  if (tm[i].klass == CircuitClass::PT) {
    pt_singles.push_back(tm[i].circuit);
    if (pair_up(tm, used, c2_family, pairs, pt_singles)) return true;
    pt_singles.pop_back();
  }
  for (std::size_t j = i + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    const GroundSubset u = tm[i].circuit.members.unite(tm[j].circuit.members);
    std::optional<PairMode> mode;
    if (std::any_of(c2_family.begin(), c2_family.end(),
                    [&](const GroundSubset& m) { return m == u; })) {
      mode = PairMode::UnionInC2;
    } else if (tm[i].klass == CircuitClass::PT && tm[j].klass == CircuitClass::PT) {
      mode = PairMode::BothPT;
    }
    if (!mode) continue;
    used[j] = true;
    pairs.push_back(DecompositionPair{tm[i].circuit, tm[j].circuit, *mode});
    if (pair_up(tm, used, c2_family, pairs, pt_singles)) return true;
    pairs.pop_back();
    used[j] = false;
  }
  used[i] = false;
  return false;
}

}  // namespace

std::optional<PTDecomposition> SplitInstance::pt_decomposition() const {
  const auto decompositions = base_.all_eulerian_decompositions();
  if (decompositions.empty()) throw NotEulerian();
  for (const auto& deco : decompositions) {
    std::vector<ClassifiedCircuit> t_meeting;
    std::vector<Circuit> singles;
    for (const Circuit& c : deco) {
      const ClassifiedCircuit cc = classify(c);
      if (cc.klass == CircuitClass::Disjoint) {
        singles.push_back(c);  // disjoint circuits lie in C0
      } else {
        t_meeting.push_back(cc);
      }
    }
    std::vector<bool> used(t_meeting.size(), false);
    std::vector<DecompositionPair> pairs;
    std::vector<Circuit> pt_singles;
    if (pair_up(t_meeting, used, c2(), pairs, pt_singles)) {
      PTDecomposition result;
      result.pairs = std::move(pairs);
      result.singles = std::move(singles);
      result.singles.insert(result.singles.end(), pt_singles.begin(), pt_singles.end());
      return result;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Circuit>> SplitInstance::one_npt_decomposition() const {
  const auto decompositions = base_.all_eulerian_decompositions();
  if (decompositions.empty()) throw NotEulerian();
  for (const auto& deco : decompositions) {
    int npt_count = 0;
    for (const Circuit& c : deco) {
      if (classify(c).klass == CircuitClass::NPT) ++npt_count;
    }
    if (npt_count == 1) return deco;
  }
  return std::nullopt;
}

}  // namespace msplit
