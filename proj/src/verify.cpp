#include "msplit/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace msplit {

namespace {

struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

std::vector<bool> dependence_table(const FieldMatrix& m) {
  const int n = m.cols();
  std::vector<bool> dep(std::size_t(1) << n, false);
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    const GroundSubset s(mask, n);
    dep[mask] = rank_of_columns(m, s.indices()) < s.size();
  }
  return dep;
}

std::string mask_set_string(const std::vector<std::string>& labels, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if ((mask >> i) & 1u) {
      if (!first) out += ",";
      out += labels[static_cast<std::size_t>(i)];
      first = false;
    }
  }
  return out + "}";
}

// nullopt when the two families coincide; otherwise a witness naming one
// member of the symmetric difference per side.
std::optional<std::string> compare_families(const std::vector<std::string>& labels,
                                            const std::vector<GroundSubset>& predicted,
                                            const std::vector<GroundSubset>& actual) {
  std::set<std::uint32_t> ps, as;
  for (const auto& s : predicted) ps.insert(s.bits());
  for (const auto& s : actual) as.insert(s.bits());
  if (ps == as) return std::nullopt;
  std::string w;
  for (std::uint32_t m : ps) {
    if (!as.count(m)) {
      w += "predicted-only " + mask_set_string(labels, m);
      break;
    }
  }
  for (std::uint32_t m : as) {
    if (!ps.count(m)) {
      if (!w.empty()) w += "; ";
      w += "actual-only " + mask_set_string(labels, m);
      break;
    }
  }
  return w;
}

void validate_config(const CorpusConfig& cfg) {
  if (cfg.instance_count < 0) throw ValidationError("instance count must be nonnegative");
  if (cfg.primes.empty()) throw ValidationError("at least one prime required");
  for (int p : cfg.primes) PrimeModulus check(p);
  if (cfg.max_rows < 2 || cfg.max_rows > 5)
    throw ValidationError("max_rows must lie in [2,5]");
  if (cfg.max_cols < 3 || cfg.max_cols > 8)
    throw ValidationError("max_cols must lie in [3,8]");
  if (cfg.sample_count < 1) throw ValidationError("sample count must be positive");
}

}  // namespace

std::vector<GroundSubset> oracle_circuits(const FieldMatrix& m) {
  const int n = m.cols();
  const auto dep = dependence_table(m);
  std::vector<GroundSubset> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    if (!dep[mask]) continue;
    bool minimal = true;
    for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
      if (dep[sub]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.emplace_back(mask, n);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<GroundSubset> brute_force_bases(const FieldMatrix& m) {
  const int n = m.cols();
  const auto dep = dependence_table(m);
  std::vector<GroundSubset> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    if (mask != 0 && dep[mask]) continue;
    bool maximal = true;
    for (int e = 0; e < n; ++e) {
      if ((mask >> e) & 1u) continue;
      if (!dep[mask | (1u << e)]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.emplace_back(mask, n);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Matroid random_instance(const CorpusConfig& cfg, int index) {
  validate_config(cfg);
  SplitMix rng(cfg.seed + (static_cast<std::uint64_t>(index) + 1) * 0x632BE59BD9B4E019ull);
  const int row_hi = std::min(cfg.max_rows, cfg.max_cols - 1);
  while (true) {
    const int p = cfg.primes[static_cast<std::size_t>(rng.below(static_cast<int>(cfg.primes.size())))];
    const int rows = 2 + rng.below(row_hi - 1);
    const int cols = rows + 1 + rng.below(cfg.max_cols - rows);
    const PrimeModulus mod(p);
    FieldMatrix m(mod, rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.set(r, c, rng.below(p));
    std::vector<std::string> labels;
    for (int c = 0; c < cols; ++c) labels.push_back("e" + std::to_string(c + 1));
    try {
      Matroid out = Matroid::from_matrix(mod, m, labels);
      if (out.rank() < 2) continue;
      return out;
    } catch (const Error&) {
      continue;  // loop or coloop: redraw
    }
  }
}

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = {
      "L1.1", "L1.2",        "k.1",   "k.2", "s",          "dep",          "L2",
      "con",  "esplit-conn", "nconn", "e1",  "final-prop", "trivial-equiv"};
  return names;
}

InstanceRecord verify_instance(const Matroid& m, const GroundSubset& t, const std::string& id) {
  InstanceRecord rec;
  rec.id = id;
  rec.p = m.modulus().value();
  rec.matrix_rows = m.matrix().row_vectors();
  rec.ground = m.ground();
  for (int i : t.indices()) rec.t_labels.push_back(m.label(i));

  const SplitInstance si = SplitInstance::make(m, t);
  const bool trivial = si.is_trivial();
  const auto npt = si.npt_circuits();
  const auto base_circuits = si.classified_circuits();
  const auto split_circuits = si.split().circuits();
  const auto esplit_circuits = si.esplit().circuits();
  const auto& labels = m.ground();
  const auto& elabels = si.esplit().ground();

  auto pass = [&](const std::string& claim) { rec.claims[claim] = ClaimResult{"PASS", ""}; };
  auto fail = [&](const std::string& claim, const std::string& witness) {
    rec.claims[claim] = ClaimResult{"FAIL", witness};
  };
  auto skip = [&](const std::string& claim, const std::string& reason) {
    rec.claims[claim] = ClaimResult{"SKIPPED", reason};
  };

  // L1.1 / L1.2: predicted circuit families against the brute-force oracle.
  if (auto w = compare_families(labels, si.predicted_circuits_split(),
                                oracle_circuits(si.split().matrix()))) {
    fail("L1.1", *w);
  } else {
    pass("L1.1");
  }
  if (auto w = compare_families(elabels, si.predicted_circuits_esplit(),
                                oracle_circuits(si.esplit().matrix()))) {
    fail("L1.2", *w);
  } else {
    pass("L1.2");
  }

  // k.1 / k.2: predicted basis families (require an NPT circuit).
  if (trivial) {
    skip("k.1", "trivial split: no NPT circuit");
    skip("k.2", "trivial split: no NPT circuit");
  } else {
    if (auto w = compare_families(labels, si.predicted_bases_split(),
                                  brute_force_bases(si.split().matrix()))) {
      fail("k.1", *w);
    } else {
      pass("k.1");
    }
    if (auto w = compare_families(elabels, si.predicted_bases_esplit(),
                                  brute_force_bases(si.esplit().matrix()))) {
      fail("k.2", *w);
    } else {
      pass("k.2");
    }
  }

  // s: rank formulas against matrix ranks, exhaustively up to 8 elements.
  {
    const int n = m.size();
    std::vector<std::uint32_t> subsets;
    if (n <= 8) {
      for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) subsets.push_back(mask);
    } else {
      SplitMix rng(0x5eedu + static_cast<std::uint64_t>(n));
      std::set<std::uint32_t> seen;
      while (static_cast<int>(seen.size()) < 200)
        seen.insert(static_cast<std::uint32_t>(rng.next() % (std::uint64_t(1) << n)));
      subsets.assign(seen.begin(), seen.end());
    }
    std::string witness;
    for (std::uint32_t mask : subsets) {
      const GroundSubset s(mask, n);
      const int split_formula = si.split_rank(s);
      const int split_actual = rank_of_columns(si.split().matrix(), s.indices());
      if (split_formula != split_actual) {
        witness = "split rank of " + mask_set_string(labels, mask) + ": formula " +
                  std::to_string(split_formula) + ", matrix " + std::to_string(split_actual);
        break;
      }
      auto with_z = s.indices();
      with_z.push_back(si.z_index());
      const int esplit_formula = si.esplit_rank(s);
      const int esplit_actual = rank_of_columns(si.esplit().matrix(), with_z);
      if (esplit_formula != esplit_actual) {
        witness = "element-split rank of " + mask_set_string(labels, mask) + "+z: formula " +
                  std::to_string(esplit_formula) + ", matrix " + std::to_string(esplit_actual);
        break;
      }
    }
    witness.empty() ? pass("s") : fail("s", witness);
  }

  // dep: unions of disjoint NPT circuits are dependent in the split matroid.
  {
    std::string witness;
    for (std::size_t i = 0; i < npt.size() && witness.empty(); ++i) {
      for (std::size_t j = i + 1; j < npt.size(); ++j) {
        if (npt[i].members.intersects(npt[j].members)) continue;
        const GroundSubset u = npt[i].members.unite(npt[j].members);
        if (rank_of_columns(si.split().matrix(), u.indices()) >= u.size()) {
          witness = "independent union " + mask_set_string(labels, u.bits());
          break;
        }
      }
    }
    witness.empty() ? pass("dep") : fail("dep", witness);
  }

  // L2: circuits of the element split through z are exactly the NPT circuits plus z.
  {
    std::vector<GroundSubset> through_z;
    for (const Circuit& c : esplit_circuits) {
      if (c.members.contains(si.z_index())) through_z.push_back(c.members);
    }
    if (auto w = compare_families(elabels, si.cz(), through_z)) {
      fail("L2", *w);
    } else {
      pass("L2");
    }
  }

  // con: the all-X condition forces the split matroid to stay connected.
  {
    if (!m.is_connected()) {
      skip("con", "base matroid disconnected");
    } else {
      const auto hyp = si.connectivity_condition();
      if (!hyp.holds) {
        skip("con", "condition fails at X=" + m.set_to_string(*hyp.witness));
      } else if (si.split().is_connected()) {
        pass("con");
      } else {
        fail("con", "hypothesis holds but split matroid is disconnected");
      }
    }
  }

  // esplit-conn: for connected bases, the element split is connected iff the
  // split is non-trivial.
  {
    if (!m.is_connected()) {
      skip("esplit-conn", "base matroid disconnected");
    } else {
      const bool connected = si.esplit().is_connected();
      if (connected == !trivial) {
        pass("esplit-conn");
      } else {
        fail("esplit-conn", std::string("element split ") +
                                (connected ? "connected" : "disconnected") + " but split is " +
                                (trivial ? "trivial" : "non-trivial"));
      }
    }
  }

  // nconn: where all hypotheses hold, n-connectivity of the split matroid is
  // equivalent to every (n-1)-subset being avoided by some NPT circuit.
  // Evaluated pass/fail for p=2; recorded as findings for p>2.
  {
    if (trivial) {
      skip("nconn", "trivial split excluded (no NPT circuit)");
    } else {
      int evaluated = 0;
      std::string witness;
      for (int n = 2; n <= m.size(); ++n) {
        const auto hyp = si.nconn_hypotheses(n);
        if (!hyp.all_hold) continue;
        ++evaluated;
        const auto crit = si.nconn_criterion(n);
        const bool connected = si.split().is_n_connected(n);
        if (connected != crit.holds) {
          witness = "n=" + std::to_string(n) + ": criterion " +
                    (crit.holds ? "holds" : ("fails at S=" + m.set_to_string(*crit.witness))) +
                    " but split matroid is " + (connected ? "" : "not ") +
                    std::to_string(n) + "-connected";
          break;
        }
      }
      if (rec.p == 2) {
        if (evaluated == 0) {
          skip("nconn", "hypotheses never hold");
        } else {
          witness.empty() ? pass("nconn") : fail("nconn", witness);
        }
      } else {
        skip("nconn", "p>2: evaluated " + std::to_string(evaluated) +
                          " hypothesis case(s); violations reported as findings");
        if (!witness.empty()) rec.findings.push_back("nconn violation (p=" + std::to_string(rec.p) +
                                                     "): " + witness);
      }
    }
  }

  // e1: a decomposition with paired T-meeting circuits keeps the split
  // matroid decomposable into disjoint circuits.
  {
    try {
      const auto ptd = si.pt_decomposition();
      if (!ptd) {
        skip("e1", "no PT-decomposition");
      } else if (si.split().eulerian_decomposition()) {
        pass("e1");
      } else {
        fail("e1", "PT-decomposition exists but split matroid has no circuit decomposition");
      }
    } catch (const NotEulerian&) {
      skip("e1", "base matroid has no circuit decomposition");
    }
  }

  // final-prop: exactly one NPT circuit in a decomposition keeps the element
  // split decomposable.
  {
    try {
      const auto deco = si.one_npt_decomposition();
      if (!deco) {
        skip("final-prop", "no decomposition with exactly one NPT circuit");
      } else if (si.esplit().eulerian_decomposition()) {
        pass("final-prop");
      } else {
        fail("final-prop", "single-NPT decomposition exists but element split has none");
      }
    } catch (const NotEulerian&) {
      skip("final-prop", "base matroid has no circuit decomposition");
    }
  }

  // trivial-equiv: rank equality, absence of NPT circuits, and circuit-family
  // equality must agree.
  {
    std::vector<GroundSubset> base_sets, split_sets;
    for (const auto& cc : base_circuits) base_sets.push_back(cc.circuit.members);
    for (const Circuit& c : split_circuits) split_sets.push_back(c.members);
    const bool same_circuits = !compare_families(labels, base_sets, split_sets).has_value();
    const bool no_npt = npt.empty();
    if (trivial == no_npt && no_npt == same_circuits) {
      pass("trivial-equiv");
    } else {
      fail("trivial-equiv", std::string("rank-equal=") + (trivial ? "yes" : "no") +
                                ", npt-free=" + (no_npt ? "yes" : "no") +
                                ", circuits-equal=" + (same_circuits ? "yes" : "no"));
    }
    if (m.is_cocircuit(t) && !trivial)
      rec.findings.push_back("T=" + m.set_to_string(t) +
                             " is a cocircuit yet the split is non-trivial (p=" +
                             std::to_string(rec.p) + ")");
  }

  return rec;
}

std::vector<Fixture> builtin_fixtures() {
  std::vector<Fixture> out;
  {
    const PrimeModulus p(3);
    auto m = Matroid::from_matrix(p, FieldMatrix::from_rows(p, {{1, 0, 1, 1}, {0, 1, 1, 2}}),
                                  {"a", "b", "c", "d"});
    out.push_back(Fixture{"F1", m, {{"c", "d"}, {"b", "c", "d"}}});
  }
  {
    const PrimeModulus p(2);
    auto m = Matroid::from_matrix(
        p, FieldMatrix::from_rows(p, {{1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 1, 1}}),
        {"e1", "e2", "e3", "e4", "e5", "e6"});
    out.push_back(Fixture{"F2", m, {{"e1", "e5"}, {"e1", "e4", "e6"}}});
  }
  {
    const PrimeModulus p(2);
    auto m = Matroid::from_matrix(p,
                                  FieldMatrix::from_rows(p, {{1, 0, 1, 0, 0, 0},
                                                             {0, 1, 1, 0, 0, 0},
                                                             {0, 0, 0, 1, 0, 1},
                                                             {0, 0, 0, 0, 1, 1}}),
                                  {"a", "b", "c", "d", "e", "f"});
    out.push_back(Fixture{"F3", m, {{"a", "d"}, {"a"}}});
  }
  {
    const PrimeModulus p(3);
    auto m = Matroid::from_matrix(p, FieldMatrix::from_rows(p, {{1, 0, 1}, {0, 1, 1}}),
                                  {"a", "b", "c"});
    out.push_back(Fixture{"F4", m, {{"a"}}});
  }
  {
    const PrimeModulus p(3);
    auto m = Matroid::from_matrix(p, FieldMatrix::from_rows(p, {{1, 1, 2, 1, 2}}),
                                  {"a", "b", "c", "d", "e"});
    out.push_back(Fixture{"F5", m, {{"a", "c"}}});
  }
  return out;
}

VerificationReport run_suite(const CorpusConfig& cfg) {
  validate_config(cfg);
  VerificationReport report;
  report.config = cfg;

  for (const Fixture& f : builtin_fixtures()) {
    for (const auto& t_labels : f.t_sets) {
      const GroundSubset t = f.matroid.subset_from_labels(t_labels);
      report.records.push_back(
          verify_instance(f.matroid, t, f.name + "/T=" + f.matroid.set_to_string(t)));
    }
  }

  for (int i = 0; i < cfg.instance_count; ++i) {
    const Matroid m = random_instance(cfg, i);
    const int n = m.size();
    std::vector<std::uint32_t> t_masks;
    if (cfg.t_policy == CorpusConfig::TPolicy::AllNontrivialSubsets && n <= 7) {
      for (int k = 1; k < n; ++k)
        detail::for_each_combination(n, k, [&](std::uint32_t mask) { t_masks.push_back(mask); });
    } else {
      // Sampled split sets, deterministic in (seed, instance index).
      SplitMix rng(cfg.seed ^ (0xA5A5A5A5ull + static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ull));
      const std::uint32_t limit = (std::uint32_t(1) << n) - 2;  // proper nonempty
      std::set<std::uint32_t> seen;
      std::vector<std::uint32_t> drawn;
      const int want = std::min<int>(cfg.sample_count, static_cast<int>(limit));
      while (static_cast<int>(drawn.size()) < want) {
        const std::uint32_t mask = 1 + static_cast<std::uint32_t>(rng.below(static_cast<int>(limit)));
        if (seen.insert(mask).second) drawn.push_back(mask);
      }
      t_masks = std::move(drawn);
    }
    char idbuf[16];
    std::snprintf(idbuf, sizeof idbuf, "R%03d", i);
    for (std::uint32_t mask : t_masks) {
      const GroundSubset t(mask, n);
      report.records.push_back(
          verify_instance(m, t, std::string(idbuf) + "/T=" + m.set_to_string(t)));
    }
  }
  return report;
}

std::map<std::string, std::map<std::string, int>> summarize(const VerificationReport& report) {
  std::map<std::string, std::map<std::string, int>> out;
  for (const std::string& name : claim_names())
    out[name] = {{"FAIL", 0}, {"PASS", 0}, {"SKIPPED", 0}};
  for (const auto& rec : report.records) {
    for (const auto& [claim, result] : rec.claims) out[claim][result.status]++;
  }
  return out;
}

bool has_failures(const VerificationReport& report) {
  for (const auto& rec : report.records) {
    for (const auto& [claim, result] : rec.claims) {
      if (result.status == "FAIL") return true;
    }
  }
  return false;
}

std::vector<std::string> collect_findings(const VerificationReport& report) {
  std::vector<std::string> out;
  for (const auto& rec : report.records) {
    for (const auto& f : rec.findings) out.push_back(rec.id + ": " + f);
  }
  return out;
}

}  // namespace msplit
