#pragma once

// Independent brute-force oracles, the seeded random instance generator, and
// the claim-by-claim verification suite with machine-readable results.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "msplit/splitting.hpp"

namespace msplit {

struct CorpusConfig {
  std::uint64_t seed = 1;
  int instance_count = 0;
  std::vector<int> primes = {2, 3, 5};
  int max_rows = 4;  // at most 5
  int max_cols = 8;  // at most 8
  enum class TPolicy { AllNontrivialSubsets, Sampled } t_policy = TPolicy::AllNontrivialSubsets;
  int sample_count = 10;
};

// Minimal dependent column sets by direct definition: dependent with every
// proper subset independent. Deliberately shares nothing with
// Matroid::circuits beyond the field primitives.
std::vector<GroundSubset> oracle_circuits(const FieldMatrix& m);

// Maximal independent column sets by direct definition.
std::vector<GroundSubset> brute_force_bases(const FieldMatrix& m);

// Deterministic function of (cfg.seed, index): a loopless, coloopless
// instance of rank >= 2 drawn from a splitmix64 stream.
Matroid random_instance(const CorpusConfig& cfg, int index);

struct ClaimResult {
  std::string status;  // "PASS" | "FAIL" | "SKIPPED"
  std::string detail;  // witness for FAIL, reason for SKIPPED
};

struct InstanceRecord {
  std::string id;
  int p = 0;
  std::vector<std::vector<int>> matrix_rows;
  std::vector<std::string> ground;
  std::vector<std::string> t_labels;
  std::map<std::string, ClaimResult> claims;
  std::vector<std::string> findings;
};

// Claim keys in report order.
const std::vector<std::string>& claim_names();

// Evaluates every claim on one (matroid, T) pair; failures are recorded,
// never thrown.
InstanceRecord verify_instance(const Matroid& m, const GroundSubset& t, const std::string& id);

struct Fixture {
  std::string name;
  Matroid matroid;
  std::vector<std::vector<std::string>> t_sets;  // canonical split sets
};
std::vector<Fixture> builtin_fixtures();

struct VerificationReport {
  CorpusConfig config;
  std::vector<InstanceRecord> records;
};

// Fixtures first, then cfg.instance_count random instances, each with split
// sets chosen per t_policy (all nonempty proper subsets up to 7 elements,
// sampled above).
VerificationReport run_suite(const CorpusConfig& cfg);

// claim -> {status -> count}
std::map<std::string, std::map<std::string, int>> summarize(const VerificationReport& report);
bool has_failures(const VerificationReport& report);
std::vector<std::string> collect_findings(const VerificationReport& report);

}  // namespace msplit
