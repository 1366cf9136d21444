// msplit: splitting and element-splitting operations on matroids
// represented over GF(p), with brute-force verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msplit/instance_io.hpp"
#include "msplit/report.hpp"
#include "msplit/splitting.hpp"
#include "msplit/verify.hpp"

namespace {

using namespace msplit;

GroundSubset require_t(const LoadedInstance& inst) {
  if (!inst.split_set) throw ValidationError("this command needs a \"T\" entry in the instance file");
  return *inst.split_set;
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

int cmd_circuits(const std::string& file) {
  const LoadedInstance inst = load_instance(file);
  if (inst.split_set) {
    const SplitInstance si = SplitInstance::make(inst.matroid, *inst.split_set);
    for (const auto& cc : si.classified_circuits())
      std::cout << inst.matroid.set_to_string(cc.circuit.members) << "  " << to_string(cc.klass)
                << "\n";
  } else {
    for (const auto& c : inst.matroid.circuits())
      std::cout << inst.matroid.set_to_string(c.members) << "\n";
  }
  return 0;
}

int cmd_split(const std::string& file, const std::string& out_path, bool element) {
  const LoadedInstance inst = load_instance(file);
  const SplitInstance si = SplitInstance::make(inst.matroid, require_t(inst));
  const Matroid& derived = element ? si.esplit() : si.split();
  // Keep T so downstream commands can classify against the same split set.
  const std::optional<GroundSubset> t =
      element ? si.t().extended(derived.size()) : si.t();
  write_instance(out_path, derived, t);
  return 0;
}

int cmd_bases(const std::string& file, bool predicted) {
  const LoadedInstance inst = load_instance(file);
  if (predicted) {
    const SplitInstance si = SplitInstance::make(inst.matroid, require_t(inst));
    for (const auto& b : si.predicted_bases_split())
      std::cout << si.split().set_to_string(b) << "\n";
  } else {
    for (const auto& b : inst.matroid.bases())
      std::cout << inst.matroid.set_to_string(b.members) << "\n";
  }
  return 0;
}

int cmd_rank(const std::string& file, const std::string& set_csv, bool use_split,
             bool use_esplit) {
  const LoadedInstance inst = load_instance(file);
  const GroundSubset s = inst.matroid.subset_from_labels(split_labels(set_csv));
  int r;
  if (use_split || use_esplit) {
    const SplitInstance si = SplitInstance::make(inst.matroid, require_t(inst));
    r = use_esplit ? si.esplit_rank(s) : si.split_rank(s);
  } else {
    r = inst.matroid.rank_of(s);
  }
  std::cout << r << "\n";
  return 0;
}

int cmd_classify(const std::string& file) {
  const LoadedInstance inst = load_instance(file);
  const SplitInstance si = SplitInstance::make(inst.matroid, require_t(inst));
  for (const auto& cc : si.classified_circuits())
    std::cout << inst.matroid.set_to_string(cc.circuit.members) << "  " << to_string(cc.klass)
              << "  t_sum=" << cc.t_sum.value() << "\n";
  std::cout << (si.is_trivial() ? "trivial splitting" : "non-trivial splitting") << "\n";
  return 0;
}

int cmd_connectivity(const std::string& file, int n, bool use_split, bool use_esplit) {
  const LoadedInstance inst = load_instance(file);
  const Matroid* m = &inst.matroid;
  std::optional<SplitInstance> si;
  if (use_split || use_esplit) {
    si = SplitInstance::make(inst.matroid, require_t(inst));
    m = use_esplit ? &si->esplit() : &si->split();
  }
  const bool ok = m->is_n_connected(n);
  std::cout << n << "-connected: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_eulerian(const std::string& file, bool use_split, bool use_esplit) {
  const LoadedInstance inst = load_instance(file);
  const Matroid* m = &inst.matroid;
  std::optional<SplitInstance> si;
  if (use_split || use_esplit) {
    si = SplitInstance::make(inst.matroid, require_t(inst));
    m = use_esplit ? &si->esplit() : &si->split();
  }
  const auto deco = m->eulerian_decomposition();
  if (!deco) {
    std::cout << "no circuit decomposition\n";
    return 1;
  }
  for (const auto& c : *deco) std::cout << m->set_to_string(c.members) << "\n";
  return 0;
}

int cmd_ptdecomp(const std::string& file) {
  const LoadedInstance inst = load_instance(file);
  const SplitInstance si = SplitInstance::make(inst.matroid, require_t(inst));
  try {
    const auto ptd = si.pt_decomposition();
    if (!ptd) {
      std::cout << "no PT-decomposition\n";
      return 1;
    }
    for (const auto& pair : ptd->pairs)
      std::cout << "pair " << inst.matroid.set_to_string(pair.first.members) << " + "
                << inst.matroid.set_to_string(pair.second.members) << "  ["
                << (pair.mode == PairMode::UnionInC2 ? "union-in-C2" : "both-PT") << "]\n";
    for (const auto& c : ptd->singles)
      std::cout << "single " << inst.matroid.set_to_string(c.members) << "\n";
    return 0;
  } catch (const NotEulerian&) {
    std::cout << "no circuit decomposition\n";
    return 1;
  }
}

int cmd_verify(const std::string& file) {
  const LoadedInstance inst = load_instance(file);
  const GroundSubset t = require_t(inst);
  const InstanceRecord rec =
      verify_instance(inst.matroid, t, file + "/T=" + inst.matroid.set_to_string(t));
  bool any_fail = false;
  for (const std::string& name : claim_names()) {
    const auto& result = rec.claims.at(name);
    std::cout << name;
    for (std::size_t i = name.size(); i < 14; ++i) std::cout << ' ';
    std::cout << result.status;
    if (!result.detail.empty()) std::cout << "  (" << result.detail << ")";
    std::cout << "\n";
    if (result.status == "FAIL") any_fail = true;
  }
  for (const auto& f : rec.findings) std::cout << "finding: " << f << "\n";
  return any_fail ? 1 : 0;
}

int cmd_suite(const CorpusConfig& cfg, const std::string& format, const std::string& out_path) {
  const VerificationReport report = run_suite(cfg);
  emit(out_path, render_report(report, format));
  return has_failures(report) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitting and element-splitting operations on GF(p)-represented matroids"};
  app.require_subcommand(1);

  std::string file, out_path, set_csv;
  bool predicted = false, use_split = false, use_esplit = false;
  int n = 2;

  auto* circuits = app.add_subcommand("circuits", "list circuits (with classes when T is given)");
  circuits->add_option("file", file)->required();

  auto* split = app.add_subcommand("split", "emit the split instance A_T");
  split->add_option("file", file)->required();
  split->add_option("--out", out_path)->required();

  auto* esplit = app.add_subcommand("esplit", "emit the element-split instance A'_T");
  esplit->add_option("file", file)->required();
  esplit->add_option("--out", out_path)->required();

  auto* bases = app.add_subcommand("bases", "list bases, or the predicted split bases");
  bases->add_option("file", file)->required();
  bases->add_flag("--predicted", predicted);

  auto* rank = app.add_subcommand("rank", "rank of a label set");
  rank->add_option("file", file)->required();
  rank->add_option("--set", set_csv, "comma-separated labels (empty for the empty set)")
      ->required();
  rank->add_flag("--split", use_split);
  rank->add_flag("--esplit", use_esplit);

  auto* classify = app.add_subcommand("classify", "classify every circuit against T");
  classify->add_option("file", file)->required();

  auto* connectivity = app.add_subcommand("connectivity", "test n-connectivity");
  connectivity->add_option("file", file)->required();
  connectivity->add_option("--n", n);
  connectivity->add_flag("--split", use_split);
  connectivity->add_flag("--esplit", use_esplit);

  auto* eulerian = app.add_subcommand("eulerian", "decompose into disjoint circuits");
  eulerian->add_option("file", file)->required();
  eulerian->add_flag("--split", use_split);
  eulerian->add_flag("--esplit", use_esplit);

  auto* ptdecomp = app.add_subcommand("ptdecomp", "search for a PT-decomposition");
  ptdecomp->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "claim-by-claim check of one instance");
  verify->add_option("file", file)->required();

  CorpusConfig cfg;
  cfg.instance_count = 50;
  std::string primes_csv = "2,3,5", format = "table";
  auto* suite = app.add_subcommand("suite", "run the verification suite over a random corpus");
  suite->add_option("--seed", cfg.seed);
  suite->add_option("--count", cfg.instance_count);
  suite->add_option("--p", primes_csv, "comma-separated primes");
  suite->add_option("--max-cols", cfg.max_cols);
  suite->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  suite->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (circuits->parsed()) return cmd_circuits(file);
    if (split->parsed()) return cmd_split(file, out_path, false);
    if (esplit->parsed()) return cmd_split(file, out_path, true);
    if (bases->parsed()) return cmd_bases(file, predicted);
    if (rank->parsed()) return cmd_rank(file, set_csv, use_split, use_esplit);
    if (classify->parsed()) return cmd_classify(file);
    if (connectivity->parsed()) return cmd_connectivity(file, n, use_split, use_esplit);
    if (eulerian->parsed()) return cmd_eulerian(file, use_split, use_esplit);
    if (ptdecomp->parsed()) return cmd_ptdecomp(file);
    if (verify->parsed()) return cmd_verify(file);
    if (suite->parsed()) {
      std::vector<int> primes;
      for (const auto& s : split_labels(primes_csv)) primes.push_back(std::stoi(s));
      cfg.primes = primes;
      return cmd_suite(cfg, format, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
