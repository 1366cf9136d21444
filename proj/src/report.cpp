#include "msplit/report.hpp"

#include <sstream>

#include "json.hpp"

namespace msplit {

namespace {

using nlohmann::json;

json report_to_json(const VerificationReport& report) {
  json doc;
  json cfg;
  cfg["seed"] = report.config.seed;
  cfg["instance_count"] = report.config.instance_count;
  cfg["primes"] = report.config.primes;
  cfg["max_rows"] = report.config.max_rows;
  cfg["max_cols"] = report.config.max_cols;
  cfg["t_policy"] = report.config.t_policy == CorpusConfig::TPolicy::AllNontrivialSubsets
                        ? "all-nontrivial-subsets"
                        : "sampled";
  cfg["sample_count"] = report.config.sample_count;
  doc["config"] = cfg;

  json instances = json::array();
  int pass = 0, failed = 0, skipped = 0;
  for (const auto& rec : report.records) {
    json jr;
    jr["id"] = rec.id;
    jr["p"] = rec.p;
    jr["matrix"] = rec.matrix_rows;
    jr["ground"] = rec.ground;
    jr["T"] = rec.t_labels;
    json claims;
    for (const auto& [name, result] : rec.claims) {
      json jc;
      jc["status"] = result.status;
      if (!result.detail.empty()) jc["detail"] = result.detail;
      claims[name] = jc;
      if (result.status == "PASS") ++pass;
      if (result.status == "FAIL") ++failed;
      if (result.status == "SKIPPED") ++skipped;
    }
    jr["claims"] = claims;
    if (!rec.findings.empty()) jr["findings"] = rec.findings;
    instances.push_back(jr);
  }
  doc["instances"] = instances;

  json sums;
  for (const auto& [claim, counts] : summarize(report)) sums[claim] = counts;
  doc["claims_summary"] = sums;
  doc["findings"] = collect_findings(report);
  doc["totals"] = {{"records", report.records.size()},
                   {"pass", pass},
                   {"fail", failed},
                   {"skipped", skipped}};
  return doc;
}

std::string render_table(const VerificationReport& report) {
  const auto sums = summarize(report);
  std::ostringstream out;
  out << "records: " << report.records.size() << "\n";
  out << "claim           PASS   FAIL   SKIP   first failure\n";
  for (const std::string& name : claim_names()) {
    const auto& counts = sums.at(name);
    std::string first_fail = "-";
    for (const auto& rec : report.records) {
      const auto it = rec.claims.find(name);
      if (it != rec.claims.end() && it->second.status == "FAIL") {
        first_fail = rec.id + ": " + it->second.detail;
        break;
      }
    }
    char line[128];
    std::snprintf(line, sizeof line, "%-15s %5d  %5d  %5d   ", name.c_str(),
                  counts.at("PASS"), counts.at("FAIL"), counts.at("SKIPPED"));
    out << line << first_fail << "\n";
  }
  const auto findings = collect_findings(report);
  out << "findings: " << findings.size() << "\n";
  for (const auto& f : findings) out << "  - " << f << "\n";
  return out.str();
}

}  // namespace

std::string render_report(const VerificationReport& report, const std::string& format) {
  if (format == "json") return report_to_json(report).dump(2) + "\n";
  if (format == "table") return render_table(report);
  throw ValidationError("unknown report format '" + format + "'");
}

}  // namespace msplit
