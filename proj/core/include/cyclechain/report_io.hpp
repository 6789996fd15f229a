#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclechain/solver.hpp"
#include "cyclechain/verifier.hpp"

namespace cyclechain {

// Serializers return strings so dependents never touch the JSON vendor
// header.  All object keys are emitted in sorted order and every run
// produces byte-identical text for identical inputs.

std::string report_to_json(const ParameterReport& r);
std::string report_csv_header();
std::string report_to_csv(const ParameterReport& r);

std::string check_to_json(const std::string& graph6, const std::string& label,
                          const CheckResult& c);
std::string check_csv_header();
std::string check_to_csv(const std::string& graph6, const std::string& label,
                         const CheckResult& c);

// One verification run as a single document: graph, flags, every check
// result and a status tally.
std::string verify_to_json(const std::string& graph6, const std::string& label,
                           const FamilyFlags& flags, const std::vector<CheckResult>& checks);

struct SweepFailure {
  long long index = 0;
  std::string graph6;
  std::string check;
};

struct SweepSummary {
  std::uint64_t seed = 0;
  int cap = 0;
  long long graph_count = 0;
  std::vector<std::string> sources;
  // check name -> {holds, fails, not_applicable}
  std::map<std::string, std::array<long long, 3>> tallies;
  std::vector<SweepFailure> failures;
};

std::string summary_to_json(const SweepSummary& s);
std::string summary_to_csv(const SweepSummary& s);

// Counterexample corpus entry: everything needed to re-verify the row.
std::string corpus_entry_json(const std::string& graph6, const std::string& label,
                              const FamilyFlags& flags, const CheckResult& c);

}  // namespace cyclechain
