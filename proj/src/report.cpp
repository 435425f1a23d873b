#include "antisym/report.hpp"

#include <algorithm>

namespace antisym {

std::string_view to_string(ProofBranch branch) {
  switch (branch) {
    case ProofBranch::ShorterSide: return "SHORTER_SIDE";
    case ProofBranch::SEmpty: return "S_EMPTY";
    case ProofBranch::EtaPrimeOneSide: return "ETA_PRIME_ONE_SIDE";
    case ProofBranch::Case1: return "CASE1";
    case ProofBranch::Case2: return "CASE2";
    case ProofBranch::Case3: return "CASE3";
  }
  return "UNKNOWN";
}

std::uint64_t VerificationReport::count(const std::string& counter) const {
  auto it = counts.find(counter);
  return it == counts.end() ? 0 : it->second;
}

void VerificationReport::merge(const VerificationReport& other) {
  pairs_checked += other.pairs_checked;
  for (const auto& [key, value] : other.counts) counts[key] += value;
  for (std::size_t b = 0; b < branch_histogram.size(); ++b) branch_histogram[b] += other.branch_histogram[b];
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  exceptional.insert(exceptional.end(), other.exceptional.begin(), other.exceptional.end());
}

void VerificationReport::sort_by_index() {
  std::stable_sort(violations.begin(), violations.end(),
                   [](const Violation& a, const Violation& b) { return a.index < b.index; });
  std::stable_sort(exceptional.begin(), exceptional.end(),
                   [](const Finding& a, const Finding& b) { return a.index < b.index; });
}

}  // namespace antisym
