#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace antisym {

/// Branches of the case analysis behind the antisymmetry lemma.
enum class ProofBranch { ShorterSide, SEmpty, EtaPrimeOneSide, Case1, Case2, Case3 };

inline constexpr std::array<ProofBranch, 6> kAllBranches{
    ProofBranch::ShorterSide, ProofBranch::SEmpty, ProofBranch::EtaPrimeOneSide,
    ProofBranch::Case1,       ProofBranch::Case2,  ProofBranch::Case3};

std::string_view to_string(ProofBranch branch);

/// A failed check, with everything needed to reproduce it.
struct Violation {
  std::uint64_t index = 0;  // position of the pair inside its campaign
  std::string check;
  std::string x;
  std::string s;
  std::string detail;
};

/// An (x, s) pair worth listing that is not a failure, e.g. a member of
/// Z_x whose images are close.
struct Finding {
  std::uint64_t index = 0;
  std::string s;
  std::string distance;
  std::string gap;
};

struct VerificationReport {
  std::string campaign;
  std::uint64_t seed = 0;
  std::uint64_t pairs_checked = 0;  // pairs a check actually ran on (s != 0 for lemma campaigns)
  std::map<std::string, std::uint64_t> counts;
  std::vector<Violation> violations;
  std::array<std::uint64_t, kAllBranches.size()> branch_histogram{};
  std::vector<Finding> exceptional;
  double elapsed_ms = 0.0;

  bool pass() const { return violations.empty(); }

  std::uint64_t branch_count(ProofBranch b) const { return branch_histogram[static_cast<std::size_t>(b)]; }
  void record(ProofBranch b) { ++branch_histogram[static_cast<std::size_t>(b)]; }
  void bump(const std::string& counter, std::uint64_t by = 1) { counts[counter] += by; }
  std::uint64_t count(const std::string& counter) const;

  /// Sums counters and histograms, concatenates violations and findings.
  void merge(const VerificationReport& other);
  /// Orders violations and findings by pair index.
  void sort_by_index();
};

}  // namespace antisym
