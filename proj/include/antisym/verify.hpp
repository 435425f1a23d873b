#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "antisym/embedding.hpp"
#include "antisym/encoder.hpp"
#include "antisym/hamel.hpp"
#include "antisym/kernels.hpp"
#include "antisym/report.hpp"

namespace antisym {

// ---------------------------------------------------------------------------
// The finite exceptional set Z_x

/// { v - x : v = sum over w_x of p_eta y_eta, p_eta in {q_j : j < n_x} },
/// sorted. Throws CapacityError when n_x^|w_x| exceeds `cap`.
std::vector<HamelVector> z_set(const HamelVector& x, std::uint64_t cap = 1'000'000);

/// n_x^|w_x|, saturating at UINT64_MAX.
std::uint64_t z_set_size(const HamelVector& x);

/// Closed-form membership in z_set(x): x + s lives on w_x with every
/// coefficient among q_0, ..., q_{n_x - 1}.
bool in_z_set(const HamelVector& x, const HamelVector& s);

/// support(x + s) within support(x) and n_{x+s} < n_x.
bool membership_predicate(const HamelVector& x, const HamelVector& s);

// ---------------------------------------------------------------------------
// Gaps in the real line

/// |f(x + s) - f(x - s)|, exact. Throws CapacityError past config.n_max.
Rational gap(const HamelVector& x, const HamelVector& s, const EmbeddingConfig& config = {});

/// Exact enclosure of the gap from the digits below `digit_limit`.
GapEnclosure gap_enclosure(const HamelVector& x, const HamelVector& s, std::uint64_t digit_limit);

/// Short display form of the gap: the exact value when it fits the
/// embedding budget and prints compactly, else "< 3^-B(i)" from the first
/// coordinate where the two code points differ.
std::string describe_gap(const HamelVector& x, const HamelVector& s, const EmbeddingConfig& config = {});

// ---------------------------------------------------------------------------
// The case analysis behind g(x-s)(n_x) != g(x+s)(n_x)

/// Every intermediate object the case analysis names.
struct BranchTrace {
  ProofBranch branch = ProofBranch::ShorterSide;
  std::size_t n_x = 0;
  std::size_t n_minus = 0;  // n_{x-s}
  std::size_t n_plus = 0;   // n_{x+s}
  std::optional<Label> eta_hat;
  std::string zeta;
  std::optional<Label> eta_prime;
};

/// Requires s != 0 and n_x <= max(n_{x-s}, n_{x+s}); throws
/// PreconditionError otherwise. The differing label eta-hat is taken
/// lex-least.
BranchTrace trace_branch(const HamelVector& x, const HamelVector& s);
ProofBranch classify_branch(const HamelVector& x, const HamelVector& s);

/// Result of checking the lemma on one pair.
struct LemmaOutcome {
  bool antecedent = false;
  bool consequent = false;      // coordinates at n_x differ
  bool branch_claim = false;    // the branch's specific field inequality
  std::optional<BranchTrace> trace;
  std::string detail;
};

LemmaOutcome check_lemma_pair(const HamelVector& x, const HamelVector& s);

// ---------------------------------------------------------------------------
// Generators

/// Every vector on `universe` with coefficients among q_0, ..., q_{max_index-1}
/// (q_0 = 0 meaning the term is absent).
std::vector<HamelVector> enumerate_vectors(const std::vector<Label>& universe, std::size_t max_index);

/// Each label gets coefficient q_j with j uniform in [0, max_index).
HamelVector random_vector(std::mt19937_64& rng, const std::vector<Label>& labels, std::size_t max_index);

// ---------------------------------------------------------------------------
// Campaigns

struct LemmaCheckConfig {
  std::uint64_t pair_cap = 10'000'000;
  kernels::Execution execution = kernels::Execution::Parallel;
};

/// All (x, s) with s != 0 over the vectors of `universe` with coefficient
/// indices below `max_index`; asserts the lemma wherever its antecedent holds.
VerificationReport exhaustive_lemma_check(const std::vector<Label>& universe, std::size_t max_index,
                                          const LemmaCheckConfig& config = {});

/// `pairs` random (x, s) with s != 0 drawn by random_vector.
VerificationReport random_lemma_campaign(const std::vector<Label>& labels, std::size_t max_index, std::uint64_t pairs,
                                         std::uint64_t seed, const LemmaCheckConfig& config = {});

std::vector<Label> default_fresh_labels();

struct ContainmentConfig {
  std::uint64_t sample_count = 10'000;
  std::uint64_t seed = 0;
  std::size_t max_index = 8;
  std::vector<Label> fresh_labels = default_fresh_labels();
  EmbeddingConfig embedding;
  std::uint64_t z_cap = 1'000'000;
  kernels::Execution execution = kernels::Execution::Parallel;
};

/// Checks every member of z_set(x), then `sample_count` random s outside it:
/// the code-space distance must reach delta(x) and the gap epsilon(x).
/// Members of z_set(x) closer than delta(x) are listed as exceptional.
VerificationReport containment_campaign(const HamelVector& x, const ContainmentConfig& config = {});

}  // namespace antisym
