#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "antisym/encoder.hpp"
#include "antisym/hamel.hpp"
#include "antisym/rational.hpp"

namespace antisym {

// Layout of ternary digits: coordinate i owns the block of L_i = 2^(3i+1)
// digit positions starting at B(i) = sum_{j<i} L_j, one position per
// possible entry. Present entries get digit 2, absent ones digit 0.

/// Largest coordinate index whose block offsets still fit in 64 bits.
inline constexpr std::size_t kLayoutLimit = 20;

std::uint64_t block_length(std::size_t i);
std::uint64_t block_offset(std::size_t k);

struct EmbeddingConfig {
  /// Highest coordinate index embed() will materialize.
  std::size_t n_max = 5;

  void validate() const;
};

/// ((val(zeta)*2 + parity) * 2^i + mask(k_eta)) * 2^i + mask(k_xi).
BigInt entry_rank(const CoordinateEntry& entry);

/// numerator / 3^exponent, not necessarily reduced.
struct TernaryFraction {
  BigInt numerator;
  std::uint64_t exponent = 0;

  Rational to_rational() const;
  /// Reduced "p/3^e", or "p" for integers.
  std::string to_factored_string() const;

  /// Compares |value| against 3^-k.
  std::strong_ordering compare_abs_to_pow3_inverse(std::uint64_t k) const;

  static TernaryFraction difference(const TernaryFraction& a, const TernaryFraction& b);
};

/// Sorted digit positions of the point, restricted to positions below
/// `digit_limit`. Sets `has_tail` when some entry sits at or past the limit.
std::vector<std::uint64_t> digit_positions(const CodePoint& t, std::uint64_t digit_limit, bool* has_tail = nullptr);

/// sum over positions p of 2 * 3^-(p+1), already in lowest terms.
TernaryFraction cantor_value(const std::vector<std::uint64_t>& positions);

/// Exact image of a code point. Throws CapacityError when a non-empty
/// coordinate lies past config.n_max.
TernaryFraction embed_ternary(const CodePoint& t, const EmbeddingConfig& config = {});
Rational embed(const CodePoint& t, const EmbeddingConfig& config = {});

/// Exact enclosure of |embed(s) - embed(t)| computed from the digits below
/// `digit_limit` only. Collapses to the exact value when neither point has
/// digits at or past the limit.
struct GapEnclosure {
  /// |difference of the truncated images|.
  TernaryFraction head;
  /// Each discarded tail lies in [0, 3^-slack_exponent).
  std::uint64_t slack_exponent = 0;
  bool exact = false;

  TernaryFraction lower_ternary() const;
  TernaryFraction upper_ternary() const;
  Rational lower() const { return lower_ternary().to_rational(); }
  Rational upper() const { return upper_ternary().to_rational(); }
  /// lower() >= 3^-k, decided without reducing any fraction.
  bool lower_reaches_pow3_inverse(std::uint64_t k) const;
};
GapEnclosure embed_gap_enclosure(const CodePoint& s, const CodePoint& t, std::uint64_t digit_limit);
/// Same enclosure, materializing only the coordinates whose blocks start
/// below the limit.
GapEnclosure embed_gap_enclosure(const LazyEncoding& s, const LazyEncoding& t, std::uint64_t digit_limit);

/// 3^-B(n_x + 1).
Rational epsilon(const HamelVector& x, const EmbeddingConfig& config = {});
std::uint64_t epsilon_exponent(const HamelVector& x, const EmbeddingConfig& config = {});

/// embed(encode(x)).
Rational f(const HamelVector& x, const EmbeddingConfig& config = {});
TernaryFraction f_ternary(const HamelVector& x, const EmbeddingConfig& config = {});

}  // namespace antisym
