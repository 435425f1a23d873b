#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "antisym/rational.hpp"

namespace antisym {

/// Position in the fixed enumeration of the rationals. Unbounded: rationals
/// with large heights sit at indices far beyond 64 bits.
struct RationalIndex {
  BigInt value;

  RationalIndex() = default;
  explicit RationalIndex(BigInt v) : value(std::move(v)) {}
  explicit RationalIndex(std::uint64_t v) : value(static_cast<unsigned long>(v)) {}

  bool fits_u64() const { return mpz_sizeinbase(value.get_mpz_t(), 2) <= 64 && value >= 0; }
  std::uint64_t to_u64() const;

  friend bool operator==(const RationalIndex& a, const RationalIndex& b) { return a.value == b.value; }
  friend std::strong_ordering operator<=>(const RationalIndex& a, const RationalIndex& b) {
    return cmp(a.value, b.value) <=> 0;
  }
};

/// Calkin-Wilf node at heap position m >= 1 (root 1/1; a/b has children
/// a/(a+b) and (a+b)/b).
Rational calkin_wilf(const BigInt& m);

/// Heap position of a positive rational in the Calkin-Wilf tree.
BigInt calkin_wilf_position(const Rational& positive);

/// q_0 = 0, q_{2m-1} = cw(m), q_{2m} = -cw(m).
Rational enumerate(const RationalIndex& j);
Rational enumerate(std::uint64_t j);

/// Inverse of enumerate. Exact for every rational.
RationalIndex index_of(const Rational& q);

/// Cached enumerate(j); falls back to direct evaluation past the table.
const Rational& enumerated(std::size_t j);

/// Finite subset of {0, ..., width-1}, read as a set of enumeration indices.
class KSet {
 public:
  KSet() = default;
  explicit KSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }
  bool contains(std::size_t j) const;
  void insert(std::size_t j);
  std::size_t size() const;
  std::vector<std::size_t> members() const;

  /// The same membership restricted to {0, ..., new_width-1}.
  KSet prefix(std::size_t new_width) const;
  bool subset_of(const KSet& other) const;

  /// Little-endian bit string: character j is '1' iff j is a member.
  std::string to_mask_string() const;
  static KSet from_mask_string(const std::string& mask);

  /// Sum of 2^j over members.
  BigInt mask_value() const;

  std::size_t hash() const;

  friend bool operator==(const KSet&, const KSet&) = default;
  friend std::strong_ordering operator<=>(const KSet& a, const KSet& b);

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// {j < i : q_j < q}.
KSet k_set(std::size_t i, const Rational& q);

}  // namespace antisym
