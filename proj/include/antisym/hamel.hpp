#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antisym/rational.hpp"

namespace antisym {

/// Finite binary string naming an infinite 0/1 sequence: the bits followed
/// by an all-zero tail. Canonical labels are empty or end in '1', so distinct
/// labels name distinct sequences.
class Label {
 public:
  Label() = default;

  /// Rejects characters other than 0/1 and any trailing '0'.
  static Label parse(std::string_view bits);

  const std::string& bits() const { return bits_; }
  std::size_t length() const { return bits_.size(); }

  /// Bit k of the zero-extended sequence.
  bool bit(std::size_t k) const { return k < bits_.size() && bits_[k] == '1'; }

  friend bool operator==(const Label&, const Label&) = default;
  /// Lexicographic order of the zero-extended sequences, 0 before 1.
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

 private:
  explicit Label(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

std::strong_ordering lex_compare(const Label& a, const Label& b);

/// First i bits of the zero-extended sequence.
std::string restrict(const Label& label, std::size_t i);

/// True iff `prefix` is an initial segment of the zero-extended sequence.
bool extends(const Label& label, std::string_view prefix);

/// Least position where the two sequences differ. Requires a != b.
std::size_t first_difference(const Label& a, const Label& b);

/// Finite rational combination of basis vectors y_label. Zero coefficients
/// are never stored, so the key set is exactly the support.
class HamelVector {
 public:
  using Terms = std::map<Label, Rational>;

  HamelVector() = default;
  HamelVector(std::initializer_list<std::pair<Label, Rational>> terms);

  static HamelVector basis(const Label& label, const Rational& coefficient = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  std::vector<Label> support() const;
  bool in_support(const Label& label) const { return terms_.contains(label); }

  /// Zero for labels outside the support.
  Rational coefficient(const Label& label) const;

  /// Adds `coefficient * y_label`, dropping the term if it cancels.
  void accumulate(const Label& label, const Rational& coefficient);

  HamelVector operator-() const;
  HamelVector& operator+=(const HamelVector& rhs);
  HamelVector& operator-=(const HamelVector& rhs);
  friend HamelVector operator+(HamelVector lhs, const HamelVector& rhs) { return lhs += rhs; }
  friend HamelVector operator-(HamelVector lhs, const HamelVector& rhs) { return lhs -= rhs; }

  friend bool operator==(const HamelVector&, const HamelVector&) = default;
  friend auto operator<=>(const HamelVector& a, const HamelVector& b) { return a.terms_ <=> b.terms_; }

 private:
  Terms terms_;
};

inline HamelVector add(const HamelVector& x, const HamelVector& y) { return x + y; }
inline HamelVector negate(const HamelVector& x) { return -x; }
inline HamelVector sub(const HamelVector& x, const HamelVector& y) { return x - y; }

/// Sum of `R*y(BITS)` terms in label order; "0" for the zero vector.
std::string to_string(const HamelVector& x);

/// Separation indices beyond this are rejected: the code point would need
/// that many coordinates, each with masks that wide.
inline constexpr std::size_t kMaxSeparationIndex = std::size_t{1} << 16;

/// Least n >= 1 such that the support labels have pairwise distinct
/// length-n prefixes.
std::size_t prefix_separation(const HamelVector& x);

/// Least n >= 1 such that length-n prefixes of the support are pairwise
/// distinct and every coefficient is among q_0, ..., q_{n-1}.
/// Throws CapacityError past kMaxSeparationIndex.
std::size_t n_of(const HamelVector& x);

/// n_of(x) < bound, decided without hitting the separation ceiling.
bool n_below(const HamelVector& x, std::size_t bound);

}  // namespace antisym
