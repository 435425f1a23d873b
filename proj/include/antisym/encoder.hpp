#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antisym/enumeration.hpp"
#include "antisym/hamel.hpp"
#include "antisym/rational.hpp"

namespace antisym {

/// One tuple <zeta, parity, k_eta, k_xi> of a coordinate value. All three
/// widths equal the coordinate index.
struct CoordinateEntry {
  std::string zeta;
  int parity = 0;
  KSet k_eta;
  KSet k_xi;

  std::size_t width() const { return zeta.size(); }
  bool well_formed() const;

  friend bool operator==(const CoordinateEntry&, const CoordinateEntry&) = default;
  friend std::strong_ordering operator<=>(const CoordinateEntry&, const CoordinateEntry&) = default;
};

/// A coordinate value: a finite set of entries, kept sorted and distinct.
using Coordinate = std::vector<CoordinateEntry>;

/// A point of the product space that is empty from some index on. Indices
/// past the stored coordinates read as the empty set.
class CodePoint {
 public:
  CodePoint() = default;
  explicit CodePoint(std::vector<Coordinate> coords);

  const std::vector<Coordinate>& coords() const { return coords_; }
  std::size_t stored_length() const { return coords_.size(); }
  const Coordinate& at(std::size_t i) const;
  bool is_all_empty() const;

  /// Index of the last non-empty coordinate, if any.
  std::optional<std::size_t> last_nonempty() const;

  friend bool operator==(const CodePoint& a, const CodePoint& b);

 private:
  std::vector<Coordinate> coords_;
};

/// Lex-least support label extending `zeta`.
Label eta_selector(const HamelVector& x, std::string_view zeta);
/// Second lex-least support label extending `zeta`, or the least one when it
/// is the only extension.
Label xi_selector(const HamelVector& x, std::string_view zeta);

/// Encodes one vector coordinate by coordinate. Holds the k-set profiles of
/// every coefficient so each coordinate is a prefix lookup.
class LazyEncoding {
 public:
  explicit LazyEncoding(const HamelVector& x);

  std::size_t n() const { return n_; }
  const HamelVector& vector() const { return x_; }

  /// Value at coordinate i; empty for i > n and for the zero vector.
  Coordinate coordinate(std::size_t i) const;

  /// Coordinates 0..n (empty list for the zero vector).
  CodePoint materialize() const;

 private:
  HamelVector x_;
  std::size_t n_;
  std::vector<std::pair<Label, KSet>> profiles_;
};

Coordinate encode_coordinate(const HamelVector& x, std::size_t i);
CodePoint encode(const HamelVector& x);

std::optional<std::size_t> first_differing_coordinate(const CodePoint& s, const CodePoint& t);
std::optional<std::size_t> first_differing_coordinate(const LazyEncoding& s, const LazyEncoding& t);

/// 2^-i for the least differing coordinate i, or 0 for equal points.
Rational distance(const CodePoint& s, const CodePoint& t);
Rational distance_from_index(std::optional<std::size_t> first_difference);

/// 2^-n_x.
Rational delta(const HamelVector& x);

}  // namespace antisym
