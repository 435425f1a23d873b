#include "antisym/encoder.hpp"

#include <algorithm>

#include "antisym/errors.hpp"

namespace antisym {

namespace {

const Coordinate kEmptyCoordinate;

/// Support labels extending zeta, in lexicographic order.
std::vector<Label> extensions(const HamelVector& x, std::string_view zeta) {
  std::vector<Label> out;
  for (const auto& [label, q] : x.terms()) {
    if (extends(label, zeta)) out.push_back(label);
  }
  if (out.empty()) throw PreconditionError("no support label extends prefix \"" + std::string(zeta) + "\"");
  return out;
}

}  // namespace

bool CoordinateEntry::well_formed() const {
  return (parity == 0 || parity == 1) && k_eta.width() == width() && k_xi.width() == width();
}

CodePoint::CodePoint(std::vector<Coordinate> coords) : coords_(std::move(coords)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    auto& c = coords_[i];
    for (const auto& e : c) {
      if (e.width() != i || !e.well_formed()) throw PreconditionError("coordinate entry width does not match its index");
    }
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw PreconditionError("duplicate coordinate entry");
  }
}

const Coordinate& CodePoint::at(std::size_t i) const {
  return i < coords_.size() ? coords_[i] : kEmptyCoordinate;
}

bool CodePoint::is_all_empty() const { return !last_nonempty().has_value(); }

std::optional<std::size_t> CodePoint::last_nonempty() const {
  for (std::size_t i = coords_.size(); i-- > 0;) {
    if (!coords_[i].empty()) return i;
  }
  return std::nullopt;
}

bool operator==(const CodePoint& a, const CodePoint& b) { return !first_differing_coordinate(a, b).has_value(); }

Label eta_selector(const HamelVector& x, std::string_view zeta) { return extensions(x, zeta).front(); }

Label xi_selector(const HamelVector& x, std::string_view zeta) {
  auto ext = extensions(x, zeta);
  return ext.size() == 1 ? ext.front() : ext[1];
}

LazyEncoding::LazyEncoding(const HamelVector& x) : x_(x), n_(n_of(x)) {
  profiles_.reserve(x_.support_size());
  for (const auto& [label, q] : x_.terms()) profiles_.emplace_back(label, k_set(n_, q));
}

Coordinate LazyEncoding::coordinate(std::size_t i) const {
  Coordinate out;
  if (i > n_) return out;
  // Labels sharing a length-i prefix are contiguous in lexicographic order.
  std::size_t begin = 0;
  while (begin < profiles_.size()) {
    std::string zeta = restrict(profiles_[begin].first, i);
    std::size_t end = begin + 1;
    while (end < profiles_.size() && extends(profiles_[end].first, zeta)) ++end;
    const std::size_t count = end - begin;
    const std::size_t xi = count == 1 ? begin : begin + 1;
    out.push_back(CoordinateEntry{std::move(zeta), static_cast<int>(count % 2),
                                  profiles_[begin].second.prefix(i), profiles_[xi].second.prefix(i)});
    begin = end;
  }
  return out;
}

CodePoint LazyEncoding::materialize() const {
  std::vector<Coordinate> coords;
  if (!x_.is_zero()) {
    coords.reserve(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) coords.push_back(coordinate(i));
  }
  return CodePoint(std::move(coords));
}

Coordinate encode_coordinate(const HamelVector& x, std::size_t i) { return LazyEncoding(x).coordinate(i); }

CodePoint encode(const HamelVector& x) { return LazyEncoding(x).materialize(); }

std::optional<std::size_t> first_differing_coordinate(const CodePoint& s, const CodePoint& t) {
  const std::size_t n = std::max(s.stored_length(), t.stored_length());
  for (std::size_t i = 0; i < n; ++i) {
    if (s.at(i) != t.at(i)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_differing_coordinate(const LazyEncoding& s, const LazyEncoding& t) {
  const bool s_empty = s.vector().is_zero();
  const bool t_empty = t.vector().is_zero();
  if (s_empty && t_empty) return std::nullopt;
  const std::size_t last = std::max(s_empty ? 0 : s.n(), t_empty ? 0 : t.n());
  for (std::size_t i = 0; i <= last; ++i) {
    if (s.coordinate(i) != t.coordinate(i)) return i;
  }
  return std::nullopt;
}

Rational distance_from_index(std::optional<std::size_t> first_difference) {
  return first_difference ? pow2_inverse(*first_difference) : Rational();
}

Rational distance(const CodePoint& s, const CodePoint& t) { return distance_from_index(first_differing_coordinate(s, t)); }

Rational delta(const HamelVector& x) { return pow2_inverse(n_of(x)); }

}  // namespace antisym
