#include "antisym/hamel.hpp"

#include <algorithm>

#include "antisym/enumeration.hpp"
#include "antisym/errors.hpp"

namespace antisym {

Label Label::parse(std::string_view bits) {
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1') throw ParseError("label characters must be 0 or 1", k);
  }
  if (!bits.empty() && bits.back() == '0') {
    throw ParseError("non-canonical label \"" + std::string(bits) + "\" (trailing '0')", bits.size() - 1);
  }
  return Label(std::string(bits));
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  const std::size_t n = std::max(a.bits_.size(), b.bits_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const bool x = a.bit(k);
    const bool y = b.bit(k);
    if (x != y) return x ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Label& a, const Label& b) { return a <=> b; }

std::string restrict(const Label& label, std::size_t i) {
  std::string out = label.bits().substr(0, std::min(i, label.length()));
  out.resize(i, '0');
  return out;
}

bool extends(const Label& label, std::string_view prefix) {
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (label.bit(k) != (prefix[k] == '1')) return false;
  }
  return true;
}

std::size_t first_difference(const Label& a, const Label& b) {
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.bit(k) != b.bit(k)) return k;
  }
  throw PreconditionError("first_difference of equal labels");
}

HamelVector::HamelVector(std::initializer_list<std::pair<Label, Rational>> terms) {
  for (const auto& [label, q] : terms) accumulate(label, q);
}

HamelVector HamelVector::basis(const Label& label, const Rational& coefficient) {
  HamelVector v;
  v.accumulate(label, coefficient);
  return v;
}

std::vector<Label> HamelVector::support() const {
  std::vector<Label> out;
  out.reserve(terms_.size());
  for (const auto& [label, q] : terms_) out.push_back(label);
  return out;
}

Rational HamelVector::coefficient(const Label& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Rational() : it->second;
}

void HamelVector::accumulate(const Label& label, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(label, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

HamelVector HamelVector::operator-() const {
  HamelVector out = *this;
  for (auto& [label, q] : out.terms_) q = -q;
  return out;
}

HamelVector& HamelVector::operator+=(const HamelVector& rhs) {
  for (const auto& [label, q] : rhs.terms_) accumulate(label, q);
  return *this;
}

HamelVector& HamelVector::operator-=(const HamelVector& rhs) {
  for (const auto& [label, q] : rhs.terms_) accumulate(label, -q);
  return *this;
}

std::string to_string(const HamelVector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [label, q] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += q.to_string() + "*y(" + label.bits() + ")";
  }
  return out;
}

std::size_t prefix_separation(const HamelVector& x) {
  // Terms are in lexicographic order, so checking neighbours suffices.
  std::size_t n = 1;
  const Label* previous = nullptr;
  for (const auto& [label, q] : x.terms()) {
    if (previous != nullptr) n = std::max(n, first_difference(*previous, label) + 1);
    previous = &label;
  }
  return n;
}

std::size_t n_of(const HamelVector& x) {
  std::size_t n = prefix_separation(x);
  for (const auto& [label, q] : x.terms()) {
    const RationalIndex j = index_of(q);
    if (j.value >= kMaxSeparationIndex) throw CapacityError("coefficient " + q.to_string() + " has enumeration index beyond the separation ceiling");
    n = std::max(n, static_cast<std::size_t>(j.to_u64()) + 1);
  }
  if (n > kMaxSeparationIndex) throw CapacityError("label prefixes separate beyond the separation ceiling");
  return n;
}

bool n_below(const HamelVector& x, std::size_t bound) {
  if (prefix_separation(x) >= bound) return false;
  for (const auto& [label, q] : x.terms()) {
    if (index_of(q).value + 1 >= bound) return false;
  }
  return true;
}

}  // namespace antisym
