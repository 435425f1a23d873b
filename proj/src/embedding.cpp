#include "antisym/embedding.hpp"

#include <algorithm>

#include "antisym/errors.hpp"

namespace antisym {

namespace {

BigInt pow3(std::uint64_t k) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, k);
  return out;
}

void check_layout(std::size_t i) {
  if (i > kLayoutLimit) throw CapacityError("coordinate " + std::to_string(i) + " is past the digit layout limit");
}

}  // namespace

std::uint64_t block_length(std::size_t i) {
  check_layout(i);
  return std::uint64_t{1} << (3 * i + 1);
}

std::uint64_t block_offset(std::size_t k) {
  check_layout(k);
  // 2 * (8^k - 1) / 7
  return 2 * (((std::uint64_t{1} << (3 * k)) - 1) / 7);
}

void EmbeddingConfig::validate() const {
  if (n_max + 1 > kLayoutLimit) throw CapacityError("n_max must be below " + std::to_string(kLayoutLimit));
}

BigInt entry_rank(const CoordinateEntry& entry) {
  const auto i = static_cast<mp_bitcnt_t>(entry.width());
  BigInt rank;
  if (!entry.zeta.empty()) rank = BigInt(entry.zeta, 2);
  rank = rank * 2 + entry.parity;
  mpz_mul_2exp(rank.get_mpz_t(), rank.get_mpz_t(), i);
  rank += entry.k_eta.mask_value();
  mpz_mul_2exp(rank.get_mpz_t(), rank.get_mpz_t(), i);
  rank += entry.k_xi.mask_value();
  return rank;
}

Rational TernaryFraction::to_rational() const {
  if (numerator == 0) return Rational();
  mpz_class num = numerator;
  const auto removed = mpz_remove(num.get_mpz_t(), num.get_mpz_t(), BigInt(3).get_mpz_t());
  mpq_class q;
  if (removed >= exponent) {
    q = num * pow3(removed - exponent);
  } else {
    q = mpq_class(num, pow3(exponent - removed));
  }
  return Rational::from_canonical(std::move(q));
}

std::string TernaryFraction::to_factored_string() const {
  if (numerator == 0) return "0";
  mpz_class num = numerator;
  const auto removed = mpz_remove(num.get_mpz_t(), num.get_mpz_t(), BigInt(3).get_mpz_t());
  if (removed >= exponent) return BigInt(num * pow3(removed - exponent)).get_str();
  return num.get_str() + "/3^" + std::to_string(exponent - removed);
}

std::strong_ordering TernaryFraction::compare_abs_to_pow3_inverse(std::uint64_t k) const {
  const BigInt magnitude = abs(numerator);
  // |num| / 3^e  vs  1 / 3^k
  int c = 0;
  if (exponent >= k) {
    c = cmp(magnitude, pow3(exponent - k));
  } else {
    c = cmp(BigInt(magnitude * pow3(k - exponent)), 1);
  }
  return c <=> 0;
}

TernaryFraction TernaryFraction::difference(const TernaryFraction& a, const TernaryFraction& b) {
  TernaryFraction out;
  out.exponent = std::max(a.exponent, b.exponent);
  out.numerator = a.numerator * pow3(out.exponent - a.exponent) - b.numerator * pow3(out.exponent - b.exponent);
  return out;
}

std::vector<std::uint64_t> digit_positions(const CodePoint& t, std::uint64_t digit_limit, bool* has_tail) {
  std::vector<std::uint64_t> positions;
  bool tail = false;
  for (std::size_t i = 0; i < t.stored_length(); ++i) {
    const Coordinate& coord = t.at(i);
    if (coord.empty()) continue;
    if (i > kLayoutLimit || block_offset(i) >= digit_limit) {
      tail = true;
      continue;
    }
    const std::uint64_t base = block_offset(i);
    for (const auto& entry : coord) {
      const std::uint64_t p = base + entry_rank(entry).get_ui();
      if (p >= digit_limit) {
        tail = true;
      } else {
        positions.push_back(p);
      }
    }
  }
  std::sort(positions.begin(), positions.end());
  if (has_tail != nullptr) *has_tail = tail;
  return positions;
}

TernaryFraction cantor_value(const std::vector<std::uint64_t>& positions) {
  TernaryFraction out;
  if (positions.empty()) return out;
  // Horner over ascending positions; the numerator ends in digit 2, so no
  // factor of 3 survives and the result is reduced.
  out.numerator = 2;
  for (std::size_t k = 1; k < positions.size(); ++k) {
    out.numerator *= pow3(positions[k] - positions[k - 1]);
    out.numerator += 2;
  }
  out.exponent = positions.back() + 1;
  return out;
}

TernaryFraction embed_ternary(const CodePoint& t, const EmbeddingConfig& config) {
  config.validate();
  if (auto last = t.last_nonempty(); last && *last > config.n_max) {
    throw CapacityError("code point has coordinate " + std::to_string(*last) + " past n_max = " +
                        std::to_string(config.n_max));
  }
  return cantor_value(digit_positions(t, block_offset(config.n_max + 1)));
}

Rational embed(const CodePoint& t, const EmbeddingConfig& config) { return embed_ternary(t, config).to_rational(); }

namespace {

GapEnclosure enclose(const std::vector<std::uint64_t>& s_positions, bool s_tail,
                     const std::vector<std::uint64_t>& t_positions, bool t_tail, std::uint64_t digit_limit) {
  GapEnclosure out;
  out.head = TernaryFraction::difference(cantor_value(s_positions), cantor_value(t_positions));
  out.head.numerator = abs(out.head.numerator);
  out.slack_exponent = digit_limit;
  out.exact = !s_tail && !t_tail;
  return out;
}

/// Coordinates of the lazy encoding whose blocks start below the limit.
CodePoint truncated_point(const LazyEncoding& e, std::uint64_t digit_limit, bool* truncated) {
  std::vector<Coordinate> coords;
  const std::size_t last = e.vector().is_zero() ? 0 : e.n() + 1;
  std::size_t i = 0;
  for (; i < last && i <= kLayoutLimit && block_offset(i) < digit_limit; ++i) coords.push_back(e.coordinate(i));
  *truncated = i < last;
  return CodePoint(std::move(coords));
}

}  // namespace

GapEnclosure embed_gap_enclosure(const CodePoint& s, const CodePoint& t, std::uint64_t digit_limit) {
  bool s_tail = false;
  bool t_tail = false;
  auto sp = digit_positions(s, digit_limit, &s_tail);
  auto tp = digit_positions(t, digit_limit, &t_tail);
  return enclose(sp, s_tail, tp, t_tail, digit_limit);
}

GapEnclosure embed_gap_enclosure(const LazyEncoding& s, const LazyEncoding& t, std::uint64_t digit_limit) {
  bool s_cut = false;
  bool t_cut = false;
  bool s_tail = false;
  bool t_tail = false;
  auto sp = digit_positions(truncated_point(s, digit_limit, &s_cut), digit_limit, &s_tail);
  auto tp = digit_positions(truncated_point(t, digit_limit, &t_cut), digit_limit, &t_tail);
  return enclose(sp, s_tail || s_cut, tp, t_tail || t_cut, digit_limit);
}

TernaryFraction GapEnclosure::lower_ternary() const {
  if (exact) return head;
  TernaryFraction out = TernaryFraction::difference(head, TernaryFraction{BigInt(1), slack_exponent});
  if (out.numerator < 0) return {};
  return out;
}

TernaryFraction GapEnclosure::upper_ternary() const {
  if (exact) return head;
  return TernaryFraction::difference(head, TernaryFraction{BigInt(-1), slack_exponent});
}

bool GapEnclosure::lower_reaches_pow3_inverse(std::uint64_t k) const {
  if (exact) return head.compare_abs_to_pow3_inverse(k) >= 0;
  // head / 3^e >= 3^-k + 3^-slack, scaled by 3^E.
  const std::uint64_t scale = std::max({head.exponent, k, slack_exponent});
  const BigInt lhs = head.numerator * pow3(scale - head.exponent);
  const BigInt rhs = pow3(scale - k) + pow3(scale - slack_exponent);
  return cmp(lhs, rhs) >= 0;
}

std::uint64_t epsilon_exponent(const HamelVector& x, const EmbeddingConfig& config) {
  config.validate();
  const std::size_t n = n_of(x);
  if (n + 1 > config.n_max) {
    throw CapacityError("epsilon needs n_x + 1 <= n_max (n_x = " + std::to_string(n) + ")");
  }
  return block_offset(n + 1);
}

Rational epsilon(const HamelVector& x, const EmbeddingConfig& config) {
  return pow3_inverse(epsilon_exponent(x, config));
}

TernaryFraction f_ternary(const HamelVector& x, const EmbeddingConfig& config) {
  config.validate();
  if (!x.is_zero() && n_of(x) > config.n_max) {
    throw CapacityError("f needs n_x <= n_max (n_x = " + std::to_string(n_of(x)) + ")");
  }
  return embed_ternary(encode(x), config);
}

Rational f(const HamelVector& x, const EmbeddingConfig& config) { return f_ternary(x, config).to_rational(); }

}  // namespace antisym
