#include "antisym/enumeration.hpp"

#include <bit>
#include <stdexcept>

#include "antisym/errors.hpp"

namespace antisym {

namespace {

constexpr std::size_t kTableSize = 1 << 13;

std::vector<Rational> build_table() {
  std::vector<Rational> table;
  table.reserve(kTableSize);
  for (std::size_t j = 0; j < kTableSize; ++j) table.push_back(enumerate(static_cast<std::uint64_t>(j)));
  return table;
}

}  // namespace

std::uint64_t RationalIndex::to_u64() const {
  if (!fits_u64()) throw CapacityError("rational index exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

Rational calkin_wilf(const BigInt& m) {
  if (m < 1) throw PreconditionError("Calkin-Wilf position must be >= 1");
  BigInt a = 1;
  BigInt b = 1;
  const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  // Walk below the leading one, most significant bit first.
  for (std::size_t k = bits - 1; k-- > 0;) {
    if (mpz_tstbit(m.get_mpz_t(), k)) {
      a += b;
    } else {
      b += a;
    }
  }
  return Rational::from_canonical(mpq_class(a, b));
}

BigInt calkin_wilf_position(const Rational& positive) {
  if (positive.sign() <= 0) throw PreconditionError("Calkin-Wilf position of a non-positive rational");
  BigInt a = positive.numerator();
  BigInt b = positive.denominator();
  BigInt low;  // path bits, leaf-most at bit 0
  mp_bitcnt_t depth = 0;
  while (a != b) {
    // Runs of identical moves are collapsed with one division.
    if (a < b) {
      BigInt run = (b - 1) / a;
      if (!run.fits_ulong_p()) throw CapacityError("Calkin-Wilf depth exceeds addressable range");
      b -= run * a;
      depth += run.get_ui();
    } else {
      BigInt run = (a - 1) / b;
      if (!run.fits_ulong_p()) throw CapacityError("Calkin-Wilf depth exceeds addressable range");
      a -= run * b;
      BigInt ones;
      mpz_setbit(ones.get_mpz_t(), run.get_ui());
      ones -= 1;
      mpz_mul_2exp(ones.get_mpz_t(), ones.get_mpz_t(), depth);
      low += ones;
      depth += run.get_ui();
    }
  }
  BigInt m;
  mpz_setbit(m.get_mpz_t(), depth);
  return m + low;
}

Rational enumerate(const RationalIndex& j) {
  if (j.value < 0) throw PreconditionError("negative rational index");
  if (j.value == 0) return Rational();
  BigInt m = (j.value + 1) / 2;
  Rational node = calkin_wilf(m);
  return mpz_odd_p(j.value.get_mpz_t()) ? node : -node;
}

Rational enumerate(std::uint64_t j) {
  return enumerate(RationalIndex(j));
}

RationalIndex index_of(const Rational& q) {
  if (q.is_zero()) return RationalIndex(BigInt(0));
  BigInt m = calkin_wilf_position(q.abs());
  BigInt j = 2 * m;
  if (q.sign() > 0) j -= 1;
  return RationalIndex(std::move(j));
}

const Rational& enumerated(std::size_t j) {
  static const std::vector<Rational> table = build_table();
  if (j < table.size()) return table[j];
  thread_local Rational scratch;
  scratch = enumerate(static_cast<std::uint64_t>(j));
  return scratch;
}

bool KSet::contains(std::size_t j) const {
  if (j >= width_) return false;
  return (words_[j / 64] >> (j % 64)) & 1U;
}

void KSet::insert(std::size_t j) {
  if (j >= width_) throw PreconditionError("KSet member outside width");
  words_[j / 64] |= std::uint64_t{1} << (j % 64);
}

std::size_t KSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> KSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < width_; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

KSet KSet::prefix(std::size_t new_width) const {
  if (new_width > width_) throw PreconditionError("KSet prefix wider than source");
  KSet out(new_width);
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = words_[w];
  if (new_width % 64 != 0) out.words_.back() &= (std::uint64_t{1} << (new_width % 64)) - 1;
  return out;
}

bool KSet::subset_of(const KSet& other) const {
  for (std::size_t j = 0; j < width_; ++j) {
    if (contains(j) && !other.contains(j)) return false;
  }
  return true;
}

std::string KSet::to_mask_string() const {
  std::string out(width_, '0');
  for (std::size_t j = 0; j < width_; ++j) {
    if (contains(j)) out[j] = '1';
  }
  return out;
}

KSet KSet::from_mask_string(const std::string& mask) {
  KSet out(mask.size());
  for (std::size_t j = 0; j < mask.size(); ++j) {
    if (mask[j] == '1') {
      out.insert(j);
    } else if (mask[j] != '0') {
      throw ParseError("mask characters must be 0 or 1", j);
    }
  }
  return out;
}

BigInt KSet::mask_value() const {
  BigInt out;
  if (!words_.empty()) mpz_import(out.get_mpz_t(), words_.size(), -1, sizeof(std::uint64_t), 0, 0, words_.data());
  return out;
}

std::size_t KSet::hash() const {
  std::size_t h = width_ * 0x9E3779B97F4A7C15ULL;
  for (auto w : words_) h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering operator<=>(const KSet& a, const KSet& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

KSet k_set(std::size_t i, const Rational& q) {
  KSet out(i);
  for (std::size_t j = 0; j < i; ++j) {
    if (enumerated(j) < q) out.insert(j);
  }
  return out;
}

}  // namespace antisym
