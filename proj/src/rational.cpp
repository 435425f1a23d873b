#include "antisym/rational.hpp"

#include <cctype>
#include <utility>

#include "antisym/errors.hpp"

namespace antisym {

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  return end;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_canonical(mpq_class value) {
  Rational r;
  r.value_ = std::move(value);
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t end = scan_digits(text, pos);
  if (end == pos) throw ParseError("expected digits in rational literal", pos);
  BigInt num(std::string(text.substr(pos, end - pos)), 10);
  BigInt den = 1;
  pos = end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    end = scan_digits(text, pos);
    if (end == pos) throw ParseError("expected denominator digits", pos);
    den = BigInt(std::string(text.substr(pos, end - pos)), 10);
    if (den == 0) throw ParseError("zero denominator", pos);
    pos = end;
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational literal", pos);
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::size_t Rational::hash() const {
  // Low limbs are enough to spread small and large values alike.
  auto limb = [](const mpz_class& z) -> std::size_t {
    return mpz_size(z.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
  };
  std::size_t h = limb(value_.get_num()) * 0x9E3779B97F4A7C15ULL;
  h ^= limb(value_.get_den()) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(sign() + 1);
}

Rational pow2_inverse(std::uint64_t k) {
  mpq_class q(1);
  mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), k);
  return Rational::from_canonical(std::move(q));
}

Rational pow3_inverse(std::uint64_t k) {
  mpq_class q(1);
  mpz_ui_pow_ui(q.get_den_mpz_t(), 3, k);
  return Rational::from_canonical(std::move(q));
}

}  // namespace antisym
