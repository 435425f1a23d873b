#include <doctest.h>

#include <random>
#include <set>

#include "antisym/embedding.hpp"
#include "antisym/errors.hpp"
#include "oracles.hpp"

using namespace antisym;

namespace {

Label L(const char* bits) { return Label::parse(bits); }
Rational Q(const char* text) { return Rational::parse(text); }

/// Random code point with coordinates up to `max_coord`, each holding a few
/// random entries of the right width.
CodePoint random_point(std::mt19937_64& rng, std::size_t max_coord) {
  std::uniform_int_distribution<std::size_t> coords(0, max_coord + 1);
  std::uniform_int_distribution<int> entries(0, 3);
  std::bernoulli_distribution coin;
  std::vector<Coordinate> out(coords(rng));
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::set<CoordinateEntry> set;
    const int count = entries(rng);
    for (int e = 0; e < count; ++e) {
      CoordinateEntry entry{std::string(i, '0'), coin(rng) ? 1 : 0, KSet(i), KSet(i)};
      for (auto& c : entry.zeta) c = coin(rng) ? '1' : '0';
      for (std::size_t j = 0; j < i; ++j) {
        if (coin(rng)) entry.k_eta.insert(j);
        if (coin(rng)) entry.k_xi.insert(j);
      }
      set.insert(entry);
    }
    out[i].assign(set.begin(), set.end());
  }
  return CodePoint(std::move(out));
}

std::uint64_t digits_of(const CodePoint& p) {
  std::uint64_t n = 0;
  for (const auto& c : p.coords()) n += c.size();
  return n;
}

BigInt pow3(std::uint64_t k) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, k);
  return out;
}

}  // namespace

TEST_CASE("block layout") {
  CHECK(block_length(0) == 2);
  CHECK(block_length(1) == 16);
  CHECK(block_length(2) == 128);
  CHECK(block_offset(0) == 0);
  CHECK(block_offset(1) == 2);
  CHECK(block_offset(2) == 18);
  CHECK(block_offset(3) == 146);
  CHECK(block_offset(4) == 1170);
  CHECK(block_offset(5) == 9362);
  CHECK(block_offset(6) == 74898);
  for (std::size_t k = 0; k < kLayoutLimit; ++k) CHECK(block_offset(k + 1) == block_offset(k) + block_length(k));
  CHECK_THROWS_AS(block_offset(kLayoutLimit + 1), CapacityError);
}

TEST_CASE("entry_rank: fixed values") {
  CHECK(entry_rank({"", 0, KSet(0), KSet(0)}) == 0);
  CHECK(entry_rank({"", 1, KSet(0), KSet(0)}) == 1);
  CHECK(entry_rank({"1", 1, KSet::from_mask_string("1"), KSet::from_mask_string("1")}) == 15);
}

TEST_CASE("entry_rank is a bijection onto the block for widths 0..2") {
  for (std::size_t i = 0; i <= 2; ++i) {
    std::set<unsigned long> ranks;
    const std::size_t zetas = std::size_t{1} << i;
    const std::size_t masks = std::size_t{1} << i;
    for (std::size_t z = 0; z < zetas; ++z) {
      for (int parity = 0; parity < 2; ++parity) {
        for (std::size_t a = 0; a < masks; ++a) {
          for (std::size_t b = 0; b < masks; ++b) {
            CoordinateEntry e{std::string(i, '0'), parity, KSet(i), KSet(i)};
            for (std::size_t k = 0; k < i; ++k) {
              if ((z >> (i - 1 - k)) & 1U) e.zeta[k] = '1';
              if ((a >> k) & 1U) e.k_eta.insert(k);
              if ((b >> k) & 1U) e.k_xi.insert(k);
            }
            const BigInt r = entry_rank(e);
            REQUIRE(r < block_length(i));
            ranks.insert(r.get_ui());
          }
        }
      }
    }
    CHECK(ranks.size() == block_length(i));
  }
}

TEST_CASE("embed: fixed values") {
  CHECK(embed(CodePoint{}) == Rational(0));
  const CodePoint single(std::vector<Coordinate>{Coordinate{CoordinateEntry{"", 1, KSet(0), KSet(0)}}});
  CHECK(embed(single) == Q("2/9"));

  const Rational v = embed(encode(HamelVector::basis(L(""))));
  BigInt den = v.denominator();
  CHECK(mpz_divisible_p(pow3(146).get_mpz_t(), den.get_mpz_t()) != 0);
  const auto positions = digit_positions(encode(HamelVector::basis(L(""))), UINT64_MAX);
  CHECK(v == oracle::cantor_sum(positions));
  CHECK(f(HamelVector::basis(L(""))) == v);
}

TEST_CASE("embed matches a direct sum over digit positions") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const CodePoint p = random_point(rng, 3);
    const auto positions = digit_positions(p, UINT64_MAX);
    CHECK(positions.size() == digits_of(p));
    const Rational v = embed(p);
    CHECK(v == oracle::cantor_sum(positions));
    CHECK(v >= Rational(0));
    CHECK(v < Rational(1));
    BigInt den = v.denominator();
    CHECK(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), BigInt(3).get_mpz_t()) >= 0);
    CHECK(den == 1);
    CHECK(embed_ternary(p).to_rational() == v);
  }
}

TEST_CASE("embed separation and modulus") {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 300; ++k) {
    const CodePoint s = random_point(rng, 3);
    const CodePoint t = random_point(rng, 3);
    const Rational diff = (embed(s) - embed(t)).abs();
    const auto sp = digit_positions(s, UINT64_MAX);
    const auto tp = digit_positions(t, UINT64_MAX);
    std::vector<std::uint64_t> sym;
    std::set_symmetric_difference(sp.begin(), sp.end(), tp.begin(), tp.end(), std::back_inserter(sym));
    if (sym.empty()) {
      CHECK(s == t);
      CHECK(diff.is_zero());
      continue;
    }
    CHECK(diff >= pow3_inverse(sym.front() + 1));
    const auto first = first_differing_coordinate(s, t);
    REQUIRE(first.has_value());
    for (std::size_t k2 = 0; k2 <= 5; ++k2) {
      // Close images force agreement on the leading coordinates...
      if (diff < pow3_inverse(block_offset(k2))) CHECK(*first >= k2);
      // ...and agreement bounds the images' difference.
      if (*first >= k2) CHECK(diff < pow3_inverse(block_offset(k2)));
    }
  }
}

TEST_CASE("embed enforces the coordinate budget") {
  EmbeddingConfig small;
  small.n_max = 1;
  CHECK_THROWS_AS(embed(encode(HamelVector::basis(L(""))), small), CapacityError);
  CHECK_THROWS_AS(f(HamelVector::basis(L(""), Rational(2))), CapacityError);
  EmbeddingConfig huge;
  huge.n_max = kLayoutLimit;
  CHECK_THROWS_AS(huge.validate(), CapacityError);
}

TEST_CASE("epsilon: fixed values") {
  CHECK(epsilon(HamelVector{}) == pow3_inverse(18));
  CHECK(epsilon(HamelVector::basis(L(""))) == pow3_inverse(146));
  const HamelVector three{{L(""), Q("1")}, {L("001"), Q("1")}};
  CHECK(epsilon(three) == pow3_inverse(1170));
  CHECK(epsilon(HamelVector::basis(L(""), Q("1/2"))) == pow3_inverse(9362));
  CHECK_THROWS_AS(epsilon(HamelVector::basis(L(""), Q("-1/2"))), CapacityError);
}

TEST_CASE("f is constant on equal code points") {
  CHECK(f(HamelVector{}) == Rational(0));
  const HamelVector a = HamelVector::basis(L(""), Q("1/2"));
  EmbeddingConfig c;
  c.n_max = 5;
  CHECK(f(a, c) == embed(encode(a), c));
}

TEST_CASE("ternary fractions") {
  TernaryFraction t{BigInt(6), 3};  // 6/27 = 2/9
  CHECK(t.to_rational() == Q("2/9"));
  CHECK(t.to_factored_string() == "2/3^2");
  CHECK(TernaryFraction{BigInt(9), 1}.to_factored_string() == "3");
  CHECK(t.compare_abs_to_pow3_inverse(2) == std::strong_ordering::greater);
  CHECK(TernaryFraction{BigInt(1), 2}.compare_abs_to_pow3_inverse(2) == std::strong_ordering::equal);
  CHECK(TernaryFraction{BigInt(-1), 5}.compare_abs_to_pow3_inverse(4) == std::strong_ordering::less);
  CHECK(TernaryFraction::difference(t, TernaryFraction{BigInt(1), 2}).to_rational() == Q("1/9"));
}

TEST_CASE("gap enclosure contains the exact difference") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 200; ++k) {
    const CodePoint s = random_point(rng, 3);
    const CodePoint t = random_point(rng, 3);
    const Rational exact = (embed(s) - embed(t)).abs();
    for (std::uint64_t limit : {std::uint64_t{3}, std::uint64_t{20}, std::uint64_t{150}, std::uint64_t{2000}}) {
      const GapEnclosure e = embed_gap_enclosure(s, t, limit);
      CHECK(e.lower() <= exact);
      CHECK(exact <= e.upper());
      if (e.exact) CHECK(e.lower() == exact);
      for (std::uint64_t eps : {std::uint64_t{2}, std::uint64_t{18}, std::uint64_t{146}}) {
        if (e.lower_reaches_pow3_inverse(eps)) CHECK(exact >= pow3_inverse(eps));
        CHECK(e.lower_reaches_pow3_inverse(eps) == (e.lower() >= pow3_inverse(eps)));
      }
    }
  }
}

TEST_CASE("lazy gap enclosure matches the materialized one") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 100; ++k) {
    const auto x = oracle::random_vector(rng, 3, 3, 8);
    const auto y = oracle::random_vector(rng, 3, 3, 8);
    for (std::uint64_t limit : {std::uint64_t{19}, std::uint64_t{147}, std::uint64_t{1171}}) {
      const GapEnclosure a = embed_gap_enclosure(LazyEncoding(x), LazyEncoding(y), limit);
      const GapEnclosure b = embed_gap_enclosure(encode(x), encode(y), limit);
      CHECK(a.lower() == b.lower());
      CHECK(a.upper() == b.upper());
      CHECK(a.exact == b.exact);
    }
  }
}
