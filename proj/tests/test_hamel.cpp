#include <doctest.h>

#include <random>

#include "antisym/errors.hpp"
#include "antisym/hamel.hpp"
#include "oracles.hpp"

using namespace antisym;

namespace {
Label L(const char* bits) { return Label::parse(bits); }
Rational Q(const char* text) { return Rational::parse(text); }
}  // namespace

TEST_CASE("labels must be canonical") {
  CHECK_NOTHROW(L(""));
  CHECK_NOTHROW(L("0001"));
  CHECK_THROWS_AS(L("10"), ParseError);
  CHECK_THROWS_AS(L("0"), ParseError);
  CHECK_THROWS_AS(L("12"), ParseError);
}

TEST_CASE("lex_compare: fixed values") {
  CHECK(lex_compare(L(""), L("1")) == std::strong_ordering::less);
  CHECK(lex_compare(L("01"), L("1")) == std::strong_ordering::less);
  CHECK(lex_compare(L("1"), L("11")) == std::strong_ordering::less);
  CHECK(lex_compare(L("101"), L("101")) == std::strong_ordering::equal);
  CHECK(lex_compare(L("11"), L("0111")) == std::strong_ordering::greater);
}

TEST_CASE("lex_compare agrees with padded string comparison") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 2000; ++k) {
    const Label a = oracle::random_label(rng, 7);
    const Label b = oracle::random_label(rng, 7);
    const int expected = oracle::padded_compare(a.bits(), b.bits());
    const auto got = lex_compare(a, b);
    REQUIRE((got < 0 ? -1 : got > 0 ? 1 : 0) == expected);
    REQUIRE((expected == 0) == (a.bits() == b.bits()));
  }
}

TEST_CASE("restrict: fixed values") {
  CHECK(restrict(L(""), 3) == "000");
  CHECK(restrict(L("1"), 1) == "1");
  CHECK(restrict(L("101"), 2) == "10");
  CHECK(restrict(L("101"), 0).empty());
  CHECK(extends(L("101"), "1010"));
  CHECK_FALSE(extends(L("101"), "11"));
}

TEST_CASE("vector arithmetic") {
  const HamelVector x{{L("01"), Q("3/2")}, {L("1"), Q("-1")}};
  CHECK((x + negate(x)).is_zero());
  CHECK(add(HamelVector::basis(L("1")), HamelVector::basis(L("1"))) == HamelVector::basis(L("1"), Rational(2)));
  const HamelVector a{{L(""), Q("1")}, {L("1"), Q("1/2")}};
  CHECK(sub(a, HamelVector::basis(L("1"), Q("1/2"))) == HamelVector::basis(L("")));
  CHECK(to_string(x) == "3/2*y(01) + -1*y(1)");
  CHECK(to_string(HamelVector{}) == "0");
  CHECK(HamelVector{{L("1"), Q("0")}}.is_zero());
}

TEST_CASE("vector arithmetic properties") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const auto x = oracle::random_vector(rng, 3, 3, 12);
    const auto y = oracle::random_vector(rng, 3, 3, 12);
    const auto z = oracle::random_vector(rng, 3, 3, 12);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(sub(x, y) == add(x, negate(y)));
    const auto sum = x + y;
    for (const auto& [label, q] : sum.terms()) {
      CHECK((x.in_support(label) || y.in_support(label)));
      CHECK_FALSE(q.is_zero());
    }
  }
}

TEST_CASE("n_of: fixed values") {
  CHECK(n_of(HamelVector{}) == 1);
  CHECK(n_of(HamelVector::basis(L(""))) == 2);
  CHECK(n_of(HamelVector{{L(""), Q("1")}, {L("1"), Q("1")}}) == 2);
  // "" and "001" first differ at position 2.
  CHECK(prefix_separation(HamelVector{{L(""), Q("1")}, {L("001"), Q("1")}}) == 3);
  CHECK(n_of(HamelVector::basis(L(""), Q("-2"))) == 7);
}

TEST_CASE("n_of agrees with upward linear search and is minimal") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 500; ++k) {
    const auto x = oracle::random_vector(rng, 4, 5, 20);
    const std::size_t n = n_of(x);
    REQUIRE(n == oracle::n_linear_search(x));
    CHECK(n_below(x, n + 1));
    CHECK_FALSE(n_below(x, n));
  }
}

TEST_CASE("n_of rejects coefficients beyond the separation ceiling") {
  CHECK_THROWS_AS(n_of(HamelVector::basis(L(""), Rational(1000))), CapacityError);
  CHECK_FALSE(n_below(HamelVector::basis(L(""), Rational(1000)), 50));
}
