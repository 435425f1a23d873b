#include "antisym/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "antisym/errors.hpp"

namespace antisym {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t k = 0; k < text.size(); ++k) {
      if (std::isspace(static_cast<unsigned char>(text[k]))) continue;
      compact_.push_back(text[k]);
      origin_.push_back(k);
    }
    origin_.push_back(text.size());
  }

  HamelVector parse() {
    if (compact_.empty()) fail("empty expression");
    if (compact_ == "0") return {};
    HamelVector out;
    for (;;) {
      parse_term(out);
      if (at_end()) break;
      expect('+');
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, origin_[pos_]); }

  bool at_end() const { return pos_ >= compact_.size(); }
  char peek() const { return at_end() ? '\0' : compact_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void parse_term(HamelVector& out) {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
    const std::string literal = compact_.substr(start, pos_ - start);
    Rational coefficient;
    try {
      coefficient = Rational::parse(literal);
    } catch (const ParseError& e) {
      pos_ = start + std::min(e.position(), literal.size());
      fail("bad rational literal \"" + literal + "\"");
    }
    expect('*');
    expect('y');
    expect('(');
    const std::size_t bits_start = pos_;
    while (peek() == '0' || peek() == '1') ++pos_;
    const std::string bits = compact_.substr(bits_start, pos_ - bits_start);
    if (peek() != ')') fail("expected ')' after label bits");
    Label label;
    try {
      label = Label::parse(bits);
    } catch (const ParseError& e) {
      pos_ = bits_start + e.position();
      fail("non-canonical label \"" + bits + "\" (trailing '0')");
    }
    ++pos_;
    out.accumulate(label, coefficient);
  }

  std::string compact_;
  std::vector<std::size_t> origin_;
  std::size_t pos_ = 0;
};

}  // namespace

HamelVector parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace antisym
