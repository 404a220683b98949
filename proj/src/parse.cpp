#include "ratpoints/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "ratpoints/error.hpp"

namespace ratpoints {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      offsets_.push_back(i);
    }
    end_offset_ = text.size();
  }

  MultiPoly parse() {
    if (chars_.empty()) throw ParseError(end_offset_, "empty polynomial");
    MultiPoly out;
    bool first = true;
    while (pos_ < chars_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        throw ParseError(offset(), "expected '+' or '-'");
      }
      first = false;
      MultiPoly term = parse_term();
      if (negative) term = -term;
      out += term;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }
  std::size_t offset() const { return pos_ < offsets_.size() ? offsets_[pos_] : end_offset_; }
  static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z'; }

  Integer parse_integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(chars_[pos_++]);
    if (digits.empty()) throw ParseError(offset(), "expected digits");
    return Integer(digits);
  }

  MultiPoly parse_term() {
    Integer coeff = 1;
    Monomial mono;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      have_factor = true;
    }
    bool need_factor = false;
    while (true) {
      if (peek() == '*') {
        if (!have_factor) throw ParseError(offset(), "unexpected '*'");
        ++pos_;
        need_factor = true;
      }
      if (!is_var(peek())) {
        if (need_factor || !have_factor) {
          throw ParseError(offset(), peek() == '\0' ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
        }
        break;
      }
      unsigned index = static_cast<unsigned>(peek() - 'x');
      ++pos_;
      unsigned exponent = 1;
      if (peek() == '^') {
        ++pos_;
        Integer e = parse_integer();
        if (!e.fits_uint_p()) throw ParseError(offset(), "exponent too large");
        exponent = static_cast<unsigned>(e.get_ui());
      }
      mono.e[index] += exponent;
      have_factor = true;
      need_factor = false;
    }
    return MultiPoly::monomial(coeff, mono);
  }

  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial_raw(std::string_view text) { return Parser(text).parse(); }

MultiPoly parse_polynomial(std::string_view text) { return parse_polynomial_raw(text).canonical(); }

}  // namespace ratpoints
