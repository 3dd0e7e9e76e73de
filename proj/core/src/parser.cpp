#include "nsmooth/parser.hpp"

#include <cctype>
#include <map>

namespace nsmooth {

namespace {

constexpr long kMaxExponent = 1000000;

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool starts_number() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }
  bool starts_var() {
    skip_ws();
    return pos + 1 < text.size() && text[pos] == 't' &&
           (text[pos + 1] == '1' || text[pos + 1] == '2');
  }

  // int, int '/' uint, or decimal; sign is handled by the caller.
  Rat read_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    bool is_decimal = false;
    if (pos < text.size() && text[pos] == '.') {
      is_decimal = true;
      ++pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    } else if (pos < text.size() && text[pos] == '/') {
      ++pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    }
    auto parsed = parse_rational(text.substr(start, pos - start));
    if (!parsed) throw ParseError(start, "malformed number");
    (void)is_decimal;
    return *parsed;
  }

  Var read_var() {
    skip_ws();
    std::size_t start = pos;
    if (!starts_var()) throw ParseError(start, "expected t1 or t2");
    Var v = text[pos + 1] == '1' ? Var::t1 : Var::t2;
    pos += 2;
    return v;
  }

  long read_exponent() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-')
      throw ParseError(start, "negative exponent");
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(start, "expected unsigned integer exponent");
    long value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxExponent) throw ParseError(start, "exponent too large");
      ++pos;
    }
    return value;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, ParseOptions opt) {
  Lexer lex{text};
  Polynomial result;
  std::map<ExpPoint, std::size_t> first_seen;

  bool first_term = true;
  while (true) {
    if (lex.eof()) {
      if (first_term) throw ParseError(lex.pos, "empty expression");
      break;
    }
    Rat sign = 1;
    if (!first_term) {
      char c = lex.peek();
      if (c == '+') {
        ++lex.pos;
      } else if (c == '-') {
        sign = -1;
        ++lex.pos;
      } else {
        throw ParseError(lex.pos, "expected '+' or '-'");
      }
    } else if (lex.peek() == '+' || lex.peek() == '-') {
      if (lex.peek() == '-') sign = -1;
      ++lex.pos;
    }
    first_term = false;

    std::size_t term_start = lex.pos;
    if (lex.eof()) throw ParseError(lex.pos, "expected term");

    Rat coeff = sign;
    long m = 0, n = 0;
    bool any_factor = false;
    if (lex.starts_number()) {
      coeff *= lex.read_number();
      any_factor = true;
    }
    while (true) {
      bool consumed_star = false;
      if (lex.peek() == '*') {
        ++lex.pos;
        consumed_star = true;
      }
      if (!lex.starts_var()) {
        if (consumed_star) throw ParseError(lex.pos, "expected t1 or t2");
        break;
      }
      Var v = lex.read_var();
      long e = 1;
      if (lex.peek() == '^') {
        ++lex.pos;
        e = lex.read_exponent();
      }
      if (v == Var::t1)
        m += e;
      else
        n += e;
      any_factor = true;
      if (m > kMaxExponent || n > kMaxExponent)
        throw ParseError(term_start, "exponent too large");
    }
    if (!any_factor) throw ParseError(lex.pos, "expected term");

    ExpPoint e{m, n};
    first_seen.emplace(e, term_start);
    result.add_term(e, coeff);
  }

  if (opt.strict_exponents) {
    for (const auto& [e, c] : result.terms()) {
      if (e.m == 1 || e.n == 1) {
        auto it = first_seen.find(e);
        std::size_t at = it == first_seen.end() ? 0 : it->second;
        throw ParseError(at, std::string("exponent 1 on ") +
                                 (e.m == 1 ? "t1" : "t2") +
                                 " (strict mode rejects linear factors)");
      }
    }
  }
  if (opt.reject_zero && result.is_zero())
    throw ParseError(0, "zero polynomial");
  return result;
}

}  // namespace nsmooth
