#include "a1deg/parse.hpp"

#include <algorithm>
#include <cctype>

namespace a1deg {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  MultiPoly<Rational> parse() {
    MultiPoly<Rational> r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  MultiPoly<Rational> constant(const Rational& c) const { return MultiPoly<Rational>::constant(c, vars_); }

  MultiPoly<Rational> expr() {
    MultiPoly<Rational> acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly<Rational> term() {
    bool literal = false;
    MultiPoly<Rational> acc = signed_factor(literal);
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= signed_factor(literal);
      } else if (c == '(' || (literal && std::isalpha(static_cast<unsigned char>(c)))) {
        acc *= signed_factor(literal);
      } else {
        return acc;
      }
    }
  }

  // `literal` reports whether the factor just parsed was a bare numeric literal.
  MultiPoly<Rational> signed_factor(bool& literal) {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -signed_factor(literal);
    }
    if (c == '+') {
      ++pos_;
      return signed_factor(literal);
    }
    return power(literal);
  }

  MultiPoly<Rational> power(bool& literal) {
    MultiPoly<Rational> base = primary(literal);
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("exponent must be a nonnegative integer literal", start);
      std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
      literal = false;
    }
    return base;
  }

  MultiPoly<Rational> primary(bool& literal) {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      MultiPoly<Rational> inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      literal = false;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string lit = s_.substr(start, pos_ - start);
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string den = s_.substr(dstart, pos_ - dstart);
        if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; })) {
          throw ParseError("zero denominator", dstart);
        }
        lit += "/" + den;
      }
      literal = true;
      return constant(parse_rational(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
      literal = false;
      return MultiPoly<Rational>::variable(Rational(1), vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly<Rational> parse_poly(const std::string& text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

QPoly parse_unipoly(const std::string& text, const std::string& variable) {
  return to_unipoly(parse_poly(text, {variable}));
}

std::vector<std::string> identifiers_in(const std::string& text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      std::string id = text.substr(i, j - i);
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

std::pair<std::string, std::string> split_fraction(const std::string& text) {
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) split = i;
  }
  if (split == std::string::npos) return {text, "1"};
  return {text.substr(0, split), text.substr(split + 1)};
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == sep) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace a1deg
