#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tamemdeg/polynomial.hpp"

namespace tamemdeg {

using VarNames = std::vector<std::string>;

inline bool is_allowed_var_name(const std::string& s) {
  if (s == "x" || s == "y" || s == "z") return true;
  return s.size() == 2 && s[0] == 'x' && s[1] >= '1' && s[1] <= '9';
}

/// Throws unless the names are distinct and each is x1..x9 or one of the aliases x, y, z.
inline void validate_var_names(const VarNames& vars) {
  if (vars.empty() || vars.size() > static_cast<std::size_t>(kMaxVars))
    throw DomainError("variable list must declare between 1 and 9 names");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_allowed_var_name(v)) throw DomainError("variable name '" + v + "' is not one of x1..x9, x, y, z");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
}

/// x, y, z for n <= 3 (the aliases), x1..xn otherwise.
inline VarNames default_var_names(int n) {
  VarNames v;
  static const char* alias[] = {"x", "y", "z"};
  for (int i = 0; i < n; ++i) v.push_back(n <= 3 ? alias[i] : "x" + std::to_string(i + 1));
  return v;
}

inline VarNames indexed_var_names(int n) {
  VarNames v;
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

/// Canonical text: graded-lex descending terms, explicit '*', unit coefficients suppressed.
inline std::string to_string(const Polynomial& p, const VarNames& vars) {
  if (static_cast<int>(vars.size()) != p.n()) throw DimensionError("variable name count differs from n");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = t.c.sign() < 0;
    Rational mag = neg ? -t.c : t.c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < p.n(); ++i) {
      unsigned e = t.m[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[static_cast<std::size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

inline std::string to_string(const Polynomial& p) { return to_string(p, default_var_names(p.n())); }

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarNames& vars, bool indexed_fallback = false)
      : s_(text), vars_(vars), indexed_fallback_(indexed_fallback) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty input");
    Polynomial p = expr();
    skip_ws();
    if (pos_ < s_.size()) {
      char c = s_[pos_];
      if (starts_factor(c)) fail("implicit multiplication is not allowed; use '*'");
      fail(std::string("unexpected character '") + c + "'");
    }
    return p;
  }

 private:
  int n() const { return static_cast<int>(vars_.size()); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      if (c == '+') acc += t; else acc -= t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        fail("division is only allowed inside a rational literal p/q");
      } else if (starts_factor(c)) {
        fail("implicit multiplication is not allowed; use '*'");
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("exponent must be a nonnegative integer");
      std::string digits = read_digits();
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') fail("chained exponents are ambiguous; use parentheses");
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      std::string den;
      std::size_t after_num = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          fail("denominator of a rational literal must be digits");
        den = read_digits();
        if (mpz_class(den) == 0) fail("zero denominator");
      } else {
        pos_ = after_num;
      }
      mpq_class q = den.empty() ? mpq_class(mpz_class(num)) : mpq_class(mpz_class(num), mpz_class(den));
      return Polynomial::constant(n(), Rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (int i = 0; i < n(); ++i)
        if (vars_[static_cast<std::size_t>(i)] == name) return Polynomial::var(n(), i);
      if (indexed_fallback_ && name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] - '0' <= n())
        return Polynomial::var(n(), name[1] - '1');
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const VarNames& vars_;
  bool indexed_fallback_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses polynomial text over the declared variables.
inline Polynomial parse_polynomial(std::string_view text, const VarNames& vars) {
  validate_var_names(vars);
  return detail::PolyParser(text, vars).parse();
}

/// Parses over the default names for n variables; x1..xn are accepted as well.
inline Polynomial parse_polynomial(std::string_view text, int n) {
  VarNames vars = default_var_names(n);
  validate_var_names(vars);
  return detail::PolyParser(text, vars, true).parse();
}

}  // namespace tamemdeg
