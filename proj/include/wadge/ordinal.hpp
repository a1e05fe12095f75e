// ordinal.hpp -- ordinal notations below epsilon_0 in Cantor normal form.
//
// An ordinal is a finite sum  w^e1*c1 + w^e2*c2 + ... + w^ek*ck  with
// exponents e1 > e2 > ... > ek (themselves notations) and coefficients
// ci >= 1.  The empty sum denotes 0.  Only comparison is provided, no
// arithmetic.  Values are immutable and share their representation, so
// copies are cheap.
#pragma once

#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wadge/errors.hpp"

namespace wadge {

class Ordinal {
 public:
  struct Part;
  using Parts = std::vector<Part>;

  Ordinal() = default;  // zero

  static Ordinal nat(std::uint64_t k);
  static Ordinal omega();
  static Ordinal omega_pow(Ordinal exp, std::uint64_t coeff = 1);
  // Validates normal form: strictly decreasing exponents, coefficients >= 1.
  static Ordinal from_parts(Parts parts);

  const Parts& parts() const;
  bool is_zero() const;
  bool is_nat() const;

  // Lexicographic comparison of normal forms, which agrees with the
  // ordinal order: larger leading exponent wins, then larger coefficient,
  // then the remainders; a proper prefix is smaller.
  static std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    return cmp(a, b);
  }
  friend bool operator==(const Ordinal& a, const Ordinal& b) {
    return cmp(a, b) == std::strong_ordering::equal;
  }

 private:
  explicit Ordinal(std::shared_ptr<const Parts> p) : parts_(std::move(p)) {}
  std::shared_ptr<const Parts> parts_;  // null means zero
};

struct Ordinal::Part {
  Ordinal exp;
  std::uint64_t coeff = 1;
};

inline const Ordinal::Parts& Ordinal::parts() const {
  static const Parts empty;
  return parts_ ? *parts_ : empty;
}

inline bool Ordinal::is_zero() const { return parts().empty(); }

inline bool Ordinal::is_nat() const {
  return parts().empty() || (parts().size() == 1 && parts()[0].exp.is_zero());
}

inline Ordinal Ordinal::nat(std::uint64_t k) {
  if (k == 0) return Ordinal();
  return Ordinal(std::make_shared<const Parts>(Parts{Part{Ordinal(), k}}));
}

inline Ordinal Ordinal::omega() { return omega_pow(nat(1)); }

inline Ordinal Ordinal::omega_pow(Ordinal exp, std::uint64_t coeff) {
  if (coeff == 0) throw NotNormalForm("zero coefficient");
  return Ordinal(std::make_shared<const Parts>(Parts{Part{std::move(exp), coeff}}));
}

inline Ordinal Ordinal::from_parts(Parts parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].coeff == 0) throw NotNormalForm("zero coefficient");
    if (i > 0 && cmp(parts[i - 1].exp, parts[i].exp) != std::strong_ordering::greater)
      throw NotNormalForm("exponents not strictly decreasing");
  }
  if (parts.empty()) return Ordinal();
  return Ordinal(std::make_shared<const Parts>(std::move(parts)));
}

inline std::strong_ordering Ordinal::cmp(const Ordinal& a, const Ordinal& b) {
  if (a.parts_ == b.parts_) return std::strong_ordering::equal;
  const Parts& ap = a.parts();
  const Parts& bp = b.parts();
  const std::size_t n = std::min(ap.size(), bp.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cmp(ap[i].exp, bp[i].exp);
    if (c != std::strong_ordering::equal) return c;
    if (ap[i].coeff != bp[i].coeff) return ap[i].coeff <=> bp[i].coeff;
  }
  return ap.size() <=> bp.size();
}

std::string print_ordinal(const Ordinal& o);

namespace detail {

inline std::string print_part(const Ordinal::Part& p) {
  if (p.exp.is_zero()) return std::to_string(p.coeff);
  std::string s = "w";
  if (!(p.exp == Ordinal::nat(1))) {
    std::string es = print_ordinal(p.exp);
    // Parenthesize exactly when re-reading would mis-bind.
    if (es.find('+') != std::string::npos || es.find('*') != std::string::npos)
      es = "(" + es + ")";
    s += "^" + es;
  }
  if (p.coeff > 1) s += "*" + std::to_string(p.coeff);
  return s;
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal o = parse_ordinal();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing input in ordinal: '" + std::string(text_) + "'");
    return o;
  }

 private:
  Ordinal parse_ordinal() {
    Ordinal::Parts parts;
    bool saw_literal_zero = false;
    parts.push_back(parse_term(&saw_literal_zero));
    while (true) {
      skip_ws();
      if (!eat('+')) break;
      bool z = false;
      parts.push_back(parse_term(&z));
      if (z) throw NotNormalForm("'0' summand in ordinal");
    }
    if (parts.size() == 1 && saw_literal_zero) return Ordinal();
    if (saw_literal_zero) throw NotNormalForm("'0' summand in ordinal");
    return Ordinal::from_parts(std::move(parts));
  }

  Ordinal::Part parse_term(bool* literal_zero) {
    skip_ws();
    if (peek() == 'w') {
      ++pos_;
      Ordinal exp = Ordinal::nat(1);
      if (eat('^')) exp = parse_exp_factor();
      std::uint64_t coeff = 1;
      if (eat('*')) coeff = parse_nat();
      if (coeff == 0) throw NotNormalForm("zero coefficient");
      return Ordinal::Part{std::move(exp), coeff};
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t k = parse_nat();
      if (k == 0) *literal_zero = true;
      return Ordinal::Part{Ordinal(), k == 0 ? 1 : k};  // placeholder coeff for literal zero
    }
    throw ParseError("expected ordinal term at '" + remainder() + "'");
  }

  Ordinal parse_exp_factor() {
    skip_ws();
    if (eat('(')) {
      Ordinal o = parse_ordinal();
      skip_ws();
      if (!eat(')')) throw ParseError("missing ')' in ordinal exponent");
      return o;
    }
    if (peek() == 'w') {
      ++pos_;
      if (eat('^')) return Ordinal::omega_pow(parse_exp_factor());
      return Ordinal::omega();
    }
    if (std::isdigit(static_cast<unsigned char>(peek())))
      return Ordinal::nat(parse_nat());
    throw ParseError("expected exponent at '" + remainder() + "'");
  }

  std::uint64_t parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected number at '" + remainder() + "'");
    std::uint64_t v = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc()) throw ParseError("number out of range in ordinal");
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string remainder() const { return std::string(text_.substr(pos_)); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string print_ordinal(const Ordinal& o) {
  if (o.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < o.parts().size(); ++i) {
    if (i) s += "+";
    s += detail::print_part(o.parts()[i]);
  }
  return s;
}

// Grammar: `0`, decimal naturals, `w`, `w^E` (E a natural, a `w` tower, or a
// parenthesized ordinal), optional `*k` coefficients, sums joined by `+`
// with strictly decreasing exponents.  Whitespace is allowed between tokens.
inline Ordinal parse_ordinal(std::string_view text) {
  return detail::OrdinalParser(text).parse();
}

}  // namespace wadge
