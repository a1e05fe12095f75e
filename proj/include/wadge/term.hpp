// term.hpp -- nested labeled forest terms: the names of degrees.
//
// Term ::= Atom(q)                  a constant from Q
//        | Jump(alpha, body)        the single-node tree labeled by `body`,
//                                   lifted through jump height w^alpha
//        | Cat(label, children)     a tree: root label over a forest of
//                                   child trees (children may be empty)
//        | Sum(components)          a forest: disjoint union of trees
//
// Structural invariants, enforced by the factory functions:
//   * a jump body is never a sum,
//   * a cat label is an atom or a jump,
//   * sums are nonempty, contain no sums, and never nest (so sums occur
//     only outermost),
//   * cat children are trees (no sums).
//
// An atom or jump in term position denotes its own single-node tree, so
// Cat(L, {}) and the bare label L name the same degree.
#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wadge/errors.hpp"
#include "wadge/ordinal.hpp"

namespace wadge {

class Term {
 public:
  enum class Kind { atom, jump, cat, sum };

  static Term atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::atom;
    n->name = std::move(name);
    if (n->name.empty()) throw InvariantViolation("empty atom name");
    return Term(std::move(n));
  }

  static Term jump(Ordinal alpha, Term body) {
    if (body.kind() == Kind::sum) throw InvariantViolation("jump of a sum");
    auto n = std::make_shared<Node>();
    n->kind = Kind::jump;
    n->alpha = std::move(alpha);
    n->sub.push_back(std::move(body));
    return Term(std::move(n));
  }

  static Term cat(Term label, std::vector<Term> children = {}) {
    if (label.kind() != Kind::atom && label.kind() != Kind::jump)
      throw InvariantViolation("cat label must be an atom or a jump");
    for (const Term& c : children)
      if (c.kind() == Kind::sum) throw InvariantViolation("sum as cat child");
    auto n = std::make_shared<Node>();
    n->kind = Kind::cat;
    n->sub.push_back(std::move(label));
    for (Term& c : children) n->sub.push_back(std::move(c));
    return Term(std::move(n));
  }

  static Term sum(std::vector<Term> components) {
    if (components.empty()) throw InvariantViolation("empty sum");
    for (const Term& c : components)
      if (c.kind() == Kind::sum) throw InvariantViolation("sum inside sum");
    auto n = std::make_shared<Node>();
    n->kind = Kind::sum;
    n->sub = std::move(components);
    return Term(std::move(n));
  }

  Kind kind() const { return n_->kind; }
  bool is_tree() const { return kind() != Kind::sum; }
  bool is_label() const { return kind() == Kind::atom || kind() == Kind::jump; }

  const std::string& name() const { return n_->name; }          // atom
  const Ordinal& alpha() const { return n_->alpha; }            // jump: height w^alpha
  const Term& body() const { return n_->sub[0]; }               // jump
  const Term& label() const { return n_->sub[0]; }              // cat
  std::span<const Term> children() const {                      // cat
    return {n_->sub.data() + 1, n_->sub.size() - 1};
  }
  std::span<const Term> components() const { return n_->sub; }  // sum

  // The label of a term viewed as a tree: atoms and jumps label themselves.
  const Term& tree_label() const { return kind() == Kind::cat ? label() : *this; }
  std::span<const Term> tree_children() const {
    return kind() == Kind::cat ? children() : std::span<const Term>{};
  }

  // Stable node identity, usable as a memo key while the term is alive.
  const void* id() const { return n_.get(); }

  // Total order on structures: constructor tag, then label data, then
  // children; equality coincides with structural equality.
  static std::strong_ordering structural_cmp(const Term& a, const Term& b) {
    if (a.n_ == b.n_) return std::strong_ordering::equal;
    if (a.kind() != b.kind()) return static_cast<int>(a.kind()) <=> static_cast<int>(b.kind());
    switch (a.kind()) {
      case Kind::atom:
        return a.name().compare(b.name()) <=> 0;
      case Kind::jump: {
        auto c = Ordinal::cmp(a.alpha(), b.alpha());
        if (c != std::strong_ordering::equal) return c;
        return structural_cmp(a.body(), b.body());
      }
      case Kind::cat:
      case Kind::sum: {
        const auto& as = a.n_->sub;
        const auto& bs = b.n_->sub;
        const std::size_t n = std::min(as.size(), bs.size());
        for (std::size_t i = 0; i < n; ++i) {
          auto c = structural_cmp(as[i], bs[i]);
          if (c != std::strong_ordering::equal) return c;
        }
        return as.size() <=> bs.size();
      }
    }
    return std::strong_ordering::equal;  // unreachable
  }

  friend bool operator==(const Term& a, const Term& b) {
    return structural_cmp(a, b) == std::strong_ordering::equal;
  }

 private:
  struct Node {
    Kind kind;
    std::string name;        // atom
    Ordinal alpha;           // jump
    std::vector<Term> sub;   // jump: {body}; cat: {label, children...}; sum: components
  };

  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct TermStats {
  std::size_t nodes = 0;        // cat nodes plus atoms/jumps in term position
  std::size_t height = 0;       // sums are transparent
  bool jump_free = true;        // no jump constructor anywhere
  Ordinal max_jump_height;      // w^alpha of the largest alpha, 0 if jump free
};

std::string print_term(const Term& t);

namespace detail {

inline void stats_accumulate(const Term& t, std::size_t depth, TermStats* s) {
  switch (t.kind()) {
    case Term::Kind::atom:
      ++s->nodes;
      s->height = std::max(s->height, depth + 1);
      break;
    case Term::Kind::jump: {
      ++s->nodes;
      s->height = std::max(s->height, depth + 1);
      s->jump_free = false;
      Ordinal h = Ordinal::omega_pow(t.alpha());  // w^0 = 1
      if (Ordinal::cmp(h, s->max_jump_height) == std::strong_ordering::greater)
        s->max_jump_height = h;
      TermStats body;  // jump bodies live inside the label: transparent for nodes/height
      stats_accumulate(t.body(), 0, &body);
      if (Ordinal::cmp(body.max_jump_height, s->max_jump_height) == std::strong_ordering::greater)
        s->max_jump_height = body.max_jump_height;
      break;
    }
    case Term::Kind::cat: {
      ++s->nodes;
      s->height = std::max(s->height, depth + 1);
      if (t.label().kind() == Term::Kind::jump) {
        TermStats lab;
        stats_accumulate(t.label(), 0, &lab);
        s->jump_free = false;
        if (Ordinal::cmp(lab.max_jump_height, s->max_jump_height) == std::strong_ordering::greater)
          s->max_jump_height = lab.max_jump_height;
      }
      for (const Term& c : t.children()) stats_accumulate(c, depth + 1, s);
      break;
    }
    case Term::Kind::sum:
      for (const Term& c : t.components()) stats_accumulate(c, depth, s);
      break;
  }
}

}  // namespace detail

inline TermStats stats(const Term& t) {
  TermStats s;
  detail::stats_accumulate(t, 0, &s);
  return s;
}

// ---------------------------------------------------------------------------
// Parsing and printing.
//
// Grammar (s-expression core with sugar):
//   term     := arrow
//   arrow    := element ( '->' arrow )?          right-associative
//   element  := IDENT                            atom
//             | '<' term '>'                     single-node tree labeled by
//                                                the term: (cat (jump 0 T))
//             | '(' 'jump' ORD term ')'          jump (a single-node tree)
//             | '(' 'cat' label term* ')'        tree
//             | '(' 'sum' term+ ')'              forest
//   label    := IDENT | '(' 'jump' ORD term ')'
//
// `A -> B` makes a tree whose root label comes from A (A itself if it is an
// atom or jump, its label if it is a childless cat) and whose children are
// B's components (B itself if it is a tree; a bare atom tail is first
// wrapped into its single-node tree, so "0 -> 1" is (cat 0 (cat 1))).
// `#` starts a comment.  ORD is a whitespace-free ordinal (parentheses
// allowed, balanced).

namespace detail {

struct Token {
  enum class Type { lparen, rparen, langle, rangle, arrow, ident, ord, end };
  Type type;
  std::string text;
};

inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '^' || c == '*' || c == '+';
}

inline std::vector<Token> tokenize_term(std::string_view text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  auto last_two_are_jump_head = [&]() {
    return toks.size() >= 2 && toks[toks.size() - 2].type == Token::Type::lparen &&
           toks.back().type == Token::Type::ident && toks.back().text == "jump";
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (last_two_are_jump_head()) {
      // The jump height: one whitespace-free ordinal token, which may carry
      // balanced parentheses of its own, e.g. w^(w+1).
      std::size_t start = i;
      int depth = 0;
      while (i < text.size()) {
        char d = text[i];
        if (depth == 0 && (std::isspace(static_cast<unsigned char>(d)) || d == ')')) break;
        if (d == '(') ++depth;
        if (d == ')') --depth;
        ++i;
      }
      if (depth != 0 || start == i) throw ParseError("malformed jump height");
      toks.push_back({Token::Type::ord, std::string(text.substr(start, i - start))});
      continue;
    }
    if (c == '(') {
      toks.push_back({Token::Type::lparen, "("});
      ++i;
    } else if (c == ')') {
      toks.push_back({Token::Type::rparen, ")"});
      ++i;
    } else if (c == '<') {
      toks.push_back({Token::Type::langle, "<"});
      ++i;
    } else if (c == '>') {
      toks.push_back({Token::Type::rangle, ">"});
      ++i;
    } else if (c == '-') {
      if (i + 1 >= text.size() || text[i + 1] != '>')
        throw ParseError("stray '-' in term (did you mean '->'?)");
      toks.push_back({Token::Type::arrow, "->"});
      i += 2;
    } else if (is_ident_char(c)) {
      std::size_t start = i;
      while (i < text.size() && is_ident_char(text[i])) ++i;
      toks.push_back({Token::Type::ident, std::string(text.substr(start, i - start))});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in term");
    }
  }
  toks.push_back({Token::Type::end, ""});
  return toks;
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : toks_(tokenize_term(text)) {}

  Term parse() {
    Term t = parse_arrow();
    expect(Token::Type::end, "trailing input after term");
    return t;
  }

 private:
  Term parse_arrow() {
    Term lhs = parse_element();
    if (peek().type != Token::Type::arrow) return lhs;
    next();
    Term rhs = parse_arrow();
    Term label = to_label(lhs);
    if (rhs.kind() == Term::Kind::atom) rhs = Term::cat(rhs, {});
    std::vector<Term> children;
    if (rhs.kind() == Term::Kind::sum) {
      auto comps = rhs.components();
      children.assign(comps.begin(), comps.end());
    } else {
      children.push_back(std::move(rhs));
    }
    return Term::cat(std::move(label), std::move(children));
  }

  static Term to_label(const Term& t) {
    if (t.is_label()) return t;
    if (t.kind() == Term::Kind::cat && t.children().empty()) return t.label();
    throw ParseError("arrow head must be a label or a single-node tree");
  }

  Term parse_element() {
    const Token& tok = peek();
    switch (tok.type) {
      case Token::Type::ident: {
        Term t = Term::atom(tok.text);
        next();
        return t;
      }
      case Token::Type::langle: {
        next();
        Term inner = parse_arrow();
        expect(Token::Type::rangle, "missing '>'");
        return Term::cat(Term::jump(Ordinal(), std::move(inner)), {});
      }
      case Token::Type::lparen:
        return parse_form();
      default:
        throw ParseError("unexpected token '" + tok.text + "' in term");
    }
  }

  Term parse_form() {
    expect(Token::Type::lparen, "expected '('");
    const Token& head = peek();
    if (head.type != Token::Type::ident || (head.text != "jump" && head.text != "cat" &&
                                            head.text != "sum")) {
      // Plain grouping: '(' term ')'.
      Term inner = parse_arrow();
      expect(Token::Type::rparen, "missing ')'");
      return inner;
    }
    std::string form = head.text;
    next();
    if (form == "jump") {
      if (peek().type != Token::Type::ord) throw ParseError("jump needs a height");
      Ordinal alpha = parse_ordinal(peek().text);
      next();
      Term body = parse_arrow();
      expect(Token::Type::rparen, "missing ')' after jump");
      return Term::jump(std::move(alpha), std::move(body));
    }
    if (form == "cat") {
      Term label = parse_label();
      std::vector<Term> children;
      while (peek().type != Token::Type::rparen) children.push_back(parse_arrow());
      next();  // ')'
      return Term::cat(std::move(label), std::move(children));
    }
    if (form == "sum") {
      std::vector<Term> comps;
      while (peek().type != Token::Type::rparen) comps.push_back(parse_arrow());
      next();  // ')'
      if (comps.empty()) throw ParseError("sum needs at least one component");
      return Term::sum(std::move(comps));
    }
    throw ParseError("unknown form '" + form + "'");
  }

  Term parse_label() {
    const Token& tok = peek();
    if (tok.type == Token::Type::ident) {
      Term t = Term::atom(tok.text);
      next();
      return t;
    }
    if (tok.type == Token::Type::langle) {
      next();
      Term inner = parse_arrow();
      expect(Token::Type::rangle, "missing '>'");
      return Term::jump(Ordinal(), std::move(inner));
    }
    if (tok.type == Token::Type::lparen) {
      Term t = parse_form();
      if (t.kind() != Term::Kind::jump)
        throw InvariantViolation("cat label must be an atom or a jump");
      return t;
    }
    throw ParseError("expected cat label");
  }

  const Token& peek() const { return toks_[pos_]; }
  void next() { ++pos_; }
  void expect(Token::Type type, const char* msg) {
    if (peek().type != type) throw ParseError(msg);
    next();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline std::string label_str(const Term& label) {
  if (label.kind() == Term::Kind::atom) return label.name();
  if (label.alpha().is_zero()) return "<" + print_term(label.body()) + ">";
  return "(jump " + print_ordinal(label.alpha()) + " " + print_term(label.body()) + ")";
}

// Continuation of an arrow chain; `t` is a cat.
inline std::string arrow_tail_str(const Term& t) {
  if (t.children().empty()) {
    if (t.label().kind() == Term::Kind::atom) return t.label().name();
    if (t.label().alpha().is_zero()) return "<" + print_term(t.label().body()) + ">";
    return print_term(t);
  }
  if (t.children().size() == 1 && t.children()[0].kind() == Term::Kind::cat)
    return label_str(t.label()) + " -> " + arrow_tail_str(t.children()[0]);
  return print_term(t);
}

}  // namespace detail

inline std::string print_term(const Term& t) {
  using detail::arrow_tail_str;
  using detail::label_str;
  switch (t.kind()) {
    case Term::Kind::atom:
      return t.name();
    case Term::Kind::jump:
      return "(jump " + print_ordinal(t.alpha()) + " " + print_term(t.body()) + ")";
    case Term::Kind::sum: {
      std::string out = "(sum";
      for (const Term& c : t.components()) out += " " + print_term(c);
      return out + ")";
    }
    case Term::Kind::cat: {
      if (t.children().size() == 1 && t.children()[0].kind() == Term::Kind::cat)
        return label_str(t.label()) + " -> " + arrow_tail_str(t.children()[0]);
      if (t.children().empty()) {
        if (t.label().kind() == Term::Kind::jump && t.label().alpha().is_zero())
          return "<" + print_term(t.label().body()) + ">";
        return "(cat " + label_str(t.label()) + ")";
      }
      std::string out = "(cat " + label_str(t.label());
      for (const Term& c : t.children()) out += " " + print_term(c);
      return out + ")";
    }
  }
  return {};  // unreachable
}

inline Term parse_term(std::string_view text) { return detail::TermParser(text).parse(); }

// ---------------------------------------------------------------------------
// Structural helpers.

namespace detail {

inline Term iota_label(const Term& label);

inline Term iota_once(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
      return Term::cat(Term::jump(Ordinal(), t), {});
    case Term::Kind::jump:
      return Term::jump(t.alpha(), iota_once(t.body()));
    case Term::Kind::cat: {
      std::vector<Term> children;
      children.reserve(t.children().size());
      for (const Term& c : t.children()) children.push_back(iota_once(c));
      return Term::cat(iota_label(t.label()), std::move(children));
    }
    case Term::Kind::sum: {
      std::vector<Term> comps;
      comps.reserve(t.components().size());
      for (const Term& c : t.components()) comps.push_back(iota_once(c));
      return Term::sum(std::move(comps));
    }
  }
  return t;  // unreachable
}

inline Term iota_label(const Term& label) {
  if (label.kind() == Term::Kind::atom) return Term::jump(Ordinal(), label);
  return Term::jump(label.alpha(), iota_once(label.body()));
}

}  // namespace detail

// The level-padding embedding: every atom occurrence is wrapped `levels`
// times into its single-node tree.  The result is equivalent to the input
// under the term order.
inline Term iota(const Term& t, std::size_t levels) {
  Term out = t;
  for (std::size_t i = 0; i < levels; ++i) out = detail::iota_once(out);
  return out;
}

// Renames atoms everywhere (term positions and label bodies).  Names
// missing from the map are kept.
inline Term relabel(const Term& t, const std::map<std::string, std::string>& renames) {
  switch (t.kind()) {
    case Term::Kind::atom: {
      auto it = renames.find(t.name());
      return it == renames.end() ? t : Term::atom(it->second);
    }
    case Term::Kind::jump:
      return Term::jump(t.alpha(), relabel(t.body(), renames));
    case Term::Kind::cat: {
      std::vector<Term> children;
      children.reserve(t.children().size());
      for (const Term& c : t.children()) children.push_back(relabel(c, renames));
      return Term::cat(relabel(t.label(), renames), std::move(children));
    }
    case Term::Kind::sum: {
      std::vector<Term> comps;
      comps.reserve(t.components().size());
      for (const Term& c : t.components()) comps.push_back(relabel(c, renames));
      return Term::sum(std::move(comps));
    }
  }
  return t;  // unreachable
}

// The alternating chain over antichain:2 starting with `first`:
// chain(3, "0") is 0 -> 1 -> 0, the name of a difference of two open sets.
inline Term chain(std::size_t n, std::string_view first) {
  if (n < 1) throw BadLength("chain length must be >= 1");
  if (first != "0" && first != "1") throw UnknownElement("chain starts with '0' or '1'");
  auto at = [&](std::size_t i) {
    bool zero = (first == "0") == (i % 2 == 0);
    return Term::atom(zero ? "0" : "1");
  };
  if (n == 1) return at(0);
  Term t = Term::cat(at(n - 1), {});
  for (std::size_t i = n - 1; i-- > 0;) t = Term::cat(at(i), {std::move(t)});
  return t;
}

}  // namespace wadge
