// eval.hpp -- evaluating the complete mind-change functions on finite
// streams.
//
// A tree term denotes a guessing process: the root label is the current
// guess; passes and even inputs keep it; the first odd input 2k+1 abandons
// it and continues inside child k, whose stream then uses its own local
// coding.  A sum waits (skipping passes) for a component selector first.
// Finite streams denote their infinite pass-padding, so a stream that ends
// while a tree is at its root yields that root's value.
//
// Terms are evaluable when every label collapses to a constant, i.e. every
// label body is an atom wrapped in jumps and single-node trees only.
// Anything else composes a genuinely non-constant function with the
// universal function and is handled symbolically, never evaluated.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "wadge/errors.hpp"
#include "wadge/order.hpp"
#include "wadge/quasi_order.hpp"
#include "wadge/stream.hpp"
#include "wadge/term.hpp"

namespace wadge {

class Value {
 public:
  static Value determined(std::string q) { return Value(std::move(q)); }
  static Value undetermined() { return Value(); }

  bool is_determined() const { return q_.has_value(); }
  const std::string& element() const {
    if (!q_) throw InternalError("element() on undetermined value");
    return *q_;
  }

  friend bool operator==(const Value& a, const Value& b) { return a.q_ == b.q_; }

 private:
  Value() = default;
  explicit Value(std::string q) : q_(std::move(q)) {}
  std::optional<std::string> q_;
};

namespace detail {

// The constant an atom-or-jump label denotes, if any: jumps of constants
// stay constant, and a childless cat is its own label.
inline const std::string* label_constant(const Term& label) {
  const Term* t = &label;
  while (true) {
    switch (t->kind()) {
      case Term::Kind::atom:
        return &t->name();
      case Term::Kind::jump:
        t = &t->body();
        break;
      case Term::Kind::cat:
        if (!t->children().empty()) return nullptr;
        t = &t->label();
        break;
      case Term::Kind::sum:
        return nullptr;
    }
  }
}

}  // namespace detail

// True iff every label of t collapses to a constant, so eval_omega and
// synth_reduction can handle it.
inline bool is_evaluable(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
      return true;
    case Term::Kind::jump:
      return detail::label_constant(t) != nullptr;
    case Term::Kind::cat: {
      if (detail::label_constant(t.label()) == nullptr) return false;
      for (const Term& c : t.children())
        if (!is_evaluable(c)) return false;
      return true;
    }
    case Term::Kind::sum:
      for (const Term& c : t.components())
        if (!is_evaluable(c)) return false;
      return true;
  }
  return false;  // unreachable
}

inline Value eval_omega(const QuasiOrder& q, const Term& t, std::span<const Symbol> x) {
  validate_atoms(q, t);
  if (!is_evaluable(t))
    throw JumpTermNotEvaluable("term has a non-constant label: " + print_term(t));

  const Term* node = &t;
  std::size_t pos = 0;
  while (true) {
    if (node->kind() == Term::Kind::sum) {
      auto comps = node->components();
      while (pos < x.size() && x[pos].is_pass()) ++pos;
      if (pos == x.size()) return Value::undetermined();
      const std::uint64_t i = x[pos].value();
      if (i >= comps.size())
        throw InvalidSelector("component selector " + std::to_string(i) + " out of range");
      node = &comps[i];
      ++pos;
      continue;
    }
    auto children = node->tree_children();
    if (children.empty())  // a single node is a constant function
      return Value::determined(*detail::label_constant(node->tree_label()));
    const Term* selected = nullptr;
    for (; pos < x.size(); ++pos) {
      if (x[pos].is_pass() || x[pos].value() % 2 == 0) continue;
      const std::uint64_t k = x[pos].value() / 2;
      if (k >= children.size())
        throw InvalidSelector("child marker " + std::to_string(2 * k + 1) + " out of range");
      selected = &children[k];
      ++pos;
      break;
    }
    if (selected == nullptr) return Value::determined(*detail::label_constant(node->tree_label()));
    node = selected;
  }
}

}  // namespace wadge
