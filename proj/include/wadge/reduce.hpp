// reduce.hpp -- synthesis and execution of reduction transducers.
//
// A Plan is a finite program denoting a continuous, pass-monotone stream
// map.  synth_reduction(S, T) builds, for S below T in the term order, a
// plan that translates any mind-change run against S into one against T
// whose value dominates it pointwise.
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wadge/errors.hpp"
#include "wadge/eval.hpp"
#include "wadge/order.hpp"
#include "wadge/stream.hpp"
#include "wadge/term.hpp"

namespace wadge {

class Plan {
 public:
  enum class Kind { const_root, wait_root, enter_branch, read_selector, emit_selector };

  static Plan const_root() { return Plan(make(Kind::const_root)); }

  // One branch per child of the source tree, taken on marker 2k+1.
  static Plan wait_root(std::vector<Plan> branches) {
    auto n = make(Kind::wait_root);
    n->branches = std::move(branches);
    return Plan(std::move(n));
  }

  // Emit the marker 2*target_child+1 into the target, then continue.
  static Plan enter_branch(std::size_t target_child, Plan then) {
    auto n = make(Kind::enter_branch);
    n->index = target_child;
    n->branches.push_back(std::move(then));
    return Plan(std::move(n));
  }

  // One branch per component of the source sum, taken on its selector.
  static Plan read_selector(std::vector<Plan> branches) {
    auto n = make(Kind::read_selector);
    n->branches = std::move(branches);
    return Plan(std::move(n));
  }

  // Emit the raw component selector of the target sum, then continue.
  static Plan emit_selector(std::size_t target_component, Plan then) {
    auto n = make(Kind::emit_selector);
    n->index = target_component;
    n->branches.push_back(std::move(then));
    return Plan(std::move(n));
  }

  Kind kind() const { return n_->kind; }
  std::span<const Plan> branches() const { return n_->branches; }  // wait_root/read_selector
  std::size_t index() const { return n_->index; }                  // enter_branch/emit_selector
  const Plan& then() const { return n_->branches[0]; }             // enter_branch/emit_selector

 private:
  struct Node {
    Kind kind;
    std::size_t index = 0;
    std::vector<Plan> branches;
  };
  static std::shared_ptr<Node> make(Kind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
  }
  explicit Plan(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

namespace detail {

inline Plan synth_rec(const Comparator& cmp, const Term& s, const Term& t) {
  if (s.kind() == Term::Kind::sum) {
    std::vector<Plan> branches;
    branches.reserve(s.components().size());
    for (const Term& si : s.components()) branches.push_back(synth_rec(cmp, si, t));
    return Plan::read_selector(std::move(branches));
  }
  if (t.kind() == Term::Kind::sum) {
    auto comps = t.components();
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (cmp.leq(s, comps[j]))
        return Plan::emit_selector(j, synth_rec(cmp, s, comps[j]));
    throw InternalError("no component witness during synthesis");
  }
  auto term_cmp = [&cmp](const Term& a, const Term& b) { return cmp.leq(a, b); };
  if (label_leq_with(cmp.order(), s.tree_label(), t.tree_label(), term_cmp)) {
    auto children = s.tree_children();
    if (children.empty()) return Plan::const_root();
    // Only passes have been emitted while the input sits at its root, so
    // each branch may start over against the whole target.
    std::vector<Plan> branches;
    branches.reserve(children.size());
    for (const Term& sk : children) branches.push_back(synth_rec(cmp, sk, t));
    return Plan::wait_root(std::move(branches));
  }
  auto tchildren = t.tree_children();
  for (std::size_t j = 0; j < tchildren.size(); ++j)
    if (cmp.leq(s, tchildren[j]))
      return Plan::enter_branch(j, synth_rec(cmp, s, tchildren[j]));
  throw InternalError("no child witness during synthesis");
}

}  // namespace detail

// Requires S <= T in the term order (else NotReducible) and both sides
// evaluable (else JumpTermNotEvaluable).  Witnesses pick the smallest valid
// index, so plans are reproducible.
inline Plan synth_reduction(const QuasiOrder& q, const Term& s, const Term& t) {
  validate_atoms(q, s);
  validate_atoms(q, t);
  if (!is_evaluable(s) || !is_evaluable(t))
    throw JumpTermNotEvaluable("reduction synthesis needs evaluable terms");
  Comparator cmp(q);
  if (!cmp.leq(s, t))
    throw NotReducible(print_term(s) + " is not below " + print_term(t));
  return detail::synth_rec(cmp, s, t);
}

inline FinStream run_transducer(const Plan& plan, std::span<const Symbol> x) {
  FinStream out;
  const Plan* node = &plan;
  std::size_t pos = 0;
  while (true) {
    switch (node->kind()) {
      case Plan::Kind::const_root:
        for (; pos < x.size(); ++pos) out.push_back(Symbol::pass());
        return out;
      case Plan::Kind::wait_root: {
        const Plan* next = nullptr;
        for (; pos < x.size(); ++pos) {
          if (x[pos].is_pass() || x[pos].value() % 2 == 0) {
            out.push_back(Symbol::pass());
            continue;
          }
          const std::uint64_t k = x[pos].value() / 2;
          if (k >= node->branches().size())
            throw InvalidSelector("child marker " + std::to_string(x[pos].value()) +
                                  " out of range for plan");
          next = &node->branches()[k];
          ++pos;
          break;
        }
        if (next == nullptr) return out;
        node = next;
        break;
      }
      case Plan::Kind::enter_branch:
        out.push_back(Symbol::nat(2 * node->index() + 1));
        node = &node->then();
        break;
      case Plan::Kind::read_selector: {
        const Plan* next = nullptr;
        for (; pos < x.size(); ++pos) {
          if (x[pos].is_pass()) {
            out.push_back(Symbol::pass());
            continue;
          }
          const std::uint64_t i = x[pos].value();
          if (i >= node->branches().size())
            throw InvalidSelector("component selector " + std::to_string(i) +
                                  " out of range for plan");
          next = &node->branches()[i];
          ++pos;
          break;
        }
        if (next == nullptr) return out;
        node = next;
        break;
      }
      case Plan::Kind::emit_selector:
        out.push_back(Symbol::nat(node->index()));
        node = &node->then();
        break;
    }
  }
}

namespace detail {

inline void print_plan_rec(const Plan& p, std::size_t indent, std::string* out) {
  const std::string pad(indent, ' ');
  switch (p.kind()) {
    case Plan::Kind::const_root:
      *out += pad + "const-root\n";
      return;
    case Plan::Kind::wait_root:
      *out += pad + "wait-root\n";
      for (std::size_t k = 0; k < p.branches().size(); ++k) {
        *out += pad + "  on child " + std::to_string(k) + ":\n";
        print_plan_rec(p.branches()[k], indent + 4, out);
      }
      return;
    case Plan::Kind::enter_branch:
      *out += pad + "enter-branch " + std::to_string(p.index()) + "\n";
      print_plan_rec(p.then(), indent + 2, out);
      return;
    case Plan::Kind::read_selector:
      *out += pad + "read-selector\n";
      for (std::size_t i = 0; i < p.branches().size(); ++i) {
        *out += pad + "  on component " + std::to_string(i) + ":\n";
        print_plan_rec(p.branches()[i], indent + 4, out);
      }
      return;
    case Plan::Kind::emit_selector:
      *out += pad + "emit-selector " + std::to_string(p.index()) + "\n";
      print_plan_rec(p.then(), indent + 2, out);
      return;
  }
}

}  // namespace detail

inline std::string print_plan(const Plan& p) {
  std::string out;
  detail::print_plan_rec(p, 0, &out);
  return out;
}

}  // namespace wadge
