// order.hpp -- the quasi-order on forest terms, equivalence, canonical
// forms, and join-irreducibility.
//
// The recursion (every case strictly shrinks the combined structural size,
// so it terminates):
//
//   sum(S_i)  vs T         :  all i.  S_i <= T
//   S (tree)  vs sum(T_j)  :  some j. S <= T_j
//   tree vs tree, viewing an atom or jump L in term position as cat(L, {}):
//     if label(S) <=L label(T): every child of S <= (whole) T
//     else:                     S <= some child of T
//
// and on labels:
//   atom p      <=L atom q       iff p <=_Q q
//   jump(a, U)  <=L jump(b, V)   iff a = b: U <= V
//                                    a > b: jump(a, U) <= V   (as a term)
//                                    a < b: U <= jump(b, V)   (as a term)
//   jump(a, U)  <=L atom q       iff U <= atom q
//   atom p      <=L jump(b, V)   iff atom p <= V
//
// The mixed jump/atom cases compare against the values the jump body can
// attain, which is what comparison with a constant function depends on.
// The label table is shared, via label_leq_with, with the brute-force
// deciders in oracle.hpp, which substitute their own term comparison.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wadge/errors.hpp"
#include "wadge/quasi_order.hpp"
#include "wadge/term.hpp"

namespace wadge {

// Throws UnknownElement if some atom of t (label bodies included) is not in Q.
inline void validate_atoms(const QuasiOrder& q, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
      q.index_of(t.name());
      return;
    case Term::Kind::jump:
      validate_atoms(q, t.body());
      return;
    case Term::Kind::cat:
      validate_atoms(q, t.label());
      for (const Term& c : t.children()) validate_atoms(q, c);
      return;
    case Term::Kind::sum:
      for (const Term& c : t.components()) validate_atoms(q, c);
      return;
  }
}

// Label comparison over a pluggable term comparison.  `a` and `b` must be
// labels (atoms or jumps); term_leq(S, T) decides the term order.
template <class F>
bool label_leq_with(const QuasiOrder& q, const Term& a, const Term& b, F&& term_leq) {
  const bool aj = a.kind() == Term::Kind::jump;
  const bool bj = b.kind() == Term::Kind::jump;
  if (!aj && !bj) return q.le(a.name(), b.name());
  if (aj && bj) {
    auto c = Ordinal::cmp(a.alpha(), b.alpha());
    if (c == std::strong_ordering::equal) return term_leq(a.body(), b.body());
    if (c == std::strong_ordering::greater) return term_leq(a, b.body());
    return term_leq(a.body(), b);
  }
  if (aj) return term_leq(a.body(), b);  // jump vs atom
  return term_leq(a, b.body());          // atom vs jump
}

// Decides the term order for one quasi-order Q.  Results are memoized per
// node pair; queried roots are retained so the cached node identities stay
// valid for the comparator's lifetime.
class Comparator {
 public:
  explicit Comparator(const QuasiOrder& q) : q_(&q) {}

  bool leq(const Term& s, const Term& t) const {
    validate_atoms(*q_, s);
    validate_atoms(*q_, t);
    retain(s);
    retain(t);
    return leq_nodes(s, t);
  }

  bool equiv(const Term& s, const Term& t) const { return leq(s, t) && leq(t, s); }

  const QuasiOrder& order() const { return *q_; }

 private:
  bool leq_nodes(const Term& s, const Term& t) const {
    const auto key = std::make_pair(s.id(), t.id());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    bool r;
    if (s.kind() == Term::Kind::sum) {
      r = true;
      for (const Term& c : s.components())
        if (!leq_nodes(c, t)) {
          r = false;
          break;
        }
    } else if (t.kind() == Term::Kind::sum) {
      r = false;
      for (const Term& c : t.components())
        if (leq_nodes(s, c)) {
          r = true;
          break;
        }
    } else {
      auto term_cmp = [this](const Term& a, const Term& b) { return leq_nodes(a, b); };
      if (label_leq_with(*q_, s.tree_label(), t.tree_label(), term_cmp)) {
        r = true;
        for (const Term& c : s.tree_children())
          if (!leq_nodes(c, t)) {
            r = false;
            break;
          }
      } else {
        r = false;
        for (const Term& c : t.tree_children())
          if (leq_nodes(s, c)) {
            r = true;
            break;
          }
      }
    }
    cache_.emplace(key, r);
    return r;
  }

  void retain(const Term& t) const {
    if (retained_ids_.insert(t.id()).second) retained_.push_back(t);
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<const void*, const void*>& p) const {
      auto a = reinterpret_cast<std::uintptr_t>(p.first);
      auto b = reinterpret_cast<std::uintptr_t>(p.second);
      return std::hash<std::uintptr_t>()(a * 0x9e3779b97f4a7c15ull ^ b);
    }
  };

  const QuasiOrder* q_;
  mutable std::unordered_map<std::pair<const void*, const void*>, bool, KeyHash> cache_;
  mutable std::unordered_set<const void*> retained_ids_;
  mutable std::vector<Term> retained_;
};

inline bool leq(const QuasiOrder& q, const Term& s, const Term& t) {
  return Comparator(q).leq(s, t);
}

inline bool equiv(const QuasiOrder& q, const Term& s, const Term& t) {
  Comparator c(q);
  return c.leq(s, t) && c.leq(t, s);
}

enum class Relation { less, greater, equivalent, incomparable };

inline Relation relation(const QuasiOrder& q, const Term& s, const Term& t) {
  Comparator c(q);
  const bool st = c.leq(s, t);
  const bool ts = c.leq(t, s);
  if (st && ts) return Relation::equivalent;
  if (st) return Relation::less;
  if (ts) return Relation::greater;
  return Relation::incomparable;
}

inline std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::greater: return ">";
    case Relation::equivalent: return "=";
    case Relation::incomparable: return "||";
  }
  return {};
}

namespace detail {

// Keeps the order-maximal members of a sibling list; mutually equivalent
// survivors collapse onto the structurally least one.
inline std::vector<Term> prune_siblings(const Comparator& cmp, std::vector<Term> items) {
  const std::size_t n = items.size();
  std::vector<bool> drop(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      if (!cmp.leq(items[i], items[j])) continue;
      if (!cmp.leq(items[j], items[i])) {
        drop[i] = true;  // strictly below j
      } else {
        auto c = Term::structural_cmp(items[j], items[i]);
        if (c == std::strong_ordering::less || (c == std::strong_ordering::equal && j < i))
          drop[i] = true;
      }
    }
  }
  std::vector<Term> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) kept.push_back(std::move(items[i]));
  std::sort(kept.begin(), kept.end(), [](const Term& a, const Term& b) {
    return Term::structural_cmp(a, b) == std::strong_ordering::less;
  });
  return kept;
}

inline Term canon_rec(const Comparator& cmp, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
      return t;
    case Term::Kind::jump:
      return Term::jump(t.alpha(), canon_rec(cmp, t.body()));
    case Term::Kind::cat: {
      Term label = t.label().kind() == Term::Kind::jump
                       ? Term::jump(t.label().alpha(), canon_rec(cmp, t.label().body()))
                       : t.label();
      std::vector<Term> children;
      children.reserve(t.children().size());
      for (const Term& c : t.children()) children.push_back(canon_rec(cmp, c));
      return Term::cat(std::move(label), prune_siblings(cmp, std::move(children)));
    }
    case Term::Kind::sum: {
      std::vector<Term> comps;
      comps.reserve(t.components().size());
      for (const Term& c : t.components()) comps.push_back(canon_rec(cmp, c));
      comps = prune_siblings(cmp, std::move(comps));
      if (comps.size() == 1) return comps[0];
      return Term::sum(std::move(comps));
    }
  }
  return t;  // unreachable
}

}  // namespace detail

// Equivalent, idempotent normal form: sibling lists keep only their
// order-maximal members (structurally least per equivalence class) and are
// sorted by the structural key; one-component sums collapse.
inline Term canon(const QuasiOrder& q, const Term& t) {
  Comparator cmp(q);
  validate_atoms(q, t);
  return detail::canon_rec(cmp, t);
}

// A term names a join-irreducible (equivalently, non-self-dual) degree iff
// it is a tree, or a sum that collapses onto one of its components.
inline bool is_join_irreducible(const QuasiOrder& q, const Term& t) {
  if (t.kind() != Term::Kind::sum) return true;
  Comparator cmp(q);
  for (const Term& c : t.components())
    if (cmp.leq(t, c)) return true;
  return false;
}

inline bool is_non_self_dual(const QuasiOrder& q, const Term& t) {
  return is_join_irreducible(q, t);
}

}  // namespace wadge
