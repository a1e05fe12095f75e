// oracle.hpp -- two brute-force deciders for the term order, independent of
// the recursion in order.hpp.  Both flatten the forests into node arenas
// and share only the label rule table (label_leq_with), substituting their
// own term comparison for nested labels.
//
//   hom_leq  : exhaustive search for a node map f from S into T that
//              preserves the (non-strict) ancestor order and increases
//              labels; collapsing is allowed.  Can exhibit the map.
//   game_leq : backward induction over the product of the two node sets.
//              One player descends S one child per round, the other may
//              advance any number of steps in T; a position is winning when
//              the labels compare and every S-descent has a winning answer.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wadge/errors.hpp"
#include "wadge/order.hpp"
#include "wadge/quasi_order.hpp"
#include "wadge/term.hpp"

namespace wadge {

bool hom_leq(const QuasiOrder& q, const Term& s, const Term& t);
bool game_leq(const QuasiOrder& q, const Term& s, const Term& t);

namespace detail {

// A forest flattened into nodes; node identity is the path from its
// component root.
struct Arena {
  struct Node {
    Term label = Term::atom("?");     // atom or jump
    std::vector<std::size_t> children;
    std::vector<std::size_t> desc;    // proper descendants, ascending
    std::string path;
  };
  std::vector<Node> nodes;
  std::vector<std::size_t> roots;
};

inline std::size_t arena_add_tree(Arena* a, const Term& t, const std::string& path) {
  const std::size_t id = a->nodes.size();
  a->nodes.emplace_back();
  a->nodes[id].label = t.tree_label();
  a->nodes[id].path = path;
  auto children = t.tree_children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    std::size_t c = arena_add_tree(a, children[i], path + "." + std::to_string(i));
    a->nodes[id].children.push_back(c);
  }
  // Children were appended contiguously after id.
  for (std::size_t d = id + 1; d < a->nodes.size(); ++d) a->nodes[id].desc.push_back(d);
  return id;
}

inline Arena build_arena(const Term& t) {
  Arena a;
  if (t.kind() == Term::Kind::sum) {
    auto comps = t.components();
    for (std::size_t i = 0; i < comps.size(); ++i)
      a.roots.push_back(arena_add_tree(&a, comps[i], std::to_string(i)));
  } else {
    a.roots.push_back(arena_add_tree(&a, t, "0"));
  }
  return a;
}

class HomSearch {
 public:
  HomSearch(const QuasiOrder& q, const Term& s, const Term& t)
      : q_(q), s_(build_arena(s)), t_(build_arena(t)),
        memo_(s_.nodes.size() * t_.nodes.size(), -1) {}

  bool decide() {
    for (std::size_t r : s_.roots) {
      bool placed = false;
      for (std::size_t v = 0; v < t_.nodes.size() && !placed; ++v) placed = emb(r, v);
      if (!placed) return false;
    }
    return true;
  }

  // The witnessing map, as (path in S, path in T) pairs; call after a
  // successful decide().
  std::vector<std::pair<std::string, std::string>> witness() {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t r : s_.roots) {
      for (std::size_t v = 0; v < t_.nodes.size(); ++v) {
        if (emb(r, v)) {
          assign(r, v, &out);
          break;
        }
      }
    }
    return out;
  }

 private:
  bool emb(std::size_t u, std::size_t v) {
    signed char& m = memo_[u * t_.nodes.size() + v];
    if (m >= 0) return m != 0;
    m = 0;  // occurs-check value; the recursion below never revisits (u, v)
    bool ok = label_leq_with(q_, s_.nodes[u].label, t_.nodes[v].label,
                             [this](const Term& a, const Term& b) { return hom_leq(q_, a, b); });
    for (std::size_t uc : s_.nodes[u].children) {
      if (!ok) break;
      bool found = emb(uc, v);
      for (std::size_t w : t_.nodes[v].desc) {
        if (found) break;
        found = emb(uc, w);
      }
      ok = found;
    }
    m = ok ? 1 : 0;
    return ok;
  }

  void assign(std::size_t u, std::size_t v,
              std::vector<std::pair<std::string, std::string>>* out) {
    out->emplace_back(s_.nodes[u].path, t_.nodes[v].path);
    for (std::size_t uc : s_.nodes[u].children) {
      if (emb(uc, v)) {
        assign(uc, v, out);
        continue;
      }
      for (std::size_t w : t_.nodes[v].desc) {
        if (emb(uc, w)) {
          assign(uc, w, out);
          break;
        }
      }
    }
  }

  const QuasiOrder& q_;
  Arena s_, t_;
  std::vector<signed char> memo_;
};

}  // namespace detail

inline bool hom_leq(const QuasiOrder& q, const Term& s, const Term& t) {
  validate_atoms(q, s);
  validate_atoms(q, t);
  return detail::HomSearch(q, s, t).decide();
}

// The hom map when S is below T, as `path_in_S => path_in_T` pairs.
inline std::optional<std::vector<std::pair<std::string, std::string>>> hom_witness(
    const QuasiOrder& q, const Term& s, const Term& t) {
  validate_atoms(q, s);
  validate_atoms(q, t);
  detail::HomSearch search(q, s, t);
  if (!search.decide()) return std::nullopt;
  return search.witness();
}

inline bool game_leq(const QuasiOrder& q, const Term& s, const Term& t) {
  validate_atoms(q, s);
  validate_atoms(q, t);
  const detail::Arena sa = detail::build_arena(s);
  const detail::Arena ta = detail::build_arena(t);
  const std::size_t ns = sa.nodes.size(), nt = ta.nodes.size();
  std::vector<char> win(ns * nt, 0);
  // Nodes are stored preorder, so iterating u backwards processes children
  // before parents: one sweep reaches the fixpoint.
  for (std::size_t u = ns; u-- > 0;) {
    for (std::size_t v = 0; v < nt; ++v) {
      bool ok = label_leq_with(q, sa.nodes[u].label, ta.nodes[v].label,
                               [&q](const Term& a, const Term& b) { return game_leq(q, a, b); });
      for (std::size_t uc : sa.nodes[u].children) {
        if (!ok) break;
        bool found = win[uc * nt + v] != 0;
        for (std::size_t w : ta.nodes[v].desc) {
          if (found) break;
          found = win[uc * nt + w] != 0;
        }
        ok = found;
      }
      win[u * nt + v] = ok ? 1 : 0;
    }
  }
  for (std::size_t r : sa.roots) {
    bool placed = false;
    for (std::size_t v = 0; v < nt && !placed; ++v) placed = win[r * nt + v] != 0;
    if (!placed) return false;
  }
  return true;
}

}  // namespace wadge
