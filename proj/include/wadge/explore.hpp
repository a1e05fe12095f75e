// explore.hpp -- exhaustive enumeration of small canonical terms, Hasse
// diagrams, and structural reports over a corpus.
//
// Enumeration grows trees by size (total node count; jump-label bodies are
// counted into the size of the node carrying them), keeping one canonical
// representative per equivalence class, then adds the forests obtained as
// sums of pairwise-incomparable representatives within the same budget.
// Distinct such antichains are never equivalent, so the result is a
// duplicate-free list in a deterministic order.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wadge/errors.hpp"
#include "wadge/order.hpp"
#include "wadge/quasi_order.hpp"
#include "wadge/term.hpp"

namespace wadge {

struct EnumOptions {
  std::size_t max_nodes = 3;
  std::vector<Ordinal> jump_alphas;       // heights w^alpha usable on labels
  std::size_t candidate_limit = 200000;   // ResourceLimit guard
};

struct StructureReport {
  std::size_t max_antichain_among_irreducibles = 0;
  std::vector<Term> antichain_witness;
  bool sl_ordered = false;  // max antichain of irreducible members <= 2
};

namespace detail {

// Size measure for enumeration: node count, plus the sizes of jump-label
// bodies (which stats() treats as transparent).
inline std::size_t enum_weight(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
      return 1;
    case Term::Kind::jump:
      return 1 + enum_weight(t.body());
    case Term::Kind::cat: {
      std::size_t w = t.label().kind() == Term::Kind::jump ? 1 + enum_weight(t.label().body()) : 1;
      for (const Term& c : t.children()) w += enum_weight(c);
      return w;
    }
    case Term::Kind::sum: {
      std::size_t w = 0;
      for (const Term& c : t.components()) w += enum_weight(c);
      return w;
    }
  }
  return 0;  // unreachable
}

// Pool of pairwise-inequivalent trees with an incrementally grown
// comparison matrix.
struct TreePool {
  std::vector<Term> trees;
  std::vector<std::size_t> weight;
  std::vector<std::vector<char>> below;  // below[i][j] = trees[i] <= trees[j]

  // Returns false when the candidate is equivalent to a known tree.
  bool add(const Comparator& cmp, Term t, std::size_t w) {
    std::vector<char> row(trees.size() + 1), col(trees.size() + 1);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      row[i] = cmp.leq(t, trees[i]) ? 1 : 0;
      col[i] = cmp.leq(trees[i], t) ? 1 : 0;
      if (row[i] && col[i]) return false;
    }
    row[trees.size()] = col[trees.size()] = 1;
    for (std::size_t i = 0; i < trees.size(); ++i) below[i].push_back(col[i]);
    below.push_back(std::move(row));
    trees.push_back(std::move(t));
    weight.push_back(w);
    return true;
  }

  bool incomparable(std::size_t i, std::size_t j) const {
    return !below[i][j] && !below[j][i];
  }
};

// All child lists (antichains of pool trees, ascending indices) of exact
// total weight, invoking fn on each.
template <class Fn>
void for_each_antichain(const TreePool& pool, std::size_t budget, bool exact,
                        std::size_t min_size, Fn&& fn) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
    if (chosen.size() >= min_size && (!exact || left == 0)) fn(chosen);
    for (std::size_t i = start; i < pool.trees.size(); ++i) {
      if (pool.weight[i] > left) continue;
      bool ok = true;
      for (std::size_t j : chosen)
        if (!pool.incomparable(i, j)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1, left - pool.weight[i]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, budget);
}

}  // namespace detail

// All canonical terms of size at most max_nodes over Q, one representative
// per equivalence class, in a deterministic (size, structural) order.
inline std::vector<Term> enum_terms(const QuasiOrder& q, const EnumOptions& opt) {
  if (opt.max_nodes < 1) throw BadLength("max_nodes must be >= 1");
  Comparator cmp(q);
  detail::TreePool pool;
  std::size_t candidates = 0;
  auto bump = [&]() {
    if (++candidates > opt.candidate_limit)
      throw ResourceLimit("enumeration candidate limit exceeded");
  };

  // Labels available at a given body budget: atoms are free, jump labels
  // spend their body's weight.
  for (std::size_t size = 1; size <= opt.max_nodes; ++size) {
    std::vector<std::pair<Term, std::size_t>> fresh;  // (tree, weight)
    auto consider = [&](Term t, std::size_t w) {
      bump();
      fresh.emplace_back(std::move(t), w);
    };
    if (size == 1)
      for (const std::string& e : q.elements()) consider(Term::atom(e), 1);
    // Bare jumps: weight 1 + weight(body).
    for (const Ordinal& a : opt.jump_alphas)
      for (std::size_t b = 0; b < pool.trees.size(); ++b)
        if (pool.weight[b] + 1 == size) consider(Term::jump(a, pool.trees[b]), size);
    // Cats with nonempty child lists (childless cats are equivalent to
    // their bare labels, which are already present).
    auto with_label = [&](const Term& label, std::size_t label_weight) {
      if (label_weight >= size) return;
      detail::for_each_antichain(pool, size - label_weight, /*exact=*/true, /*min_size=*/1,
                                 [&](const std::vector<std::size_t>& chosen) {
                                   std::vector<Term> children;
                                   children.reserve(chosen.size());
                                   for (std::size_t i : chosen) children.push_back(pool.trees[i]);
                                   std::sort(children.begin(), children.end(),
                                             [](const Term& x, const Term& y) {
                                               return Term::structural_cmp(x, y) ==
                                                      std::strong_ordering::less;
                                             });
                                   consider(Term::cat(label, std::move(children)), size);
                                 });
    };
    for (const std::string& e : q.elements()) with_label(Term::atom(e), 1);
    for (const Ordinal& a : opt.jump_alphas)
      for (std::size_t b = 0; b < pool.trees.size(); ++b)
        with_label(Term::jump(a, pool.trees[b]), 1 + pool.weight[b]);

    std::sort(fresh.begin(), fresh.end(), [](const auto& x, const auto& y) {
      return Term::structural_cmp(x.first, y.first) == std::strong_ordering::less;
    });
    for (auto& [t, w] : fresh) pool.add(cmp, std::move(t), w);
  }

  std::vector<Term> out = pool.trees;
  detail::for_each_antichain(pool, opt.max_nodes, /*exact=*/false, /*min_size=*/2,
                             [&](const std::vector<std::size_t>& chosen) {
                               bump();
                               std::vector<Term> comps;
                               comps.reserve(chosen.size());
                               for (std::size_t i : chosen) comps.push_back(pool.trees[i]);
                               std::sort(comps.begin(), comps.end(),
                                         [](const Term& x, const Term& y) {
                                           return Term::structural_cmp(x, y) ==
                                                  std::strong_ordering::less;
                                         });
                               out.push_back(Term::sum(std::move(comps)));
                             });

  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    auto wx = detail::enum_weight(x), wy = detail::enum_weight(y);
    if (wx != wy) return wx < wy;
    return Term::structural_cmp(x, y) == std::strong_ordering::less;
  });
  return out;
}

inline std::vector<Term> enum_terms(const QuasiOrder& q, std::size_t max_nodes) {
  EnumOptions opt;
  opt.max_nodes = max_nodes;
  return enum_terms(q, opt);
}

// DOT digraph of the covering relation of the order restricted to `terms`
// (which must be pairwise inequivalent).  Join-reducible (self-dual) nodes
// are drawn as boxes, irreducible ones as ellipses.
inline std::string hasse_dot(const QuasiOrder& q, std::span<const Term> terms) {
  const std::size_t n = terms.size();
  Comparator cmp(q);
  std::vector<char> less(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) less[i * n + j] = cmp.leq(terms[i], terms[j]) ? 1 : 0;
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < n; ++i) {
    const bool self_dual = !is_join_irreducible(q, terms[i]);
    out += "  n" + std::to_string(i) + " [label=\"" + print_term(terms[i]) + "\", shape=" +
           (self_dual ? "box" : "ellipse") + "];\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[i * n + j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (less[i * n + k] && less[k * n + j]) covered = false;
      if (covered) out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
  out += "}\n";
  return out;
}

// Pairwise comparison matrix, one line `S<TAB>T<TAB>rel` per unordered pair.
inline std::string comparison_tsv(const QuasiOrder& q, std::span<const Term> terms) {
  std::string out;
  Comparator cmp(q);
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const bool st = cmp.leq(terms[i], terms[j]);
      const bool ts = cmp.leq(terms[j], terms[i]);
      const char* rel = st && ts ? "=" : st ? "<" : ts ? ">" : "||";
      out += print_term(terms[i]) + "\t" + print_term(terms[j]) + "\t" + rel + "\n";
    }
  return out;
}

namespace detail {

// Maximum antichain in a finite poset, exactly, via the matching dual of
// the chain-cover theorem: width = n - max matching of the strict-order
// bipartite graph.  The witness falls out of the matching's vertex cover.
struct WidthResult {
  std::size_t width;
  std::vector<std::size_t> antichain;
};

inline WidthResult max_antichain(const std::vector<char>& strict_less, std::size_t n) {
  auto edge = [&](std::size_t u, std::size_t v) { return strict_less[u * n + v] != 0; };
  std::vector<long> match_right(n, -1), match_left(n, -1);
  std::vector<char> visited(n);
  auto augment = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t v = 0; v < n; ++v) {
      if (!edge(u, v) || visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || self(self, static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<long>(u);
        match_left[u] = static_cast<long>(v);
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, u)) ++matching;
  }
  // Koenig: alternate from unmatched left vertices; cover = (L not reached)
  // + (R reached).  Elements outside the cover on both sides form a maximum
  // antichain.
  std::vector<char> left_reached(n, 0), right_reached(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < n; ++u)
    if (match_left[u] < 0) {
      left_reached[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!edge(u, v) || right_reached[v]) continue;
      right_reached[v] = 1;
      if (match_right[v] >= 0 && !left_reached[static_cast<std::size_t>(match_right[v])]) {
        left_reached[static_cast<std::size_t>(match_right[v])] = 1;
        stack.push_back(static_cast<std::size_t>(match_right[v]));
      }
    }
  }
  WidthResult res;
  res.width = n - matching;
  for (std::size_t u = 0; u < n; ++u)
    if (left_reached[u] && !right_reached[u]) res.antichain.push_back(u);
  return res;
}

}  // namespace detail

// Maximum antichain among the join-irreducible members of `terms`
// (pairwise inequivalent), with witness; sl_ordered says whether it stays
// within two, the semi-linear-ordering property.
inline StructureReport structure_report(const QuasiOrder& q, std::span<const Term> terms) {
  std::vector<std::size_t> irr;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (is_join_irreducible(q, terms[i])) irr.push_back(i);
  const std::size_t n = irr.size();
  Comparator cmp(q);
  std::vector<char> strict(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && cmp.leq(terms[irr[a]], terms[irr[b]])) strict[a * n + b] = 1;
  StructureReport rep;
  if (n == 0) {
    rep.sl_ordered = true;
    return rep;
  }
  auto res = detail::max_antichain(strict, n);
  rep.max_antichain_among_irreducibles = res.width;
  for (std::size_t a : res.antichain) rep.antichain_witness.push_back(terms[irr[a]]);
  rep.sl_ordered = res.width <= 2;
  return rep;
}

}  // namespace wadge
