// quasi_order.hpp -- finite quasi-orders (Q, <=_Q), the value space of labels.
//
// A QuasiOrder is loaded from a small line-oriented file format or built
// from a named builtin.  The relation is stored as its reflexive-transitive
// closure, so le() answers the closed relation directly.  Values are
// immutable after construction and safe to share across threads.
#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wadge/errors.hpp"

namespace wadge {

class QuasiOrder {
 public:
  // Declared pairs are closed under reflexivity and transitivity; cycles
  // (a <= b <= a) are accepted, so this really is a quasi-order.
  static QuasiOrder from_relations(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& le_pairs) {
    QuasiOrder q;
    q.elements_ = std::move(elements);
    for (std::size_t i = 0; i < q.elements_.size(); ++i) {
      const std::string& name = q.elements_[i];
      if (name.empty()) throw ParseError("empty element name");
      for (char c : name)
        if (!is_name_char(c))
          throw ParseError("illegal character in element name '" + name + "'");
      if (!q.index_.emplace(name, i).second)
        throw ParseError("duplicate element '" + name + "'");
    }
    const std::size_t n = q.elements_.size();
    q.le_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) q.le_[i * n + i] = true;
    for (const auto& [a, b] : le_pairs) q.le_[q.index_of(a) * n + q.index_of(b)] = true;
    q.close();
    return q;
  }

  // Q-file format (UTF-8, line oriented):
  //   # comment
  //   ELEMS: e1 e2 ... en
  //   LE: a b
  static QuasiOrder from_text(std::string_view text) {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> pairs;
    bool saw_elems = false;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string head;
      if (!(ls >> head)) continue;
      if (head == "ELEMS:") {
        if (saw_elems) throw ParseError("line " + std::to_string(lineno) + ": repeated ELEMS line");
        saw_elems = true;
        std::string name;
        while (ls >> name) elements.push_back(name);
      } else if (head == "LE:") {
        if (!saw_elems) throw ParseError("line " + std::to_string(lineno) + ": LE before ELEMS");
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
          throw ParseError("line " + std::to_string(lineno) + ": expected 'LE: a b'");
        pairs.emplace_back(a, b);
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": unrecognized line '" + head + "'");
      }
    }
    if (!saw_elems) throw ParseError("missing ELEMS line");
    return from_relations(std::move(elements), pairs);
  }

  // Builtins: "antichain:k" (elements "0".."k-1", no order), "chain:k"
  // (same elements, 0 <= 1 <= ... <= k-1), "flat3" (bot below 0 and 1),
  // "diamond" (bot below 0,1 below top).
  static QuasiOrder builtin(std::string_view name) {
    auto k_of = [&](std::string_view prefix) -> long {
      std::string_view rest = name.substr(prefix.size());
      if (rest.empty()) return -1;
      long k = 0;
      for (char c : rest) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
        k = k * 10 + (c - '0');
        if (k > 1000000) return -1;
      }
      return k;
    };
    if (name.starts_with("antichain:")) {
      long k = k_of("antichain:");
      if (k < 1) throw UnknownBuiltin("bad builtin '" + std::string(name) + "'");
      return from_relations(numbered(static_cast<std::size_t>(k)), {});
    }
    if (name.starts_with("chain:")) {
      long k = k_of("chain:");
      if (k < 1) throw UnknownBuiltin("bad builtin '" + std::string(name) + "'");
      std::vector<std::pair<std::string, std::string>> pairs;
      for (long i = 0; i + 1 < k; ++i)
        pairs.emplace_back(std::to_string(i), std::to_string(i + 1));
      return from_relations(numbered(static_cast<std::size_t>(k)), pairs);
    }
    if (name == "flat3")
      return from_relations({"bot", "0", "1"}, {{"bot", "0"}, {"bot", "1"}});
    if (name == "diamond")
      return from_relations({"bot", "0", "1", "top"},
                            {{"bot", "0"}, {"bot", "1"}, {"0", "top"}, {"1", "top"}});
    throw UnknownBuiltin("unknown builtin '" + std::string(name) + "'");
  }

  std::size_t size() const { return elements_.size(); }
  std::span<const std::string> elements() const { return elements_; }

  bool contains(std::string_view name) const { return index_.find(name) != index_.end(); }

  std::size_t index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownElement("unknown element '" + std::string(name) + "'");
    return it->second;
  }

  bool le(std::size_t a, std::size_t b) const { return le_[a * size() + b]; }
  bool le(std::string_view a, std::string_view b) const { return le(index_of(a), index_of(b)); }

  // Prints the closed relation; reloading the result reproduces the value.
  std::string to_text() const {
    std::string out = "ELEMS:";
    for (const auto& e : elements_) out += " " + e;
    out += "\n";
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (i != j && le(i, j)) out += "LE: " + elements_[i] + " " + elements_[j] + "\n";
    return out;
  }

 private:
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  static std::vector<std::string> numbered(std::size_t k) {
    std::vector<std::string> v;
    v.reserve(k);
    for (std::size_t i = 0; i < k; ++i) v.push_back(std::to_string(i));
    return v;
  }

  void close() {
    const std::size_t n = size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (le_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (le_[k * n + j]) le_[i * n + j] = true;
  }

  std::vector<std::string> elements_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<bool> le_;
};

}  // namespace wadge
