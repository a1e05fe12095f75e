// stream.hpp -- finite sequences over w-hat = omega + {pass}, and the
// mind-change codec.  A finite stream stands for its infinite pass-padding,
// which is exact for the conciliatory functions evaluated here.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wadge/errors.hpp"

namespace wadge {

class Symbol {
 public:
  static Symbol pass() { return Symbol(kPass); }
  static Symbol nat(std::uint64_t n) { return Symbol(n); }

  bool is_pass() const { return v_ == kPass; }
  std::uint64_t value() const {
    if (is_pass()) throw InternalError("value() on pass symbol");
    return v_;
  }

  friend bool operator==(Symbol a, Symbol b) { return a.v_ == b.v_; }

 private:
  explicit Symbol(std::uint64_t v) : v_(v) {}
  static constexpr std::uint64_t kPass = ~std::uint64_t{0};
  std::uint64_t v_;
};

using FinStream = std::vector<Symbol>;

inline std::vector<std::uint64_t> drop_passes(std::span<const Symbol> x) {
  std::vector<std::uint64_t> out;
  out.reserve(x.size());
  for (Symbol s : x)
    if (!s.is_pass()) out.push_back(s.value());
  return out;
}

// Encodes "play y, then abandon it and play z": y's entries are doubled
// (passes kept), and if z is nonempty its head k becomes the marker 2k+1,
// after which z continues verbatim.
inline FinStream mc_encode(std::span<const Symbol> y, std::span<const Symbol> z) {
  if (!z.empty() && z.front().is_pass())
    throw BadHead("second stream of mc_encode starts with a pass");
  FinStream out;
  out.reserve(y.size() + z.size());
  for (Symbol s : y)
    out.push_back(s.is_pass() ? Symbol::pass() : Symbol::nat(2 * s.value()));
  if (!z.empty()) {
    out.push_back(Symbol::nat(2 * z.front().value() + 1));
    out.insert(out.end(), z.begin() + 1, z.end());
  }
  return out;
}

// Total inverse: the prefix before the first odd entry decodes into the
// first component (2k -> k, passes kept); the first odd entry 2k+1 starts
// the second component with head k, the rest following verbatim.
inline std::pair<FinStream, FinStream> mc_decode(std::span<const Symbol> x) {
  FinStream pi0, pi1;
  std::size_t i = 0;
  for (; i < x.size(); ++i) {
    if (x[i].is_pass()) {
      pi0.push_back(Symbol::pass());
    } else if (x[i].value() % 2 == 0) {
      pi0.push_back(Symbol::nat(x[i].value() / 2));
    } else {
      pi1.push_back(Symbol::nat(x[i].value() / 2));
      pi1.insert(pi1.end(), x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end());
      break;
    }
  }
  return {std::move(pi0), std::move(pi1)};
}

// CLI literal: comma-separated tokens, `p` for pass, e.g. "2,p,4,3,7".
// The empty string is the empty stream.
inline FinStream parse_stream(std::string_view text) {
  FinStream out;
  std::size_t pos = 0;
  if (text.empty()) return out;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (tok == "p" || tok == "pass") {
      out.push_back(Symbol::pass());
    } else if (!tok.empty()) {
      std::uint64_t v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw ParseError("bad stream token '" + std::string(tok) + "'");
        if (v > (std::uint64_t{1} << 62) / 10)
          throw ParseError("stream value out of range '" + std::string(tok) + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
      }
      out.push_back(Symbol::nat(v));
    } else {
      throw ParseError("empty stream token");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string format_stream(std::span<const Symbol> x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += x[i].is_pass() ? "p" : std::to_string(x[i].value());
  }
  return out;
}

}  // namespace wadge
