#include <catch2/catch_amalgamated.hpp>

#include "support/gen.hpp"
#include "wadge/stream.hpp"

using wadge::FinStream;
using wadge::Symbol;

namespace {
FinStream s(const char* lit) { return wadge::parse_stream(lit); }
}  // namespace

TEST_CASE("stream literals") {
  CHECK(wadge::parse_stream("").empty());
  FinStream x = s("2,p,4,3,7");
  REQUIRE(x.size() == 5);
  CHECK(x[0] == Symbol::nat(2));
  CHECK(x[1].is_pass());
  CHECK(wadge::format_stream(x) == "2,p,4,3,7");
  CHECK_THROWS_AS(wadge::parse_stream("1,,2"), wadge::ParseError);
  CHECK_THROWS_AS(wadge::parse_stream("1,x"), wadge::ParseError);
  CHECK_THROWS_AS(wadge::parse_stream("99999999999999999999999"), wadge::ParseError);
}

TEST_CASE("drop_passes") {
  CHECK(wadge::drop_passes(s("p,3,p,0")) == std::vector<std::uint64_t>{3, 0});
  CHECK(wadge::drop_passes(s("p,p")).empty());
  CHECK(wadge::drop_passes(s("1,2,3")) == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("mind-change encoding") {
  CHECK(wadge::mc_encode(s("1,p,2"), s("1,7")) == s("2,p,4,3,7"));
  CHECK(wadge::mc_encode(s(""), s("0")) == s("1"));
  CHECK(wadge::mc_encode(s("5"), s("")) == s("10"));
  CHECK_THROWS_AS(wadge::mc_encode(s("1"), s("p,1")), wadge::BadHead);
  SECTION("doubling law") {
    gen::Rng rng(4);
    std::vector<Symbol> alpha{Symbol::pass(), Symbol::nat(0), Symbol::nat(1), Symbol::nat(5)};
    for (int i = 0; i < 200; ++i) {
      FinStream y = gen::random_stream(rng, alpha, 8);
      auto doubled = wadge::drop_passes(wadge::mc_encode(y, {}));
      auto plain = wadge::drop_passes(y);
      REQUIRE(doubled.size() == plain.size());
      for (std::size_t k = 0; k < plain.size(); ++k) REQUIRE(doubled[k] == 2 * plain[k]);
    }
  }
}

TEST_CASE("mind-change decoding") {
  SECTION("examples") {
    auto [pi0, pi1] = wadge::mc_decode(s("2,p,4,3,7"));
    CHECK(pi0 == s("1,p,2"));
    CHECK(pi1 == s("1,7"));
    auto [a0, a1] = wadge::mc_decode(s("p,p,p"));
    CHECK(a0 == s("p,p,p"));
    CHECK(a1.empty());
    auto [b0, b1] = wadge::mc_decode(s("3"));
    CHECK(b0.empty());
    CHECK(b1 == s("1"));
  }
  SECTION("decode-encode round trip") {
    gen::Rng rng(5);
    std::vector<Symbol> alpha{Symbol::pass(), Symbol::nat(0), Symbol::nat(1), Symbol::nat(2),
                              Symbol::nat(9)};
    for (int i = 0; i < 1000; ++i) {
      FinStream y = gen::random_stream(rng, alpha, 6);
      FinStream z = gen::random_stream(rng, alpha, 6);
      if (!z.empty() && z.front().is_pass()) z.front() = Symbol::nat(gen::pick(rng, 5));
      FinStream x = wadge::mc_encode(y, z);
      auto [py, pz] = wadge::mc_decode(x);
      REQUIRE(py == y);
      REQUIRE(pz == z);
    }
  }
  SECTION("encode-decode round trip on even-or-pass prefixes") {
    gen::Rng rng(6);
    std::vector<Symbol> alpha{Symbol::pass(), Symbol::nat(0), Symbol::nat(1), Symbol::nat(2),
                              Symbol::nat(3), Symbol::nat(8)};
    for (int i = 0; i < 1000; ++i) {
      FinStream x = gen::random_stream(rng, alpha, 8);
      auto [p0, p1] = wadge::mc_decode(x);
      REQUIRE(wadge::mc_encode(p0, p1) == x);
    }
  }
}
