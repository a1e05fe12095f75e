#include <catch2/catch_amalgamated.hpp>

#include "support/gen.hpp"
#include "wadge/ordinal.hpp"

using wadge::Ordinal;
using wadge::parse_ordinal;
using wadge::print_ordinal;

TEST_CASE("ordinal parsing and printing") {
  SECTION("grammar examples") {
    Ordinal o = parse_ordinal("w^2*3 + w + 4");
    REQUIRE(o.parts().size() == 3);
    CHECK(o.parts()[0].exp == Ordinal::nat(2));
    CHECK(o.parts()[0].coeff == 3);
    CHECK(o.parts()[1].exp == Ordinal::nat(1));
    CHECK(o.parts()[1].coeff == 1);
    CHECK(o.parts()[2].exp == Ordinal());
    CHECK(o.parts()[2].coeff == 4);
    CHECK(print_ordinal(o) == "w^2*3+w+4");
  }
  SECTION("zero") {
    CHECK(parse_ordinal("0").is_zero());
    CHECK(print_ordinal(Ordinal()) == "0");
  }
  SECTION("normal form violations") {
    CHECK_THROWS_AS(parse_ordinal("w + w^2"), wadge::NotNormalForm);
    CHECK_THROWS_AS(parse_ordinal("w + w"), wadge::NotNormalForm);
    CHECK_THROWS_AS(parse_ordinal("w*0"), wadge::NotNormalForm);
    CHECK_THROWS_AS(parse_ordinal("w + 0"), wadge::NotNormalForm);
    CHECK_THROWS_AS(parse_ordinal("0 + w"), wadge::NotNormalForm);
  }
  SECTION("parse errors") {
    CHECK_THROWS_AS(parse_ordinal(""), wadge::ParseError);
    CHECK_THROWS_AS(parse_ordinal("w^"), wadge::ParseError);
    CHECK_THROWS_AS(parse_ordinal("x"), wadge::ParseError);
    CHECK_THROWS_AS(parse_ordinal("w^(w"), wadge::ParseError);
    CHECK_THROWS_AS(parse_ordinal("3 4"), wadge::ParseError);
    CHECK_THROWS_AS(parse_ordinal("w*99999999999999999999999"), wadge::ParseError);
  }
  SECTION("nested exponents round-trip") {
    for (const char* s : {"w^w", "w^w^2", "w^(w+1)", "w^(w*2)", "w^(w^2*2+1)*5+w^2+3"}) {
      Ordinal o = parse_ordinal(s);
      CHECK(parse_ordinal(print_ordinal(o)) == o);
      CHECK(print_ordinal(o) == s);
    }
  }
  SECTION("round-trip on random ordinals") {
    gen::Rng rng(20260810);
    for (int i = 0; i < 2000; ++i) {
      Ordinal o = gen::random_ordinal(rng, 3);
      CHECK(parse_ordinal(print_ordinal(o)) == o);
    }
  }
}

TEST_CASE("ordinal comparison") {
  SECTION("basic values") {
    CHECK(Ordinal::cmp(Ordinal(), Ordinal()) == std::strong_ordering::equal);
    CHECK(Ordinal::cmp(Ordinal::omega(), Ordinal::nat(3)) == std::strong_ordering::greater);
    CHECK(Ordinal::cmp(parse_ordinal("w^w"), parse_ordinal("w*3+5")) ==
          std::strong_ordering::greater);
  }
  SECTION("frozen increasing chain") {
    // Hand-ordered table of notations; comparison must realize exactly it.
    const char* chain[] = {
        "0",   "1",      "2",     "3",         "w",     "w+1",   "w+4",
        "w*2", "w*2+1",  "w*3+5", "w^2",       "w^2+w", "w^2*3", "w^2*3+w+4",
        "w^3", "w^3+w^2*5+1", "w^w", "w^w+w^2", "w^w*2", "w^(w+1)", "w^(w^2)",
        "w^(w^2)*7+w^w*2+w+1", "w^w^w",
    };
    const std::size_t n = std::size(chain);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto c = Ordinal::cmp(parse_ordinal(chain[i]), parse_ordinal(chain[j]));
        CHECK(c == (i <=> j));
      }
  }
  SECTION("naturals embed order-isomorphically") {
    gen::Rng rng(1);
    for (int i = 0; i < 5000; ++i) {
      std::uint64_t a = gen::pick(rng, 10001), b = gen::pick(rng, 10001);
      CHECK(Ordinal::cmp(Ordinal::nat(a), Ordinal::nat(b)) == (a <=> b));
    }
  }
  SECTION("total-order laws on random triples") {
    gen::Rng rng(2);
    for (int i = 0; i < 2000; ++i) {
      Ordinal a = gen::random_ordinal(rng), b = gen::random_ordinal(rng),
              c = gen::random_ordinal(rng);
      auto ab = Ordinal::cmp(a, b), ba = Ordinal::cmp(b, a);
      // antisymmetry and trichotomy
      if (ab == std::strong_ordering::equal) {
        CHECK(ba == std::strong_ordering::equal);
        CHECK(a == b);
      } else {
        CHECK(ab != ba);
      }
      // transitivity
      if (ab != std::strong_ordering::greater &&
          Ordinal::cmp(b, c) != std::strong_ordering::greater)
        CHECK(Ordinal::cmp(a, c) != std::strong_ordering::greater);
    }
  }
}
