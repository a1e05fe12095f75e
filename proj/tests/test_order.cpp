#include <catch2/catch_amalgamated.hpp>

#include "support/gen.hpp"
#include "wadge/order.hpp"

using wadge::Ordinal;
using wadge::parse_term;
using wadge::QuasiOrder;
using wadge::Term;

namespace {
const QuasiOrder& q2() {
  static QuasiOrder q = QuasiOrder::builtin("antichain:2");
  return q;
}
Term t(const char* s) { return parse_term(s); }
}  // namespace

TEST_CASE("the order on chains matches the difference hierarchy") {
  CHECK(wadge::leq(q2(), t("0 -> 1"), t("0 -> 1 -> 0")));
  CHECK_FALSE(wadge::leq(q2(), t("0 -> 1"), t("1 -> 0")));
  CHECK_FALSE(wadge::leq(q2(), t("1 -> 0"), t("0 -> 1")));
  CHECK_FALSE(wadge::leq(q2(), t("0 -> 1 -> 0"), t("0 -> 1")));
}

TEST_CASE("reflexivity on random terms") {
  gen::Rng rng(10);
  std::vector<Ordinal> alphas{Ordinal(), Ordinal::nat(1), Ordinal::omega()};
  for (int i = 0; i < 300; ++i) {
    Term a = gen::random_term(rng, q2(), 1 + gen::pick(rng, 8), alphas);
    REQUIRE(wadge::leq(q2(), a, a));
  }
}

TEST_CASE("unknown atoms are rejected") {
  CHECK_THROWS_AS(wadge::leq(q2(), t("0 -> 7"), t("0")), wadge::UnknownElement);
  CHECK_THROWS_AS(wadge::leq(q2(), t("0"), t("(cat (jump 1 x))")), wadge::UnknownElement);
}

TEST_CASE("jumps of constants collapse") {
  CHECK(wadge::leq(q2(), t("(cat (jump 2 0))"), t("(cat (jump 1 0))")));
  CHECK(wadge::leq(q2(), t("(cat (jump 1 0))"), t("(cat (jump 2 0))")));
  CHECK(wadge::equiv(q2(), t("(cat (jump w 0))"), t("0")));
}

TEST_CASE("jump stripping orders distinct heights strictly") {
  // For a genuinely non-constant body the jump hierarchy increases.
  Term u = t("0 -> 1");
  std::vector<Ordinal> heights{Ordinal(), Ordinal::nat(1), Ordinal::omega()};
  for (std::size_t a = 0; a < heights.size(); ++a)
    for (std::size_t b = 0; b < heights.size(); ++b) {
      Term ja = Term::jump(heights[a], u);
      Term jb = Term::jump(heights[b], u);
      CHECK(wadge::leq(q2(), ja, jb) == (a <= b));
    }
}

TEST_CASE("sums are suprema") {
  Term s = t("(sum (0 -> 1) (1 -> 0))");
  CHECK(wadge::leq(q2(), t("0 -> 1"), s));
  CHECK(wadge::leq(q2(), t("1 -> 0"), s));
  CHECK(wadge::leq(q2(), s, t("0 -> 1 -> 0")));
  CHECK_FALSE(wadge::leq(q2(), s, t("0 -> 1")));
  SECTION("random supremum laws") {
    gen::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      std::size_t n = 2 + gen::pick(rng, 2);
      std::vector<Term> comps;
      for (std::size_t k = 0; k < n; ++k)
        comps.push_back(gen::random_tree(rng, q2(), 1 + gen::pick(rng, 4)));
      Term sum = Term::sum(comps);
      for (const Term& c : comps) REQUIRE(wadge::leq(q2(), c, sum));
      Term other = gen::random_term(rng, q2(), 1 + gen::pick(rng, 5));
      bool all = true;
      for (const Term& c : comps) all = all && wadge::leq(q2(), c, other);
      REQUIRE(wadge::leq(q2(), sum, other) == all);
    }
  }
}

TEST_CASE("equivalence examples") {
  CHECK(wadge::equiv(q2(), t("0"), t("<<0>>")));
  CHECK_FALSE(wadge::equiv(q2(), t("0 -> 1"), t("1 -> 0")));
  CHECK(wadge::equiv(q2(), t("0 -> 1"), t("(cat 0 1)")));
}

TEST_CASE("relation summarizes both directions") {
  using wadge::Relation;
  CHECK(wadge::relation(q2(), t("0 -> 1"), t("0 -> 1 -> 0")) == Relation::less);
  CHECK(wadge::relation(q2(), t("0 -> 1 -> 0"), t("0 -> 1")) == Relation::greater);
  CHECK(wadge::relation(q2(), t("0 -> 1"), t("1 -> 0")) == Relation::incomparable);
  CHECK(wadge::relation(q2(), t("0"), t("(cat 0)")) == Relation::equivalent);
  CHECK(wadge::relation_symbol(Relation::incomparable) == "||");
}

TEST_CASE("canon") {
  SECTION("examples") {
    CHECK(wadge::canon(q2(), t("(sum 0 0)")) == t("0"));
    CHECK(wadge::canon(q2(), t("(sum (0 -> 1) 0)")) == t("0 -> 1"));
    CHECK(wadge::canon(q2(), t("(sum 1 0)")) == t("(sum 0 1)"));
  }
  SECTION("dominated children are pruned") {
    CHECK(wadge::canon(q2(), t("(cat 0 (cat 1) 0 -> 1)")) == t("(cat 0 0 -> 1)"));
  }
  SECTION("idempotence and equivalence on random terms") {
    gen::Rng rng(12);
    std::vector<Ordinal> alphas{Ordinal(), Ordinal::nat(1)};
    for (int i = 0; i < 300; ++i) {
      Term a = gen::random_term(rng, q2(), 1 + gen::pick(rng, 6), alphas);
      Term c = wadge::canon(q2(), a);
      REQUIRE(wadge::equiv(q2(), a, c));
      REQUIRE(wadge::canon(q2(), c) == c);
      REQUIRE(wadge::stats(c).nodes <= wadge::stats(a).nodes);
    }
  }
}

TEST_CASE("join irreducibility") {
  CHECK(wadge::is_join_irreducible(q2(), t("0 -> 1")));
  CHECK_FALSE(wadge::is_join_irreducible(q2(), t("(sum 0 1)")));
  CHECK(wadge::is_join_irreducible(q2(), t("(sum (0 -> 1) 0)")));
  CHECK(wadge::is_non_self_dual(q2(), t("1 -> 0")));
  SECTION("self-duality via the label involution") {
    gen::Rng rng(13);
    std::map<std::string, std::string> swap{{"0", "1"}, {"1", "0"}};
    for (int i = 0; i < 200; ++i) {
      Term a = gen::random_term(rng, q2(), 1 + gen::pick(rng, 5));
      bool irr = wadge::is_join_irreducible(q2(), a);
      bool own_dual = wadge::equiv(q2(), a, wadge::relabel(a, swap));
      REQUIRE(irr == !own_dual);
    }
  }
}

TEST_CASE("transitivity on random triples") {
  gen::Rng rng(14);
  std::vector<Ordinal> alphas{Ordinal(), Ordinal::nat(1), Ordinal::omega()};
  auto flat = QuasiOrder::builtin("flat3");
  int premise_hits = 0;
  for (int i = 0; i < 1500; ++i) {
    const QuasiOrder& q = i % 2 ? q2() : flat;
    Term a = gen::random_term(rng, q, 1 + gen::pick(rng, 5), alphas);
    Term b = gen::random_term(rng, q, 1 + gen::pick(rng, 5), alphas);
    Term c = gen::random_term(rng, q, 1 + gen::pick(rng, 5), alphas);
    wadge::Comparator cmp(q);
    if (cmp.leq(a, b) && cmp.leq(b, c)) {
      ++premise_hits;
      REQUIRE(cmp.leq(a, c));
    }
  }
  CHECK(premise_hits > 50);  // the test actually exercised something
}
