#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "support/gen.hpp"
#include "wadge/oracle.hpp"
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

// Node lookup by path string, mirroring the witness format.
const Term* node_at(const Term& root, const std::string& path) {
  std::vector<std::size_t> idx;
  std::size_t v = 0;
  for (char c : path) {
    if (c == '.') {
      idx.push_back(v);
      v = 0;
    } else {
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
  }
  idx.push_back(v);
  const Term* cur = &root;
  if (cur->kind() == Term::Kind::sum)
    cur = &cur->components()[idx[0]];
  else if (idx[0] != 0)
    return nullptr;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    auto ch = cur->tree_children();
    if (idx[i] >= ch.size()) return nullptr;
    cur = &ch[idx[i]];
  }
  return cur;
}
}  // namespace

TEST_CASE("hom oracle examples") {
  CHECK(wadge::hom_leq(q2(), t("0 -> 1"), t("0 -> 1 -> 0")));
  CHECK_FALSE(wadge::hom_leq(q2(), t("0 -> 1"), t("1 -> 0")));
  CHECK(wadge::hom_leq(q2(), t("(sum 0 1)"), t("(sum 0 1)")));
  CHECK(wadge::hom_leq(q2(), t("0 -> 1 -> 0 -> 1"), t("0 -> 1 -> 0 -> 1")));
}

TEST_CASE("hom witness maps are valid") {
  SECTION("exhibited map for the chain pair") {
    auto w = wadge::hom_witness(q2(), t("0 -> 1"), t("0 -> 1 -> 0"));
    REQUIRE(w.has_value());
    REQUIRE(w->size() == 2);
    CHECK((*w)[0] == std::pair<std::string, std::string>{"0", "0"});
    CHECK((*w)[1] == std::pair<std::string, std::string>{"0.0", "0.0"});
  }
  SECTION("no witness for incomparable terms") {
    CHECK_FALSE(wadge::hom_witness(q2(), t("0 -> 1"), t("1 -> 0")).has_value());
  }
  SECTION("random witnesses verify independently") {
    gen::Rng rng(15);
    int found = 0;
    for (int i = 0; i < 400; ++i) {
      Term s = gen::random_term(rng, q2(), 1 + gen::pick(rng, 5));
      Term u = gen::random_term(rng, q2(), 1 + gen::pick(rng, 5));
      auto w = wadge::hom_witness(q2(), s, u);
      if (!w) continue;
      ++found;
      std::map<std::string, std::string> f(w->begin(), w->end());
      for (const auto& [sp, tp] : *w) {
        const Term* sn = node_at(s, sp);
        const Term* tn = node_at(u, tp);
        REQUIRE(sn != nullptr);
        REQUIRE(tn != nullptr);
        // Labels must increase along the map (atoms here).
        REQUIRE(q2().le(sn->tree_label().name(), tn->tree_label().name()));
        // The image of a child extends the image of its parent.
        auto dot = sp.rfind('.');
        if (dot != std::string::npos) {
          const std::string& parent_img = f.at(sp.substr(0, dot));
          REQUIRE(tp.substr(0, parent_img.size()) == parent_img);
        }
      }
    }
    CHECK(found > 40);
  }
}

TEST_CASE("game oracle examples") {
  CHECK(wadge::game_leq(q2(), t("0 -> 1"), t("0 -> 1 -> 0")));
  CHECK(wadge::game_leq(q2(), t("(sum 0 1)"), t("0 -> 1")));
  CHECK_FALSE(wadge::game_leq(q2(), t("0 -> 1 -> 0"), t("0 -> 1")));
}

TEST_CASE("the three deciders agree") {
  gen::Rng rng(16);
  std::vector<Ordinal> alphas{Ordinal(), Ordinal::nat(1), Ordinal::omega()};
  auto flat = QuasiOrder::builtin("flat3");
  for (int i = 0; i < 600; ++i) {
    const QuasiOrder& q = i % 2 ? q2() : flat;
    std::span<const Ordinal> a = i % 3 ? std::span<const Ordinal>{} : alphas;
    Term s = gen::random_term(rng, q, 1 + gen::pick(rng, 5), a);
    Term u = gen::random_term(rng, q, 1 + gen::pick(rng, 5), a);
    const bool direct = wadge::leq(q, s, u);
    REQUIRE(wadge::hom_leq(q, s, u) == direct);
    REQUIRE(wadge::game_leq(q, s, u) == direct);
  }
}
