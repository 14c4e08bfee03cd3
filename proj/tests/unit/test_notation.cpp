#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mtau/error.hpp"
#include "mtau/notation.hpp"
#include "mtau/tau_order.hpp"

using namespace mtau;

TEST_CASE("plain words") {
  Alphabet a;
  auto     u = parse_word("x y1^2 y2^2 x", a);
  CHECK(u.size() == 6);
  CHECK(a.names() == std::vector<std::string>{"x", "y1", "y2"});
  CHECK(render(a, u) == "xy1^2y2^2x");
  CHECK(parse_word("1", a).empty());
  CHECK_THROWS_AS(parse_word("x^", a), SyntaxError);
  CHECK_THROWS_AS(parse_word("X", a), SyntaxError);
  CHECK_THROWS_AS(parse_word("", a), SyntaxError);
}

TEST_CASE("kinds") {
  CHECK(parse_kind("t0") == CongruenceKind::trivial());
  CHECK(parse_kind("t1") == CongruenceKind::tau1());
  CHECK(parse_kind("gamma") == CongruenceKind::gamma());
  CHECK(parse_kind("lambda") == CongruenceKind::lambda());
  CHECK(parse_kind("rho") == CongruenceKind::rho());
  CHECK(parse_kind("taum:3") == CongruenceKind::tau_m(3));
  CHECK(parse_kind("gammak:0") == CongruenceKind::gamma_k(0));
  CHECK(parse_kind("lambdak:2") == CongruenceKind::tau1_meet_lambda_k(2));
  CHECK(parse_kind("meet(t1,gammak:1)").tag() == CongruenceKind::Tag::meet);
  for (auto const& k : {CongruenceKind::gamma_k(2), CongruenceKind::tau_m(4),
                        CongruenceKind::tau1_meet_rho_k(1), CongruenceKind::lambda()}) {
    CHECK(parse_kind(k.name()) == k);
  }
  CHECK_THROWS_AS(parse_kind("delta"), SyntaxError);
  CHECK_THROWS_AS(parse_kind("taum:x"), SyntaxError);
}

TEST_CASE("tau-word literals") {
  Alphabet a;
  auto const g = parse_tau_word(CongruenceKind::lambda(), "atba+sb+", a);
  CHECK(render(a, g) == "atba+sb+");
  CHECK(g.canon().size() == 6);
  CHECK_NOTHROW(parse_tau_word(CongruenceKind::gamma(), "a+b+ta+", a));

  try {
    parse_tau_word(CongruenceKind::gamma(), "aa+", a);
    FAIL("expected NotReducedError");
  } catch (NotReducedError const& e) {
    CHECK(e.reduced() == "a+");
  }
  CHECK_THROWS_AS(parse_tau_word(CongruenceKind::gamma(), "ata", a), NotReducedError);
  CHECK_THROWS_AS(parse_tau_word(CongruenceKind::tau1(), "ab+", a),
                  IllegalSegmentError);
  CHECK_THROWS_AS(parse_tau_word(CongruenceKind::trivial(), "a+", a),
                  IllegalSegmentError);
  CHECK_THROWS_AS(parse_tau_word(CongruenceKind::gamma_k(1), "a", a),
                  UnsupportedKindError);
  CHECK_THROWS_AS(parse_tau_word(CongruenceKind::gamma(), "a++", a), SyntaxError);
}

TEST_CASE("literal sets") {
  Alphabet a;
  auto const s = parse_tau_word_set(CongruenceKind::gamma(), "ta+, b+t", a);
  CHECK(s.size() == 2);
  CHECK_THROWS_AS(parse_tau_word_set(CongruenceKind::gamma(), "ta+,,b", a),
                  SyntaxError);
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(8);
  for (auto const& kind : {CongruenceKind::tau1(), CongruenceKind::gamma(),
                           CongruenceKind::lambda(), CongruenceKind::rho(),
                           CongruenceKind::trivial()}) {
    for (int i = 0; i < 300; ++i) {
      auto const u = testing::random_word(rng, 4, 9);
      auto const t = TauWord::of(kind, u);
      auto const s = render(testing::letters(), t);
      auto const back = parse_tau_word(kind, s, testing::letters());
      REQUIRE(back == t);
      REQUIRE(render(testing::letters(), back) == s);
      REQUIRE(parse_word(render(testing::letters(), u), testing::letters()) == u);
    }
  }
}
