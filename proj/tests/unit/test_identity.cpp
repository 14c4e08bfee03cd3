#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mtau/error.hpp"
#include "mtau/identity.hpp"
#include "mtau/monoid_lab.hpp"
#include "mtau/monoid_spec.hpp"

using namespace mtau;

namespace {

  FiniteMonoid spec(std::string_view s) {
    return parse_monoid_spec(s);
  }

  bool holds(std::string_view m, std::string_view id) {
    return satisfies(spec(m), parse_identity(id));
  }

  // Odometer over every assignment, no pruning.
  bool brute_force(FiniteMonoid const& m, Identity const& id) {
    auto const   n = id.variables.size();
    Substitution s{std::vector<Index>(n, 0)};
    while (true) {
      if (evaluate(m, id.lhs, s) != evaluate(m, id.rhs, s)) {
        return false;
      }
      std::size_t i = 0;
      while (i < n && s.values[i] + 1 == m.size()) {
        s.values[i++] = 0;
      }
      if (i == n) {
        return true;
      }
      ++s.values[i];
    }
  }

  Identity random_identity(std::mt19937_64& rng, std::size_t vars, std::size_t len) {
    static char const* names[] = {"x", "y", "z", "t"};
    std::string        u, v;
    std::uniform_int_distribution<std::size_t> l(1, len), c(0, vars - 1);
    for (auto n = l(rng); n > 0; --n) {
      u += names[c(rng)];
    }
    for (auto n = l(rng); n > 0; --n) {
      v += names[c(rng)];
    }
    return parse_identity(u + " ~ " + v);
  }

}  // namespace

TEST_CASE("identity facts") {
  CHECK(holds("zoo:B0^1", "xtsx ~ xtxsx"));
  CHECK(holds("zoo:A0^1", "xy^2tx ~ yxytx"));
  CHECK(holds("zoo:Q^1", "xy^2tx ~ yxytx"));
  CHECK_FALSE(holds("lambda:ba+sb+", "yx^2sy ~ x^2ysy"));
  CHECK(holds("lambda:abta+sb+", "yx^2sy ~ x^2ysy"));
  CHECK_FALSE(holds("lambda:atba+sb+", "xtxysy ~ xtyxsy"));
  CHECK(holds("lambda:ba+sb+", "xtxysy ~ xtyxsy"));
  CHECK_FALSE(holds("gamma:a+b+", "x^2y^2 ~ y^2x^2"));
  CHECK(holds("zoo:A^1", "xyx ~ xyx"));
}

TEST_CASE("witnesses are real") {
  auto const m   = spec("gamma:a+b+");
  auto const id  = parse_identity("x^2y^2 ~ y^2x^2");
  auto const sat = check_identity(m, id);
  REQUIRE_FALSE(sat.holds);
  REQUIRE(sat.witness);
  CHECK(evaluate(m, id.lhs, *sat.witness) != evaluate(m, id.rhs, *sat.witness));
  CHECK_FALSE(render(m, id, *sat.witness).empty());
}

TEST_CASE("satisfies agrees with exhaustive evaluation") {
  std::mt19937_64 rng(21);
  std::vector<FiniteMonoid> ms{spec("zoo:A^1"), spec("zoo:B0^1"), spec("gamma:a+b+"),
                               spec("lambda:ata+"), spec("mono:taum:3")};
  for (auto const& m : ms) {
    for (int i = 0; i < 150; ++i) {
      auto const id = random_identity(rng, 3, 5);
      CAPTURE(id.to_string());
      REQUIRE(satisfies(m, id) == brute_force(m, id));
    }
  }
}

TEST_CASE("renaming, side swap and products") {
  std::mt19937_64 rng(4);
  auto const a = spec("zoo:A^1");
  auto const q = spec("zoo:Q^1");
  auto const p = direct_product(a, q);
  for (int i = 0; i < 100; ++i) {
    auto const id = random_identity(rng, 3, 5);
    CAPTURE(id.to_string());
    auto const swapped = parse_identity(id.to_string().substr(
                                            id.to_string().find('~') + 2)
                                        + " ~ "
                                        + id.to_string().substr(
                                            0, id.to_string().find('~') - 1));
    REQUIRE(satisfies(a, id) == satisfies(a, swapped));
    std::string renamed = id.to_string();
    for (auto& ch : renamed) {
      ch = ch == 'x' ? 'z' : ch == 'z' ? 'x' : ch;
    }
    REQUIRE(satisfies(a, id) == satisfies(a, parse_identity(renamed)));
    REQUIRE(satisfies(p, id) == (satisfies(a, id) && satisfies(q, id)));
  }
}

TEST_CASE("identity syntax") {
  CHECK(parse_identity("xy^2 ~ y^2x").to_string() == "xy^2 ~ y^2x");
  CHECK(parse_identity("1 ~ x").lhs.empty());
  CHECK_THROWS_AS(parse_identity("xy"), SyntaxError);
}

TEST_CASE("families") {
  CHECK(family("lee", 2).to_string() == "xy1^2y2^2x ~ xy2^2y1^2x");
  CHECK(family("j-scheme", 1, {1}).to_string() == "xy1xt1y1 ~ x^2y1t1y1");
  CHECK(family("gusev", 1).to_string() == family("j-scheme", 1, {1}).to_string());
  CHECK(permutations(3).size() == 6);
  CHECK_THROWS_AS(family("nope", 2), Error);
  CHECK_THROWS_AS(family("j-scheme", 2, {1, 1}), Error);
  for (auto const& name : family_names()) {
    CHECK_NOTHROW(family(name, 2, name == "j-scheme" ? std::vector<std::size_t>{2, 1}
                                                     : std::vector<std::size_t>{}));
  }
  CHECK_THROWS_AS(family("lee", 2, {2, 1}), Error);
}

TEST_CASE("bounded tau-term checks") {
  Alphabet   v;
  auto const tx2 = parse_word("tx^2", v);
  auto const r   = is_tau_term_bounded(spec("t0:ab"), CongruenceKind::gamma(), tx2, 6);
  CHECK(r.status == TauTermVerdict::Status::counterexample);
  REQUIRE(r.counterexample);
  // M(ab) identifies tx^2 with a word outside its gamma-class.
  CHECK_FALSE(related(CongruenceKind::gamma(), *r.counterexample, tx2));
  Identity id{v, tx2, *r.counterexample};
  CHECK(satisfies(spec("t0:ab"), id));

  auto const e = is_tau_term_bounded(spec("zoo:E^1"), CongruenceKind::gamma(), tx2, 6);
  CHECK(e.status == TauTermVerdict::Status::holds_up_to_bound);
  CHECK(e.bound == 6);

  Alphabet   v2;
  auto const u2 = parse_word("xy1^2y2^2x", v2);
  auto const p  = spec("prod:zoo:A^1xdual:zoo:A^1");
  CHECK(is_tau_term_bounded(p, CongruenceKind::gamma(), u2, 8).status
        == TauTermVerdict::Status::counterexample);
}

TEST_CASE("parallel searches report the same witness") {
  Alphabet   v;
  auto const u  = parse_word("xy^2x", v);
  auto const m  = spec("zoo:A0^1");
  auto const r1 = is_tau_term_bounded(m, CongruenceKind::gamma(), u, 6, 1);
  auto const r3 = is_tau_term_bounded(m, CongruenceKind::gamma(), u, 6, 3);
  CHECK(r1.status == r3.status);
  CHECK(r1.counterexample == r3.counterexample);

  auto const e1 = equationally_equivalent_bounded(spec("zoo:A0^1"), spec("zoo:B0^1"),
                                                  2, 5, 1);
  auto const e3 = equationally_equivalent_bounded(spec("zoo:A0^1"), spec("zoo:B0^1"),
                                                  2, 5, 3);
  CHECK(e1.equivalent == e3.equivalent);
  REQUIRE(e1.separating.has_value() == e3.separating.has_value());
  if (e1.separating) {
    CHECK(e1.separating->to_string() == e3.separating->to_string());
  }
}

TEST_CASE("bounded equational equivalence") {
  auto const a = spec("zoo:A^1");
  CHECK(equationally_equivalent_bounded(a, a, 2, 4).equivalent);
  auto const r = equationally_equivalent_bounded(spec("t0:a"), spec("t0:ab"), 2, 4);
  CHECK_FALSE(r.equivalent);
  REQUIRE(r.separating);
  auto const& sep = *r.separating;
  auto const  left  = satisfies(spec("t0:a"), sep);
  auto const  right = satisfies(spec("t0:ab"), sep);
  CHECK(left != right);
  CHECK(r.satisfied_by == (left ? 1 : 2));
  CHECK(satisfies(spec("t0:a"), parse_identity("xy ~ yx")));
}

TEST_CASE("gamma_k oracle") {
  CHECK(gamma_k_oracle_check(0, 2, 4).ok);
  CHECK(gamma_k_oracle_check(1, 2, 4).ok);
  CHECK(gamma_k_oracle_check(2, 2, 5).ok);
}

TEST_CASE("monogenic identities") {
  for (std::size_t k = 0; k <= 3; ++k) {
    auto const m = monogenic(CongruenceKind::gamma_k(k));
    auto       p = [](std::size_t e) { return "x^" + std::to_string(e); };
    CHECK(satisfies(m, parse_identity(p(k + 1) + " ~ " + p(k + 2))));
    CHECK(satisfies(m, parse_identity("xy ~ yx")));
    if (k > 0) {
      CHECK_FALSE(satisfies(m, parse_identity(p(k) + " ~ " + p(k + 1))));
    } else {
      // x^0 is the empty word.
      CHECK_FALSE(satisfies(m, parse_identity("1 ~ x")));
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const m = monogenic(CongruenceKind::tau_m(n));
    CHECK(satisfies(m, parse_identity("x ~ x^" + std::to_string(1 + n))));
    CHECK(satisfies(m, parse_identity("xy ~ yx")));
  }
}

TEST_CASE("hypothesis report") {
  NfbConfig config;
  config.monoid = spec("gamma:a+b+ta+,a+tb+a+");
  config.n_max  = 3;
  for (auto lit : {"a^2tb^2a^2", "a^2b^2ta^2"}) {
    config.required_terms.emplace_back(lit, parse_word(lit, config.term_alphabet));
  }
  config.term_maxlen = 7;
  auto const report  = check_nfb_hypotheses(config);
  CHECK(report.at("pass").get<bool>());

  NfbConfig trivial = config;
  trivial.monoid    = spec("t0:");
  CHECK_FALSE(check_nfb_hypotheses(trivial).at("pass").get<bool>());

  NfbConfig e = config;
  e.monoid    = spec("zoo:E^1");
  CHECK_FALSE(check_nfb_hypotheses(e).at("pass").get<bool>());
}
