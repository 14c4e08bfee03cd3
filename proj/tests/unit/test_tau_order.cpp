#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "mtau/congruence.hpp"
#include "mtau/error.hpp"
#include "mtau/notation.hpp"
#include "mtau/tau_order.hpp"

using namespace mtau;
using testing::str;
using testing::w;

namespace {

  std::set<std::string> labels(TauWordSet const& s) {
    std::set<std::string> out;
    for (auto const& u : s.members()) {
      out.insert(str(u));
    }
    return out;
  }

  TauWordSet set_of(CongruenceKind const& kind, std::string_view literals) {
    return parse_tau_word_set(kind, literals, testing::letters());
  }

  // Words of the class named by `u`: every island of its representative
  // gets an exponent in 1..3, kept if related to the representative.
  std::vector<Word> class_words(CongruenceKind const& kind, ExtWord const& u) {
    auto const rep  = representative(u);
    auto const isl  = islands(rep);
    std::vector<Word> out;
    std::vector<std::size_t> e(isl.size(), 1);
    while (true) {
      IslandDecomposition d = isl;
      for (std::size_t i = 0; i < d.size(); ++i) {
        d[i].exponent = e[i];
      }
      auto v = expand(d);
      if (related(kind, v, rep)) {
        out.push_back(std::move(v));
      }
      std::size_t i = 0;
      while (i < e.size() && e[i] == 3) {
        e[i++] = 1;
      }
      if (i == e.size()) {
        break;
      }
      ++e[i];
    }
    return out;
  }

  // Number of classes meeting the factors of class words, grouped with
  // `related` only.
  std::vector<Word> closure_oracle(TauWordSet const& s) {
    std::set<Word> factors;
    for (auto const& u : s.members()) {
      for (auto const& v : class_words(s.kind(), u)) {
        for (auto const& f : all_subwords(v)) {
          factors.insert(f);
        }
      }
    }
    std::vector<Word> reps;
    for (auto const& f : factors) {
      bool seen = false;
      for (auto const& r : reps) {
        if (related(s.kind(), f, r)) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        reps.push_back(f);
      }
    }
    return reps;
  }

}  // namespace

TEST_CASE("small closures") {
  CHECK(labels(closure(set_of(CongruenceKind::tau1(), "a+b+")))
        == std::set<std::string>{"1", "a+", "b+", "a+b+"});
  CHECK(labels(closure(set_of(CongruenceKind::gamma(), "ab+")))
        == std::set<std::string>{"1", "a", "b", "b+", "ab", "ab+"});
  CHECK(labels(closure(set_of(CongruenceKind::trivial(), "1")))
        == std::set<std::string>{"1"});
  CHECK(closure(TauWordSet(CongruenceKind::gamma())).size() == 0);
}

TEST_CASE("closures agree with the factor-class oracle") {
  std::vector<std::pair<CongruenceKind, std::string>> cases{
      {CongruenceKind::lambda(), "atba+sb+"},
      {CongruenceKind::lambda(), "ba+sb+"},
      {CongruenceKind::lambda(), "abta+sb+"},
      {CongruenceKind::lambda(), "ata+"},
      {CongruenceKind::gamma(), "a+b+ta+,a+tb+a+"},
      {CongruenceKind::gamma(), "a+tsa+"},
      {CongruenceKind::gamma(), "ta+,b+t"},
      {CongruenceKind::rho(), "a+ta,b+"},
      {CongruenceKind::tau1(), "a+b+a+"},
      {CongruenceKind::trivial(), "abca"}};
  for (auto const& [kind, literals] : cases) {
    CAPTURE(literals);
    auto const s      = set_of(kind, literals);
    auto const cl     = closure(s);
    auto const oracle = closure_oracle(s);
    CHECK(cl.size() == oracle.size());
    for (auto const& r : oracle) {
      CHECK(cl.contains(canonical(kind, r)));
    }
  }
}

TEST_CASE("the lambda closure of atba+sb+") {
  auto const cl = closure(set_of(CongruenceKind::lambda(), "atba+sb+"));
  CHECK(cl.size() == 33);
  auto const l = labels(cl);
  for (auto name : {"bas", "ba+s", "asb+", "tbas", "basb+", "a+sb+"}) {
    CHECK(l.count(name) == 1);
  }
}

TEST_CASE("order examples") {
  auto const g = CongruenceKind::gamma();
  CHECK(leq(TauWord::of(g, w("t")), TauWord::of(g, w("ta^2"))));
  auto const at  = TauWord::of(g, w("a^2t"));
  auto const ata = TauWord::of(g, w("a^2ta^2"));
  CHECK(leq(at, ata));
  CHECK_FALSE(leq(ata, at));
  CHECK(leq(TauWord::of(g, w("1")), ata));
  CHECK(leq(ata, ata));
  CHECK_THROWS_AS(leq(TauWord::of(CongruenceKind::lambda(), w("a")), at),
                  KindMismatchError);
}

TEST_CASE("the order is a partial order on each closure") {
  for (auto const& [kind, literals] :
       std::vector<std::pair<CongruenceKind, std::string>>{
           {CongruenceKind::lambda(), "ba+sb+"},
           {CongruenceKind::gamma(), "a+b+ta+"},
           {CongruenceKind::rho(), "a+ta"},
           {CongruenceKind::tau1(), "a+b+a+"}}) {
    auto const cl = closure(set_of(kind, literals));
    std::vector<TauWord> m;
    for (auto const& u : cl.members()) {
      m.emplace_back(kind, u);
    }
    for (auto const& u : m) {
      REQUIRE(leq(u, u));
      for (auto const& v : m) {
        if (leq(u, v) && leq(v, u)) {
          REQUIRE(u == v);
        }
        for (auto const& t : m) {
          if (leq(u, v) && leq(v, t)) {
            REQUIRE(leq(u, t));
          }
        }
      }
    }
  }
}

TEST_CASE("closure is downward closed and contains W") {
  auto const s  = set_of(CongruenceKind::gamma(), "a+tb+a+,ab+");
  auto const cl = closure(s);
  for (auto const& u : s.members()) {
    CHECK(cl.contains(u));
  }
  for (auto const& u : cl.members()) {
    for (auto const& f : all_subwords(representative(u))) {
      CHECK(cl.contains(canonical(s.kind(), f)));
    }
  }
}

TEST_CASE("tau-word sets keep one kind") {
  TauWordSet s(CongruenceKind::gamma());
  CHECK_THROWS_AS(s.insert(TauWord::of(CongruenceKind::lambda(), w("a"))),
                  KindMismatchError);
  CHECK_THROWS_AS(TauWord(CongruenceKind::gamma(), testing::x("aa+")), Error);
  CHECK_THROWS_AS(TauWord::of(CongruenceKind::gamma_k(1), w("a")),
                  UnsupportedKindError);
}
