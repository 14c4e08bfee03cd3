#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "mtau/error.hpp"

using namespace mtau;
using testing::w;

namespace {
  std::set<Letter> set_of(std::string_view names) {
    std::set<Letter> out;
    for (char c : names) {
      out.insert(testing::letters().at(std::string(1, c)));
    }
    return out;
  }
}  // namespace

TEST_CASE("content splits simple and multiple letters") {
  auto c = content(w("xy^2x^5yx^3"));
  CHECK(c.simple.empty());
  CHECK(c.multiple == set_of("xy"));

  c = content(w("1"));
  CHECK(c.simple.empty());
  CHECK(c.multiple.empty());

  c = content(w("atba^2sb^2"));
  CHECK(c.simple == set_of("ts"));
  CHECK(c.multiple == set_of("ab"));
  CHECK(c.all() == set_of("abst"));
}

TEST_CASE("occurrence profile") {
  auto p = occurrence_profile(w("x^2y"), 2);
  CHECK(p.counts.at(1) == set_of("y"));
  CHECK(p.counts.at(2) == set_of("x"));
  CHECK(p.all == set_of("xy"));

  p = occurrence_profile(w("1"), 3);
  for (auto const& s : p.counts) {
    CHECK(s.empty());
  }

  p = occurrence_profile(w("xyxyx"), 3);
  CHECK(p.counts.at(1).empty());
  CHECK(p.counts.at(2) == set_of("y"));
  CHECK(p.counts.at(3) == set_of("x"));
}

TEST_CASE("islands") {
  auto const d = islands(w("xy^2x^5yx^3"));
  auto const x = testing::letters().at("x");
  auto const y = testing::letters().at("y");
  CHECK(std::count_if(d.begin(), d.end(), [&](Island i) { return i.letter == x; })
        == 3);
  CHECK(std::count_if(d.begin(), d.end(), [&](Island i) { return i.letter == y; })
        == 2);
  CHECK(islands(w("x^4")) == IslandDecomposition{{x, 4}});
  auto const a = testing::letters().at("a");
  auto const b = testing::letters().at("b");
  CHECK(islands(w("ab^2a^2")) == IslandDecomposition{{a, 1}, {b, 2}, {a, 2}});
  CHECK(skeleton(w("ab^2a^2")) == w("aba"));
}

TEST_CASE("islands agree with a run-length oracle") {
  for (auto const& u : testing::all_words(3, 7)) {
    IslandDecomposition oracle;
    for (std::size_t i = 0; i < u.size();) {
      std::size_t j = i;
      while (j < u.size() && u[j] == u[i]) {
        ++j;
      }
      oracle.push_back({u[i], j - i});
      i = j;
    }
    REQUIRE(islands(u) == oracle);
    REQUIRE(expand(islands(u)) == u);
  }
}

TEST_CASE("factors") {
  CHECK(is_subword(w("ba"), w("aba")));
  CHECK_FALSE(is_subword(w("bb"), w("aba")));
  for (auto const& u : testing::all_words(2, 4)) {
    CHECK(is_subword(w("1"), u));
  }
  CHECK(all_subwords(w("ab")) == std::vector<Word>{w("1"), w("a"), w("b"), w("ab")});
}

TEST_CASE("all_subwords matches a brute-force factor set") {
  for (auto const& u : testing::all_words(3, 6)) {
    std::set<Word> oracle;
    for (std::size_t i = 0; i <= u.size(); ++i) {
      for (std::size_t j = i; j <= u.size(); ++j) {
        oracle.insert(Word(u.begin() + i, u.begin() + j));
      }
    }
    auto got = all_subwords(u);
    REQUIRE(std::set<Word>(got.begin(), got.end()) == oracle);
    REQUIRE(std::is_sorted(got.begin(), got.end(),
                           [](Word const& p, Word const& q) {
                             return shortlex_less(p, q);
                           }));
  }
}

TEST_CASE("reverse and island limits") {
  CHECK(reverse(w("atb")) == w("bta"));
  CHECK(k_island_limited(w("x^7yty^3"), 2));
  CHECK_FALSE(k_island_limited(w("xyxyx"), 2));
  CHECK(k_island_limited(w("xyxyx"), 3));
}

TEST_CASE("shortlex") {
  CHECK(shortlex_less(w("b"), w("aa")));
  CHECK(shortlex_less(w("ab"), w("ba")));
  CHECK_FALSE(shortlex_less(w("ab"), w("ab")));
  CHECK(shortlex_less(w("1"), w("a")));
}

TEST_CASE("alphabet") {
  Alphabet a;
  auto     x = a.intern("x");
  CHECK(a.intern("x") == x);
  CHECK(a.name(x) == "x");
  CHECK(a.contains("x"));
  CHECK_FALSE(a.contains("y"));
  CHECK(Alphabet::valid_name("t12"));
  CHECK_FALSE(Alphabet::valid_name("T"));
  CHECK_FALSE(Alphabet::valid_name("1a"));
  CHECK_THROWS_AS(a.at("y"), Error);
}
