#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mtau/congruence.hpp"
#include "mtau/word.hpp"

namespace mtau {

  // A symbol of the doubled alphabet: the letter a, or the starred symbol
  // a+ which stands for a^{2+} under gamma/lambda/rho and a^{1+} under tau1.
  struct ExtLetter {
    Letter base;
    bool   starred = false;

    auto operator<=>(ExtLetter const&) const = default;
  };

  using ExtWord = std::vector<ExtLetter>;

  ExtWord embed(Word const& w);
  // Some plain word whose normal form equals that of w: each a+ becomes aa.
  Word representative(ExtWord const& w);
  ExtWord reverse(ExtWord w);
  bool    shortlex_less(ExtWord const& u, ExtWord const& v);
  // "1" for the empty word, otherwise names with '+' after starred symbols.
  std::string render(Alphabet const& alphabet, ExtWord const& w);

  enum class Rule {
    star,              // a -> a+, subject to the kind's side condition
    merge_star_star,   // a+a+ -> a+
    merge_plain_star,  // aa+ -> a+
    merge_star_plain   // a+a -> a+
  };

  struct Redex {
    std::size_t position;
    Rule        rule;

    auto operator<=>(Redex const&) const = default;
  };

  // Every applicable rule instance, ordered by position.  The kind must be
  // rewritable (trivial, tau1, gamma, lambda, rho); the trivial congruence
  // has no rules.
  std::vector<Redex> redexes(CongruenceKind const& kind, ExtWord const& w);
  ExtWord            apply_redex(ExtWord w, Redex const& r);

  bool is_reduced(CongruenceKind const& kind, ExtWord const& w);

  // Leftmost rule application until no rule applies.
  ExtWord normal_form(CongruenceKind const& kind, ExtWord w);

  // Rewrites to normal form, letting `choose` pick which of the current
  // redexes to apply (it returns an index into the vector).
  ExtWord normal_form_with(
      CongruenceKind const&                                          kind,
      ExtWord                                                        w,
      std::function<std::size_t(std::vector<Redex> const&)> const& choose);

  ExtWord canonical(CongruenceKind const& kind, Word const& w);

  // Normal form of the concatenation uv.
  ExtWord diamond(CongruenceKind const& kind,
                  ExtWord const&        u,
                  ExtWord const&        v);

}  // namespace mtau
