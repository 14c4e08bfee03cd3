#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtau/congruence.hpp"
#include "mtau/finite_monoid.hpp"
#include "mtau/word.hpp"

namespace mtau {

  // A finite presentation.  A relation whose right side is nullopt equates
  // its left side with the formal zero.  With `with_identity` set the empty
  // word is an element (a monoid presentation); otherwise only nonempty
  // words are (a semigroup presentation).
  struct Presentation {
    struct Relation {
      Word                lhs;
      std::optional<Word> rhs;
    };
    Alphabet              generators;
    std::vector<Relation> relations;
    bool                  with_identity = false;

    bool has_zero() const;
  };

  // Text format:
  //
  //   # comment
  //   e f c            generators, separated by spaces or commas; "1" marks
  //                    a monoid presentation
  //   ee=e             one relation per line, words as in parse_word
  //   ef=ce=0          chains expand to consecutive equalities
  //
  // Throws SyntaxError on malformed input or undeclared generators.
  Presentation parse_presentation(std::string_view text);

  struct CompletionLimits {
    std::size_t max_rules       = 200;
    std::size_t max_rule_length = 12;
  };

  // The semigroup (or monoid, see Presentation) defined by `p`, computed by
  // shortlex Knuth-Bendix completion and enumeration of irreducible words.
  // Elements are listed in shortlex order of their normal forms, with the
  // zero (labelled "0") last.  Throws CapExceededError if completion exceeds
  // `limits` or there are more than `cap` elements.
  FiniteSemigroup from_presentation(Presentation const& p,
                                    std::size_t         cap,
                                    CompletionLimits    limits = {});

  // A fresh identity, labelled "1" (or "1'", "1''", ... if taken), placed
  // first.  Adds a new element even when `s` already has an identity.
  FiniteMonoid adjoin_identity(FiniteSemigroup const& s);

  // Labels are "(x,y)"; element (i, j) has index i * |m2| + j.
  FiniteMonoid direct_product(FiniteMonoid const& m1, FiniteMonoid const& m2);

  // Same elements and labels, transposed table.
  FiniteMonoid dual(FiniteMonoid const& m);

  // map[i] is the image of element i of the source.
  struct Morphism {
    std::vector<Index> map;

    bool injective() const;
    bool surjective(std::size_t target_size) const;
  };

  // Checks that `f` maps identity to identity and preserves products.
  bool is_homomorphism(FiniteMonoid const& source,
                       FiniteMonoid const& target,
                       Morphism const&     f);

  struct Submonoid {
    FiniteMonoid monoid;
    Morphism     embedding;
  };

  // The submonoid generated by `gens` and the identity.  Elements keep
  // their relative order in `m`.  Throws Error if `gens` is empty or out of
  // range.
  Submonoid submonoid(FiniteMonoid const& m, std::vector<Index> const& gens);
  Submonoid submonoid(FiniteMonoid const&             m,
                      std::vector<std::string> const& gens);

  struct Quotient {
    FiniteMonoid monoid;
    Morphism     projection;
  };

  // Quotient by the congruence generated by `pairs`.  Each class is labelled
  // by its first member (in the order of `m`), and classes are ordered by
  // their first member.
  Quotient quotient_identify(FiniteMonoid const&                        m,
                             std::vector<std::pair<Index, Index>> const& pairs);

  // Merges the classes generated by `pairs` without closing them under
  // multiplication: a product of classes is the class of any nonzero
  // product of members, or zero if all are zero.  Throws Error when `m` has
  // no zero, the zero is merged, two nonzero products disagree, or the
  // result is not associative.  Unlike quotient_identify the projection is
  // in general not a homomorphism.
  Quotient merge_identify(FiniteMonoid const&                        m,
                          std::vector<std::pair<Index, Index>> const& pairs);

  // A product-preserving bijection m1 -> m2, if one exists.
  std::optional<Morphism> isomorphic(FiniteMonoid const& m1,
                                     FiniteMonoid const& m2);
  std::optional<Morphism> anti_isomorphic(FiniteMonoid const& m1,
                                          FiniteMonoid const& m2);

  // The homomorphism sending each images[i].first to images[i].second, if
  // that assignment extends to one.  The listed source elements must
  // generate `source`; returns nullopt otherwise.
  std::optional<Morphism> extend_to_morphism(
      FiniteMonoid const&                         source,
      FiniteMonoid const&                         target,
      std::vector<std::pair<Index, Index>> const& images);

  // One-letter monoids.  GammaK(k): {1, a, ..., a^k, a+, 0} where a+ stands
  // for all powers above k; the zero is adjoined.  TauM(m): {1, a, ..., a^m,
  // 0}, the exponents of a, ..., a^m added modulo m (a^m is the identity of
  // that cyclic group).  Throws UnsupportedKindError for other kinds and
  // Error for TauM(0).
  FiniteMonoid monogenic(CongruenceKind const& kind);

  // Named presentations: A, E, B0, Q, F, A0 and L<n> for n >= 2.  Throws
  // Error for unknown names.
  Presentation builtin_presentation(std::string_view name);
  std::vector<std::string> builtin_presentation_names();

}  // namespace mtau
