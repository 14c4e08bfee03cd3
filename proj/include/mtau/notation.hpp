#pragma once

#include <string>
#include <string_view>

#include "mtau/congruence.hpp"
#include "mtau/rewrite.hpp"
#include "mtau/tau_order.hpp"
#include "mtau/word.hpp"

// Text formats shared by the library, the CLI and the Python module.
//
//   letter     := [a-z][0-9]*
//   word       := "1" | (letter ("^" digits)?)+          e.g. x y1^2 y2^2 x
//   tau-word   := "1" | (letter "+"?)+                   e.g. atba+sb+
//   kind       := t0 | t1 | gamma | lambda | rho | taum:M | gammak:K
//               | lambdak:K | rhok:K | meet(kind,kind,...)
//
// Whitespace inside words is ignored.  Letters are declared in the given
// alphabet in order of first appearance.
namespace mtau {

  Word    parse_word(std::string_view text, Alphabet& alphabet);
  ExtWord parse_ext_word(std::string_view text, Alphabet& alphabet);

  CongruenceKind parse_kind(std::string_view text);

  // Parses a tau-word literal for `kind`.  Under gamma, lambda and rho a
  // bare letter a means {a} and a+ means {a^2, a^3, ...}; under t1 only
  // starred segments are legal and a+ means {a, a^2, ...}; under t0 only
  // bare letters are legal.
  //
  // Throws SyntaxError, IllegalSegmentError, UnsupportedKindError, or
  // NotReducedError carrying the reduced spelling.
  TauWord parse_tau_word(CongruenceKind const& kind,
                         std::string_view      literal,
                         Alphabet&             alphabet);

  // Comma-separated list of tau-word literals.
  TauWordSet parse_tau_word_set(CongruenceKind const& kind,
                                std::string_view      literals,
                                Alphabet&             alphabet);

  std::string render(Alphabet const& alphabet, TauWord const& w);

}  // namespace mtau
