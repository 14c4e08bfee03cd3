#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mtau/congruence.hpp"
#include "mtau/finite_monoid.hpp"
#include "mtau/word.hpp"

namespace mtau {

  // u ~ v over a shared variable alphabet.
  struct Identity {
    Alphabet variables;
    Word     lhs;
    Word     rhs;

    std::string to_string() const;
  };

  // "u ~ v" with words as in parse_word.
  Identity parse_identity(std::string_view text);

  // values[i] is the element substituted for variable i.
  struct Substitution {
    std::vector<Index> values;
  };

  struct Satisfaction {
    bool                        holds = true;
    std::optional<Substitution> witness;  // set when !holds

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  Index evaluate(FiniteMonoid const& m, Word const& w, Substitution const& s);

  // Exhaustive over all substitutions, with subtrees skipped once both sides
  // are fixed (all their variables assigned, or an assigned factor already
  // evaluates to zero).
  Satisfaction check_identity(FiniteMonoid const& m, Identity const& id);
  bool         satisfies(FiniteMonoid const& m, Identity const& id);

  std::string render(FiniteMonoid const& m,
                     Identity const&     id,
                     Substitution const& s);

  // Identity schemes, variables x, y1..yn, t1..tn:
  //   lee       n >= 2   x y1^2 ... yn^2 x ~ x yn^2 ... y1^2 x
  //   gusev     n >= 1   x y1..yn x t1 y1..tn yn ~ x^2 y1..yn t1 y1..tn yn
  //   j-scheme  n >= 0   as gusev with the first y-block permuted by `perm`
  //                      (a permutation of 1..n, identity by default)
  //   u-echo    n >= 2   x y1^2 ... yn^2 x ~ x y1^2 x y2^2 ... yn^2 x
  //   u-tail    n >= 2   x y1^2 ... yn^2 x ~ x y1^2 ... y(n-1)^2 yn x yn
  // Throws Error for unknown names, n out of range or a bad permutation.
  Identity family(std::string_view                name,
                  std::size_t                     n,
                  std::vector<std::size_t> const& perm = {});
  std::vector<std::string> family_names();

  // All permutations of 1..n in lexicographic order.
  std::vector<std::vector<std::size_t>> permutations(std::size_t n);

  struct TauTermVerdict {
    enum class Status { holds_up_to_bound, counterexample };
    Status              status = Status::holds_up_to_bound;
    std::optional<Word> counterexample;
    std::size_t         bound      = 0;
    std::size_t         candidates = 0;  // words v compared against u
  };

  // Looks for v with con(v) contained in con(u), |v| <= maxlen, m |= u ~ v
  // and v not kind-related to u.  Candidates are tried in shortlex order
  // (letters ordered by their index) and the least counterexample is
  // returned whatever `jobs` is.  A holds_up_to_bound verdict says nothing
  // about longer words.
  TauTermVerdict is_tau_term_bounded(FiniteMonoid const&   m,
                                     CongruenceKind const& kind,
                                     Word const&           u,
                                     std::size_t           maxlen,
                                     std::size_t           jobs = 1);

  struct Equivalence {
    bool                    equivalent = true;
    std::optional<Identity> separating;
    // 1 or 2: which monoid satisfies `separating`.
    int satisfied_by = 0;
  };

  // Compares the identities over x1..x<nvars> with both sides of length at
  // most maxlen.  Each word is summarised by the 128-bit hash of its value
  // vector over all substitutions; two monoids agree on the range iff they
  // partition the words the same way.  The reported identity is rechecked
  // by direct evaluation.
  Equivalence equationally_equivalent_bounded(FiniteMonoid const& m1,
                                              FiniteMonoid const& m2,
                                              std::size_t         nvars,
                                              std::size_t         maxlen,
                                              std::size_t         jobs = 1);

  struct OracleCheck {
    bool                    ok = true;
    std::optional<Identity> mismatch;
    std::size_t             pairs = 0;
  };

  // For all words u, v over nvars letters, |u|, |v| <= maxlen:
  // M(a^k) |= u ~ v iff u gamma_k v, where M(a^k) is built from the single
  // trivial-congruence word a^k (k = 0 gives M(1)).
  OracleCheck gamma_k_oracle_check(std::size_t k,
                                   std::size_t nvars,
                                   std::size_t maxlen);

  struct NfbConfig {
    FiniteMonoid      monoid;
    CongruenceKind    kind = CongruenceKind::gamma();
    std::size_t       n_min = 2;
    std::size_t       n_max = 4;
    // Identity schemes tried, in order, as witnesses that U_n is not a
    // kind-term; afterwards is_tau_term_bounded runs on U_n itself with
    // `search_maxlen` if that is nonzero.
    std::vector<std::string> witness_families{"u-echo", "u-tail"};
    std::size_t              search_maxlen = 0;
    // Words that must be kind-terms (checked up to `term_maxlen`).
    std::vector<std::pair<std::string, Word>> required_terms;
    Alphabet                                  term_alphabet;
    std::size_t                               term_maxlen = 8;
    std::size_t                               jobs        = 1;
  };

  // Bounded check of the hypotheses "U_n = x y1^2 ... yn^2 x is not a
  // kind-term for each n" and "each required word is a kind-term".  The
  // report is JSON with one entry per clause and an overall "pass".
  nlohmann::json check_nfb_hypotheses(NfbConfig const& config);

}  // namespace mtau
