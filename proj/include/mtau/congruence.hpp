#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mtau/word.hpp"

namespace mtau {

  // One of the catalogued congruences on the free monoid.
  //
  //   trivial             equality of words
  //   tau1                induced by a = a^2 (equal island skeletons)
  //   tau_m(m)            induced by a = a^{1+m}
  //   gamma_k(k)          con_i(u) = con_i(v) for 0 <= i <= k
  //   gamma               tau1 and equal sets of multiple letters
  //   lambda, rho         gamma and the first (last) two occurrences of each
  //                       multiple letter are adjacent in both or neither
  //   tau1_meet_lambda_k  tau1 and occurrences i, i+1 adjacent alike, i <= k
  //   tau1_meet_rho_k     the dual of the above
  //   meet                intersection of the members
  class CongruenceKind {
   public:
    enum class Tag : std::uint8_t {
      trivial,
      tau1,
      tau_m,
      gamma_k,
      gamma,
      lambda,
      rho,
      tau1_meet_lambda_k,
      tau1_meet_rho_k,
      meet
    };

    static CongruenceKind trivial() {
      return CongruenceKind(Tag::trivial);
    }
    static CongruenceKind tau1() {
      return CongruenceKind(Tag::tau1);
    }
    static CongruenceKind tau_m(std::size_t m) {
      return CongruenceKind(Tag::tau_m, m);
    }
    static CongruenceKind gamma_k(std::size_t k) {
      return CongruenceKind(Tag::gamma_k, k);
    }
    static CongruenceKind gamma() {
      return CongruenceKind(Tag::gamma);
    }
    static CongruenceKind lambda() {
      return CongruenceKind(Tag::lambda);
    }
    static CongruenceKind rho() {
      return CongruenceKind(Tag::rho);
    }
    // Throws Error for k == 0.
    static CongruenceKind tau1_meet_lambda_k(std::size_t k);
    static CongruenceKind tau1_meet_rho_k(std::size_t k);
    // Throws Error for an empty member list.
    static CongruenceKind meet(std::vector<CongruenceKind> members);

    Tag tag() const noexcept {
      return _tag;
    }
    std::size_t parameter() const noexcept {
      return _parameter;
    }
    std::vector<CongruenceKind> const& members() const noexcept {
      return _members;
    }

    // True for the kinds with a rewriting system and finite closures:
    // trivial, tau1, gamma, lambda, rho.
    bool is_rewritable() const noexcept;

    // Short name as accepted by parse_kind, e.g. "lambda", "gammak:2".
    std::string name() const;

    bool operator==(CongruenceKind const&) const = default;

   private:
    explicit CongruenceKind(Tag t, std::size_t p = 0) : _tag(t), _parameter(p) {}

    Tag                         _tag;
    std::size_t                 _parameter = 0;
    std::vector<CongruenceKind> _members;
  };

  // Decides u kind v directly from the definition of the relation.
  bool related(CongruenceKind const& kind, Word const& u, Word const& v);

  // The K-set of the class of u: all words related to u with no factor x^3,
  // shortlex ordered.  Only for gamma, lambda and rho; throws
  // UnsupportedKindError otherwise.
  std::vector<Word> class_representatives(CongruenceKind const& kind,
                                          Word const&           u);

}  // namespace mtau
