#pragma once

#include <vector>

#include "mtau/congruence.hpp"
#include "mtau/rewrite.hpp"

namespace mtau {

  // An element of the quotient of the free monoid by a rewritable
  // congruence, named by its reduced word.  For the trivial congruence the
  // canonical word carries no stars.
  class TauWord {
   public:
    // Throws Error if `canon` is not reduced for `kind`, and
    // UnsupportedKindError for kinds without a rewriting system.
    TauWord(CongruenceKind kind, ExtWord canon);

    static TauWord of(CongruenceKind kind, Word const& w) {
      auto c = canonical(kind, w);
      return TauWord(std::move(kind), std::move(c));
    }

    CongruenceKind const& kind() const noexcept {
      return _kind;
    }
    ExtWord const& canon() const noexcept {
      return _canon;
    }

    bool operator==(TauWord const&) const = default;

   private:
    CongruenceKind _kind;
    ExtWord        _canon;
  };

  // A finite set of tau-words of a single kind, kept in shortlex order of
  // their canonical words.
  class TauWordSet {
   public:
    explicit TauWordSet(CongruenceKind kind) : _kind(std::move(kind)) {}
    TauWordSet(CongruenceKind kind, std::vector<ExtWord> members);

    // Throws KindMismatchError if w has another kind.
    void insert(TauWord const& w);

    bool contains(ExtWord const& canon) const;
    bool contains(TauWord const& w) const;

    CongruenceKind const& kind() const noexcept {
      return _kind;
    }
    std::vector<ExtWord> const& members() const noexcept {
      return _members;
    }
    std::size_t size() const noexcept {
      return _members.size();
    }

    bool operator==(TauWordSet const&) const = default;

   private:
    void insert_canon(ExtWord w);

    CongruenceKind       _kind;
    std::vector<ExtWord> _members;
  };

  // The downward closure of W under the quasi-order v <= u iff u = p v s.
  // Finite for every rewritable kind; members are reduced and shortlex
  // ordered.
  TauWordSet closure(TauWordSet const& w);

  // v <= u; throws KindMismatchError when the kinds differ.
  bool leq(TauWord const& v, TauWord const& u);

}  // namespace mtau
