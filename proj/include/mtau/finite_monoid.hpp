#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mtau {

  using Index = std::uint32_t;

  // A finite semigroup given by its Cayley table.  Elements are 0..n-1 and
  // carry display labels; product(i, j) is table[i * n + j].
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;
    // Validates the table shape, the range of entries, label uniqueness and
    // that `zero`, when given, absorbs on both sides.  Associativity is not
    // checked here; see is_associative.
    FiniteSemigroup(std::vector<std::string> labels,
                    std::vector<Index>       table,
                    std::optional<Index>     zero,
                    std::string              provenance = {});

    std::size_t size() const noexcept {
      return _labels.size();
    }
    Index product(Index i, Index j) const noexcept {
      return _table[static_cast<std::size_t>(i) * _labels.size() + j];
    }
    std::vector<Index> const& table() const noexcept {
      return _table;
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string const& label(Index i) const {
      return _labels.at(i);
    }
    std::optional<Index> zero() const noexcept {
      return _zero;
    }
    std::string const& provenance() const noexcept {
      return _provenance;
    }
    std::optional<Index> find(std::string_view label) const;
    // Throws Error when no element carries `label`.
    Index at(std::string_view label) const;

    // The two-sided identity if there is one.
    std::optional<Index> find_identity() const;

    bool operator==(FiniteSemigroup const& that) const {
      return _labels == that._labels && _table == that._table
             && _zero == that._zero;
    }

   protected:
    std::vector<std::string> _labels;
    std::vector<Index>       _table;
    std::optional<Index>     _zero;
    std::string              _provenance;
  };

  class FiniteMonoid : public FiniteSemigroup {
   public:
    FiniteMonoid() = default;
    // As FiniteSemigroup, and additionally checks that `identity` acts
    // trivially on both sides.
    FiniteMonoid(std::vector<std::string> labels,
                 std::vector<Index>       table,
                 Index                    identity,
                 std::optional<Index>     zero,
                 std::string              provenance = {});

    // Throws Error if `s` has no identity element.
    static FiniteMonoid from_semigroup(FiniteSemigroup const& s);

    Index identity() const noexcept {
      return _identity;
    }

    bool operator==(FiniteMonoid const& that) const {
      return FiniteSemigroup::operator==(that) && _identity == that._identity;
    }

   private:
    Index _identity = 0;
  };

  // Exhaustive for up to 128 elements, otherwise checks `samples` random
  // triples drawn with `seed`.
  bool is_associative(FiniteSemigroup const& s,
                      std::size_t            samples = 200000,
                      std::uint64_t          seed    = 0);

  std::vector<Index> idempotents(FiniteSemigroup const& s);

  // Membership vector of the principal two-sided ideal MxM.
  std::vector<bool> principal_ideal(FiniteMonoid const& m, Index x);

  // x J y (equal principal ideals) implies x = y.
  bool is_j_trivial(FiniteMonoid const& m);

  // Covering pairs (lower, upper) of the order x <= y iff MxM is contained
  // in MyM, i.e. the J-order; meaningful as a Hasse diagram when m is
  // J-trivial.
  std::vector<std::pair<Index, Index>> j_order_covers(FiniteMonoid const& m);

}  // namespace mtau
