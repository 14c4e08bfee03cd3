#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mtau {

  // A letter is an index into an Alphabet.  Letters compare by declaration
  // order, which is what makes canonical labelling deterministic.
  enum class Letter : std::uint16_t {};

  constexpr std::size_t index_of(Letter x) noexcept {
    return static_cast<std::size_t>(x);
  }

  constexpr Letter letter(std::size_t i) noexcept {
    return static_cast<Letter>(i);
  }

  // The empty word is the identity 1 of the free monoid.
  using Word = std::vector<Letter>;

  // Finite, ordered set of named letters.  A name is one lowercase character
  // optionally followed by decimal digits (a, t, y1, t12).
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> const& names);

    // Returns the letter called `name`, declaring it if necessary.
    Letter intern(std::string_view name);
    // Throws SyntaxError if `name` was never declared.
    Letter at(std::string_view name) const;
    bool contains(std::string_view name) const;

    std::string const& name(Letter x) const;
    std::size_t size() const noexcept {
      return _names.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    static bool valid_name(std::string_view name) noexcept;

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  // Letters written one after another, maximal runs of length >= 2 as
  // name^k.  The empty word is rendered "1".
  std::string render(Alphabet const& alphabet, Word const& w);

  bool shortlex_less(Word const& u, Word const& v);

  struct Content {
    std::set<Letter> simple;
    std::set<Letter> multiple;

    std::set<Letter> all() const;
  };

  Content content(Word const& w);

  // counts[i] holds the letters occurring exactly i times, 1 <= i <= k;
  // counts[0] is left empty.  `all` is con(w).
  struct OccurrenceProfile {
    std::vector<std::set<Letter>> counts;
    std::set<Letter>              all;
  };

  OccurrenceProfile occurrence_profile(Word const& w, std::size_t k);

  std::size_t occurrences(Word const& w, Letter x);

  struct Island {
    Letter      letter;
    std::size_t exponent;

    auto operator<=>(Island const&) const = default;
  };

  // Maximal runs x^e in order.  Adjacent islands carry distinct letters.
  using IslandDecomposition = std::vector<Island>;

  IslandDecomposition islands(Word const& w);
  Word                expand(IslandDecomposition const& d);
  // The letters of the islands in order; two words are tau_1-related iff
  // their skeletons agree.
  Word skeleton(Word const& w);

  bool is_subword(Word const& v, Word const& u);
  // Every contiguous factor of u (including 1 and u), shortlex ordered.
  std::vector<Word> all_subwords(Word const& u);

  Word reverse(Word w);
  bool k_island_limited(Word const& w, std::size_t k);

}  // namespace mtau
