#pragma once

#include <random>
#include <string>
#include <string_view>

#include "mtau/notation.hpp"
#include "mtau/rewrite.hpp"
#include "mtau/word.hpp"

namespace testing {

  // Letters a..z interned in order, so shortlex follows the alphabet.
  inline mtau::Alphabet& letters() {
    static mtau::Alphabet alphabet = [] {
      mtau::Alphabet a;
      for (char c = 'a'; c <= 'z'; ++c) {
        a.intern(std::string(1, c));
      }
      return a;
    }();
    return alphabet;
  }

  inline mtau::Word w(std::string_view text) {
    return mtau::parse_word(text, letters());
  }

  inline mtau::ExtWord x(std::string_view text) {
    return mtau::parse_ext_word(text, letters());
  }

  inline std::string str(mtau::Word const& u) {
    return mtau::render(letters(), u);
  }

  inline std::string str(mtau::ExtWord const& u) {
    return mtau::render(letters(), u);
  }

  // Every word of length <= maxlen over the first `k` letters.
  inline std::vector<mtau::Word> all_words(std::size_t k, std::size_t maxlen) {
    std::vector<mtau::Word> out{{}};
    for (std::size_t begin = 0, len = 1; len <= maxlen; ++len) {
      auto const end = out.size();
      for (auto i = begin; i < end; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
          auto u = out[i];
          u.push_back(mtau::letter(c));
          out.push_back(std::move(u));
        }
      }
      begin = end;
    }
    return out;
  }

  inline mtau::Word random_word(std::mt19937_64& rng,
                                std::size_t      k,
                                std::size_t      maxlen) {
    std::uniform_int_distribution<std::size_t> len(0, maxlen), c(0, k - 1);
    mtau::Word u(len(rng));
    for (auto& l : u) {
      l = mtau::letter(c(rng));
    }
    return u;
  }

  inline mtau::Word concat(mtau::Word u, mtau::Word const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

}  // namespace testing
