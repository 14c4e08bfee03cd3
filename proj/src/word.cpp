#include "mtau/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mtau/error.hpp"

namespace mtau {

  Alphabet::Alphabet(std::vector<std::string> const& names) {
    for (auto const& n : names) {
      if (contains(n)) {
        throw SyntaxError("letter '" + n + "' declared twice");
      }
      intern(n);
    }
  }

  bool Alphabet::valid_name(std::string_view name) noexcept {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') {
      return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
  }

  Letter Alphabet::intern(std::string_view name) {
    std::string key(name);
    if (auto it = _index.find(key); it != _index.end()) {
      return letter(it->second);
    }
    if (!valid_name(name)) {
      throw SyntaxError("invalid letter name '" + key + "'");
    }
    if (_names.size() > UINT16_MAX) {
      throw Error("alphabet is full");
    }
    _index.emplace(key, _names.size());
    _names.push_back(std::move(key));
    return letter(_names.size() - 1);
  }

  Letter Alphabet::at(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      throw SyntaxError("undeclared letter '" + std::string(name) + "'");
    }
    return letter(it->second);
  }

  bool Alphabet::contains(std::string_view name) const {
    return _index.count(std::string(name)) != 0;
  }

  std::string const& Alphabet::name(Letter x) const {
    return _names.at(index_of(x));
  }

  std::string render(Alphabet const& alphabet, Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& [x, e] : islands(w)) {
      out += alphabet.name(x);
      if (e > 1) {
        out += '^' + std::to_string(e);
      }
    }
    return out;
  }

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  std::set<Letter> Content::all() const {
    std::set<Letter> out = simple;
    out.insert(multiple.begin(), multiple.end());
    return out;
  }

  namespace {
    std::map<Letter, std::size_t> letter_counts(Word const& w) {
      std::map<Letter, std::size_t> counts;
      for (Letter x : w) {
        ++counts[x];
      }
      return counts;
    }
  }  // namespace

  Content content(Word const& w) {
    Content c;
    for (auto const& [x, n] : letter_counts(w)) {
      (n == 1 ? c.simple : c.multiple).insert(x);
    }
    return c;
  }

  OccurrenceProfile occurrence_profile(Word const& w, std::size_t k) {
    OccurrenceProfile p;
    p.counts.resize(k + 1);
    for (auto const& [x, n] : letter_counts(w)) {
      p.all.insert(x);
      if (n <= k) {
        p.counts[n].insert(x);
      }
    }
    return p;
  }

  std::size_t occurrences(Word const& w, Letter x) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
  }

  IslandDecomposition islands(Word const& w) {
    IslandDecomposition out;
    for (Letter x : w) {
      if (!out.empty() && out.back().letter == x) {
        ++out.back().exponent;
      } else {
        out.push_back({x, 1});
      }
    }
    return out;
  }

  Word expand(IslandDecomposition const& d) {
    Word w;
    for (auto const& [x, e] : d) {
      w.insert(w.end(), e, x);
    }
    return w;
  }

  Word skeleton(Word const& w) {
    Word s;
    for (auto const& island : islands(w)) {
      s.push_back(island.letter);
    }
    return s;
  }

  bool is_subword(Word const& v, Word const& u) {
    return v.empty()
           || std::search(u.begin(), u.end(), v.begin(), v.end()) != u.end();
  }

  std::vector<Word> all_subwords(Word const& u) {
    std::set<Word> seen;
    for (std::size_t i = 0; i <= u.size(); ++i) {
      for (std::size_t j = i; j <= u.size(); ++j) {
        seen.emplace(u.begin() + i, u.begin() + j);
      }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }

  Word reverse(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  bool k_island_limited(Word const& w, std::size_t k) {
    std::map<Letter, std::size_t> count;
    for (auto const& island : islands(w)) {
      if (++count[island.letter] > k) {
        return false;
      }
    }
    return true;
  }

}  // namespace mtau
