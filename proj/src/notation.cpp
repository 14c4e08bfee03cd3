#include "mtau/notation.hpp"

#include <cctype>
#include <charconv>

#include "mtau/error.hpp"

namespace mtau {

  namespace {
    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }
    bool is_digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::size_t parse_number(std::string_view s, std::string_view what) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw SyntaxError("expected a number for " + std::string(what)
                          + ", got '" + std::string(s) + "'");
      }
      return value;
    }

    // Reads letter names and their one-character suffixes; `suffix` is
    // called with the letter and the position just after its name, and
    // returns the position after whatever suffix it consumed.
    template <typename Suffix>
    void scan_letters(std::string_view text, Alphabet& alphabet, Suffix&& suffix) {
      std::size_t i = 0;
      while (i < text.size()) {
        if (is_space(text[i])) {
          ++i;
          continue;
        }
        if (text[i] < 'a' || text[i] > 'z') {
          throw SyntaxError("unexpected character '" + std::string(1, text[i])
                            + "' in '" + std::string(text) + "'");
        }
        std::size_t j = i + 1;
        while (j < text.size() && is_digit(text[j])) {
          ++j;
        }
        Letter x = alphabet.intern(text.substr(i, j - i));
        i        = suffix(x, j);
      }
    }
  }  // namespace

  Word parse_word(std::string_view text, Alphabet& alphabet) {
    text = trim(text);
    if (text == "1") {
      return {};
    }
    if (text.empty()) {
      throw SyntaxError("empty word; write 1 for the identity");
    }
    Word w;
    scan_letters(text, alphabet, [&](Letter x, std::size_t i) {
      std::size_t exponent = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t j = ++i;
        while (j < text.size() && is_digit(text[j])) {
          ++j;
        }
        exponent = parse_number(text.substr(i, j - i), "an exponent");
        if (exponent == 0) {
          throw SyntaxError("exponents must be positive");
        }
        i = j;
      }
      w.insert(w.end(), exponent, x);
      return i;
    });
    return w;
  }

  ExtWord parse_ext_word(std::string_view text, Alphabet& alphabet) {
    text = trim(text);
    if (text == "1") {
      return {};
    }
    if (text.empty()) {
      throw SyntaxError("empty tau-word; write 1 for the identity");
    }
    ExtWord w;
    scan_letters(text, alphabet, [&](Letter x, std::size_t i) {
      bool star = i < text.size() && text[i] == '+';
      w.push_back({x, star});
      return star ? i + 1 : i;
    });
    return w;
  }

  CongruenceKind parse_kind(std::string_view text) {
    text = trim(text);
    if (text == "t0" || text == "trivial") {
      return CongruenceKind::trivial();
    }
    if (text == "t1" || text == "tau1") {
      return CongruenceKind::tau1();
    }
    if (text == "gamma") {
      return CongruenceKind::gamma();
    }
    if (text == "lambda") {
      return CongruenceKind::lambda();
    }
    if (text == "rho") {
      return CongruenceKind::rho();
    }
    if (text.starts_with("meet(") && text.ends_with(")")) {
      auto                        body = text.substr(5, text.size() - 6);
      std::vector<CongruenceKind> members;
      std::size_t                 depth = 0, start = 0;
      for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
          members.push_back(parse_kind(body.substr(start, i - start)));
          start = i + 1;
        } else if (body[i] == '(') {
          ++depth;
        } else if (body[i] == ')') {
          --depth;
        }
      }
      return CongruenceKind::meet(std::move(members));
    }
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
      auto head = text.substr(0, colon);
      auto n    = parse_number(text.substr(colon + 1), std::string(head));
      if (head == "taum") {
        return CongruenceKind::tau_m(n);
      }
      if (head == "gammak") {
        return CongruenceKind::gamma_k(n);
      }
      if (head == "lambdak") {
        return CongruenceKind::tau1_meet_lambda_k(n);
      }
      if (head == "rhok") {
        return CongruenceKind::tau1_meet_rho_k(n);
      }
    }
    throw SyntaxError("unknown congruence '" + std::string(text) + "'");
  }

  TauWord parse_tau_word(CongruenceKind const& kind,
                         std::string_view      literal,
                         Alphabet&             alphabet) {
    using Tag = CongruenceKind::Tag;
    if (!kind.is_rewritable()) {
      throw UnsupportedKindError("tau-word literals are not defined for "
                                 + kind.name());
    }
    auto w = parse_ext_word(literal, alphabet);
    for (auto const& s : w) {
      if (kind.tag() == Tag::tau1 && !s.starred) {
        throw IllegalSegmentError("bare letter '" + alphabet.name(s.base)
                                  + "' in a t1 literal; write '"
                                  + alphabet.name(s.base) + "+'");
      }
      if (kind.tag() == Tag::trivial && s.starred) {
        throw IllegalSegmentError("starred letter '" + alphabet.name(s.base)
                                  + "+' in a t0 literal");
      }
    }
    if (!is_reduced(kind, w)) {
      throw NotReducedError(std::string(trim(literal)),
                            render(alphabet, normal_form(kind, w)));
    }
    return TauWord(kind, std::move(w));
  }

  TauWordSet parse_tau_word_set(CongruenceKind const& kind,
                                std::string_view      literals,
                                Alphabet&             alphabet) {
    TauWordSet  out(kind);
    std::size_t start = 0;
    while (start <= literals.size()) {
      auto end = literals.find(',', start);
      if (end == std::string_view::npos) {
        end = literals.size();
      }
      auto item = trim(literals.substr(start, end - start));
      if (item.empty()) {
        throw SyntaxError("empty entry in word list '" + std::string(literals)
                          + "'");
      }
      out.insert(parse_tau_word(kind, item, alphabet));
      start = end + 1;
    }
    return out;
  }

  std::string render(Alphabet const& alphabet, TauWord const& w) {
    return render(alphabet, w.canon());
  }

}  // namespace mtau
