#include "mtau/rewrite.hpp"

#include <algorithm>
#include <unordered_map>

#include "mtau/error.hpp"

namespace mtau {

  ExtWord embed(Word const& w) {
    ExtWord out;
    out.reserve(w.size());
    for (Letter x : w) {
      out.push_back({x, false});
    }
    return out;
  }

  Word representative(ExtWord const& w) {
    Word out;
    for (auto const& s : w) {
      out.push_back(s.base);
      if (s.starred) {
        out.push_back(s.base);
      }
    }
    return out;
  }

  ExtWord reverse(ExtWord w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  bool shortlex_less(ExtWord const& u, ExtWord const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  std::string render(Alphabet const& alphabet, ExtWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : w) {
      out += alphabet.name(s.base);
      if (s.starred) {
        out += '+';
      }
    }
    return out;
  }

  namespace {
    struct Span {
      std::size_t first;
      std::size_t last;
      std::size_t count;
    };

    std::unordered_map<std::size_t, Span> spans(ExtWord const& w) {
      std::unordered_map<std::size_t, Span> out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto [it, fresh] = out.try_emplace(index_of(w[i].base), Span{i, i, 0});
        it->second.last = i;
        ++it->second.count;
      }
      return out;
    }

    void require_rewritable(CongruenceKind const& kind) {
      if (!kind.is_rewritable()) {
        throw UnsupportedKindError("no rewriting system for " + kind.name());
      }
    }
  }  // namespace

  std::vector<Redex> redexes(CongruenceKind const& kind, ExtWord const& w) {
    using Tag = CongruenceKind::Tag;
    require_rewritable(kind);
    std::vector<Redex> out;
    if (kind.tag() == Tag::trivial) {
      return out;
    }
    auto const where = spans(w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const& s = w[i];
      if (!s.starred) {
        auto const& sp = where.at(index_of(s.base));
        bool        ok = false;
        switch (kind.tag()) {
          case Tag::tau1:
            ok = true;
            break;
          case Tag::gamma:
            ok = sp.count > 1;
            break;
          case Tag::lambda:
            ok = sp.first < i;
            break;
          case Tag::rho:
            ok = sp.last > i;
            break;
          default:
            break;
        }
        if (ok) {
          out.push_back({i, Rule::star});
        }
      }
      if (i + 1 < w.size() && w[i + 1].base == s.base) {
        auto const& t = w[i + 1];
        if (s.starred && t.starred) {
          out.push_back({i, Rule::merge_star_star});
        } else if (!s.starred && t.starred) {
          out.push_back({i, Rule::merge_plain_star});
        } else if (s.starred && !t.starred) {
          out.push_back({i, Rule::merge_star_plain});
        }
      }
    }
    return out;
  }

  ExtWord apply_redex(ExtWord w, Redex const& r) {
    if (r.rule == Rule::star) {
      w.at(r.position).starred = true;
      return w;
    }
    if (r.position + 1 >= w.size()) {
      throw Error("redex out of range");
    }
    // Every merge leaves a single starred symbol in place of the pair.
    w[r.position].starred = true;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(r.position) + 1);
    return w;
  }

  bool is_reduced(CongruenceKind const& kind, ExtWord const& w) {
    return redexes(kind, w).empty();
  }

  ExtWord normal_form(CongruenceKind const& kind, ExtWord w) {
    return normal_form_with(
        kind, std::move(w), [](std::vector<Redex> const&) { return 0; });
  }

  ExtWord normal_form_with(
      CongruenceKind const&                                          kind,
      ExtWord                                                        w,
      std::function<std::size_t(std::vector<Redex> const&)> const& choose) {
    // Each step either stars a symbol or shortens the word, so at most
    // 2|w| steps are taken.
    for (auto r = redexes(kind, w); !r.empty(); r = redexes(kind, w)) {
      w = apply_redex(std::move(w), r.at(choose(r)));
    }
    return w;
  }

  ExtWord canonical(CongruenceKind const& kind, Word const& w) {
    return normal_form(kind, embed(w));
  }

  ExtWord diamond(CongruenceKind const& kind,
                  ExtWord const&        u,
                  ExtWord const&        v) {
    ExtWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    return normal_form(kind, std::move(uv));
  }

}  // namespace mtau
