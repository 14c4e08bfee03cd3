#include "mtau/tau_order.hpp"

#include <algorithm>
#include <set>

#include "mtau/error.hpp"

namespace mtau {

  TauWord::TauWord(CongruenceKind kind, ExtWord canon)
      : _kind(std::move(kind)), _canon(std::move(canon)) {
    if (!is_reduced(_kind, _canon)) {
      throw Error("word is not reduced for " + _kind.name());
    }
    if (_kind.tag() == CongruenceKind::Tag::trivial
        && std::any_of(_canon.begin(), _canon.end(), [](auto const& s) {
             return s.starred;
           })) {
      throw Error("starred symbols are meaningless for t0");
    }
  }

  TauWordSet::TauWordSet(CongruenceKind kind, std::vector<ExtWord> members)
      : _kind(std::move(kind)) {
    for (auto& m : members) {
      insert(TauWord(_kind, std::move(m)));
    }
  }

  void TauWordSet::insert(TauWord const& w) {
    if (!(w.kind() == _kind)) {
      throw KindMismatchError("cannot add a " + w.kind().name()
                              + "-word to a set of " + _kind.name()
                              + "-words");
    }
    insert_canon(w.canon());
  }

  void TauWordSet::insert_canon(ExtWord w) {
    auto it = std::lower_bound(_members.begin(),
                               _members.end(),
                               w,
                               [](auto const& a, auto const& b) {
                                 return shortlex_less(a, b);
                               });
    if (it == _members.end() || *it != w) {
      _members.insert(it, std::move(w));
    }
  }

  bool TauWordSet::contains(ExtWord const& canon) const {
    return std::binary_search(
        _members.begin(),
        _members.end(),
        canon,
        [](auto const& a, auto const& b) { return shortlex_less(a, b); });
  }

  bool TauWordSet::contains(TauWord const& w) const {
    return w.kind() == _kind && contains(w.canon());
  }

  namespace {
    template <typename WordT>
    std::vector<WordT> factors(WordT const& u) {
      std::vector<WordT> out;
      for (std::size_t i = 0; i <= u.size(); ++i) {
        for (std::size_t j = i; j <= u.size(); ++j) {
          out.emplace_back(u.begin() + i, u.begin() + j);
        }
      }
      return out;
    }
  }  // namespace

  TauWordSet closure(TauWordSet const& w) {
    using Tag = CongruenceKind::Tag;
    auto const& kind = w.kind();
    if (!kind.is_rewritable()) {
      throw UnsupportedKindError("no finite closure for " + kind.name());
    }
    std::set<ExtWord> found;
    for (auto const& u : w.members()) {
      switch (kind.tag()) {
        case Tag::trivial:
        case Tag::tau1:
          // Factors of a reduced word are reduced here: trivial words carry
          // no stars, and tau1 words are all-starred with distinct neighbours.
          for (auto& f : factors(u)) {
            found.insert(normal_form(kind, std::move(f)));
          }
          break;
        case Tag::gamma:
        case Tag::lambda:
        case Tag::rho:
          for (auto const& k : class_representatives(kind, representative(u))) {
            for (auto const& f : factors(k)) {
              found.insert(canonical(kind, f));
            }
          }
          break;
        default:
          throw UnsupportedKindError("no finite closure for " + kind.name());
      }
    }
    return TauWordSet(kind, {found.begin(), found.end()});
  }

  bool leq(TauWord const& v, TauWord const& u) {
    if (!(v.kind() == u.kind())) {
      throw KindMismatchError("cannot compare a " + v.kind().name()
                              + "-word with a " + u.kind().name() + "-word");
    }
    TauWordSet single(u.kind());
    single.insert(u);
    return closure(single).contains(v.canon());
  }

}  // namespace mtau
