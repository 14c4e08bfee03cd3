#include "mtau/congruence.hpp"

#include <algorithm>
#include <map>

#include "mtau/error.hpp"

namespace mtau {

  CongruenceKind CongruenceKind::tau1_meet_lambda_k(std::size_t k) {
    if (k == 0) {
      throw Error("lambda_k requires k >= 1");
    }
    return CongruenceKind(Tag::tau1_meet_lambda_k, k);
  }

  CongruenceKind CongruenceKind::tau1_meet_rho_k(std::size_t k) {
    if (k == 0) {
      throw Error("rho_k requires k >= 1");
    }
    return CongruenceKind(Tag::tau1_meet_rho_k, k);
  }

  CongruenceKind CongruenceKind::meet(std::vector<CongruenceKind> members) {
    if (members.empty()) {
      throw Error("a meet needs at least one member");
    }
    CongruenceKind k(Tag::meet);
    k._members = std::move(members);
    return k;
  }

  bool CongruenceKind::is_rewritable() const noexcept {
    switch (_tag) {
      case Tag::trivial:
      case Tag::tau1:
      case Tag::gamma:
      case Tag::lambda:
      case Tag::rho:
        return true;
      default:
        return false;
    }
  }

  std::string CongruenceKind::name() const {
    switch (_tag) {
      case Tag::trivial:
        return "t0";
      case Tag::tau1:
        return "t1";
      case Tag::tau_m:
        return "taum:" + std::to_string(_parameter);
      case Tag::gamma_k:
        return "gammak:" + std::to_string(_parameter);
      case Tag::gamma:
        return "gamma";
      case Tag::lambda:
        return "lambda";
      case Tag::rho:
        return "rho";
      case Tag::tau1_meet_lambda_k:
        return "lambdak:" + std::to_string(_parameter);
      case Tag::tau1_meet_rho_k:
        return "rhok:" + std::to_string(_parameter);
      case Tag::meet: {
        std::string out = "meet(";
        for (std::size_t i = 0; i < _members.size(); ++i) {
          out += (i == 0 ? "" : ",") + _members[i].name();
        }
        return out + ")";
      }
    }
    return "?";
  }

  namespace {
    using Positions = std::map<Letter, std::vector<std::size_t>>;

    Positions positions(Word const& w) {
      Positions p;
      for (std::size_t i = 0; i < w.size(); ++i) {
        p[w[i]].push_back(i);
      }
      return p;
    }

    // Occurrences i and i+1 (1-based) of x exist and are adjacent.
    bool adjacent(Positions const& p, Letter x, std::size_t i) {
      auto it = p.find(x);
      if (it == p.end() || it->second.size() <= i) {
        return false;
      }
      return it->second[i] == it->second[i - 1] + 1;
    }

    bool tau1_related(Word const& u, Word const& v) {
      return skeleton(u) == skeleton(v);
    }

    bool tau_m_related(Word const& u, Word const& v, std::size_t m) {
      auto iu = islands(u);
      auto iv = islands(v);
      if (iu.size() != iv.size()) {
        return false;
      }
      for (std::size_t i = 0; i < iu.size(); ++i) {
        if (iu[i].letter != iv[i].letter) {
          return false;
        }
        auto p = iu[i].exponent, q = iv[i].exponent;
        if (m == 0 ? p != q : (p % m) != (q % m)) {
          return false;
        }
      }
      return true;
    }

    bool gamma_k_related(Word const& u, Word const& v, std::size_t k) {
      auto pu = occurrence_profile(u, k);
      auto pv = occurrence_profile(v, k);
      return pu.all == pv.all && pu.counts == pv.counts;
    }

    bool gamma_related(Word const& u, Word const& v) {
      return tau1_related(u, v) && content(u).multiple == content(v).multiple;
    }

    // First two occurrences of every multiple letter adjacent alike.
    bool first_two_agree(Word const& u, Word const& v) {
      auto pu = positions(u);
      auto pv = positions(v);
      for (Letter x : content(u).multiple) {
        if (adjacent(pu, x, 1) != adjacent(pv, x, 1)) {
          return false;
        }
      }
      return true;
    }

    bool lambda_k_agree(Word const& u, Word const& v, std::size_t k) {
      auto pu = positions(u);
      auto pv = positions(v);
      for (auto const& [x, _] : pu) {
        for (std::size_t i = 1; i <= k; ++i) {
          if (adjacent(pu, x, i) != adjacent(pv, x, i)) {
            return false;
          }
        }
      }
      for (auto const& [x, _] : pv) {
        for (std::size_t i = 1; i <= k; ++i) {
          if (adjacent(pu, x, i) != adjacent(pv, x, i)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool related(CongruenceKind const& kind, Word const& u, Word const& v) {
    using Tag = CongruenceKind::Tag;
    switch (kind.tag()) {
      case Tag::trivial:
        return u == v;
      case Tag::tau1:
        return tau1_related(u, v);
      case Tag::tau_m:
        return tau_m_related(u, v, kind.parameter());
      case Tag::gamma_k:
        return gamma_k_related(u, v, kind.parameter());
      case Tag::gamma:
        return gamma_related(u, v);
      case Tag::lambda:
        return gamma_related(u, v) && first_two_agree(u, v);
      case Tag::rho:
        return gamma_related(u, v)
               && first_two_agree(reverse(u), reverse(v));
      case Tag::tau1_meet_lambda_k:
        return tau1_related(u, v) && lambda_k_agree(u, v, kind.parameter());
      case Tag::tau1_meet_rho_k:
        return tau1_related(u, v)
               && lambda_k_agree(reverse(u), reverse(v), kind.parameter());
      case Tag::meet:
        return std::all_of(kind.members().begin(),
                           kind.members().end(),
                           [&](auto const& m) { return related(m, u, v); });
    }
    return false;
  }

  std::vector<Word> class_representatives(CongruenceKind const& kind,
                                          Word const&           u) {
    using Tag = CongruenceKind::Tag;
    if (kind.tag() != Tag::gamma && kind.tag() != Tag::lambda
        && kind.tag() != Tag::rho) {
      throw UnsupportedKindError("K-sets are defined for gamma, lambda and rho "
                                 "only, not "
                                 + kind.name());
    }
    auto skel = islands(u);
    if (skel.size() >= 8 * sizeof(std::size_t) - 1) {
      throw Error("word has too many islands for K-set enumeration");
    }
    std::vector<Word> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << skel.size());
         ++mask) {
      auto d = skel;
      for (std::size_t i = 0; i < d.size(); ++i) {
        d[i].exponent = ((mask >> i) & 1) != 0 ? 2 : 1;
      }
      auto w = expand(d);
      if (related(kind, w, u)) {
        out.push_back(std::move(w));
      }
    }
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }

}  // namespace mtau
