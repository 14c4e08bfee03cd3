#include "mtau/finite_monoid.hpp"

#include <random>
#include <set>

#include "mtau/error.hpp"

namespace mtau {

  FiniteSemigroup::FiniteSemigroup(std::vector<std::string> labels,
                                   std::vector<Index>       table,
                                   std::optional<Index>     zero,
                                   std::string              provenance)
      : _labels(std::move(labels)),
        _table(std::move(table)),
        _zero(zero),
        _provenance(std::move(provenance)) {
    auto const n = _labels.size();
    if (n == 0) {
      throw Error("a semigroup needs at least one element");
    }
    if (_table.size() != n * n) {
      throw Error("Cayley table has " + std::to_string(_table.size())
                  + " entries, expected " + std::to_string(n * n));
    }
    for (Index v : _table) {
      if (v >= n) {
        throw Error("Cayley table entry " + std::to_string(v)
                    + " out of range");
      }
    }
    std::set<std::string> seen(_labels.begin(), _labels.end());
    if (seen.size() != n) {
      throw Error("element labels must be distinct");
    }
    if (_zero) {
      if (*_zero >= n) {
        throw Error("zero index out of range");
      }
      for (Index i = 0; i < n; ++i) {
        if (product(i, *_zero) != *_zero || product(*_zero, i) != *_zero) {
          throw Error("element '" + _labels[*_zero] + "' is not a zero");
        }
      }
    }
  }

  std::optional<Index> FiniteSemigroup::find(std::string_view label) const {
    for (Index i = 0; i < size(); ++i) {
      if (_labels[i] == label) {
        return i;
      }
    }
    return std::nullopt;
  }

  Index FiniteSemigroup::at(std::string_view label) const {
    if (auto i = find(label)) {
      return *i;
    }
    throw Error("no element labelled '" + std::string(label) + "'");
  }

  std::optional<Index> FiniteSemigroup::find_identity() const {
    for (Index e = 0; e < size(); ++e) {
      bool ok = true;
      for (Index i = 0; i < size() && ok; ++i) {
        ok = product(e, i) == i && product(i, e) == i;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  FiniteMonoid::FiniteMonoid(std::vector<std::string> labels,
                             std::vector<Index>       table,
                             Index                    identity,
                             std::optional<Index>     zero,
                             std::string              provenance)
      : FiniteSemigroup(std::move(labels),
                        std::move(table),
                        zero,
                        std::move(provenance)),
        _identity(identity) {
    if (identity >= size()) {
      throw Error("identity index out of range");
    }
    for (Index i = 0; i < size(); ++i) {
      if (product(identity, i) != i || product(i, identity) != i) {
        throw Error("element '" + label(identity) + "' is not an identity");
      }
    }
  }

  FiniteMonoid FiniteMonoid::from_semigroup(FiniteSemigroup const& s) {
    auto e = s.find_identity();
    if (!e) {
      throw Error("semigroup has no identity element");
    }
    return FiniteMonoid(s.labels(), s.table(), *e, s.zero(), s.provenance());
  }

  bool is_associative(FiniteSemigroup const& s,
                      std::size_t            samples,
                      std::uint64_t          seed) {
    auto const n = static_cast<Index>(s.size());
    auto assoc   = [&](Index a, Index b, Index c) {
      return s.product(s.product(a, b), c) == s.product(a, s.product(b, c));
    };
    if (n <= 128) {
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          for (Index c = 0; c < n; ++c) {
            if (!assoc(a, b, c)) {
              return false;
            }
          }
        }
      }
      return true;
    }
    std::mt19937_64                      rng(seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) {
        return false;
      }
    }
    return true;
  }

  std::vector<Index> idempotents(FiniteSemigroup const& s) {
    std::vector<Index> out;
    for (Index i = 0; i < s.size(); ++i) {
      if (s.product(i, i) == i) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<bool> principal_ideal(FiniteMonoid const& m, Index x) {
    auto const        n = m.size();
    std::vector<bool> left(n, false), out(n, false);
    for (Index p = 0; p < n; ++p) {
      left[m.product(p, x)] = true;
    }
    for (Index y = 0; y < n; ++y) {
      if (left[y]) {
        for (Index s = 0; s < n; ++s) {
          out[m.product(y, s)] = true;
        }
      }
    }
    return out;
  }

  bool is_j_trivial(FiniteMonoid const& m) {
    std::set<std::vector<bool>> ideals;
    for (Index x = 0; x < m.size(); ++x) {
      if (!ideals.insert(principal_ideal(m, x)).second) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::pair<Index, Index>> j_order_covers(FiniteMonoid const& m) {
    auto const                     n = m.size();
    std::vector<std::vector<bool>> ideal;
    for (Index x = 0; x < n; ++x) {
      ideal.push_back(principal_ideal(m, x));
    }
    // below(x, y): x < y strictly, i.e. x in MyM and the ideals differ.
    auto below = [&](Index x, Index y) {
      return x != y && ideal[y][x] && ideal[x] != ideal[y];
    };
    std::vector<std::pair<Index, Index>> covers;
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (!below(x, y)) {
          continue;
        }
        bool direct = true;
        for (Index z = 0; z < n && direct; ++z) {
          direct = !(below(x, z) && below(z, y));
        }
        if (direct) {
          covers.emplace_back(x, y);
        }
      }
    }
    return covers;
  }

}  // namespace mtau
