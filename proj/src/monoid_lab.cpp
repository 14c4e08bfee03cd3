#include "mtau/monoid_lab.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "mtau/error.hpp"
#include "mtau/notation.hpp"

namespace mtau {

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  bool Presentation::has_zero() const {
    return std::any_of(relations.begin(), relations.end(), [](auto const& r) {
      return !r.rhs.has_value();
    });
  }

  namespace {
    std::string_view trim(std::string_view s) {
      auto const ws = " \t\r\n";
      auto       b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      return s.substr(b, s.find_last_not_of(ws) - b + 1);
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (true) {
        auto end = s.find(sep, start);
        out.push_back(s.substr(start, end - start));
        if (end == std::string_view::npos) {
          return out;
        }
        start = end + 1;
      }
    }
  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    Presentation p;
    bool         have_generators = false;
    std::size_t  line_no         = 0;
    for (auto raw : split(text, '\n')) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      auto line = trim(raw);
      if (line.empty()) {
        continue;
      }
      auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
      if (!have_generators) {
        std::string names(line);
        std::replace(names.begin(), names.end(), ',', ' ');
        std::istringstream in(names);
        for (std::string name; in >> name;) {
          if (name == "1") {
            p.with_identity = true;
          } else if (!Alphabet::valid_name(name)) {
            throw SyntaxError(where() + "bad generator name '" + name + "'");
          } else if (p.generators.contains(name)) {
            throw SyntaxError(where() + "generator '" + name
                              + "' declared twice");
          } else {
            p.generators.intern(name);
          }
        }
        have_generators = true;
        continue;
      }
      auto sides = split(line, '=');
      if (sides.size() < 2) {
        throw SyntaxError(where() + "expected a relation u=v");
      }
      std::vector<std::optional<Word>> words;
      for (auto side : sides) {
        side = trim(side);
        if (side == "0") {
          words.emplace_back(std::nullopt);
          continue;
        }
        // Parse against a copy so undeclared letters are caught.
        Alphabet scratch = p.generators;
        Word     w;
        try {
          w = parse_word(side, scratch);
        } catch (SyntaxError const& e) {
          throw SyntaxError(where() + e.what());
        }
        if (scratch.size() != p.generators.size()) {
          throw SyntaxError(where() + "undeclared generator in '"
                            + std::string(side) + "'");
        }
        if (w.empty() && !p.with_identity) {
          throw SyntaxError(where()
                            + "1 used in a semigroup presentation");
        }
        words.emplace_back(std::move(w));
      }
      for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        auto const& u = words[i];
        auto const& v = words[i + 1];
        if (!u && !v) {
          continue;
        }
        if (u) {
          p.relations.push_back({*u, v});
        } else {
          p.relations.push_back({*v, u});
        }
      }
    }
    if (!have_generators) {
      throw SyntaxError("presentation has no generators line");
    }
    return p;
  }

  namespace {
    // Shortlex Knuth-Bendix completion over letters 0..n-1.
    class Completion {
     public:
      explicit Completion(CompletionLimits limits) : _limits(limits) {}

      void add(Word u, Word v) {
        _pending.emplace_back(std::move(u), std::move(v));
      }

      void run() {
        std::size_t rounds = 0;
        while (true) {
          drain();
          if (++rounds > 4 * _limits.max_rules) {
            throw CapExceededError("completion did not terminate");
          }
          for (std::size_t i = 0; i < _rules.size(); ++i) {
            for (std::size_t j = 0; j < _rules.size(); ++j) {
              critical_pairs(_rules[i], _rules[j]);
            }
          }
          bool quiet = true;
          for (auto& [u, v] : _pending) {
            u = reduce(u);
            v = reduce(v);
            quiet = quiet && u == v;
          }
          if (quiet) {
            _pending.clear();
            return;
          }
        }
      }

      Word reduce(Word w) const {
        bool changed = true;
        while (changed) {
          changed = false;
          for (auto const& [lhs, rhs] : _rules) {
            auto it = std::search(w.begin(), w.end(), lhs.begin(), lhs.end());
            if (it != w.end()) {
              auto pos = it - w.begin();
              w.erase(it, it + lhs.size());
              w.insert(w.begin() + pos, rhs.begin(), rhs.end());
              changed = true;
              break;
            }
          }
        }
        return w;
      }

      bool irreducible(Word const& w) const {
        for (auto const& rule : _rules) {
          if (std::search(w.begin(), w.end(), rule.first.begin(),
                          rule.first.end())
              != w.end()) {
            return false;
          }
        }
        return true;
      }

     private:
      void drain() {
        while (!_pending.empty()) {
          auto [u, v] = std::move(_pending.front());
          _pending.pop_front();
          u = reduce(std::move(u));
          v = reduce(std::move(v));
          if (u == v) {
            continue;
          }
          if (shortlex_less(u, v)) {
            std::swap(u, v);
          }
          if (u.size() > _limits.max_rule_length) {
            throw CapExceededError("rule of length "
                                   + std::to_string(u.size())
                                   + " exceeds the length cap");
          }
          std::vector<std::pair<Word, Word>> kept;
          for (auto& rule : _rules) {
            if (std::search(rule.first.begin(), rule.first.end(), u.begin(),
                            u.end())
                != rule.first.end()) {
              _pending.push_back(std::move(rule));
            } else {
              kept.push_back(std::move(rule));
            }
          }
          _rules = std::move(kept);
          _rules.emplace_back(std::move(u), std::move(v));
          for (auto& rule : _rules) {
            rule.second = reduce(std::move(rule.second));
          }
          if (_rules.size() > _limits.max_rules) {
            throw CapExceededError("more than "
                                   + std::to_string(_limits.max_rules)
                                   + " rewriting rules");
          }
        }
      }

      void critical_pairs(std::pair<Word, Word> const& r1,
                          std::pair<Word, Word> const& r2) {
        auto const& l1 = r1.first;
        auto const& l2 = r2.first;
        // Suffix of l1 equal to a prefix of l2.
        for (std::size_t k = 1; k < std::min(l1.size(), l2.size()) + 1; ++k) {
          if (k == l1.size() && k == l2.size()) {
            break;
          }
          if (!std::equal(l1.end() - k, l1.end(), l2.begin())) {
            continue;
          }
          Word a = r1.second;
          a.insert(a.end(), l2.begin() + k, l2.end());
          Word b(l1.begin(), l1.end() - k);
          b.insert(b.end(), r2.second.begin(), r2.second.end());
          a = reduce(std::move(a));
          b = reduce(std::move(b));
          if (a != b) {
            _pending.emplace_back(std::move(a), std::move(b));
          }
        }
      }

      CompletionLimits                  _limits;
      std::vector<std::pair<Word, Word>> _rules;
      std::deque<std::pair<Word, Word>>  _pending;
    };
  }  // namespace

  FiniteSemigroup from_presentation(Presentation const& p,
                                    std::size_t         cap,
                                    CompletionLimits    limits) {
    if (cap == 0) {
      throw Error("element cap must be positive");
    }
    auto const ngens    = p.generators.size();
    bool const has_zero = p.has_zero();
    auto const nletters = ngens + (has_zero ? 1 : 0);
    Letter const z      = letter(ngens);

    Completion kb(limits);
    for (auto const& r : p.relations) {
      kb.add(r.lhs, r.rhs ? *r.rhs : Word{z});
    }
    if (has_zero) {
      kb.add({z, z}, {z});
      for (std::size_t i = 0; i < ngens; ++i) {
        kb.add({z, letter(i)}, {z});
        kb.add({letter(i), z}, {z});
      }
    }
    kb.run();

    // Irreducible words in shortlex order; irreducible words are closed
    // under taking factors, so extending irreducible words is enough.
    std::vector<Word> elements;
    std::deque<Word>  queue;
    if (p.with_identity) {
      elements.push_back({});
    }
    queue.push_back({});
    while (!queue.empty()) {
      auto w = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i < nletters; ++i) {
        Word wx = w;
        wx.push_back(letter(i));
        if (!kb.irreducible(wx)) {
          continue;
        }
        elements.push_back(wx);
        if (elements.size() > cap) {
          throw CapExceededError("presentation has more than "
                                 + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(wx));
      }
    }
    if (elements.empty()) {
      throw Error("presentation defines an empty semigroup");
    }

    std::optional<Index> zero;
    if (has_zero) {
      auto zw = kb.reduce({z});
      auto it = std::find(elements.begin(), elements.end(), zw);
      std::rotate(it, it + 1, elements.end());
      zero = static_cast<Index>(elements.size() - 1);
    }

    std::map<Word, Index>    where;
    std::vector<std::string> labels;
    for (Index i = 0; i < elements.size(); ++i) {
      where.emplace(elements[i], i);
      labels.push_back(zero == i ? "0" : render(p.generators, elements[i]));
    }
    auto const         n = elements.size();
    std::vector<Index> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Word w = elements[i];
        w.insert(w.end(), elements[j].begin(), elements[j].end());
        table[i * n + j] = where.at(kb.reduce(std::move(w)));
      }
    }

    std::string provenance = "<";
    for (std::size_t i = 0; i < ngens; ++i) {
      provenance += (i == 0 ? "" : ",") + p.generators.name(letter(i));
    }
    provenance += " | " + std::to_string(p.relations.size()) + " relations>";
    return FiniteSemigroup(std::move(labels), std::move(table), zero,
                           std::move(provenance));
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid adjoin_identity(FiniteSemigroup const& s) {
    std::string one = "1";
    while (s.find(one)) {
      one += "'";
    }
    auto const               n = s.size() + 1;
    std::vector<std::string> labels{one};
    labels.insert(labels.end(), s.labels().begin(), s.labels().end());
    std::vector<Index> table(n * n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        table[i * n + j] = i == 0   ? j
                           : j == 0 ? i
                                    : s.product(i - 1, j - 1) + 1;
      }
    }
    std::optional<Index> zero;
    if (s.zero()) {
      zero = *s.zero() + 1;
    }
    return FiniteMonoid(std::move(labels), std::move(table), 0, zero,
                        s.provenance() + "^1");
  }

  FiniteMonoid direct_product(FiniteMonoid const& m1, FiniteMonoid const& m2) {
    auto const               n1 = m1.size(), n2 = m2.size(), n = n1 * n2;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Index i = 0; i < n1; ++i) {
      for (Index j = 0; j < n2; ++j) {
        labels.push_back("(" + m1.label(i) + "," + m2.label(j) + ")");
      }
    }
    std::vector<Index> table(n * n);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        table[x * n + y] = m1.product(x / n2, y / n2) * n2
                           + m2.product(x % n2, y % n2);
      }
    }
    auto                 pair = [&](Index i, Index j) { return i * n2 + j; };
    std::optional<Index> zero;
    if (m1.zero() && m2.zero()) {
      zero = pair(*m1.zero(), *m2.zero());
    }
    return FiniteMonoid(std::move(labels), std::move(table),
                        pair(m1.identity(), m2.identity()), zero,
                        m1.provenance() + " x " + m2.provenance());
  }

  FiniteMonoid dual(FiniteMonoid const& m) {
    auto const         n = m.size();
    std::vector<Index> table(n * n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        table[i * n + j] = m.product(j, i);
      }
    }
    std::string provenance = m.provenance();
    if (provenance.starts_with("dual(") && provenance.ends_with(")")) {
      provenance = provenance.substr(5, provenance.size() - 6);
    } else {
      provenance = "dual(" + provenance + ")";
    }
    return FiniteMonoid(m.labels(), std::move(table), m.identity(), m.zero(),
                        std::move(provenance));
  }

  bool Morphism::injective() const {
    auto sorted = map;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  bool Morphism::surjective(std::size_t target_size) const {
    std::vector<bool> hit(target_size, false);
    for (Index y : map) {
      if (y < target_size) {
        hit[y] = true;
      }
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool is_homomorphism(FiniteMonoid const& source,
                       FiniteMonoid const& target,
                       Morphism const&     f) {
    if (f.map.size() != source.size()) {
      return false;
    }
    for (Index y : f.map) {
      if (y >= target.size()) {
        return false;
      }
    }
    if (f.map[source.identity()] != target.identity()) {
      return false;
    }
    for (Index i = 0; i < source.size(); ++i) {
      for (Index j = 0; j < source.size(); ++j) {
        if (f.map[source.product(i, j)]
            != target.product(f.map[i], f.map[j])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    // Restriction of m to the sorted index set `keep`, which must be closed
    // under products and contain the identity.
    FiniteMonoid restrict_to(FiniteMonoid const&       m,
                             std::vector<Index> const& keep,
                             std::string               provenance) {
      std::vector<Index> position(m.size(), 0);
      for (Index i = 0; i < keep.size(); ++i) {
        position[keep[i]] = i;
      }
      auto const               n = keep.size();
      std::vector<std::string> labels;
      std::vector<Index>       table(n * n);
      for (Index i = 0; i < n; ++i) {
        labels.push_back(m.label(keep[i]));
        for (Index j = 0; j < n; ++j) {
          table[i * n + j] = position[m.product(keep[i], keep[j])];
        }
      }
      std::optional<Index> zero;
      if (m.zero() && std::binary_search(keep.begin(), keep.end(), *m.zero())) {
        zero = position[*m.zero()];
      }
      return FiniteMonoid(std::move(labels), std::move(table),
                          position[m.identity()], zero, std::move(provenance));
    }
  }  // namespace

  Submonoid submonoid(FiniteMonoid const& m, std::vector<Index> const& gens) {
    if (gens.empty()) {
      throw Error("submonoid needs at least one generator");
    }
    std::vector<bool> in(m.size(), false);
    std::deque<Index> queue{m.identity()};
    in[m.identity()] = true;
    for (Index g : gens) {
      if (g >= m.size()) {
        throw Error("generator index out of range");
      }
    }
    while (!queue.empty()) {
      Index x = queue.front();
      queue.pop_front();
      for (Index g : gens) {
        Index y = m.product(x, g);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::vector<Index> keep;
    for (Index i = 0; i < m.size(); ++i) {
      if (in[i]) {
        keep.push_back(i);
      }
    }
    std::string provenance = m.provenance() + "{";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      provenance += (i == 0 ? "" : ",") + m.label(gens[i]);
    }
    provenance += "}";
    auto sub = restrict_to(m, keep, std::move(provenance));
    return {std::move(sub), Morphism{std::move(keep)}};
  }

  Submonoid submonoid(FiniteMonoid const&             m,
                      std::vector<std::string> const& gens) {
    std::vector<Index> idx;
    for (auto const& g : gens) {
      idx.push_back(m.at(g));
    }
    return submonoid(m, idx);
  }

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), Index(0));
      }
      Index find(Index x) {
        while (_parent[x] != x) {
          x = _parent[x] = _parent[_parent[x]];
        }
        return x;
      }
      // Keeps the smaller root, so each class is rooted at its first member.
      bool unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        return true;
      }

     private:
      std::vector<Index> _parent;
    };

    struct Partition {
      std::vector<Index> roots;  // first member of each class
      std::vector<Index> cls;    // element -> class index
    };

    Partition partition(UnionFind& uf, Index n) {
      Partition p;
      p.cls.resize(n);
      for (Index a = 0; a < n; ++a) {
        if (uf.find(a) == a) {
          p.roots.push_back(a);
        }
      }
      for (Index a = 0; a < n; ++a) {
        p.cls[a] = static_cast<Index>(
            std::lower_bound(p.roots.begin(), p.roots.end(), uf.find(a))
            - p.roots.begin());
      }
      return p;
    }

    UnionFind unite_pairs(FiniteMonoid const&                         m,
                          std::vector<std::pair<Index, Index>> const& pairs) {
      UnionFind uf(m.size());
      for (auto [a, b] : pairs) {
        if (a >= m.size() || b >= m.size()) {
          throw Error("identified pair index out of range");
        }
        uf.unite(a, b);
      }
      return uf;
    }

    std::string pairs_suffix(FiniteMonoid const&                         m,
                             std::vector<std::pair<Index, Index>> const& pairs) {
      std::string out = "/{";
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        out += (i == 0 ? "" : ";") + m.label(pairs[i].first) + "="
               + m.label(pairs[i].second);
      }
      return out + "}";
    }
  }  // namespace

  Quotient quotient_identify(FiniteMonoid const&                        m,
                             std::vector<std::pair<Index, Index>> const& pairs) {
    auto const n  = static_cast<Index>(m.size());
    UnionFind  uf = unite_pairs(m, pairs);
    bool changed = true;
    while (changed) {
      changed = false;
      for (Index a = 0; a < n; ++a) {
        Index r = uf.find(a);
        if (r == a) {
          continue;
        }
        for (Index s = 0; s < n; ++s) {
          changed |= uf.unite(m.product(a, s), m.product(r, s));
          changed |= uf.unite(m.product(s, a), m.product(s, r));
        }
      }
    }
    auto [roots, cls] = partition(uf, n);
    auto const               k = roots.size();
    std::vector<std::string> labels;
    std::vector<Index>       table(k * k);
    for (Index i = 0; i < k; ++i) {
      labels.push_back(m.label(roots[i]));
      for (Index j = 0; j < k; ++j) {
        table[i * k + j] = cls[m.product(roots[i], roots[j])];
      }
    }
    std::optional<Index> zero;
    if (m.zero()) {
      zero = cls[*m.zero()];
    }
    return {FiniteMonoid(std::move(labels), std::move(table),
                         cls[m.identity()], zero,
                         m.provenance() + pairs_suffix(m, pairs)),
            Morphism{std::move(cls)}};
  }

  Quotient merge_identify(FiniteMonoid const&                        m,
                          std::vector<std::pair<Index, Index>> const& pairs) {
    if (!m.zero()) {
      throw Error("merge_identify needs a monoid with zero");
    }
    auto const n    = static_cast<Index>(m.size());
    Index const z   = *m.zero();
    UnionFind   uf  = unite_pairs(m, pairs);
    auto [roots, cls] = partition(uf, n);
    if (std::count(cls.begin(), cls.end(), cls[z]) != 1) {
      throw Error("merge_identify cannot merge the zero");
    }
    auto const               k = roots.size();
    std::vector<std::string> labels;
    for (Index r : roots) {
      labels.push_back(m.label(r));
    }
    std::vector<Index> table(k * k, cls[z]);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Index const p = m.product(a, b);
        if (p == z) {
          continue;
        }
        Index& cell = table[cls[a] * k + cls[b]];
        if (cell != cls[z] && cell != cls[p]) {
          throw Error("merge_identify: " + labels[cls[a]] + " * "
                      + labels[cls[b]] + " has two nonzero values");
        }
        cell = cls[p];
      }
    }
    Quotient q{FiniteMonoid(std::move(labels), std::move(table),
                            cls[m.identity()], cls[z],
                            m.provenance() + pairs_suffix(m, pairs)),
               Morphism{std::move(cls)}};
    if (!is_associative(q.monoid)) {
      throw Error("merge_identify: the merged table is not associative");
    }
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Signature = std::vector<std::size_t>;

    std::vector<Signature> signatures(FiniteMonoid const& m) {
      auto const             n = m.size();
      std::vector<Signature> out(n);
      std::vector<std::size_t> square_roots(n, 0);
      for (Index y = 0; y < n; ++y) {
        ++square_roots[m.product(y, y)];
      }
      for (Index x = 0; x < n; ++x) {
        Signature& s = out[x];
        s.push_back(x == m.identity());
        s.push_back(m.zero() == x);
        s.push_back(m.product(x, x) == x);
        // Index and period of the cyclic subsemigroup generated by x.
        std::vector<std::size_t> seen(n, 0);
        Index                    p = x;
        std::size_t              k = 1;
        while (seen[p] == 0) {
          seen[p] = k++;
          p       = m.product(p, x);
        }
        s.push_back(seen[p]);
        s.push_back(k - seen[p]);
        std::vector<bool> right(n, false), left(n, false);
        for (Index y = 0; y < n; ++y) {
          right[m.product(x, y)] = true;
          left[m.product(y, x)]  = true;
        }
        s.push_back(std::count(right.begin(), right.end(), true));
        s.push_back(std::count(left.begin(), left.end(), true));
        s.push_back(square_roots[x]);
        if (n <= 256) {
          auto ideal = principal_ideal(m, x);
          s.push_back(std::count(ideal.begin(), ideal.end(), true));
        }
      }
      return out;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteMonoid const& a, FiniteMonoid const& b)
          : _a(a), _b(b), _sa(signatures(a)), _sb(signatures(b)) {}

      std::optional<Morphism> run() {
        if (_a.size() != _b.size()) {
          return std::nullopt;
        }
        auto ma = _sa, mb = _sb;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) {
          return std::nullopt;
        }
        choose_generators();
        _map.assign(_a.size(), kUnset);
        _inv.assign(_b.size(), kUnset);
        if (!search(0)) {
          return std::nullopt;
        }
        Morphism f{_map};
        if (!is_homomorphism(_a, _b, f)) {
          return std::nullopt;  // unreachable if the extension is sound
        }
        return f;
      }

     private:
      static constexpr Index kUnset = static_cast<Index>(-1);

      // Greedy: elements high in the J-order first, each kept if not yet
      // generated by the earlier ones.
      void choose_generators() {
        std::vector<Index> order(_a.size());
        std::iota(order.begin(), order.end(), Index(0));
        std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
          return _sa[x].back() > _sa[y].back();
        });
        std::vector<bool> generated(_a.size(), false);
        generated[_a.identity()] = true;
        for (Index x : order) {
          if (generated[x]) {
            continue;
          }
          _gens.push_back(x);
          // Recompute the generated submonoid.
          std::fill(generated.begin(), generated.end(), false);
          std::deque<Index> queue{_a.identity()};
          generated[_a.identity()] = true;
          while (!queue.empty()) {
            Index u = queue.front();
            queue.pop_front();
            for (Index g : _gens) {
              Index v = _a.product(u, g);
              if (!generated[v]) {
                generated[v] = true;
                queue.push_back(v);
              }
            }
          }
        }
      }

      // Extends the map over the submonoid generated by the first k
      // generators; returns false on a clash.
      bool extend(std::size_t k) {
        std::deque<Index> queue;
        for (Index x = 0; x < _a.size(); ++x) {
          if (_map[x] != kUnset) {
            queue.push_back(x);
          }
        }
        while (!queue.empty()) {
          Index x = queue.front();
          queue.pop_front();
          for (std::size_t i = 0; i < k; ++i) {
            Index g  = _gens[i];
            Index y  = _a.product(x, g);
            Index fy = _b.product(_map[x], _map[g]);
            if (_map[y] == kUnset) {
              if (_inv[fy] != kUnset || _sa[y] != _sb[fy]) {
                return false;
              }
              _map[y]  = fy;
              _inv[fy] = y;
              queue.push_back(y);
            } else if (_map[y] != fy) {
              return false;
            }
          }
        }
        return true;
      }

      bool search(std::size_t k) {
        if (k == _gens.size()) {
          _map[_a.identity()] = _b.identity();
          return extend(k);
        }
        Index g = _gens[k];
        for (Index c = 0; c < _b.size(); ++c) {
          if (_sb[c] != _sa[g]) {
            continue;
          }
          auto saved_map = _map;
          auto saved_inv = _inv;
          bool ok        = true;
          _map[_a.identity()] = _b.identity();
          _inv[_b.identity()] = _a.identity();
          if (_map[g] == kUnset) {
            if (_inv[c] != kUnset) {
              ok = false;
            } else {
              _map[g] = c;
              _inv[c] = g;
            }
          } else {
            ok = _map[g] == c;
          }
          if (ok && extend(k + 1) && search(k + 1)) {
            return true;
          }
          _map = std::move(saved_map);
          _inv = std::move(saved_inv);
        }
        return false;
      }

      FiniteMonoid const&    _a;
      FiniteMonoid const&    _b;
      std::vector<Signature> _sa, _sb;
      std::vector<Index>     _gens;
      std::vector<Index>     _map, _inv;
    };
  }  // namespace

  std::optional<Morphism> isomorphic(FiniteMonoid const& m1,
                                     FiniteMonoid const& m2) {
    return IsoSearch(m1, m2).run();
  }

  std::optional<Morphism> anti_isomorphic(FiniteMonoid const& m1,
                                          FiniteMonoid const& m2) {
    return isomorphic(m1, dual(m2));
  }

  std::optional<Morphism> extend_to_morphism(
      FiniteMonoid const&                         source,
      FiniteMonoid const&                         target,
      std::vector<std::pair<Index, Index>> const& images) {
    constexpr Index    unset = static_cast<Index>(-1);
    std::vector<Index> map(source.size(), unset);
    map[source.identity()] = target.identity();
    std::deque<Index> queue{source.identity()};
    while (!queue.empty()) {
      Index x = queue.front();
      queue.pop_front();
      for (auto [g, h] : images) {
        Index y  = source.product(x, g);
        Index fy = target.product(map[x], h);
        if (map[y] == unset) {
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return std::nullopt;
        }
      }
    }
    Morphism f{std::move(map)};
    if (std::find(f.map.begin(), f.map.end(), unset) != f.map.end()
        || !is_homomorphism(source, target, f)) {
      return std::nullopt;
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monogenic monoids and the built-in presentations
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid monogenic(CongruenceKind const& kind) {
    using Tag = CongruenceKind::Tag;
    auto power = [](std::size_t i) {
      return i == 0 ? std::string("1")
             : i == 1 ? std::string("a")
                      : "a^" + std::to_string(i);
    };
    std::vector<std::string> labels;
    // Exponent of element i is i for i < n - 1; element n - 1 is 0.
    std::function<std::size_t(std::size_t, std::size_t)> add;
    std::size_t                                           top = 0;
    if (kind.tag() == Tag::gamma_k) {
      top = kind.parameter() + 1;
      add = [top](std::size_t i, std::size_t j) { return std::min(i + j, top); };
      for (std::size_t i = 0; i < top; ++i) {
        labels.push_back(power(i));
      }
      labels.push_back(top == 1 ? std::string("a+") : power(top) + "+");
    } else if (kind.tag() == Tag::tau_m) {
      auto const m = kind.parameter();
      if (m == 0) {
        throw Error("taum:0 has an infinite monogenic monoid");
      }
      top = m;
      add = [m](std::size_t i, std::size_t j) {
        return i + j == 0 ? 0 : (i + j - 1) % m + 1;
      };
      for (std::size_t i = 0; i <= m; ++i) {
        labels.push_back(power(i));
      }
    } else {
      throw UnsupportedKindError("monogenic monoids are defined for gammak "
                                 "and taum, not "
                                 + kind.name());
    }
    labels.emplace_back("0");
    auto const         n    = labels.size();
    auto const         zero = static_cast<Index>(n - 1);
    std::vector<Index> table(n * n, zero);
    for (Index i = 0; i < zero; ++i) {
      for (Index j = 0; j < zero; ++j) {
        table[i * n + j] = static_cast<Index>(add(i, j));
      }
    }
    return FiniteMonoid(std::move(labels), std::move(table), 0, zero,
                        "monogenic(" + kind.name() + ")");
  }

  namespace {
    std::map<std::string, std::string, std::less<>> const& builtins() {
      static std::map<std::string, std::string, std::less<>> const table{
          {"A", "e f c\nee=e\nff=f\nef=ce=0\nec=cf=c\n"},
          {"E", "e c\nee=e\ncc=ec=0\nce=c\n"},
          {"B0", "e f c\nee=e\nff=f\nef=fe=0\nec=cf=c\n"},
          {"Q", "e b c\nee=e\neb=b\nce=c\nec=be=cb=0\n"},
          {"F", "b c\nbb=bbb\ncc=0\ncb=c\nbbc=0\n"},
      };
      return table;
    }
  }  // namespace

  Presentation builtin_presentation(std::string_view name) {
    auto const& table = builtins();
    if (auto it = table.find(name); it != table.end()) {
      return parse_presentation(it->second);
    }
    std::size_t length = 0;
    if (name == "A0") {
      length = 2;
    } else if (name.size() > 1 && name[0] == 'L'
               && std::all_of(name.begin() + 1, name.end(),
                              [](char c) { return c >= '0' && c <= '9'; })) {
      length = std::stoul(std::string(name.substr(1)));
    }
    if (length < 2) {
      throw Error("unknown presentation '" + std::string(name) + "'");
    }
    std::string text = "e f\nee=e\nff=f\n";
    for (std::size_t i = 0; i < length; ++i) {
      text += i % 2 == 0 ? 'e' : 'f';
    }
    text += "=0\n";
    return parse_presentation(text);
  }

  std::vector<std::string> builtin_presentation_names() {
    std::vector<std::string> out;
    for (auto const& [name, text] : builtins()) {
      out.push_back(name);
    }
    out.emplace_back("A0");
    out.emplace_back("L<n>");
    return out;
  }

}  // namespace mtau
