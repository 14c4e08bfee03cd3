#include "mtau/identity.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "mtau/error.hpp"
#include "mtau/notation.hpp"
#include "mtau/rees_monoid.hpp"

namespace mtau {

  std::string Identity::to_string() const {
    return render(variables, lhs) + " ~ " + render(variables, rhs);
  }

  Identity parse_identity(std::string_view text) {
    auto tilde = text.find('~');
    if (tilde == std::string_view::npos
        || text.find('~', tilde + 1) != std::string_view::npos) {
      throw SyntaxError("expected an identity 'u ~ v', got '"
                        + std::string(text) + "'");
    }
    Identity id;
    id.lhs = parse_word(text.substr(0, tilde), id.variables);
    id.rhs = parse_word(text.substr(tilde + 1), id.variables);
    return id;
  }

  Index evaluate(FiniteMonoid const& m, Word const& w, Substitution const& s) {
    Index acc = m.identity();
    for (Letter x : w) {
      acc = m.product(acc, s.values.at(index_of(x)));
    }
    return acc;
  }

  namespace {
    class Checker {
     public:
      Checker(FiniteMonoid const& m, Identity const& id)
          : _m(m),
            _id(id),
            _assigned(id.variables.size(), false),
            _values(id.variables.size(), m.identity()) {
        std::vector<bool> seen(id.variables.size(), false);
        for (auto const* side : {&id.lhs, &id.rhs}) {
          for (Letter x : *side) {
            if (!seen[index_of(x)]) {
              seen[index_of(x)] = true;
              _order.push_back(index_of(x));
            }
          }
        }
      }

      Satisfaction run() {
        Satisfaction out;
        if (!dfs(0)) {
          out.holds = false;
          out.witness = Substitution{_values};
        }
        return out;
      }

     private:
      // The value of `w` if it is already fixed by the assigned variables.
      std::optional<Index> fixed(Word const& w) const {
        Index run  = _m.identity();
        bool  full = true;
        for (Letter x : w) {
          if (_assigned[index_of(x)]) {
            run = _m.product(run, _values[index_of(x)]);
            if (run == _m.zero()) {
              return run;
            }
          } else {
            full = false;
            run  = _m.identity();
          }
        }
        return full ? std::optional<Index>(run) : std::nullopt;
      }

      bool dfs(std::size_t depth) {
        auto l = fixed(_id.lhs);
        auto r = fixed(_id.rhs);
        if (l && r) {
          return *l == *r;
        }
        auto const v = _order[depth];
        _assigned[v] = true;
        for (Index a = 0; a < _m.size(); ++a) {
          _values[v] = a;
          if (!dfs(depth + 1)) {
            return false;
          }
        }
        _assigned[v] = false;
        _values[v]   = _m.identity();
        return true;
      }

      FiniteMonoid const&      _m;
      Identity const&          _id;
      std::vector<std::size_t> _order;
      std::vector<bool>        _assigned;
      std::vector<Index>       _values;
    };
  }  // namespace

  Satisfaction check_identity(FiniteMonoid const& m, Identity const& id) {
    return Checker(m, id).run();
  }

  bool satisfies(FiniteMonoid const& m, Identity const& id) {
    return check_identity(m, id).holds;
  }

  std::string render(FiniteMonoid const& m,
                     Identity const&     id,
                     Substitution const& s) {
    std::vector<bool> used(id.variables.size(), false);
    for (auto const* side : {&id.lhs, &id.rhs}) {
      for (Letter x : *side) {
        used[index_of(x)] = true;
      }
    }
    std::string out;
    for (std::size_t i = 0; i < id.variables.size(); ++i) {
      if (used[i]) {
        out += (out.empty() ? "" : ", ") + id.variables.name(letter(i)) + "->"
               + m.label(s.values.at(i));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity schemes
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t(1));
    std::vector<std::vector<std::size_t>> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  Identity family(std::string_view                name,
                  std::size_t                     n,
                  std::vector<std::size_t> const& perm) {
    Identity id;
    auto&    vars = id.variables;
    Letter   x    = vars.intern("x");
    std::vector<Letter> y, t;
    for (std::size_t i = 1; i <= n; ++i) {
      y.push_back(vars.intern("y" + std::to_string(i)));
    }
    auto need = [&](std::size_t least) {
      if (n < least) {
        throw Error("family " + std::string(name) + " needs n >= "
                    + std::to_string(least));
      }
    };
    auto squares = [&](std::vector<std::size_t> const& idx) {
      Word w;
      for (auto i : idx) {
        w.push_back(y[i]);
        w.push_back(y[i]);
      }
      return w;
    };
    auto cat = [](std::initializer_list<Word> parts) {
      Word w;
      for (auto const& p : parts) {
        w.insert(w.end(), p.begin(), p.end());
      }
      return w;
    };
    std::vector<std::size_t> up(n);
    std::iota(up.begin(), up.end(), std::size_t(0));

    if (name == "lee" || name == "u-echo" || name == "u-tail") {
      need(2);
      if (!perm.empty()) {
        throw Error("family " + std::string(name) + " takes no permutation");
      }
      id.lhs = cat({{x}, squares(up), {x}});
      if (name == "lee") {
        std::vector<std::size_t> down(up.rbegin(), up.rend());
        id.rhs = cat({{x}, squares(down), {x}});
      } else if (name == "u-echo") {
        std::vector<std::size_t> rest(up.begin() + 1, up.end());
        id.rhs = cat({{x}, squares({0}), {x}, squares(rest), {x}});
      } else {
        std::vector<std::size_t> head(up.begin(), up.end() - 1);
        id.rhs = cat({{x}, squares(head), {y[n - 1], x, y[n - 1]}});
      }
      return id;
    }
    if (name == "gusev" || name == "j-scheme") {
      need(name == "gusev" ? 1 : 0);
      std::vector<std::size_t> p = perm;
      if (p.empty()) {
        p.resize(n);
        std::iota(p.begin(), p.end(), std::size_t(1));
      } else if (name == "gusev") {
        throw Error("family gusev takes no permutation; use j-scheme");
      }
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::size_t> expect(n);
      std::iota(expect.begin(), expect.end(), std::size_t(1));
      if (sorted != expect) {
        throw Error("permutation must list 1.." + std::to_string(n)
                    + " exactly once");
      }
      for (std::size_t i = 1; i <= n; ++i) {
        t.push_back(vars.intern("t" + std::to_string(i)));
      }
      Word block, tail;
      for (auto i : p) {
        block.push_back(y[i - 1]);
      }
      for (std::size_t i = 0; i < n; ++i) {
        tail.push_back(t[i]);
        tail.push_back(y[i]);
      }
      id.lhs = cat({{x}, block, {x}, tail});
      id.rhs = cat({{x, x}, block, tail});
      return id;
    }
    throw Error("unknown identity family '" + std::string(name) + "'");
  }

  std::vector<std::string> family_names() {
    return {"lee", "gusev", "j-scheme", "u-echo", "u-tail"};
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounded searches
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Runs body(i) for i in [0, count) on up to `jobs` threads, in order of
    // i within each thread.  body returns false to stop early.
    template <typename Body>
    void parallel_for(std::size_t count, std::size_t jobs, Body&& body) {
      jobs = std::max<std::size_t>(1, std::min(jobs, count));
      std::atomic<std::size_t> next{0};
      auto                     worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
          if (!body(i)) {
            return;
          }
        }
      };
      if (jobs == 1) {
        worker();
        return;
      }
      std::vector<std::thread> pool;
      for (std::size_t j = 0; j < jobs; ++j) {
        pool.emplace_back(worker);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    // The i-th word, in shortlex order, over `letters`.
    Word nth_word(std::vector<Letter> const& letters, std::size_t i) {
      auto const  k   = letters.size();
      std::size_t len = 0, block = 1;
      while (i >= block) {
        i -= block;
        ++len;
        block *= k;
      }
      Word w(len);
      for (std::size_t j = len; j-- > 0;) {
        w[j] = letters[i % k];
        i /= k;
      }
      return w;
    }

    std::size_t count_words(std::size_t k, std::size_t maxlen) {
      std::size_t total = 0, block = 1;
      for (std::size_t len = 0; len <= maxlen; ++len) {
        total += block;
        block *= k;
      }
      return total;
    }
  }  // namespace

  TauTermVerdict is_tau_term_bounded(FiniteMonoid const&   m,
                                     CongruenceKind const& kind,
                                     Word const&           u,
                                     std::size_t           maxlen,
                                     std::size_t           jobs) {
    auto                all = content(u).all();
    std::vector<Letter> letters(all.begin(), all.end());
    std::size_t         vars = 0;
    for (Letter x : u) {
      vars = std::max(vars, index_of(x) + 1);
    }
    Alphabet alphabet;
    for (std::size_t i = 0; i < vars; ++i) {
      alphabet.intern("x" + std::to_string(i + 1));
    }

    TauTermVerdict out;
    out.bound         = maxlen;
    auto const total  = letters.empty() ? 1 : count_words(letters.size(), maxlen);
    std::atomic<std::size_t> best{total};
    parallel_for(total, jobs, [&](std::size_t i) {
      if (i >= best.load()) {
        return false;
      }
      Word v = letters.empty() ? Word{} : nth_word(letters, i);
      if (related(kind, u, v)) {
        return true;
      }
      if (satisfies(m, Identity{alphabet, u, v})) {
        auto b = best.load();
        while (i < b && !best.compare_exchange_weak(b, i)) {
        }
        return false;
      }
      return true;
    });
    auto const last = std::min(best.load() + 1, total);
    for (std::size_t i = 0; i < last; ++i) {
      if (!related(kind, u, letters.empty() ? Word{} : nth_word(letters, i))) {
        ++out.candidates;
      }
    }
    if (best.load() < total) {
      out.status         = TauTermVerdict::Status::counterexample;
      out.counterexample = nth_word(letters, best.load());
    }
    return out;
  }

  namespace {
    struct Hash128 {
      std::uint64_t a = 0, b = 0;
      bool operator==(Hash128 const&) const = default;
      auto operator<=>(Hash128 const&) const = default;
    };

    std::uint64_t mix(std::uint64_t z) {
      z += 0x9e3779b97f4a7c15ULL;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    }

    Hash128 hash_vector(std::vector<Index> const& v) {
      Hash128 h{0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL};
      for (Index x : v) {
        h.a = mix(h.a ^ x);
        h.b = (h.b ^ (x + 0x5bd1e995ULL)) * 0x100000001b3ULL;
      }
      h.b = mix(h.b);
      return h;
    }

    // hashes[i] summarises the value of the i-th shortlex word over x1..xk
    // under every substitution into m.
    std::vector<Hash128> word_hashes(FiniteMonoid const& m,
                                     std::size_t         k,
                                     std::size_t         maxlen,
                                     std::size_t         jobs) {
      std::size_t assignments = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (assignments > (std::size_t(1) << 26) / m.size()) {
          throw CapExceededError("too many substitutions ("
                                 + std::to_string(m.size()) + "^"
                                 + std::to_string(k) + ")");
        }
        assignments *= m.size();
      }
      // column[x][a]: value of variable x in assignment a.
      std::vector<std::vector<Index>> column(k, std::vector<Index>(assignments));
      for (std::size_t a = 0; a < assignments; ++a) {
        std::size_t rest = a;
        for (std::size_t x = 0; x < k; ++x) {
          column[x][a] = static_cast<Index>(rest % m.size());
          rest /= m.size();
        }
      }
      auto const           total = count_words(k, maxlen);
      std::vector<Hash128> out(total);
      out[0] = hash_vector(std::vector<Index>(assignments, m.identity()));
      if (maxlen == 0) {
        return out;
      }
      // Offset of the first word of each length in shortlex order.
      std::vector<std::size_t> offset(maxlen + 2, 0), block(maxlen + 2, 1);
      for (std::size_t len = 1; len <= maxlen + 1; ++len) {
        block[len]  = block[len - 1] * k;
        offset[len] = offset[len - 1] + block[len - 1];
      }
      // One task per first letter; each walks its subtree depth first.
      parallel_for(k, jobs, [&](std::size_t first) {
        std::vector<std::vector<Index>> stack(maxlen + 1,
                                              std::vector<Index>(assignments));
        std::vector<std::size_t>        rank(maxlen + 1, 0);
        auto step = [&](std::size_t depth, std::size_t x, auto&& self) -> void {
          auto const& prev = stack[depth - 1];
          auto&       cur  = stack[depth];
          auto const& col  = column[x];
          for (std::size_t a = 0; a < assignments; ++a) {
            cur[a] = m.product(prev[a], col[a]);
          }
          rank[depth] = rank[depth - 1] * k + x;
          out[offset[depth] + rank[depth]] = hash_vector(cur);
          if (depth < maxlen) {
            for (std::size_t y = 0; y < k; ++y) {
              self(depth + 1, y, self);
            }
          }
        };
        std::fill(stack[0].begin(), stack[0].end(), m.identity());
        step(1, first, step);
        return true;
      });
      return out;
    }

    Alphabet numbered_variables(std::size_t k) {
      Alphabet a;
      for (std::size_t i = 1; i <= k; ++i) {
        a.intern("x" + std::to_string(i));
      }
      return a;
    }

    std::vector<Letter> first_letters(std::size_t k) {
      std::vector<Letter> out;
      for (std::size_t i = 0; i < k; ++i) {
        out.push_back(letter(i));
      }
      return out;
    }

    // rep[i]: the least j with hashes[j] == hashes[i].
    std::vector<std::size_t> representatives(std::vector<Hash128> const& h) {
      std::vector<std::size_t> idx(h.size()), rep(h.size());
      std::iota(idx.begin(), idx.end(), std::size_t(0));
      std::stable_sort(idx.begin(), idx.end(),
                       [&](auto i, auto j) { return h[i] < h[j]; });
      for (std::size_t p = 0; p < idx.size(); ++p) {
        rep[idx[p]] = (p > 0 && h[idx[p]] == h[idx[p - 1]]) ? rep[idx[p - 1]]
                                                            : idx[p];
      }
      return rep;
    }
  }  // namespace

  Equivalence equationally_equivalent_bounded(FiniteMonoid const& m1,
                                              FiniteMonoid const& m2,
                                              std::size_t         nvars,
                                              std::size_t         maxlen,
                                              std::size_t         jobs) {
    if (nvars == 0) {
      throw Error("nvars must be positive");
    }
    auto rep1 = representatives(word_hashes(m1, nvars, maxlen, jobs));
    auto rep2 = representatives(word_hashes(m2, nvars, maxlen, jobs));
    Equivalence out;
    auto const  letters = first_letters(nvars);
    for (std::size_t i = 0; i < rep1.size(); ++i) {
      if (rep1[i] == rep2[i]) {
        continue;
      }
      // The earlier representative is equated with word i by one monoid
      // only.
      auto const j = std::min(rep1[i], rep2[i]);
      out.equivalent   = false;
      out.separating   = Identity{numbered_variables(nvars),
                                nth_word(letters, j), nth_word(letters, i)};
      out.satisfied_by = rep1[i] == j ? 1 : 2;
      auto const& yes  = out.satisfied_by == 1 ? m1 : m2;
      auto const& no   = out.satisfied_by == 1 ? m2 : m1;
      if (!satisfies(yes, *out.separating) || satisfies(no, *out.separating)) {
        throw Error("hash collision while comparing identities; rerun with "
                    "other bounds");
      }
      return out;
    }
    return out;
  }

  OracleCheck gamma_k_oracle_check(std::size_t k,
                                   std::size_t nvars,
                                   std::size_t maxlen) {
    Alphabet   a({"a"});
    TauWordSet w(CongruenceKind::trivial());
    w.insert(TauWord::of(CongruenceKind::trivial(), Word(k, letter(0))));
    auto const m = build(w, a).monoid;

    auto const rep     = representatives(word_hashes(m, nvars, maxlen, 1));
    auto const letters = first_letters(nvars);
    auto const kind    = CongruenceKind::gamma_k(k);
    std::vector<Word> words;
    for (std::size_t i = 0; i < rep.size(); ++i) {
      words.push_back(nth_word(letters, i));
    }
    OracleCheck out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++out.pairs;
        bool const sat = rep[i] == rep[j];
        if (sat != related(kind, words[i], words[j])) {
          out.ok       = false;
          out.mismatch = Identity{numbered_variables(nvars), words[i], words[j]};
          return out;
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Hypothesis report
  ////////////////////////////////////////////////////////////////////////

  nlohmann::json check_nfb_hypotheses(NfbConfig const& config) {
    using nlohmann::json;
    auto const& m    = config.monoid;
    json        report{{"monoid", m.provenance()},
                {"kind", config.kind.name()},
                {"n_min", config.n_min},
                {"n_max", config.n_max},
                {"term_maxlen", config.term_maxlen},
                {"search_maxlen", config.search_maxlen},
                {"note",
                 "bounded check of the hypotheses only; a pass is not a "
                 "proof that the monoid has no finite identity basis"}};
    bool pass    = true;
    json clauses = json::array();

    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
      auto const u_n = family("lee", n).lhs;
      auto const vars = family("lee", n).variables;
      json clause{{"clause", "U_n is not a " + config.kind.name() + "-term"},
                  {"n", n},
                  {"word", render(vars, u_n)}};
      std::optional<std::pair<std::string, Identity>> witness;
      for (auto const& name : config.witness_families) {
        auto id = family(name, n);
        if (!related(config.kind, id.lhs, id.rhs) && satisfies(m, id)) {
          witness.emplace(name, std::move(id));
          break;
        }
      }
      if (!witness && config.search_maxlen > 0) {
        auto v = is_tau_term_bounded(m, config.kind, u_n, config.search_maxlen,
                                     config.jobs);
        if (v.counterexample) {
          witness.emplace("search", Identity{vars, u_n, *v.counterexample});
        }
      }
      clause["pass"] = witness.has_value();
      if (witness) {
        clause["witness"] = witness->second.to_string();
        clause["source"]  = witness->first;
      }
      pass = pass && witness.has_value();
      clauses.push_back(std::move(clause));
    }

    for (auto const& [label, word] : config.required_terms) {
      auto v = is_tau_term_bounded(m, config.kind, word, config.term_maxlen,
                                   config.jobs);
      bool ok = v.status == TauTermVerdict::Status::holds_up_to_bound;
      json clause{{"clause", "required " + config.kind.name() + "-term"},
                  {"word", label},
                  {"representative", render(config.term_alphabet, word)},
                  {"bound", v.bound},
                  {"candidates", v.candidates},
                  {"pass", ok},
                  {"verdict", ok ? "holds-up-to-bound" : "counterexample"}};
      if (v.counterexample) {
        clause["counterexample"] = render(config.term_alphabet,
                                          *v.counterexample);
      }
      pass = pass && ok;
      clauses.push_back(std::move(clause));
    }
    report["clauses"] = std::move(clauses);
    report["pass"]    = pass;
    return report;
  }

}  // namespace mtau
