// mtau: command-line driver.  Data goes to stdout, diagnostics to stderr.
// Exit status: 0 success, 1 a check failed, 2 usage, parse or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mtau/error.hpp"
#include "mtau/identity.hpp"
#include "mtau/monoid_lab.hpp"
#include "mtau/monoid_spec.hpp"
#include "mtau/notation.hpp"
#include "mtau/rees_monoid.hpp"
#include "mtau/serialize.hpp"
#include "mtau/verify.hpp"

namespace {

  using nlohmann::json;
  using namespace mtau;

  constexpr int kOk     = 0;
  constexpr int kFailed = 1;
  constexpr int kUsage  = 2;

  void dump(FiniteMonoid const& m, std::string const& format) {
    if (format == "table") {
      std::cout << to_table(m);
    } else if (format == "dot") {
      std::cout << to_dot(m);
    } else {
      std::cout << to_json(m).dump(2) << '\n';
    }
  }

  void print(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot read '" + path + "'");
    }
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  // Accepts plain words (with ^n) and tau-words (with +).
  ExtWord parse_input(std::string const& text, Alphabet& alphabet) {
    if (text.find('^') != std::string::npos) {
      return embed(parse_word(text, alphabet));
    }
    return parse_ext_word(text, alphabet);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees quotients of free monoids by tau-congruences"};
  app.require_subcommand(1);
  auto const out_formats = CLI::IsMember({"json", "table", "dot"});

  std::string tau, words, word, input, u, v, out = "json";
  std::string monoid, monoid2, identity, fam, file, section = "all";
  std::vector<std::size_t> perm;
  std::vector<std::string> terms;
  std::size_t n = 2, maxlen = 6, nvars = 3, jobs = 1, cap = 100000;
  std::size_t n_min = 2, n_max = 4, search_maxlen = 0;
  std::uint64_t seed = 0;
  bool adjoin = false, anti = false;

  auto* build = app.add_subcommand("build", "Build M_tau(W) and dump it");
  build->add_option("--tau", tau, "t0, t1, gamma, lambda or rho")->required();
  build->add_option("--words", words, "comma-separated tau-words")->required();
  build->add_option("--out", out)->check(out_formats);

  auto* show = app.add_subcommand("show", "Dump the monoid named by a spec");
  show->add_option("monoid", monoid, "monoid spec")->required();
  show->add_option("--out", out)->check(out_formats);

  auto* clo = app.add_subcommand("closure", "Closure of W under <=_tau");
  clo->add_option("--tau", tau)->required();
  clo->add_option("--word,--words", words)->required();

  auto* nf = app.add_subcommand("nf", "Normal form under R_tau");
  nf->add_option("--tau", tau)->required();
  nf->add_option("--input", input)->required();

  auto* rel = app.add_subcommand("related", "Decide u tau v (exit 1 if not)");
  rel->add_option("--tau", tau)->required();
  rel->add_option("u", u)->required();
  rel->add_option("v", v)->required();

  auto* chk = app.add_subcommand("check-id", "Does the monoid satisfy u ~ v?");
  chk->add_option("--monoid", monoid)->required();
  auto* id_opt  = chk->add_option("--id", identity, "identity 'u ~ v'");
  auto* fam_opt = chk->add_option("--family", fam, "lee, gusev, j-scheme, "
                                                   "u-echo or u-tail");
  chk->add_option("--n", n);
  chk->add_option("--perm", perm, "permutation of 1..n")->delimiter(',');
  id_opt->excludes(fam_opt);

  auto* term = app.add_subcommand("tau-term", "Bounded tau-term check");
  term->add_option("--monoid", monoid)->required();
  term->add_option("--tau", tau)->required();
  term->add_option("--word", word)->required();
  term->add_option("--maxlen", maxlen);
  term->add_option("--jobs", jobs);

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("m1", monoid)->required();
  iso->add_option("m2", monoid2)->required();
  iso->add_flag("--anti", anti, "look for an anti-isomorphism instead");

  auto* eq = app.add_subcommand("eq-equiv", "Bounded equational equivalence");
  eq->add_option("m1", monoid)->required();
  eq->add_option("m2", monoid2)->required();
  eq->add_option("--nvars", nvars);
  eq->add_option("--maxlen", maxlen);
  eq->add_option("--jobs", jobs);

  auto* pres = app.add_subcommand("presentation", "Enumerate a presentation");
  pres->add_option("--file", file)->required();
  pres->add_flag("--adjoin-identity", adjoin);
  pres->add_option("--cap", cap, "maximum number of elements");
  pres->add_option("--out", out)->check(out_formats);

  auto* nfb = app.add_subcommand("nfb", "Bounded check of the U_n hypotheses");
  nfb->add_option("--monoid", monoid)->required();
  nfb->add_option("--tau", tau)->default_val("gamma");
  nfb->add_option("--terms", terms, "tau-words that must be terms")
      ->delimiter(',');
  nfb->add_option("--n-min", n_min);
  nfb->add_option("--n-max", n_max);
  nfb->add_option("--maxlen", maxlen, "bound for the term checks")
      ->default_val(8);
  nfb->add_option("--search-maxlen", search_maxlen,
                  "bound for searching U_n witnesses (0: schemes only)");
  nfb->add_option("--jobs", jobs);

  auto* ver = app.add_subcommand("verify", "Replay the fixture suite");
  ver->add_option("--section", section)
      ->check(CLI::IsMember({"all", "s4", "s5", "s7", "s8"}));
  ver->add_option("--seed", seed);
  ver->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      auto       kind = parse_kind(tau);
      Alphabet   alphabet;
      auto const w = parse_tau_word_set(kind, words, alphabet);
      dump(mtau::build(w, alphabet).monoid, out);
      return kOk;
    }
    if (*show) {
      dump(parse_monoid_spec(monoid), out);
      return kOk;
    }
    if (*clo) {
      auto       kind = parse_kind(tau);
      Alphabet   alphabet;
      auto const cl = closure(parse_tau_word_set(kind, words, alphabet));
      for (auto const& w : cl.members()) {
        std::cout << render(alphabet, w) << '\n';
      }
      return kOk;
    }
    if (*nf) {
      auto     kind = parse_kind(tau);
      Alphabet alphabet;
      std::cout << render(alphabet, normal_form(kind, parse_input(input, alphabet)))
                << '\n';
      return kOk;
    }
    if (*rel) {
      auto     kind = parse_kind(tau);
      Alphabet alphabet;
      bool     r = related(kind, parse_word(u, alphabet), parse_word(v, alphabet));
      std::cout << (r ? "true" : "false") << '\n';
      return r ? kOk : kFailed;
    }
    if (*chk) {
      auto const m = parse_monoid_spec(monoid);
      Identity   id;
      if (!identity.empty()) {
        id = parse_identity(identity);
      } else if (!fam.empty()) {
        id = family(fam, n, perm);
      } else {
        std::cerr << "check-id needs --id or --family\n";
        return kUsage;
      }
      auto sat = check_identity(m, id);
      json j{{"monoid", m.provenance()},
             {"identity", id.to_string()},
             {"holds", sat.holds}};
      if (sat.witness) {
        j["witness"] = render(m, id, *sat.witness);
      }
      print(j);
      return sat.holds ? kOk : kFailed;
    }
    if (*term) {
      auto const m    = parse_monoid_spec(monoid);
      auto       kind = parse_kind(tau);
      Alphabet   alphabet;
      auto const w = parse_word(word, alphabet);
      auto       r = is_tau_term_bounded(m, kind, w, maxlen, jobs);
      bool holds   = r.status == TauTermVerdict::Status::holds_up_to_bound;
      json j{{"monoid", m.provenance()},
             {"kind", kind.name()},
             {"word", render(alphabet, w)},
             {"bound", r.bound},
             {"candidates", r.candidates},
             {"verdict", holds ? "holds-up-to-bound" : "counterexample"}};
      if (r.counterexample) {
        j["counterexample"] = render(alphabet, *r.counterexample);
      }
      print(j);
      return holds ? kOk : kFailed;
    }
    if (*iso) {
      auto const a = parse_monoid_spec(monoid);
      auto const b = parse_monoid_spec(monoid2);
      auto       f = anti ? anti_isomorphic(a, b) : isomorphic(a, b);
      json       j{{"left", a.provenance()},
             {"right", b.provenance()},
             {anti ? "anti_isomorphic" : "isomorphic", f.has_value()}};
      if (f) {
        json map = json::object();
        for (Index i = 0; i < a.size(); ++i) {
          map[a.label(i)] = b.label(f->map[i]);
        }
        j["map"] = map;
      }
      print(j);
      return f ? kOk : kFailed;
    }
    if (*eq) {
      auto const a = parse_monoid_spec(monoid);
      auto const b = parse_monoid_spec(monoid2);
      auto       r = equationally_equivalent_bounded(a, b, nvars, maxlen, jobs);
      json       j{{"left", a.provenance()},
             {"right", b.provenance()},
             {"nvars", nvars},
             {"maxlen", maxlen},
             {"equivalent", r.equivalent}};
      if (r.separating) {
        j["separating"]   = r.separating->to_string();
        j["satisfied_by"] = r.satisfied_by == 1 ? "left" : "right";
      }
      print(j);
      return r.equivalent ? kOk : kFailed;
    }
    if (*pres) {
      auto s = from_presentation(parse_presentation(read_file(file)), cap);
      if (adjoin) {
        dump(adjoin_identity(s), out);
      } else if (s.find_identity()) {
        dump(FiniteMonoid::from_semigroup(s), out);
      } else if (out == "json") {
        // No identity: dump the semigroup table without monoid fields.
        json table = json::array();
        for (Index i = 0; i < s.size(); ++i) {
          json row = json::array();
          for (Index j = 0; j < s.size(); ++j) {
            row.push_back(s.product(i, j));
          }
          table.push_back(row);
        }
        print({{"provenance", s.provenance()},
               {"size", s.size()},
               {"elements", s.labels()},
               {"identity", nullptr},
               {"zero", s.zero() ? json(s.label(*s.zero())) : json(nullptr)},
               {"table", table}});
      } else {
        std::cerr << "semigroup has no identity; use --adjoin-identity or "
                     "--out json\n";
        return kUsage;
      }
      return kOk;
    }
    if (*nfb) {
      NfbConfig config;
      config.monoid      = parse_monoid_spec(monoid);
      config.kind        = parse_kind(tau);
      config.n_min       = n_min;
      config.n_max       = n_max;
      config.term_maxlen = maxlen;
      config.search_maxlen = search_maxlen;
      config.jobs        = jobs;
      for (auto const& t : terms) {
        auto w = parse_tau_word(config.kind, t, config.term_alphabet);
        config.required_terms.emplace_back(t, representative(w.canon()));
      }
      auto report = check_nfb_hypotheses(config);
      print(report);
      return report.at("pass").get<bool>() ? kOk : kFailed;
    }
    if (*ver) {
      auto report = run_verify({section, seed, jobs});
      print(report);
      for (auto const& c : report.at("checks")) {
        if (!c.at("pass").get<bool>()) {
          std::cerr << "FAIL " << c.at("id").get<std::string>() << '\n';
        }
      }
      return report.at("pass").get<bool>() ? kOk : kFailed;
    }
  } catch (Error const& e) {
    std::cerr << "mtau: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
