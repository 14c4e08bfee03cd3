// pybind11 module _mtau.  Structured results cross as JSON text; the mtau
// package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "mtau/error.hpp"
#include "mtau/identity.hpp"
#include "mtau/monoid_lab.hpp"
#include "mtau/monoid_spec.hpp"
#include "mtau/notation.hpp"
#include "mtau/rees_monoid.hpp"
#include "mtau/serialize.hpp"
#include "mtau/verify.hpp"

namespace py = pybind11;
using namespace mtau;

namespace {

  std::optional<py::dict> morphism_dict(FiniteMonoid const&            a,
                                        FiniteMonoid const&            b,
                                        std::optional<Morphism> const& f) {
    if (!f) {
      return std::nullopt;
    }
    py::dict d;
    for (Index i = 0; i < a.size(); ++i) {
      d[py::str(a.label(i))] = b.label(f->map[i]);
    }
    return d;
  }

  std::vector<std::pair<Index, Index>> label_pairs(
      FiniteMonoid const&                                    m,
      std::vector<std::pair<std::string, std::string>> const& pairs) {
    std::vector<std::pair<Index, Index>> out;
    for (auto const& [p, q] : pairs) {
      out.emplace_back(m.at(p), m.at(q));
    }
    return out;
  }

}  // namespace

PYBIND11_MODULE(_mtau, mod) {
  mod.doc() = "Rees quotients of free monoids by tau-congruences";

  auto base = py::register_exception<Error>(mod, "Error");
  py::register_exception<SyntaxError>(mod, "SyntaxError", base.ptr());
  py::register_exception<NotReducedError>(mod, "NotReducedError", base.ptr());
  py::register_exception<IllegalSegmentError>(mod, "IllegalSegmentError", base.ptr());
  py::register_exception<UnsupportedKindError>(mod, "UnsupportedKindError",
                                               base.ptr());
  py::register_exception<CapExceededError>(mod, "CapExceededError", base.ptr());

  py::class_<FiniteMonoid>(mod, "Monoid")
      .def_property_readonly("size", &FiniteMonoid::size)
      .def_property_readonly("elements", &FiniteMonoid::labels)
      .def_property_readonly("provenance", &FiniteMonoid::provenance)
      .def_property_readonly("identity",
                             [](FiniteMonoid const& m) { return m.label(m.identity()); })
      .def_property_readonly("zero",
                             [](FiniteMonoid const& m) -> std::optional<std::string> {
                               if (!m.zero()) {
                                 return std::nullopt;
                               }
                               return m.label(*m.zero());
                             })
      .def("product",
           [](FiniteMonoid const& m, std::string const& x, std::string const& y) {
             return m.label(m.product(m.at(x), m.at(y)));
           })
      .def("idempotents",
           [](FiniteMonoid const& m) {
             std::vector<std::string> out;
             for (Index e : idempotents(m)) {
               out.push_back(m.label(e));
             }
             return out;
           })
      .def("is_j_trivial", [](FiniteMonoid const& m) { return is_j_trivial(m); })
      .def("is_associative", [](FiniteMonoid const& m) { return is_associative(m); })
      .def("_json", [](FiniteMonoid const& m) { return to_json(m).dump(); })
      .def("table", [](FiniteMonoid const& m) { return to_table(m); })
      .def("dot", [](FiniteMonoid const& m) { return to_dot(m); })
      .def("__len__", &FiniteMonoid::size)
      .def("__repr__", [](FiniteMonoid const& m) {
        return "<Monoid " + m.provenance() + " of size " + std::to_string(m.size())
               + ">";
      });

  mod.def("monoid", [](std::string const& spec) { return parse_monoid_spec(spec); },
          py::arg("spec"), "Monoid named by a spec such as 'lambda:ba+sb+'.");

  mod.def(
      "build",
      [](std::string const& kind, std::string const& words) {
        Alphabet a;
        return build(parse_tau_word_set(parse_kind(kind), words, a), a).monoid;
      },
      py::arg("kind"), py::arg("words"));

  mod.def(
      "closure",
      [](std::string const& kind, std::string const& words) {
        Alphabet                 a;
        auto const               cl = closure(parse_tau_word_set(parse_kind(kind), words, a));
        std::vector<std::string> out;
        for (auto const& u : cl.members()) {
          out.push_back(render(a, u));
        }
        return out;
      },
      py::arg("kind"), py::arg("words"));

  mod.def(
      "normal_form",
      [](std::string const& kind, std::string const& word) {
        Alphabet a;
        return render(a, normal_form(parse_kind(kind), parse_ext_word(word, a)));
      },
      py::arg("kind"), py::arg("word"));

  mod.def(
      "related",
      [](std::string const& kind, std::string const& u, std::string const& v) {
        Alphabet a;
        return related(parse_kind(kind), parse_word(u, a), parse_word(v, a));
      },
      py::arg("kind"), py::arg("u"), py::arg("v"));

  mod.def(
      "check_identity",
      [](FiniteMonoid const& m, std::string const& identity)
          -> std::pair<bool, std::optional<std::string>> {
        auto const id  = parse_identity(identity);
        auto const sat = check_identity(m, id);
        if (sat.witness) {
          return {false, render(m, id, *sat.witness)};
        }
        return {sat.holds, std::nullopt};
      },
      py::arg("monoid"), py::arg("identity"));

  mod.def(
      "family",
      [](std::string const& name, std::size_t n, std::vector<std::size_t> const& perm) {
        return family(name, n, perm).to_string();
      },
      py::arg("name"), py::arg("n"), py::arg("perm") = std::vector<std::size_t>{});

  mod.def(
      "isomorphic",
      [](FiniteMonoid const& a, FiniteMonoid const& b) {
        return morphism_dict(a, b, isomorphic(a, b));
      },
      py::arg("m1"), py::arg("m2"));

  mod.def(
      "anti_isomorphic",
      [](FiniteMonoid const& a, FiniteMonoid const& b) {
        return morphism_dict(a, b, anti_isomorphic(a, b));
      },
      py::arg("m1"), py::arg("m2"));

  mod.def("direct_product", &direct_product, py::arg("m1"), py::arg("m2"));
  mod.def("dual", &dual, py::arg("m"));

  mod.def(
      "submonoid",
      [](FiniteMonoid const& m, std::vector<std::string> const& gens) {
        return submonoid(m, gens).monoid;
      },
      py::arg("m"), py::arg("gens"));

  mod.def(
      "quotient_identify",
      [](FiniteMonoid const& m,
         std::vector<std::pair<std::string, std::string>> const& pairs) {
        return quotient_identify(m, label_pairs(m, pairs)).monoid;
      },
      py::arg("m"), py::arg("pairs"));

  mod.def(
      "merge_identify",
      [](FiniteMonoid const& m,
         std::vector<std::pair<std::string, std::string>> const& pairs) {
        return merge_identify(m, label_pairs(m, pairs)).monoid;
      },
      py::arg("m"), py::arg("pairs"));

  mod.def(
      "from_presentation",
      [](std::string const& text, bool adjoin, std::size_t cap) {
        auto const s = from_presentation(parse_presentation(text), cap);
        return adjoin ? adjoin_identity(s) : FiniteMonoid::from_semigroup(s);
      },
      py::arg("text"), py::arg("adjoin_identity") = true, py::arg("cap") = 100000);

  mod.def(
      "monogenic", [](std::string const& kind) { return monogenic(parse_kind(kind)); },
      py::arg("kind"));

  mod.def(
      "is_tau_term_bounded",
      [](FiniteMonoid const& m, std::string const& kind, std::string const& word,
         std::size_t maxlen, std::size_t jobs) -> std::optional<std::string> {
        Alphabet   a;
        auto const r = is_tau_term_bounded(m, parse_kind(kind), parse_word(word, a),
                                           maxlen, jobs);
        if (r.counterexample) {
          return render(a, *r.counterexample);
        }
        return std::nullopt;
      },
      py::arg("monoid"), py::arg("kind"), py::arg("word"), py::arg("maxlen") = 6,
      py::arg("jobs") = 1,
      "None if the word is a term up to the bound, else a counterexample.");

  mod.def(
      "equationally_equivalent_bounded",
      [](FiniteMonoid const& a, FiniteMonoid const& b, std::size_t nvars,
         std::size_t maxlen, std::size_t jobs) -> std::optional<std::string> {
        auto const r = equationally_equivalent_bounded(a, b, nvars, maxlen, jobs);
        if (r.separating) {
          return r.separating->to_string();
        }
        return std::nullopt;
      },
      py::arg("m1"), py::arg("m2"), py::arg("nvars") = 3, py::arg("maxlen") = 6,
      py::arg("jobs") = 1, "None if no identity within the bounds separates them.");

  mod.def(
      "_verify",
      [](std::string const& section, std::uint64_t seed, std::size_t jobs) {
        py::gil_scoped_release release;
        return run_verify({section, seed, jobs}).dump();
      },
      py::arg("section") = "all", py::arg("seed") = 0, py::arg("jobs") = 1);
}
