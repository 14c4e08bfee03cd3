#include "mtau/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "mtau/error.hpp"

namespace mtau {

  nlohmann::json to_json(FiniteMonoid const& m) {
    using nlohmann::json;
    json table = json::array();
    for (Index i = 0; i < m.size(); ++i) {
      json row = json::array();
      for (Index j = 0; j < m.size(); ++j) {
        row.push_back(m.product(i, j));
      }
      table.push_back(std::move(row));
    }
    json idem = json::array();
    for (Index e : idempotents(m)) {
      idem.push_back(m.label(e));
    }
    return json{{"provenance", m.provenance()},
                {"size", m.size()},
                {"elements", m.labels()},
                {"identity", m.label(m.identity())},
                {"zero", m.zero() ? json(m.label(*m.zero())) : json(nullptr)},
                {"table", std::move(table)},
                {"idempotents", std::move(idem)},
                {"j_trivial", is_j_trivial(m)}};
  }

  FiniteMonoid monoid_from_json(nlohmann::json const& j) {
    try {
      auto labels = j.at("elements").get<std::vector<std::string>>();
      std::vector<Index> table;
      for (auto const& row : j.at("table")) {
        if (row.size() != labels.size()) {
          throw Error("table row has the wrong length");
        }
        for (auto const& v : row) {
          table.push_back(v.get<Index>());
        }
      }
      auto index = [&](std::string const& label) {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) {
          throw Error("unknown element '" + label + "'");
        }
        return static_cast<Index>(it - labels.begin());
      };
      Index                identity = index(j.at("identity").get<std::string>());
      std::optional<Index> zero;
      if (j.contains("zero") && !j.at("zero").is_null()) {
        zero = index(j.at("zero").get<std::string>());
      }
      return FiniteMonoid(std::move(labels), std::move(table), identity, zero,
                          j.value("provenance", std::string()));
    } catch (nlohmann::json::exception const& e) {
      throw Error(std::string("malformed monoid JSON: ") + e.what());
    }
  }

  std::string to_table(FiniteMonoid const& m) {
    std::size_t width = 1;
    for (auto const& l : m.labels()) {
      width = std::max(width, l.size());
    }
    std::ostringstream out;
    auto cell = [&](std::string const& s) {
      out << std::string(width - s.size() + 1, ' ') << s;
    };
    cell("*");
    out << " |";
    for (Index j = 0; j < m.size(); ++j) {
      cell(m.label(j));
    }
    out << '\n' << std::string(width + 3 + (width + 1) * m.size(), '-') << '\n';
    for (Index i = 0; i < m.size(); ++i) {
      cell(m.label(i));
      out << " |";
      for (Index j = 0; j < m.size(); ++j) {
        cell(m.label(m.product(i, j)));
      }
      out << '\n';
    }
    return out.str();
  }

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace

  std::string to_dot(FiniteMonoid const& m) {
    std::ostringstream out;
    out << "digraph " << quoted(m.provenance()) << " {\n"
        << "  rankdir=BT;\n"
        << "  node [shape=plaintext];\n";
    for (Index i = 0; i < m.size(); ++i) {
      out << "  n" << i << " [label=" << quoted(m.label(i)) << "];\n";
    }
    if (m.zero()) {
      out << "  { rank=min; n" << *m.zero() << "; }\n";
    }
    out << "  { rank=max; n" << m.identity() << "; }\n";
    for (auto [lower, upper] : j_order_covers(m)) {
      out << "  n" << lower << " -> n" << upper << " [arrowhead=none];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace mtau
