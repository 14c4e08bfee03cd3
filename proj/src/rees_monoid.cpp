#include "mtau/rees_monoid.hpp"

#include <unordered_map>

namespace mtau {

  ReesMonoid build(TauWordSet const& w, Alphabet const& alphabet) {
    auto const& kind = w.kind();
    std::string provenance = "M_" + kind.name() + "({";
    for (std::size_t i = 0; i < w.size(); ++i) {
      provenance += (i == 0 ? "" : ",") + render(alphabet, w.members()[i]);
    }
    provenance += "})";

    auto cl = closure(w);
    if (cl.size() == 0) {
      return {FiniteMonoid({"0"}, {0}, 0, 0, provenance), cl};
    }

    auto const                             n    = cl.size();
    auto const                             zero = static_cast<Index>(n);
    std::vector<std::string>               labels;
    std::unordered_map<std::string, Index> where;
    for (auto const& u : cl.members()) {
      where.emplace(render(alphabet, u), static_cast<Index>(labels.size()));
      labels.push_back(render(alphabet, u));
    }
    labels.emplace_back("0");

    std::vector<Index> table((n + 1) * (n + 1), zero);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto uv = diamond(kind, cl.members()[i], cl.members()[j]);
        if (auto it = where.find(render(alphabet, uv)); it != where.end()) {
          table[i * (n + 1) + j] = it->second;
        }
      }
    }
    return {FiniteMonoid(std::move(labels), std::move(table), 0, zero,
                         provenance),
            std::move(cl)};
  }

}  // namespace mtau
