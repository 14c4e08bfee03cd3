#pragma once

#include <string>

#include "json.hpp"

#include "mtau/finite_monoid.hpp"

namespace mtau {

  // {"provenance", "size", "elements", "identity", "zero", "table",
  //  "idempotents", "j_trivial"}.  Elements are labels in index order, the
  // table holds indices, identity and zero are labels (zero may be null).
  nlohmann::json to_json(FiniteMonoid const& m);

  // Inverse of to_json; throws Error on malformed input.
  FiniteMonoid monoid_from_json(nlohmann::json const& j);

  // Fixed-width Cayley table with a header row.
  std::string to_table(FiniteMonoid const& m);

  // Hasse diagram of the J-order, 0 at the bottom and 1 at the top.
  std::string to_dot(FiniteMonoid const& m);

}  // namespace mtau
