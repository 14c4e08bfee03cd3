#pragma once

#include "mtau/finite_monoid.hpp"
#include "mtau/tau_order.hpp"

namespace mtau {

  // M_tau(W): the closure of W under <=_tau with a zero adjoined.  Element i
  // of `monoid` is closure.members()[i] for i < closure.size(); the zero is
  // the last element and is labelled "0", the identity (the class of the
  // empty word) is element 0 and labelled "1".
  struct ReesMonoid {
    FiniteMonoid monoid;
    TauWordSet   closure;
  };

  // The product of u and v is their diamond product if that lies in the
  // closure and 0 otherwise.  The zero is always adjoined.  An empty W gives
  // the trivial monoid {0}.  Throws UnsupportedKindError for kinds without a
  // finite closure.
  ReesMonoid build(TauWordSet const& w, Alphabet const& alphabet);

}  // namespace mtau
