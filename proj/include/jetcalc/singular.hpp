#ifndef JETCALC_SINGULAR_HPP
#define JETCALC_SINGULAR_HPP

#include "jetcalc/groebner.hpp"
#include "jetcalc/series.hpp"

namespace jetcalc {

// The minors-times-colon ideal H whose vanishing set is the singular locus
// of V(I) in dimension d. The sum over tuples in I(X) is restricted to
// (N-d)-subsets of the supplied generators; for hypersurfaces the
// restriction is the full formula. Returned with a cached reduced basis.
Ideal h_ideal(const Ideal& ideal, int dim, const GroebnerOptions& opts = {});

// Minimum t-order over the generators of H along the arc; uncertified when
// every generator vanishes to the cap (arc inside V(H) as far as the cap
// can tell).
OrderVal h_order(const Arc& gamma, const Ideal& h);

} // namespace jetcalc

#endif
