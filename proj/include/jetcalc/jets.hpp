#ifndef JETCALC_JETS_HPP
#define JETCALC_JETS_HPP

#include <utility>
#include <vector>

#include "jetcalc/groebner.hpp"
#include "jetcalc/series.hpp"

namespace jetcalc {

// Presentation of the space of n-jets on V(I): the coefficient equations of
// the generators in the jet variables. The jet variable for the t^k
// coefficient of ambient coordinate v is named "v_k"; variables are grouped
// coordinate-major ("x_0 x_1 ... y_0 y_1 ...").
struct JetIdeal {
    Ideal base;
    int level = 0;
    RingPtr jet_ring;
    Ideal equations;
};

JetIdeal jet_ideal(const Ideal& base, int level, const GroebnerOptions& opts = {});

// True iff every generator vanishes along gamma modulo t^cap.
bool jet_membership(const Arc& gamma, const Ideal& ideal);

// Coefficientwise truncation of an m-jet (cap m+1) to an n-jet, n < m.
Arc truncate_jet(const Arc& gamma, int level);

// Solution set of an affine-linear system over Q.
struct AffineFiber {
    bool feasible = false;
    std::vector<Rational> basepoint;              // one solution, when feasible
    std::vector<std::vector<Rational>> directions; // basis of the linear part
    long dim() const { return feasible ? static_cast<long>(directions.size()) : -1; }
};

// Fiber of L_{n+1}(X) -> L_n(X) over an n-jet: the system
// alpha_i + grad f_i(gamma(0)) . eta = 0, with alpha_i the t^{n+1}
// coefficient of f_i(gamma(t)). The direction space is the kernel of the
// Jacobian at gamma(0) regardless of feasibility.
AffineFiber fiber_next_level(const Arc& gamma, const Ideal& ideal);

// Coefficient conditions at orders n+1..n+k after appending unknown
// coefficient vectors at those levels. Polynomial (not merely linear) in the
// unknowns; zero conditions are dropped but the order tags are kept.
struct ObstructionSystem {
    int level = 0;   // n: gamma is an n-jet
    int extra = 0;   // k: unknown levels n+1..n+k
    RingPtr ring;    // parameters of gamma followed by the unknowns
    std::vector<std::string> unknowns;
    std::vector<std::pair<int, MPoly>> conditions; // (t-order, condition)
    Ideal ideal() const;
};

ObstructionSystem obstruction_system(const Arc& gamma, const Ideal& ideal, int extra);

// Krull dimension of the level-n jet ideal (over the algebraic closure).
long jet_dim(const Ideal& ideal, int level, const GroebnerOptions& opts = {});

} // namespace jetcalc

#endif
