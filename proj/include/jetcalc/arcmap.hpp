#ifndef JETCALC_ARCMAP_HPP
#define JETCALC_ARCMAP_HPP

#include <optional>
#include <string>
#include <vector>

#include "jetcalc/jets.hpp"
#include "jetcalc/matrix.hpp"
#include "jetcalc/singular.hpp"

namespace jetcalc {

// A polynomial map sigma: R^d -> R^N (a chart representative of a
// resolution / blow-up composition).
class PolyMap {
public:
    PolyMap(RingPtr source, RingPtr target, std::vector<MPoly> comps);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    std::size_t source_dim() const { return source_->size(); }
    std::size_t target_dim() const { return target_->size(); }
    const std::vector<MPoly>& comps() const { return comps_; }

    // N x d matrix of partials d comp_i / d u_j over the source ring.
    PolyMatrix jacobian() const;

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<MPoly> comps_; // over source_, one per target coordinate
};

// sigma composed with an arc in the source: an arc in target coordinates.
Arc apply_map(const PolyMap& sigma, const Arc& gamma);

// Minimum t-order of the generators along the arc.
OrderVal ord_series_ideal(const Arc& gamma, const Ideal& ideal);
OrderVal ord_series_ideal(const Arc& gamma, const MPoly& f);

// ord_t Jac_sigma(gamma(t)): minimum order over the m-minors of the
// Jacobian along gamma, m = min(d, N).
OrderVal ord_jacobian(const PolyMap& sigma, const Arc& gamma);

// The pair (e, e') classifying gamma: Jacobian order and the H-order of the
// image arc.
struct DeltaClass {
    OrderVal e;
    OrderVal eprime;
};
DeltaClass delta_class(const PolyMap& sigma, const Arc& gamma, const Ideal& h);

// t-adic Smith invariants via determinantal divisors: e_k = D_k - D_{k-1}
// where D_k is the minimal order among k x k minors. Certified only when the
// full-size determinantal order resolves below the cap.
struct SmithResult {
    bool certified = false;
    std::vector<long> invariants;
    long sum() const {
        long s = 0;
        for (long e : invariants) s += e;
        return s;
    }
};
SmithResult t_smith_invariants(const SeriesMatrix& m);

// Row subset of the target coordinates whose d x d Jacobian minor along
// gamma attains the minimal order (lexicographically first among ties).
std::vector<std::size_t> minimal_order_projection(const PolyMap& sigma, const Arc& gamma);

// Fiber of the level-n jet map over the image of gamma: jets
// gamma + t^{n+1-e} u with Jac_{p.sigma}(gamma) u = 0 mod t^e. Its dimension
// equals e.
struct CovFiber {
    long dim = 0;
    AffineFiber space;                    // unknowns: e layers of u in Q^d
    std::vector<std::size_t> projection;  // selected target coordinates
};
CovFiber cov_fiber(const PolyMap& sigma, const Arc& gamma, int level, long e);

// Lift the target arc delta through sigma by Newton iteration from the seed
// gamma: returns eta with sigma(eta) = delta mod t^cap and eta = gamma mod
// t^{n-e+1}. The lift is verified by substitution before being reported.
struct LiftResult {
    bool feasible = false;
    std::string reason; // set when infeasible
    std::optional<Arc> eta;
    long e = 0;
};
LiftResult hensel_lift(const PolyMap& sigma, const Arc& seed, const Arc& target, int level,
                       const std::optional<Ideal>& target_ideal = std::nullopt);

} // namespace jetcalc

#endif
