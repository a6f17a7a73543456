#ifndef JETCALC_IDEAL_HPP
#define JETCALC_IDEAL_HPP

#include <memory>
#include <vector>

#include "jetcalc/mpoly.hpp"

namespace jetcalc {

// Hard caps for basis computations. Jet ideals grow quickly; we fail loudly
// with resource_error instead of truncating silently.
struct GroebnerOptions {
    long max_total_degree = 64;
    std::size_t max_basis = 512;
    unsigned long max_reductions = 2000000;
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<MPoly> polys; // reduced: monic, tail-reduced, ascending by order
};

// Generator list plus an optional cached reduced basis. Immutable value;
// attaching a basis produces a new Ideal.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<MPoly> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring) {
        std::vector<MPoly> g{MPoly::constant(ring, Rational(1))};
        return Ideal(std::move(ring), std::move(g));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<MPoly>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    std::shared_ptr<const GroebnerBasis> cached_basis() const { return gb_; }
    Ideal with_cached_basis(std::shared_ptr<const GroebnerBasis> gb) const;

private:
    RingPtr ring_;
    std::vector<MPoly> gens_;
    std::shared_ptr<const GroebnerBasis> gb_;
};

} // namespace jetcalc

#endif
