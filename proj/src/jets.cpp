#include "jetcalc/jets.hpp"

#include "jetcalc/linalg.hpp"

namespace jetcalc {

namespace {

// Jet variable names v_0..v_level per ambient coordinate, coordinate-major.
RingPtr jet_variable_ring(const Ring& ambient, int level,
                          const std::vector<std::string>& extra_front = {}) {
    std::vector<std::string> names = extra_front;
    for (const auto& v : ambient.vars()) {
        for (int k = 0; k <= level; ++k) {
            std::string name = v + "_" + std::to_string(k);
            names.push_back(name);
        }
    }
    return make_ring(names); // Ring rejects duplicates/collisions
}

} // namespace

JetIdeal jet_ideal(const Ideal& base, int level, const GroebnerOptions& opts) {
    (void)opts;
    if (level < 0) throw precondition_error("jet level must be nonnegative");
    const Ring& ambient = *base.ring();
    RingPtr jring = jet_variable_ring(ambient, level);
    int cap = level + 1;

    // Generic jet: component j is sum_k v_{j,k} t^k.
    std::vector<TruncSeries> comps;
    for (std::size_t j = 0; j < ambient.size(); ++j) {
        std::vector<MPoly> coeffs;
        for (int k = 0; k <= level; ++k) {
            int idx = jring->index_of(ambient.var(j) + "_" + std::to_string(k));
            coeffs.push_back(MPoly::variable(jring, idx));
        }
        comps.push_back(TruncSeries::from_polys(jring, cap, std::move(coeffs)));
    }
    Arc generic(std::move(comps));

    std::vector<MPoly> equations;
    for (const auto& f : base.gens()) {
        TruncSeries s = substitute_series(f, generic);
        for (int k = 0; k <= level; ++k)
            if (!s.coeff(k).is_zero()) equations.push_back(s.coeff(k));
    }
    return JetIdeal{base, level, jring, Ideal(jring, std::move(equations))};
}

bool jet_membership(const Arc& gamma, const Ideal& ideal) {
    if (gamma.size() != ideal.ring()->size())
        throw precondition_error("arc component count differs from the ambient variable count");
    for (const auto& f : ideal.gens())
        if (!substitute_series(f, gamma).is_zero()) return false;
    return true;
}

Arc truncate_jet(const Arc& gamma, int level) {
    if (level + 1 >= gamma.cap())
        throw precondition_error("truncate_jet needs a level below the jet's own level");
    return gamma.truncated(level + 1);
}

AffineFiber fiber_next_level(const Arc& gamma, const Ideal& ideal) {
    if (!gamma.coeff_ring() || gamma.coeff_ring()->size() != 0)
        throw precondition_error("fiber_next_level needs a parameter-free jet");
    if (!jet_membership(gamma, ideal))
        throw precondition_error("jet does not lie on the variety at its level");
    int n = gamma.cap() - 1;
    Arc ext = gamma.zero_extended(n + 2);
    std::vector<Rational> origin = gamma.origin();

    const Ring& ambient = *ideal.ring();
    if (ideal.gens().empty()) {
        // L_n(R^N): every extension works, tangent space is everything.
        AffineFiber fiber;
        fiber.feasible = true;
        fiber.basepoint.assign(ambient.size(), Rational(0));
        for (std::size_t j = 0; j < ambient.size(); ++j) {
            std::vector<Rational> dir(ambient.size(), Rational(0));
            dir[j] = 1;
            fiber.directions.push_back(std::move(dir));
        }
        return fiber;
    }

    QMat jac;       // rows: generators, cols: ambient coordinates
    QVec neg_alpha; // right-hand side
    for (const auto& f : ideal.gens()) {
        TruncSeries s = substitute_series(f, ext);
        const MPoly& alpha = s.coeff(n + 1);
        if (!alpha.is_constant())
            throw precondition_error("unexpected non-constant obstruction coefficient");
        QVec row;
        for (std::size_t j = 0; j < ambient.size(); ++j)
            row.push_back(f.derivative(static_cast<int>(j)).evaluate(origin));
        jac.push_back(std::move(row));
        neg_alpha.push_back(-alpha.constant_value());
    }

    LinearSolution sol = solve_linear(jac, neg_alpha);
    AffineFiber fiber;
    fiber.feasible = sol.consistent;
    if (sol.consistent) fiber.basepoint = sol.particular;
    fiber.directions = sol.kernel;
    return fiber;
}

Ideal ObstructionSystem::ideal() const {
    std::vector<MPoly> gens;
    gens.reserve(conditions.size());
    for (const auto& [order, poly] : conditions) gens.push_back(poly);
    return Ideal(ring, std::move(gens));
}

ObstructionSystem obstruction_system(const Arc& gamma, const Ideal& ideal, int extra) {
    if (extra < 1) throw precondition_error("obstruction_system needs at least one extra level");
    if (gamma.size() != ideal.ring()->size())
        throw precondition_error("arc component count differs from the ambient variable count");
    if (!jet_membership(gamma, ideal))
        throw precondition_error("jet does not lie on the variety at its level");
    int n = gamma.cap() - 1;
    int cap = n + extra + 1;
    const Ring& ambient = *ideal.ring();
    const Ring& params = *gamma.coeff_ring();

    std::vector<std::string> names = params.vars();
    std::vector<std::string> unknowns;
    for (std::size_t j = 0; j < ambient.size(); ++j) {
        for (int l = n + 1; l <= n + extra; ++l) {
            std::string u = ambient.var(j) + "_" + std::to_string(l);
            unknowns.push_back(u);
            names.push_back(u);
        }
    }
    RingPtr ring = make_ring(names);

    std::vector<TruncSeries> comps;
    for (std::size_t j = 0; j < ambient.size(); ++j) {
        std::vector<MPoly> coeffs;
        for (int k = 0; k <= n; ++k) coeffs.push_back(gamma.comp(j).coeff(k).lift_to(ring));
        for (int l = n + 1; l <= n + extra; ++l) {
            int idx = ring->index_of(ambient.var(j) + "_" + std::to_string(l));
            coeffs.push_back(MPoly::variable(ring, idx));
        }
        comps.push_back(TruncSeries::from_polys(ring, cap, std::move(coeffs)));
    }
    Arc ansatz(std::move(comps));

    ObstructionSystem sys;
    sys.level = n;
    sys.extra = extra;
    sys.ring = ring;
    sys.unknowns = std::move(unknowns);
    for (const auto& f : ideal.gens()) {
        TruncSeries s = substitute_series(f, ansatz);
        for (int o = n + 1; o <= n + extra; ++o)
            if (!s.coeff(o).is_zero()) sys.conditions.emplace_back(o, s.coeff(o));
    }
    return sys;
}

long jet_dim(const Ideal& ideal, int level, const GroebnerOptions& opts) {
    JetIdeal ji = jet_ideal(ideal, level, opts);
    return krull_dim(ji.equations, opts);
}

} // namespace jetcalc
