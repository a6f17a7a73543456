#include "jetcalc/singular.hpp"

#include "jetcalc/matrix.hpp"

namespace jetcalc {

Ideal h_ideal(const Ideal& ideal, int dim, const GroebnerOptions& opts) {
    const Ring& ring = *ideal.ring();
    const long n_amb = static_cast<long>(ring.size());
    if (dim < 0 || dim > n_amb)
        throw precondition_error("dimension must satisfy 0 <= d <= N");
    const std::size_t m = static_cast<std::size_t>(n_amb - dim); // minor size N-d
    if (m > ideal.gens().size())
        throw precondition_error("h_ideal needs at least N-d generators (" + std::to_string(m) +
                                 "), got " + std::to_string(ideal.gens().size()));

    std::vector<MPoly> sum_gens;
    for (const auto& subset : index_subsets(ideal.gens().size(), m)) {
        std::vector<MPoly> chosen;
        for (auto idx : subset) chosen.push_back(ideal.gens()[idx]);

        // Delta(f_1..f_{N-d}): the (N-d)-minors of the Jacobian block.
        std::vector<MPoly> delta_gens;
        if (m == 0) {
            delta_gens.push_back(MPoly::constant(ideal.ring(), Rational(1)));
        } else {
            std::vector<std::vector<MPoly>> rows;
            for (const auto& f : chosen) {
                std::vector<MPoly> row;
                for (long j = 0; j < n_amb; ++j) row.push_back(f.derivative(static_cast<int>(j)));
                rows.push_back(std::move(row));
            }
            delta_gens = minors(PolyMatrix::from_rows(std::move(rows)), m);
        }

        Ideal colon = ideal_colon(Ideal(ideal.ring(), chosen), ideal, opts);

        for (const auto& d : delta_gens) {
            if (d.is_zero()) continue;
            for (const auto& c : colon.gens()) {
                MPoly prod = d * c;
                if (prod.is_zero()) continue;
                bool seen = false;
                for (const auto& g : sum_gens)
                    if (g == prod) { seen = true; break; }
                if (!seen) sum_gens.push_back(std::move(prod));
            }
        }
    }
    Ideal h(ideal.ring(), std::move(sum_gens));
    return ensure_basis(h, MonomialOrder::degrevlex(), opts);
}

OrderVal h_order(const Arc& gamma, const Ideal& h) {
    if (gamma.size() != h.ring()->size())
        throw precondition_error("arc component count differs from the ambient variable count");
    OrderVal best = OrderVal::at_least(gamma.cap());
    for (const auto& g : h.gens()) best = order_min(best, substitute_series(g, gamma).order());
    return best;
}

} // namespace jetcalc
