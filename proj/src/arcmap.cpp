#include "jetcalc/arcmap.hpp"

#include <algorithm>

#include "jetcalc/linalg.hpp"

namespace jetcalc {

PolyMap::PolyMap(RingPtr source, RingPtr target, std::vector<MPoly> comps)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
    if (comps_.size() != target_->size())
        throw precondition_error("map needs one component per target coordinate");
    for (const auto& c : comps_)
        if (!same_ring(c.ring(), source_))
            throw precondition_error("map component lives outside the source ring");
}

PolyMatrix PolyMap::jacobian() const {
    std::vector<std::vector<MPoly>> rows;
    for (const auto& c : comps_) {
        std::vector<MPoly> row;
        for (std::size_t j = 0; j < source_->size(); ++j)
            row.push_back(c.derivative(static_cast<int>(j)));
        rows.push_back(std::move(row));
    }
    return PolyMatrix::from_rows(std::move(rows));
}

Arc apply_map(const PolyMap& sigma, const Arc& gamma) {
    if (gamma.size() != sigma.source_dim())
        throw precondition_error("arc dimension differs from the map's source dimension");
    std::vector<TruncSeries> comps;
    comps.reserve(sigma.target_dim());
    for (const auto& c : sigma.comps()) comps.push_back(substitute_series(c, gamma));
    return Arc(std::move(comps));
}

OrderVal ord_series_ideal(const Arc& gamma, const Ideal& ideal) {
    if (gamma.size() != ideal.ring()->size())
        throw precondition_error("arc component count differs from the ambient variable count");
    OrderVal best = OrderVal::at_least(gamma.cap());
    for (const auto& f : ideal.gens()) best = order_min(best, substitute_series(f, gamma).order());
    return best;
}

OrderVal ord_series_ideal(const Arc& gamma, const MPoly& f) {
    return substitute_series(f, gamma).order();
}

namespace {

// Jacobian along the arc as a series matrix (N rows, d cols).
SeriesMatrix jacobian_along(const PolyMap& sigma, const Arc& gamma) {
    PolyMatrix jac = sigma.jacobian();
    std::vector<std::vector<TruncSeries>> rows;
    for (std::size_t i = 0; i < jac.rows(); ++i) {
        std::vector<TruncSeries> row;
        for (std::size_t j = 0; j < jac.cols(); ++j)
            row.push_back(substitute_series(jac.at(i, j), gamma));
        rows.push_back(std::move(row));
    }
    return SeriesMatrix::from_rows(std::move(rows));
}

} // namespace

OrderVal ord_jacobian(const PolyMap& sigma, const Arc& gamma) {
    if (gamma.size() != sigma.source_dim())
        throw precondition_error("arc dimension differs from the map's source dimension");
    SeriesMatrix jac = jacobian_along(sigma, gamma);
    std::size_t m = std::min(sigma.source_dim(), sigma.target_dim());
    OrderVal best = OrderVal::at_least(gamma.cap());
    for (const auto& minor : minors(jac, m)) best = order_min(best, minor.order());
    return best;
}

DeltaClass delta_class(const PolyMap& sigma, const Arc& gamma, const Ideal& h) {
    OrderVal e = ord_jacobian(sigma, gamma);
    OrderVal eprime = h_order(apply_map(sigma, gamma), h);
    return DeltaClass{e, eprime};
}

SmithResult t_smith_invariants(const SeriesMatrix& m) {
    std::size_t r = std::min(m.rows(), m.cols());
    SmithResult out;
    std::vector<long> det_orders; // D_k, minimal order among k x k minors
    for (std::size_t k = 1; k <= r; ++k) {
        OrderVal best = OrderVal::at_least(m.cap());
        for (const auto& minor : minors(m, k)) best = order_min(best, minor.order());
        if (!best.certified) {
            out.certified = false;
            return out; // cap too small to certify rank r behavior
        }
        det_orders.push_back(best.value);
    }
    out.certified = true;
    long prev = 0;
    for (std::size_t k = 0; k < det_orders.size(); ++k) {
        out.invariants.push_back(det_orders[k] - prev);
        prev = det_orders[k];
    }
    return out;
}

std::vector<std::size_t> minimal_order_projection(const PolyMap& sigma, const Arc& gamma) {
    const std::size_t d = sigma.source_dim();
    const std::size_t n = sigma.target_dim();
    if (n < d) throw precondition_error("projection selection needs target dimension >= source");
    SeriesMatrix jac = jacobian_along(sigma, gamma);
    std::vector<std::size_t> best_rows;
    OrderVal best = OrderVal::at_least(gamma.cap());
    for (const auto& rows : index_subsets(n, d)) {
        OrderVal o = determinant(jac.select_rows(rows)).order();
        if (o.certified && (!best.certified || o.value < best.value)) {
            best = o;
            best_rows = rows;
        }
    }
    if (!best.certified)
        throw critical_locus_error(
            "all d x d Jacobian minors vanish to the cap; cannot certify an order");
    return best_rows;
}

CovFiber cov_fiber(const PolyMap& sigma, const Arc& gamma, int level, long e) {
    if (!gamma.is_rational())
        throw precondition_error("cov_fiber needs a parameter-free arc");
    OrderVal eo = ord_jacobian(sigma, gamma);
    if (!eo.certified)
        throw critical_locus_error("Jacobian order unresolved at this cap");
    if (eo.value != e)
        throw precondition_error("stated order e=" + std::to_string(e) +
                                 " but ord_jacobian is " + eo.to_string());
    if (level < 2 * e)
        throw precondition_error("cov_fiber needs n >= 2e (n=" + std::to_string(level) +
                                 ", e=" + std::to_string(e) + ")");
    if (gamma.cap() < level + 1)
        throw precondition_error("arc cap must be at least n+1");

    CovFiber fiber;
    fiber.projection = minimal_order_projection(sigma, gamma);
    const std::size_t d = sigma.source_dim();

    if (e == 0) {
        fiber.dim = 0;
        fiber.space.feasible = true;
        return fiber;
    }

    SeriesMatrix a = jacobian_along(sigma, gamma).select_rows(fiber.projection);
    // Unknowns: u = u_0 + ... + u_{e-1} t^{e-1}, u_i in Q^d, flattened as
    // layer-major (layer i, coordinate c) -> i*d + c.
    const std::size_t cols = static_cast<std::size_t>(e) * d;
    QMat sys;
    for (long o = 0; o < e; ++o) {
        for (std::size_t row = 0; row < d; ++row) {
            QVec r(cols, Rational(0));
            for (long i = 0; i <= o; ++i) {
                long k = o - i; // t^k coefficient of A entries
                for (std::size_t c = 0; c < d; ++c) {
                    const MPoly& entry = a.at(row, c).coeff(static_cast<int>(k));
                    if (!entry.is_zero())
                        r[static_cast<std::size_t>(i) * d + c] += entry.constant_value();
                }
            }
            sys.push_back(std::move(r));
        }
    }
    fiber.space.feasible = true;
    fiber.space.basepoint.assign(cols, Rational(0));
    fiber.space.directions = kernel_basis(sys, cols);
    fiber.dim = static_cast<long>(fiber.space.directions.size());
    return fiber;
}

LiftResult hensel_lift(const PolyMap& sigma, const Arc& seed, const Arc& target, int level,
                       const std::optional<Ideal>& target_ideal) {
    const std::size_t d = sigma.source_dim();
    const std::size_t n_tgt = sigma.target_dim();
    if (n_tgt < d)
        throw precondition_error("hensel_lift needs target dimension >= source dimension");
    if (!seed.is_rational() || !target.is_rational())
        throw precondition_error("hensel_lift needs parameter-free arcs");
    if (seed.size() != d)
        throw precondition_error("seed arc dimension differs from the map's source");
    if (target.size() != n_tgt)
        throw precondition_error("target arc dimension differs from the map's target");
    if (seed.cap() != target.cap())
        throw precondition_error("seed and target caps differ");
    const int cap = seed.cap();
    if (level < 0 || level + 1 > cap)
        throw precondition_error("level must satisfy 0 <= n < cap");

    OrderVal eo = ord_jacobian(sigma, seed);
    if (!eo.certified)
        throw critical_locus_error(
            "all Jacobian minors vanish to the cap; the seed cannot be certified "
            "to lie outside the critical locus");
    const long e = eo.value;

    LiftResult result;
    result.e = e;

    if (target_ideal) {
        if (target_ideal->ring()->size() != n_tgt)
            throw precondition_error("target ideal ring does not match the map's target");
        for (const auto& f : target_ideal->gens()) {
            if (!substitute_series(f, target).is_zero()) {
                result.feasible = false;
                result.reason = "target arc does not satisfy the supplied ideal modulo t^cap";
                return result;
            }
        }
    }

    // Seed congruence: sigma(seed) = target mod t^{n+1}.
    {
        Arc image = apply_map(sigma, seed);
        for (std::size_t i = 0; i < n_tgt; ++i) {
            for (int k = 0; k <= level; ++k) {
                if (image.comp(i).coeff(k) != target.comp(i).coeff(k))
                    throw precondition_error(
                        "sigma(seed) does not agree with the target modulo t^{n+1}");
            }
        }
    }

    // Work at cap + e so the reported lift is canonical modulo t^cap: jets
    // with the same image at level cap+e-1 agree below cap.
    const int work_cap = cap + static_cast<int>(e);
    Arc eta = seed.zero_extended(work_cap);
    Arc delta = target.zero_extended(work_cap);
    std::vector<std::size_t> proj = minimal_order_projection(sigma, seed);

    const int max_iters = 4 * work_cap + 8;
    long prev_order = -1;
    for (int iter = 0;; ++iter) {
        if (iter > max_iters)
            throw resource_error("hensel_lift: Newton iteration did not converge");
        Arc image = apply_map(sigma, eta);
        // Projected residual.
        std::vector<TruncSeries> res;
        OrderVal rord = OrderVal::at_least(work_cap);
        for (auto row : proj) {
            TruncSeries r = delta.comp(row) - image.comp(row);
            rord = order_min(rord, r.order());
            res.push_back(std::move(r));
        }
        if (!rord.certified) break; // projected system solved mod t^{work_cap}
        const long m = rord.value;
        if (m <= prev_order)
            throw resource_error("hensel_lift: Newton iteration stalled at order " +
                                 std::to_string(m));
        prev_order = m;

        // Solve J_p(eta) * du = residual for du supported on t^{m-e}.. ,
        // keeping every consistent order from the bottom up; equations are
        // grouped by t-order so an inconsistent high order just truncates
        // the step.
        SeriesMatrix a = jacobian_along(sigma, eta).select_rows(proj);
        const long base = m - e;
        if (base < 0)
            throw resource_error("hensel_lift: residual order below Jacobian order");
        const std::size_t layers = static_cast<std::size_t>(work_cap - base);
        const std::size_t cols = layers * d;
        IncrementalSolver solver(cols);
        for (long o = 0; o < work_cap; ++o) {
            bool all_ok = true;
            for (std::size_t row = 0; row < d && all_ok; ++row) {
                QVec r(cols, Rational(0));
                // coefficient of t^o in sum_c a[row][c] * t^{base} u_c(t)
                for (long i = 0; static_cast<std::size_t>(i) < layers; ++i) {
                    long k = o - base - i;
                    if (k < 0) break;
                    if (k >= work_cap) continue;
                    for (std::size_t c = 0; c < d; ++c) {
                        const MPoly& entry = a.at(row, c).coeff(static_cast<int>(k));
                        if (!entry.is_zero())
                            r[static_cast<std::size_t>(i) * d + c] += entry.constant_value();
                    }
                }
                Rational rhs = res[row].coeff(static_cast<int>(o)).constant_value();
                all_ok = solver.add_row(std::move(r), std::move(rhs));
            }
            if (!all_ok) break; // keep the consistent prefix
        }
        QVec u = solver.solve();
        bool moved = false;
        std::vector<TruncSeries> new_comps;
        for (std::size_t c = 0; c < d; ++c) {
            TruncSeries comp = eta.comp(c);
            for (std::size_t i = 0; i < layers; ++i) {
                const Rational& v = u[i * d + c];
                if (v == 0) continue;
                moved = true;
                std::vector<Rational> mono(static_cast<std::size_t>(base) + i + 1, Rational(0));
                mono.back() = v;
                comp = comp + TruncSeries::from_rationals(eta.coeff_ring(), work_cap, mono);
            }
            new_comps.push_back(std::move(comp));
        }
        if (!moved)
            throw resource_error("hensel_lift: Newton iteration stalled (no correction found)");
        eta = Arc(std::move(new_comps));
    }

    Arc eta_out = eta.truncated(cap);
    // Full verification across all target coordinates, not just the
    // projected ones.
    Arc image = apply_map(sigma, eta_out);
    for (std::size_t i = 0; i < n_tgt; ++i) {
        if (!(image.comp(i) - target.comp(i)).is_zero()) {
            result.feasible = false;
            result.reason =
                "no lift exists: the unprojected target coordinates violate the image relations";
            return result;
        }
    }
    result.feasible = true;
    result.eta = eta_out;
    return result;
}

} // namespace jetcalc
