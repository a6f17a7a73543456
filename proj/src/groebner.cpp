#include "jetcalc/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace jetcalc {

Ideal::Ideal(RingPtr ring, std::vector<MPoly> gens) : ring_(std::move(ring)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (!same_ring(g.ring(), ring_))
            throw precondition_error("ideal generator lives in a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::with_cached_basis(std::shared_ptr<const GroebnerBasis> gb) const {
    Ideal copy(*this);
    copy.gb_ = std::move(gb);
    return copy;
}

namespace {

bool exp_divides(const Exp& a, const Exp& b) { // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
    return e;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
    return e;
}

bool exp_coprime(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

const Term& leading_term(const MPoly& f, const MonomialOrder& order) {
    const auto& ts = f.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (order.compare(ts[i].exp, ts[best].exp) > 0) best = i;
    return ts[best];
}

void check_degree_cap(const MPoly& f, const GroebnerOptions& opts) {
    if (f.total_degree() > opts.max_total_degree)
        throw resource_error("total degree cap exceeded (" +
                             std::to_string(opts.max_total_degree) +
                             "); raise --max-degree to continue");
}

struct BasisElem {
    MPoly poly;
    Exp lm;
    Rational lc;
    long sugar;
};

// Full multivariate division: every term of f is reduced against the first
// basis element whose leading monomial divides it. Returns the remainder
// and, when `sugar` is supplied, tracks the sugar degree of the result.
MPoly reduce_full(const MPoly& f, const std::vector<BasisElem>& basis,
                  const MonomialOrder& order, const GroebnerOptions& opts,
                  unsigned long& reduction_budget, long* sugar = nullptr) {
    MPoly rem = MPoly::zero(f.ring());
    MPoly work = f;
    while (!work.is_zero()) {
        if (reduction_budget-- == 0)
            throw resource_error("reduction step cap exceeded; raise the resource limits");
        const Term lt = leading_term(work, order);
        bool reduced = false;
        for (const auto& b : basis) {
            if (!exp_divides(b.lm, lt.exp)) continue;
            Exp q = exp_sub(lt.exp, b.lm);
            Rational c = lt.coeff / b.lc;
            work = work - b.poly.mul_monomial(q, c);
            check_degree_cap(work, opts);
            if (sugar) *sugar = std::max(*sugar, b.sugar + exp_total_degree(q));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem = rem + MPoly::monomial(work.ring(), lt.exp, lt.coeff);
            work = work - MPoly::monomial(work.ring(), lt.exp, lt.coeff);
        }
    }
    return rem;
}

struct Pair {
    std::size_t i, j;
    Exp lcm;
    long sugar;
    long lcm_deg;
};

// Buchberger with the sugar selection strategy and both classical criteria.
std::vector<MPoly> buchberger(const Ideal& ideal, const MonomialOrder& order,
                              const GroebnerOptions& opts) {
    RingPtr ring = ideal.ring();
    std::vector<BasisElem> basis;
    unsigned long budget = opts.max_reductions;

    auto push_elem = [&](const MPoly& p) {
        const Term& lt = leading_term(p, order);
        basis.push_back(BasisElem{p, lt.exp, lt.coeff, p.total_degree()});
        if (basis.size() > opts.max_basis)
            throw resource_error("basis size cap exceeded (" + std::to_string(opts.max_basis) +
                                 "); raise --max-basis to continue");
    };

    for (const auto& g : ideal.gens()) {
        check_degree_cap(g, opts);
        push_elem(g);
    }
    if (basis.empty()) return {};

    std::vector<Pair> pairs;
    auto add_pairs_for = [&](std::size_t jnew) {
        for (std::size_t i = 0; i < jnew; ++i) {
            Exp l = exp_lcm(basis[i].lm, basis[jnew].lm);
            long ldeg = exp_total_degree(l);
            long sugar = std::max(basis[i].sugar + ldeg - exp_total_degree(basis[i].lm),
                                  basis[jnew].sugar + ldeg - exp_total_degree(basis[jnew].lm));
            pairs.push_back(Pair{i, jnew, std::move(l), sugar, ldeg});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::set<std::pair<std::size_t, std::size_t>> treated;
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair pr = *it;
        pairs.erase(it);
        treated.insert({pr.i, pr.j});

        // First criterion: coprime leading monomials reduce to zero.
        if (exp_coprime(basis[pr.i].lm, basis[pr.j].lm)) continue;
        // Chain criterion: some k with LM(k) | lcm and both (i,k), (k,j)
        // already treated.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!exp_divides(basis[k].lm, pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(k, pr.j);
            if (treated.count({key1.first, key1.second}) &&
                treated.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        const BasisElem& fi = basis[pr.i];
        const BasisElem& fj = basis[pr.j];
        MPoly spoly = fi.poly.mul_monomial(exp_sub(pr.lcm, fi.lm), Rational(1) / fi.lc) -
                      fj.poly.mul_monomial(exp_sub(pr.lcm, fj.lm), Rational(1) / fj.lc);
        check_degree_cap(spoly, opts);
        long sugar = pr.sugar;
        MPoly rem = reduce_full(spoly, basis, order, opts, budget, &sugar);
        if (rem.is_zero()) continue;
        push_elem(rem);
        basis.back().sugar = sugar;
        add_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another one.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (exp_divides(basis[j].lm, basis[i].lm)) {
                if (basis[j].lm == basis[i].lm)
                    redundant = j < i; // identical monomials: keep the first
                else
                    redundant = true;
            }
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<BasisElem> minimal;
    for (auto i : keep) minimal.push_back(basis[i]);

    // Tail-reduce each element against the others and normalize monic.
    std::vector<MPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BasisElem> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MPoly r = reduce_full(minimal[i].poly, others, order, opts, budget);
        if (r.is_zero()) continue; // should not happen after minimalization
        const Term& lt = leading_term(r, order);
        reduced.push_back(r.scaled(Rational(1) / lt.coeff));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
        return order.compare(leading_term(a, order).exp, leading_term(b, order).exp) < 0;
    });
    return reduced;
}

std::vector<BasisElem> as_elems(const std::vector<MPoly>& polys, const MonomialOrder& order) {
    std::vector<BasisElem> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        const Term& lt = leading_term(p, order);
        out.push_back(BasisElem{p, lt.exp, lt.coeff, p.total_degree()});
    }
    return out;
}

// Fresh tag-variable name not clashing with the ring.
std::string fresh_var_name(const Ring& ring, const std::string& stem) {
    std::string name = stem;
    int counter = 0;
    while (ring.index_of(name) >= 0) name = stem + std::to_string(counter++);
    return name;
}

} // namespace

std::vector<MPoly> groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                                  const GroebnerOptions& opts) {
    if (auto gb = ideal.cached_basis(); gb && gb->order == order) return gb->polys;
    return buchberger(ideal, order, opts);
}

Ideal ensure_basis(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& opts) {
    if (auto gb = ideal.cached_basis(); gb && gb->order == order) return ideal;
    auto gb = std::make_shared<GroebnerBasis>(GroebnerBasis{order, groebner_basis(ideal, order, opts)});
    return ideal.with_cached_basis(std::move(gb));
}

MPoly normal_form(const MPoly& f, const Ideal& ideal, const GroebnerOptions& opts) {
    if (!same_ring(f.ring(), ideal.ring()))
        throw precondition_error("normal_form: polynomial and ideal rings differ");
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<MPoly> basis;
    if (auto gb = ideal.cached_basis()) {
        order = gb->order;
        basis = gb->polys;
    } else {
        basis = groebner_basis(ideal, order, opts);
    }
    if (basis.empty()) return f;
    unsigned long budget = opts.max_reductions;
    auto elems = as_elems(basis, order);
    return reduce_full(f, elems, order, opts, budget);
}

bool ideal_contains(const Ideal& ideal, const MPoly& f, const GroebnerOptions& opts) {
    return normal_form(f, ideal, opts).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
    Ideal ac = ensure_basis(a, MonomialOrder::degrevlex(), opts);
    Ideal bc = ensure_basis(b, MonomialOrder::degrevlex(), opts);
    for (const auto& g : a.gens())
        if (!ideal_contains(bc, g, opts)) return false;
    for (const auto& g : b.gens())
        if (!ideal_contains(ac, g, opts)) return false;
    return true;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& opts) {
    if (!same_ring(a.ring(), b.ring()))
        throw precondition_error("ideal_intersect: rings differ");
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring());
    const Ring& ring = *a.ring();
    std::string tag = fresh_var_name(ring, "@w");
    std::vector<std::string> ext_vars = ring.vars();
    ext_vars.push_back(tag);
    RingPtr ext = make_ring(ext_vars);
    int tag_idx = ext->index_of(tag);

    MPoly w = MPoly::variable(ext, tag_idx);
    MPoly one_minus_w = MPoly::constant(ext, Rational(1)) - w;
    std::vector<MPoly> gens;
    for (const auto& f : a.gens()) gens.push_back(f.lift_to(ext) * w);
    for (const auto& g : b.gens()) gens.push_back(g.lift_to(ext) * one_minus_w);
    Ideal mixed(ext, std::move(gens));
    return eliminate(mixed, {tag}, opts);
}

Ideal ideal_colon(const Ideal& i, const Ideal& j, const GroebnerOptions& opts) {
    if (!same_ring(i.ring(), j.ring()))
        throw precondition_error("ideal_colon: rings differ");
    if (j.is_zero_ideal()) return Ideal::unit(i.ring());
    std::optional<Ideal> acc;
    for (const auto& g : j.gens()) {
        Ideal gi(i.ring(), {g});
        Ideal meet = ideal_intersect(i, gi, opts);
        std::vector<MPoly> quot;
        for (const auto& k : meet.gens()) quot.push_back(exact_divide(k, g));
        Ideal part(i.ring(), std::move(quot));
        acc = acc ? ideal_intersect(*acc, part, opts) : part;
    }
    return *acc;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& vars_to_remove,
                const GroebnerOptions& opts) {
    const Ring& ring = *ideal.ring();
    std::vector<char> mask(ring.size(), 0);
    for (const auto& name : vars_to_remove) {
        int idx = ring.index_of(name);
        if (idx < 0) throw precondition_error("eliminate: unknown variable '" + name + "'");
        mask[idx] = 1;
    }
    std::vector<std::string> kept;
    for (std::size_t k = 0; k < ring.size(); ++k)
        if (!mask[k]) kept.push_back(ring.var(k));
    if (kept.empty()) throw precondition_error("eliminate: cannot remove every variable");
    RingPtr restricted = make_ring(kept);

    MonomialOrder order = MonomialOrder::elimination(mask);
    std::vector<MPoly> gb = groebner_basis(ideal, order, opts);
    std::vector<MPoly> out;
    for (const auto& p : gb) {
        bool uses_removed = false;
        for (const auto& t : p.terms()) {
            for (std::size_t k = 0; k < mask.size() && !uses_removed; ++k)
                if (mask[k] && t.exp[k] > 0) uses_removed = true;
            if (uses_removed) break;
        }
        if (!uses_removed) out.push_back(p.lift_to(restricted));
    }
    return Ideal(restricted, std::move(out));
}

long krull_dim(const Ideal& ideal, const GroebnerOptions& opts) {
    const std::size_t n = ideal.ring()->size();
    if (ideal.is_zero_ideal()) return static_cast<long>(n);
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<MPoly> gb = groebner_basis(ideal, order, opts);
    if (gb.empty()) return static_cast<long>(n);

    std::vector<std::uint64_t> supports;
    if (n > 63) throw resource_error("krull_dim supports at most 63 variables");
    for (const auto& p : gb) {
        const Term& lt = leading_term(p, order);
        if (exp_total_degree(lt.exp) == 0) return -1; // unit ideal
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (lt.exp[k] > 0) s |= (std::uint64_t(1) << k);
        supports.push_back(s);
    }
    // Drop supports containing another support (they impose weaker
    // constraints on the transversal).
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<std::uint64_t> minimal;
    for (auto s : supports) {
        bool keep = true;
        for (auto t : supports)
            if (t != s && (t & s) == t) { keep = false; break; }
        if (keep) minimal.push_back(s);
    }

    // dim = n - (minimum hitting set of the supports): S is independent iff
    // its complement hits every leading-monomial support.
    std::size_t best = n;
    auto rec = [&](auto&& self, std::uint64_t chosen, std::size_t size) -> void {
        if (size >= best) return;
        std::uint64_t uncovered = 0;
        for (auto s : minimal) {
            if ((s & chosen) == 0) { uncovered = s; break; }
        }
        if (uncovered == 0) {
            best = size;
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (!(uncovered & (std::uint64_t(1) << v))) continue;
            self(self, chosen | (std::uint64_t(1) << v), size + 1);
        }
    };
    rec(rec, 0, 0);
    return static_cast<long>(n - best);
}

MPoly exact_divide(const MPoly& f, const MPoly& g) {
    if (!same_ring(f.ring(), g.ring()))
        throw precondition_error("exact_divide: rings differ");
    if (g.is_zero()) throw precondition_error("exact_divide: division by zero");
    MonomialOrder order = MonomialOrder::degrevlex();
    const Term& glt = leading_term(g, order);
    MPoly quot = MPoly::zero(f.ring());
    MPoly work = f;
    while (!work.is_zero()) {
        const Term& lt = leading_term(work, order);
        if (!exp_divides(glt.exp, lt.exp))
            throw precondition_error("exact_divide: '" + g.to_string() + "' does not divide '" +
                                     f.to_string() + "'");
        Exp q = exp_sub(lt.exp, glt.exp);
        Rational c = lt.coeff / glt.coeff;
        quot = quot + MPoly::monomial(f.ring(), q, c);
        work = work - g.mul_monomial(q, c);
    }
    return quot;
}

} // namespace jetcalc
