#include "jetcalc/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace jetcalc {

namespace {

const MonomialOrder& canonical_order() {
    static const MonomialOrder drl = MonomialOrder::degrevlex();
    return drl;
}

struct CanonicalLess {
    bool operator()(const Exp& a, const Exp& b) const {
        return canonical_order().compare(a, b) < 0;
    }
};

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b))
        throw precondition_error("polynomial operands live in different rings");
}

} // namespace

MPoly mpoly_from_sorted(RingPtr ring, std::vector<Term>&& terms) {
    MPoly p;
    p.ring_ = std::move(ring);
    p.terms_ = std::move(terms);
    return p;
}

MPoly MPoly::zero(RingPtr ring) { return mpoly_from_sorted(std::move(ring), {}); }

MPoly MPoly::constant(RingPtr ring, const Rational& c) {
    if (c == 0) return zero(std::move(ring));
    std::vector<Term> t{Term{Exp(ring->size(), 0), c}};
    return mpoly_from_sorted(std::move(ring), std::move(t));
}

MPoly MPoly::variable(RingPtr ring, int index) {
    if (index < 0 || static_cast<std::size_t>(index) >= ring->size())
        throw precondition_error("variable index out of range");
    Exp e(ring->size(), 0);
    e[index] = 1;
    std::vector<Term> t{Term{std::move(e), Rational(1)}};
    return mpoly_from_sorted(std::move(ring), std::move(t));
}

MPoly MPoly::monomial(RingPtr ring, Exp exp, const Rational& coeff) {
    if (exp.size() != ring->size())
        throw precondition_error("exponent vector length mismatch");
    if (coeff == 0) return zero(std::move(ring));
    std::vector<Term> t{Term{std::move(exp), coeff}};
    return mpoly_from_sorted(std::move(ring), std::move(t));
}

MPoly MPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Exp, Rational, CanonicalLess> acc;
    for (auto& t : terms) {
        if (t.exp.size() != ring->size())
            throw precondition_error("exponent vector length mismatch");
        acc[t.exp] += t.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.push_back(Term{it->first, it->second});
    return mpoly_from_sorted(std::move(ring), std::move(out));
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total_degree(terms_[0].exp) == 0);
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    const Term& last = terms_.back();
    if (exp_total_degree(last.exp) == 0) return last.coeff;
    return Rational(0);
}

long MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, exp_total_degree(t.exp));
    return d;
}

long MPoly::degree_in(int var) const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.exp.at(var)));
    return d;
}

MPoly MPoly::operator-() const {
    std::vector<Term> out(terms_);
    for (auto& t : out) t.coeff = -t.coeff;
    return mpoly_from_sorted(ring_, std::move(out));
}

MPoly MPoly::operator+(const MPoly& o) const {
    require_same_ring(ring_, o.ring_);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& ord = canonical_order();
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].exp, o.terms_[j].exp);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) out.push_back(Term{terms_[i].exp, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return mpoly_from_sorted(ring_, std::move(out));
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    require_same_ring(ring_, o.ring_);
    std::map<Exp, Rational, CanonicalLess> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Exp e(a.exp.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exp[k] + b.exp[k];
            acc[std::move(e)] += a.coeff * b.coeff;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.push_back(Term{it->first, it->second});
    return mpoly_from_sorted(ring_, std::move(out));
}

MPoly MPoly::scaled(const Rational& c) const {
    if (c == 0) return zero(ring_);
    std::vector<Term> out(terms_);
    for (auto& t : out) t.coeff *= c;
    return mpoly_from_sorted(ring_, std::move(out));
}

MPoly MPoly::mul_monomial(const Exp& e, const Rational& c) const {
    if (c == 0) return zero(ring_);
    std::vector<Term> out(terms_);
    for (auto& t : out) {
        for (std::size_t k = 0; k < e.size(); ++k) t.exp[k] += e[k];
        t.coeff *= c;
    }
    return mpoly_from_sorted(ring_, std::move(out));
}

MPoly MPoly::pow(unsigned long k) const {
    MPoly result = constant(ring_, Rational(1));
    MPoly base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return result;
}

bool MPoly::operator==(const MPoly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

MPoly MPoly::derivative(int var) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::uint32_t e = t.exp.at(var);
        if (e == 0) continue;
        Term d = t;
        d.exp[var] = e - 1;
        d.coeff *= Rational(static_cast<long>(e));
        out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->size())
        throw precondition_error("evaluation point has wrong dimension");
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational m = t.coeff;
        for (std::size_t j = 0; j < point.size(); ++j) {
            for (std::uint32_t k = 0; k < t.exp[j]; ++k) m *= point[j];
        }
        acc += m;
    }
    return acc;
}

MPoly MPoly::map_vars(RingPtr new_ring, const std::vector<int>& var_map) const {
    if (var_map.size() != ring_->size())
        throw precondition_error("variable map has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exp e(new_ring->size(), 0);
        for (std::size_t j = 0; j < t.exp.size(); ++j) {
            if (t.exp[j] == 0) continue;
            if (var_map[j] < 0)
                throw precondition_error("variable '" + ring_->var(j) +
                                         "' has no image in the target ring");
            e[var_map[j]] += t.exp[j];
        }
        out.push_back(Term{std::move(e), t.coeff});
    }
    return from_terms(std::move(new_ring), std::move(out));
}

MPoly MPoly::lift_to(RingPtr new_ring) const {
    std::vector<int> var_map(ring_->size());
    for (std::size_t j = 0; j < ring_->size(); ++j) {
        int idx = new_ring->index_of(ring_->var(j));
        var_map[j] = idx; // -1 tolerated unless the variable occurs
    }
    return map_vars(std::move(new_ring), var_map);
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        bool has_vars = exp_total_degree(t.exp) > 0;
        bool printed_coeff = false;
        if (!has_vars || c != 1) {
            os << rat_to_string(c);
            printed_coeff = true;
        }
        bool first_var = true;
        for (std::size_t j = 0; j < t.exp.size(); ++j) {
            if (t.exp[j] == 0) continue;
            if (printed_coeff || !first_var) os << "*";
            os << ring_->var(j);
            if (t.exp[j] > 1) os << "^" << t.exp[j];
            printed_coeff = true;
            first_var = false;
        }
        first = false;
    }
    return os.str();
}

} // namespace jetcalc
