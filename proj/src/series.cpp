#include "jetcalc/series.hpp"

#include <sstream>

namespace jetcalc {

OrderVal order_min(const OrderVal& a, const OrderVal& b) {
    if (a.certified && b.certified) return OrderVal::exact(std::min(a.value, b.value));
    if (a.certified) return a;
    if (b.certified) return b;
    return OrderVal::at_least(std::min(a.value, b.value));
}

namespace {

void require_compatible(const TruncSeries& a, const TruncSeries& b) {
    if (!same_ring(a.coeff_ring(), b.coeff_ring()))
        throw precondition_error("series coefficient rings differ");
    if (a.cap() != b.cap())
        throw precondition_error("series caps differ (" + std::to_string(a.cap()) + " vs " +
                                 std::to_string(b.cap()) + ")");
}

} // namespace

TruncSeries TruncSeries::zero(RingPtr coeff_ring, int cap) {
    if (cap <= 0) throw precondition_error("series cap must be positive");
    TruncSeries s;
    s.ring_ = coeff_ring;
    s.cap_ = cap;
    s.c_.assign(cap, MPoly::zero(coeff_ring));
    return s;
}

TruncSeries TruncSeries::from_rationals(RingPtr coeff_ring, int cap,
                                        const std::vector<Rational>& coeffs) {
    if (static_cast<int>(coeffs.size()) > cap)
        throw precondition_error("more coefficients than the cap allows");
    TruncSeries s = zero(coeff_ring, cap);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s.c_[k] = MPoly::constant(coeff_ring, coeffs[k]);
    return s;
}

TruncSeries TruncSeries::from_polys(RingPtr coeff_ring, int cap, std::vector<MPoly> coeffs) {
    if (static_cast<int>(coeffs.size()) > cap)
        throw precondition_error("more coefficients than the cap allows");
    TruncSeries s = zero(coeff_ring, cap);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!same_ring(coeffs[k].ring(), coeff_ring))
            throw precondition_error("series coefficient in the wrong ring");
        s.c_[k] = std::move(coeffs[k]);
    }
    return s;
}

bool TruncSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

bool TruncSeries::is_rational() const {
    for (const auto& p : c_)
        if (!p.is_constant()) return false;
    return true;
}

std::vector<Rational> TruncSeries::rational_coeffs() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& p : c_) {
        if (!p.is_constant())
            throw precondition_error("series has non-constant coefficient '" + p.to_string() + "'");
        out.push_back(p.constant_value());
    }
    return out;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s(*this);
    for (auto& p : s.c_) p = -p;
    return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_compatible(*this, o);
    TruncSeries s(*this);
    for (int k = 0; k < cap_; ++k) s.c_[k] = s.c_[k] + o.c_[k];
    return s;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    require_compatible(*this, o);
    TruncSeries s = zero(ring_, cap_);
    for (int i = 0; i < cap_; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j < cap_; ++j) {
            if (o.c_[j].is_zero()) continue;
            s.c_[i + j] = s.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    return s;
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
    TruncSeries s(*this);
    for (auto& p : s.c_) p = p.scaled(c);
    return s;
}

TruncSeries TruncSeries::scaled_poly(const MPoly& c) const {
    TruncSeries s(*this);
    for (auto& p : s.c_) p = p * c;
    return s;
}

TruncSeries TruncSeries::shifted(int k) const {
    if (k < 0) throw precondition_error("negative shift");
    TruncSeries s = zero(ring_, cap_);
    for (int i = 0; i + k < cap_; ++i) s.c_[i + k] = c_[i];
    return s;
}

TruncSeries TruncSeries::pow(unsigned long k) const {
    TruncSeries result = zero(ring_, cap_);
    result.c_[0] = MPoly::constant(ring_, Rational(1));
    TruncSeries base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return result;
}

TruncSeries TruncSeries::truncated(int new_cap) const {
    if (new_cap > cap_) throw precondition_error("truncated() cannot widen the cap");
    if (new_cap <= 0) throw precondition_error("series cap must be positive");
    TruncSeries s = zero(ring_, new_cap);
    for (int k = 0; k < new_cap; ++k) s.c_[k] = c_[k];
    return s;
}

TruncSeries TruncSeries::zero_extended(int new_cap) const {
    if (new_cap < cap_) throw precondition_error("zero_extended() cannot shrink the cap");
    TruncSeries s = zero(ring_, new_cap);
    for (int k = 0; k < cap_; ++k) s.c_[k] = c_[k];
    return s;
}

OrderVal TruncSeries::order() const {
    for (int k = 0; k < cap_; ++k)
        if (!c_[k].is_zero()) return OrderVal::exact(k);
    return OrderVal::at_least(cap_);
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return cap_ == o.cap_ && same_ring(ring_, o.ring_) && c_ == o.c_;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < cap_; ++k) {
        if (c_[k].is_zero()) continue;
        std::string cs;
        bool neg = false;
        if (c_[k].is_constant()) {
            Rational v = c_[k].constant_value();
            neg = v < 0;
            Rational a = neg ? Rational(-v) : v;
            if (a == 1 && k > 0)
                cs = "";
            else
                cs = rat_to_string(a);
        } else {
            cs = "(" + c_[k].to_string() + ")";
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << (cs.empty() ? "1" : cs);
        } else {
            if (!cs.empty()) os << cs << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) return "0";
    return os.str();
}

Arc::Arc(std::vector<TruncSeries> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw precondition_error("arc needs at least one component");
    for (std::size_t i = 1; i < comps_.size(); ++i) require_compatible(comps_[0], comps_[i]);
}

bool Arc::is_rational() const {
    for (const auto& s : comps_)
        if (!s.is_rational()) return false;
    return true;
}

std::vector<Rational> Arc::origin() const {
    std::vector<Rational> out;
    out.reserve(comps_.size());
    for (const auto& s : comps_) {
        if (!s.coeff(0).is_constant())
            throw precondition_error("arc origin has a non-constant coordinate");
        out.push_back(s.coeff(0).constant_value());
    }
    return out;
}

Arc Arc::truncated(int new_cap) const {
    std::vector<TruncSeries> out;
    out.reserve(comps_.size());
    for (const auto& s : comps_) out.push_back(s.truncated(new_cap));
    return Arc(std::move(out));
}

Arc Arc::zero_extended(int new_cap) const {
    std::vector<TruncSeries> out;
    out.reserve(comps_.size());
    for (const auto& s : comps_) out.push_back(s.zero_extended(new_cap));
    return Arc(std::move(out));
}

Arc Arc::with_comp(std::size_t i, TruncSeries s) const {
    std::vector<TruncSeries> out = comps_;
    require_compatible(out.at(i), s);
    out[i] = std::move(s);
    return Arc(std::move(out));
}

TruncSeries substitute_series(const MPoly& f, const Arc& gamma) {
    if (f.ring()->size() != gamma.size())
        throw precondition_error("arc has " + std::to_string(gamma.size()) +
                                 " components but the polynomial has " +
                                 std::to_string(f.ring()->size()) + " variables");
    const RingPtr& cring = gamma.coeff_ring();
    int cap = gamma.cap();
    // Power tables, filled lazily per variable.
    std::vector<std::vector<TruncSeries>> pows(gamma.size());
    for (std::size_t j = 0; j < gamma.size(); ++j)
        pows[j].push_back(TruncSeries::from_rationals(cring, cap, {Rational(1)}));
    auto power = [&](std::size_t j, std::uint32_t e) -> const TruncSeries& {
        while (pows[j].size() <= e) pows[j].push_back(pows[j].back() * gamma.comp(j));
        return pows[j][e];
    };
    TruncSeries acc = TruncSeries::zero(cring, cap);
    for (const auto& term : f.terms()) {
        TruncSeries prod = TruncSeries::from_rationals(cring, cap, {term.coeff});
        for (std::size_t j = 0; j < gamma.size(); ++j) {
            if (term.exp[j] == 0) continue;
            prod = prod * power(j, term.exp[j]);
        }
        acc = acc + prod;
    }
    return acc;
}

} // namespace jetcalc
