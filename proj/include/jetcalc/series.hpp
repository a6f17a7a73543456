#ifndef JETCALC_SERIES_HPP
#define JETCALC_SERIES_HPP

#include <string>
#include <vector>

#include "jetcalc/mpoly.hpp"

namespace jetcalc {

// An order certificate at a finite cap. `certified` means the value is the
// exact t-order; otherwise every stored coefficient vanishes and all that is
// known is order >= value (value is the cap used).
struct OrderVal {
    long value = 0;
    bool certified = true;

    static OrderVal exact(long v) { return OrderVal{v, true}; }
    static OrderVal at_least(long cap) { return OrderVal{cap, false}; }

    bool operator==(const OrderVal& o) const {
        return value == o.value && certified == o.certified;
    }
    std::string to_string() const {
        return certified ? std::to_string(value) : ">=" + std::to_string(value);
    }
};

// min with sentinel semantics: any certified order beats an uncertified one;
// two uncertified bounds combine to the weaker bound.
OrderVal order_min(const OrderVal& a, const OrderVal& b);

// Element of R[t]/t^K where R is Q or a polynomial ring in declared
// parameters. Coefficients are stored for degrees 0..K-1; arithmetic never
// reports anything at degree >= K.
class TruncSeries {
public:
    TruncSeries() = default;

    static TruncSeries zero(RingPtr coeff_ring, int cap);
    static TruncSeries from_rationals(RingPtr coeff_ring, int cap,
                                      const std::vector<Rational>& coeffs);
    static TruncSeries from_polys(RingPtr coeff_ring, int cap, std::vector<MPoly> coeffs);

    int cap() const { return cap_; }
    const RingPtr& coeff_ring() const { return ring_; }
    const MPoly& coeff(int k) const { return c_.at(k); }
    const std::vector<MPoly>& coeffs() const { return c_; }

    bool is_zero() const;
    // True when every coefficient is a constant polynomial.
    bool is_rational() const;
    std::vector<Rational> rational_coeffs() const;

    TruncSeries operator-() const;
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(const Rational& c) const;
    TruncSeries scaled_poly(const MPoly& c) const;
    // Multiply by t^k (k >= 0), dropping overflow past the cap.
    TruncSeries shifted(int k) const;
    TruncSeries pow(unsigned long k) const;

    TruncSeries truncated(int new_cap) const;     // new_cap <= cap
    // Reinterpret as an exact polynomial and widen the cap with zero
    // coefficients; only valid when the series is literal data (a jet
    // representative), not the truncation of an unknown series.
    TruncSeries zero_extended(int new_cap) const; // new_cap >= cap

    OrderVal order() const;

    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    std::string to_string() const; // polynomial in t, e.g. "(b^2 - a)*t^6"

private:
    RingPtr ring_;
    int cap_ = 0;
    std::vector<MPoly> c_;
};

// A truncated arc/jet: one series per ambient coordinate, all sharing a cap
// and a coefficient ring. cap K represents an (K-1)-jet.
class Arc {
public:
    Arc() = default;
    explicit Arc(std::vector<TruncSeries> comps);

    std::size_t size() const { return comps_.size(); }
    int cap() const { return comps_.empty() ? 0 : comps_[0].cap(); }
    const RingPtr& coeff_ring() const { return comps_.at(0).coeff_ring(); }
    const TruncSeries& comp(std::size_t i) const { return comps_.at(i); }
    const std::vector<TruncSeries>& comps() const { return comps_; }

    bool is_rational() const;
    // Constant terms as rationals (requires rational constant coefficients).
    std::vector<Rational> origin() const;

    Arc truncated(int new_cap) const;
    Arc zero_extended(int new_cap) const;
    Arc with_comp(std::size_t i, TruncSeries s) const;

    bool operator==(const Arc& o) const { return comps_ == o.comps_; }

private:
    std::vector<TruncSeries> comps_;
};

// Evaluate f (a polynomial in N ambient variables with rational
// coefficients) along the arc, exactly modulo t^cap. The arc must have one
// component per variable of f; the result lives over the arc's coefficient
// ring.
TruncSeries substitute_series(const MPoly& f, const Arc& gamma);

} // namespace jetcalc

#endif
