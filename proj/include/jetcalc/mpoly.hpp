#ifndef JETCALC_MPOLY_HPP
#define JETCALC_MPOLY_HPP

#include <string>
#include <vector>

#include "jetcalc/rational.hpp"
#include "jetcalc/ring.hpp"

namespace jetcalc {

struct Term {
    Exp exp;
    Rational coeff;
};

// Exact multivariate polynomial over Q. Terms are kept in canonical form:
// sorted degrevlex-descending, no zero coefficients. Value semantics
// throughout; operands must live in rings with identical variable lists.
class MPoly {
public:
    MPoly() = default; // invalid until assigned; ring() is null

    static MPoly zero(RingPtr ring);
    static MPoly constant(RingPtr ring, const Rational& c);
    static MPoly variable(RingPtr ring, int index);
    static MPoly monomial(RingPtr ring, Exp exp, const Rational& coeff);
    // Terms in any order, duplicates combined, zeros dropped.
    static MPoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (the coefficient of the zero exponent), zero if absent.
    Rational constant_value() const;
    // Total degree; -1 for the zero polynomial.
    long total_degree() const;
    long degree_in(int var) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    MPoly scaled(const Rational& c) const;
    MPoly mul_monomial(const Exp& e, const Rational& c) const;
    MPoly pow(unsigned long k) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Image under the variable map old index -> new index (target ring).
    // Every variable actually occurring must be mapped (index >= 0).
    MPoly map_vars(RingPtr new_ring, const std::vector<int>& var_map) const;
    // Convenience: match variables by name; all occurring names must exist
    // in the target ring.
    MPoly lift_to(RingPtr new_ring) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_; // degrevlex descending
    friend MPoly mpoly_from_sorted(RingPtr, std::vector<Term>&&);
};

// Parse a polynomial over the given ring. Grammar: integers and rationals
// "p/q", variable names, + - * ^, parentheses, implicit multiplication by
// juxtaposition. Exponents are nonnegative integers.
MPoly parse_poly(const std::string& source, RingPtr ring);

} // namespace jetcalc

#endif
