#ifndef JETCALC_MOTIVIC_HPP
#define JETCALC_MOTIVIC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetcalc/rational.hpp"

namespace jetcalc {

// Virtual Poincare polynomial: an element of Z[u], canonical form (no
// trailing zero coefficients); the zero polynomial encodes beta(empty).
class VPoly {
public:
    VPoly() = default; // zero

    static VPoly zero() { return VPoly(); }
    static VPoly one() { return constant(1); }
    static VPoly u() { return VPoly({Integer(0), Integer(1)}); }
    static VPoly constant(long c) { return VPoly({Integer(c)}); }
    static VPoly u_pow(long k);
    explicit VPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    // beta conventions forced by the invariant's axioms:
    static VPoly point() { return one(); }           // beta(point) = 1
    static VPoly affine_line() { return u(); }       // beta(R) = u
    static VPoly punctured_line();                   // beta(R*) = u - 1
    static VPoly projective_line();                  // beta(P^1) = u + 1
    static VPoly affine_space(long n) { return u_pow(n); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(long k) const;
    Integer eval(const Integer& x) const;

    VPoly operator-() const;
    VPoly operator+(const VPoly& o) const;
    VPoly operator-(const VPoly& o) const;
    VPoly operator*(const VPoly& o) const;
    VPoly pow(unsigned long k) const;
    bool operator==(const VPoly& o) const { return c_ == o.c_; }
    bool operator!=(const VPoly& o) const { return !(*this == o); }

    std::string to_string() const; // e.g. "u^2 - 1", "0"

private:
    std::vector<Integer> c_; // c_[k] is the u^k coefficient
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Parse integer-coefficient polynomials in u ("u^2-1", "u + 1", "3").
VPoly parse_vpoly(const std::string& src);

enum class MapSel { sigma, sigma_tilde };

struct Divisor {
    std::string name;
    long nu = 1;      // Jacobian multiplicity
    long lambda = 0;  // H-pullback multiplicity
    std::optional<long> nu_tilde;
    std::optional<long> lambda_tilde;
};

// Subsets of divisors are encoded as sorted index lists.
using DivSubset = std::vector<std::size_t>;

// Normal-crossing divisor combinatorics plus the beta-table input: beta of
// each stratum E_J (open part), J = {} included. Absent subsets mean empty
// strata.
class DivisorData {
public:
    DivisorData(long ambient_dim, std::vector<Divisor> divisors,
                std::map<DivSubset, VPoly> beta_table);

    long ambient_dim() const { return d_; }
    const std::vector<Divisor>& divisors() const { return divs_; }
    std::size_t count() const { return divs_.size(); }
    const std::map<DivSubset, VPoly>& beta_table() const { return beta_; }
    const VPoly* beta_for(const DivSubset& j) const;

    bool has_tilde() const;
    long nu(std::size_t i, MapSel which) const;
    long lambda(std::size_t i, MapSel which) const;
    // c = max(2 nu_max, lambda_max) for the selected multiplicities.
    long degree_constant(MapSel which) const;

    int index_of(const std::string& name) const;

private:
    long d_;
    std::vector<Divisor> divs_;
    std::map<DivSubset, VPoly> beta_;
};

// Divisor contact orders of an arc family.
struct MultiIndex {
    std::vector<long> j; // one entry per divisor

    DivSubset support() const;
    long s() const; // sum of entries
    long weighted(const std::vector<long>& w) const;
};

long e_of(const DivisorData& d, const MultiIndex& j, MapSel which);      // sum nu_i j_i
long eprime_of(const DivisorData& d, const MultiIndex& j, MapSel which); // sum lambda_i j_i

// All multi-indices with e(j) <= n/2 and e'(j) <= n whose support appears in
// the beta-table, in graded lexicographic order (j = 0 first).
std::vector<MultiIndex> enumerate_An(const DivisorData& d, long n, MapSel which);

// beta(X_{j,n}) = beta(E_J deg) (u-1)^{|J|} u^{nd - sum (nu_i + 1) j_i}.
VPoly beta_stratum(const DivisorData& d, const MultiIndex& j, long n, MapSel which);

// dim X_{j,n} = d(n+1) - s_j - sum nu_i j_i.
long dim_stratum(const DivisorData& d, const MultiIndex& j, long n, MapSel which);

// The bound dim Z_n < d(n+1) - n/c as an exact rational.
Rational zn_degree_bound(const DivisorData& d, long n, MapSel which);

// Degree bookkeeping of the multiplicity comparison: K_n, k_n, deg Q_n and
// the right-hand degree threshold per level, plus the verdict.
struct CompareRow {
    long n = 0;
    std::vector<long> K;          // sorted values of K_n
    std::optional<long> k;        // min K_n
    std::optional<long> deg_q;    // d(n+1) - k_n
    Rational rhs_bound;           // d(n+1) - n/max(c, c~, 1)
    bool stabilized = false;
    bool forced = false;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    std::optional<long> forced_at; // least n with a forced contradiction
    bool one_sided = false;        // nu <= nu~ everywhere with some strict
    std::string verdict;
};

CompareReport compare_multiplicities(const DivisorData& d, long n_max);

} // namespace jetcalc

#endif
