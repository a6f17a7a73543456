#include "jetcalc/motivic.hpp"

#include <algorithm>
#include <sstream>

#include "jetcalc/errors.hpp"
#include "jetcalc/mpoly.hpp"

namespace jetcalc {

VPoly VPoly::u_pow(long k) {
    if (k < 0) throw precondition_error("negative power of u");
    std::vector<Integer> c(static_cast<std::size_t>(k) + 1, Integer(0));
    c.back() = 1;
    return VPoly(std::move(c));
}

VPoly VPoly::punctured_line() { return VPoly({Integer(-1), Integer(1)}); }
VPoly VPoly::projective_line() { return VPoly({Integer(1), Integer(1)}); }

Integer VPoly::coeff(long k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Integer(0);
    return c_[k];
}

Integer VPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

VPoly VPoly::operator-() const {
    VPoly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

VPoly VPoly::operator+(const VPoly& o) const {
    std::vector<Integer> c(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) c[k] += o.c_[k];
    return VPoly(std::move(c));
}

VPoly VPoly::operator-(const VPoly& o) const { return *this + (-o); }

VPoly VPoly::operator*(const VPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Integer> c(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return VPoly(std::move(c));
}

VPoly VPoly::pow(unsigned long k) const {
    VPoly result = one();
    VPoly base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return result;
}

std::string VPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        Integer v = c_[k];
        bool neg = v < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        Integer a = neg ? Integer(-v) : v;
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "u";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

VPoly parse_vpoly(const std::string& src) {
    static const RingPtr u_ring = make_ring({"u"});
    MPoly p = parse_poly(src, u_ring);
    long deg = p.total_degree();
    std::vector<Integer> coeffs(deg < 0 ? 0 : static_cast<std::size_t>(deg) + 1, Integer(0));
    for (const auto& t : p.terms()) {
        if (!rat_is_integer(t.coeff))
            throw parse_error("virtual Poincare polynomials need integer coefficients, got '" +
                              rat_to_string(t.coeff) + "'");
        coeffs[t.exp[0]] = t.coeff.get_num();
    }
    return VPoly(std::move(coeffs));
}

DivisorData::DivisorData(long ambient_dim, std::vector<Divisor> divisors,
                         std::map<DivSubset, VPoly> beta_table)
    : d_(ambient_dim), divs_(std::move(divisors)), beta_(std::move(beta_table)) {
    if (d_ < 1) throw precondition_error("ambient dimension must be positive");
    for (std::size_t i = 0; i < divs_.size(); ++i) {
        const auto& dv = divs_[i];
        if (dv.nu < 1) throw precondition_error("divisor '" + dv.name + "' needs nu >= 1");
        if (dv.lambda < 0) throw precondition_error("divisor '" + dv.name + "' needs lambda >= 0");
        if (dv.nu_tilde && *dv.nu_tilde < 1)
            throw precondition_error("divisor '" + dv.name + "' needs nutilde >= 1");
        if (dv.lambda_tilde && *dv.lambda_tilde < 0)
            throw precondition_error("divisor '" + dv.name + "' needs lambdatilde >= 0");
        for (std::size_t k = 0; k < i; ++k)
            if (divs_[k].name == dv.name)
                throw precondition_error("duplicate divisor name '" + dv.name + "'");
    }
    if (!beta_.count(DivSubset{}))
        throw precondition_error("beta-table must include the empty stratum (beta {})");
    for (const auto& [subset, beta] : beta_) {
        for (auto i : subset)
            if (i >= divs_.size()) throw precondition_error("beta-table subset out of range");
        if (!std::is_sorted(subset.begin(), subset.end()))
            throw precondition_error("beta-table subset not sorted");
        long expected = d_ - static_cast<long>(subset.size());
        if (beta.is_zero()) continue; // explicit empty stratum
        if (beta.degree() != expected)
            throw precondition_error("beta degree " + std::to_string(beta.degree()) +
                                     " does not match stratum dimension " +
                                     std::to_string(expected));
        if (beta.leading() <= 0)
            throw precondition_error("beta leading coefficient must be positive");
    }
}

const VPoly* DivisorData::beta_for(const DivSubset& j) const {
    auto it = beta_.find(j);
    return it == beta_.end() ? nullptr : &it->second;
}

bool DivisorData::has_tilde() const {
    for (const auto& dv : divs_)
        if (!dv.nu_tilde || !dv.lambda_tilde) return false;
    return true;
}

long DivisorData::nu(std::size_t i, MapSel which) const {
    const Divisor& dv = divs_.at(i);
    if (which == MapSel::sigma) return dv.nu;
    if (!dv.nu_tilde) throw precondition_error("divisor '" + dv.name + "' has no nutilde");
    return *dv.nu_tilde;
}

long DivisorData::lambda(std::size_t i, MapSel which) const {
    const Divisor& dv = divs_.at(i);
    if (which == MapSel::sigma) return dv.lambda;
    if (!dv.lambda_tilde) throw precondition_error("divisor '" + dv.name + "' has no lambdatilde");
    return *dv.lambda_tilde;
}

long DivisorData::degree_constant(MapSel which) const {
    long nu_max = 0, lambda_max = 0;
    for (std::size_t i = 0; i < divs_.size(); ++i) {
        nu_max = std::max(nu_max, nu(i, which));
        lambda_max = std::max(lambda_max, lambda(i, which));
    }
    return std::max(2 * nu_max, lambda_max);
}

int DivisorData::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < divs_.size(); ++i)
        if (divs_[i].name == name) return static_cast<int>(i);
    return -1;
}

DivSubset MultiIndex::support() const {
    DivSubset out;
    for (std::size_t i = 0; i < j.size(); ++i)
        if (j[i] != 0) out.push_back(i);
    return out;
}

long MultiIndex::s() const {
    long acc = 0;
    for (long v : j) acc += v;
    return acc;
}

long MultiIndex::weighted(const std::vector<long>& w) const {
    long acc = 0;
    for (std::size_t i = 0; i < j.size(); ++i) acc += w[i] * j[i];
    return acc;
}

long e_of(const DivisorData& d, const MultiIndex& j, MapSel which) {
    long acc = 0;
    for (std::size_t i = 0; i < j.j.size(); ++i) acc += d.nu(i, which) * j.j[i];
    return acc;
}

long eprime_of(const DivisorData& d, const MultiIndex& j, MapSel which) {
    long acc = 0;
    for (std::size_t i = 0; i < j.j.size(); ++i) acc += d.lambda(i, which) * j.j[i];
    return acc;
}

namespace {

void enumerate_rec(const DivisorData& d, long n, MapSel which, std::size_t idx, MultiIndex& cur,
                   std::vector<MultiIndex>& out) {
    if (idx == d.count()) {
        // Constraints: 2 e(j) <= n and e'(j) <= n, support present in the
        // beta-table.
        if (2 * e_of(d, cur, which) > n) return;
        if (eprime_of(d, cur, which) > n) return;
        if (!d.beta_for(cur.support())) return;
        out.push_back(cur);
        return;
    }
    long nu = d.nu(idx, which);
    long bound = n / (2 * nu); // j_i <= n / (2 nu_i)
    for (long v = 0; v <= bound; ++v) {
        cur.j[idx] = v;
        enumerate_rec(d, n, which, idx + 1, cur, out);
    }
    cur.j[idx] = 0;
}

} // namespace

std::vector<MultiIndex> enumerate_An(const DivisorData& d, long n, MapSel which) {
    if (n < 0) throw precondition_error("level must be nonnegative");
    MultiIndex cur;
    cur.j.assign(d.count(), 0);
    std::vector<MultiIndex> out;
    enumerate_rec(d, n, which, 0, cur, out);
    std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
        long sa = a.s(), sb = b.s();
        if (sa != sb) return sa < sb;
        return a.j < b.j;
    });
    return out;
}

VPoly beta_stratum(const DivisorData& d, const MultiIndex& j, long n, MapSel which) {
    long exponent = n * d.ambient_dim();
    for (std::size_t i = 0; i < j.j.size(); ++i) exponent -= (d.nu(i, which) + 1) * j.j[i];
    if (exponent < 0)
        throw precondition_error("negative exponent: multi-index outside A_n");
    DivSubset support = j.support();
    const VPoly* beta = d.beta_for(support);
    if (!beta) return VPoly::zero();
    return *beta * VPoly::punctured_line().pow(support.size()) * VPoly::u_pow(exponent);
}

long dim_stratum(const DivisorData& d, const MultiIndex& j, long n, MapSel which) {
    return d.ambient_dim() * (n + 1) - j.s() - e_of(d, j, which);
}

Rational zn_degree_bound(const DivisorData& d, long n, MapSel which) {
    long c = d.degree_constant(which);
    Rational bound(d.ambient_dim() * (n + 1));
    if (c > 0)
        bound -= rat(n, c);
    else if (n > 0)
        throw precondition_error("degree constant is zero with positive level");
    return bound;
}

CompareReport compare_multiplicities(const DivisorData& d, long n_max) {
    if (!d.has_tilde())
        throw precondition_error("compare_multiplicities needs nutilde/lambdatilde on every divisor");
    CompareReport report;
    const long c = d.degree_constant(MapSel::sigma);
    const long c_tilde = d.degree_constant(MapSel::sigma_tilde);
    const long c_bar = std::max({c, c_tilde, 1L});
    const long window = std::max(std::max(c, c_tilde), 1L);

    std::vector<std::optional<long>> k_history;
    for (long n = 0; n <= n_max; ++n) {
        CompareRow row;
        row.n = n;
        // j in A_n(sigma) and A_n(sigma~) with sum (nu - nu~) j > 0.
        std::vector<MultiIndex> a_sigma = enumerate_An(d, n, MapSel::sigma);
        for (const auto& j : a_sigma) {
            if (2 * e_of(d, j, MapSel::sigma_tilde) > n) continue;
            if (eprime_of(d, j, MapSel::sigma_tilde) > n) continue;
            long diff = e_of(d, j, MapSel::sigma) - e_of(d, j, MapSel::sigma_tilde);
            if (diff <= 0) continue;
            row.K.push_back(j.s() + e_of(d, j, MapSel::sigma_tilde));
        }
        std::sort(row.K.begin(), row.K.end());
        row.K.erase(std::unique(row.K.begin(), row.K.end()), row.K.end());
        if (!row.K.empty()) {
            row.k = row.K.front();
            row.deg_q = d.ambient_dim() * (n + 1) - *row.k;
        }
        row.rhs_bound = Rational(d.ambient_dim() * (n + 1)) - rat(n, c_bar);
        k_history.push_back(row.k);

        // k_n stabilized: defined and constant over the last `window` levels.
        if (row.k && n + 1 >= window) {
            bool stable = true;
            for (long m = n - window + 1; m <= n; ++m) {
                const auto& km = k_history[static_cast<std::size_t>(m)];
                if (!km || *km != *row.k) {
                    stable = false;
                    break;
                }
            }
            row.stabilized = stable;
        }
        // Contradiction: deg Q_n exceeds every possible degree of the RHS,
        // i.e. n / c_bar strictly exceeds k_n.
        if (row.stabilized && row.k && rat(n, c_bar) > Rational(*row.k)) {
            row.forced = true;
            if (!report.forced_at) report.forced_at = n;
        }
        report.rows.push_back(std::move(row));
    }

    bool any_k = false;
    for (const auto& row : report.rows) any_k = any_k || row.k.has_value();
    bool all_le = true, some_lt = false;
    for (std::size_t i = 0; i < d.count(); ++i) {
        long nu = d.nu(i, MapSel::sigma), nu_t = d.nu(i, MapSel::sigma_tilde);
        if (nu > nu_t) all_le = false;
        if (nu < nu_t) some_lt = true;
    }
    report.one_sided = all_le && some_lt;

    if (report.forced_at) {
        report.verdict = "contradiction forced at n = " + std::to_string(*report.forced_at);
    } else if (!any_k) {
        report.verdict = "no discrepancy detected";
        if (report.one_sided) report.verdict += " (nu <= nutilde componentwise)";
    } else {
        report.verdict = "no contradiction forced up to n = " + std::to_string(n_max);
    }
    return report;
}

} // namespace jetcalc
