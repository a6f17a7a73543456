#include "jetcalc/ring.hpp"

namespace jetcalc {

int MonomialOrder::cmp_degrevlex(const Exp& a, const Exp& b) {
    long da = exp_total_degree(a), db = exp_total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    // Ties: the last variable where they differ; the smaller exponent there
    // is the larger monomial.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::cmp_lex(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::cmp_degrevlex_masked(const Exp& a, const Exp& b,
                                        const std::vector<char>& mask, char block) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((mask[i] != 0) == (block != 0)) {
            da += a[i];
            db += b[i];
        }
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if ((mask[i] != 0) == (block != 0) && a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::compare(const Exp& a, const Exp& b) const {
    if (a.size() != b.size())
        throw precondition_error("monomial comparison across different rings");
    switch (kind_) {
    case Kind::Degrevlex:
        return cmp_degrevlex(a, b);
    case Kind::Lex:
        return cmp_lex(a, b);
    case Kind::Elimination: {
        if (mask_.size() != a.size())
            throw precondition_error("elimination order mask has wrong length");
        int c = cmp_degrevlex_masked(a, b, mask_, 1);
        if (c != 0) return c;
        return cmp_degrevlex_masked(a, b, mask_, 0);
    }
    }
    return 0;
}

} // namespace jetcalc
