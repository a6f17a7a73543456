#ifndef JETCALC_RING_HPP
#define JETCALC_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jetcalc/errors.hpp"

namespace jetcalc {

// Exponent vector; length always equals the ring's variable count.
using Exp = std::vector<std::uint32_t>;

inline long exp_total_degree(const Exp& e) {
    long d = 0;
    for (auto x : e) d += static_cast<long>(x);
    return d;
}

// An ordered list of variable names. Rings are immutable and shared.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].empty()) throw precondition_error("empty variable name");
            auto [it, fresh] = index_.emplace(vars_[i], static_cast<int>(i));
            (void)it;
            if (!fresh) throw precondition_error("duplicate variable name '" + vars_[i] + "'");
        }
    }

    std::size_t size() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(std::size_t i) const { return vars_.at(i); }

    // Index of a name, or -1 when absent.
    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    bool same_vars(const Ring& other) const { return vars_ == other.vars_; }

private:
    std::vector<std::string> vars_;
    std::map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_vars(*b);
}

// Total orders on exponent vectors. degrevlex is the library default;
// elimination orders are block degrevlex with the eliminated variables in
// the front block.
class MonomialOrder {
public:
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    // mask[i] != 0 marks a variable to eliminate (front block).
    static MonomialOrder elimination(std::vector<char> mask) {
        return MonomialOrder(Kind::Elimination, std::move(mask));
    }

    // -1: a < b, 0: equal, 1: a > b.
    int compare(const Exp& a, const Exp& b) const;
    bool less(const Exp& a, const Exp& b) const { return compare(a, b) < 0; }

    bool is_elimination() const { return kind_ == Kind::Elimination; }
    const std::vector<char>& mask() const { return mask_; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && mask_ == o.mask_;
    }

private:
    enum class Kind { Degrevlex, Lex, Elimination };
    MonomialOrder(Kind k, std::vector<char> mask) : kind_(k), mask_(std::move(mask)) {}

    static int cmp_degrevlex(const Exp& a, const Exp& b);
    static int cmp_lex(const Exp& a, const Exp& b);
    static int cmp_degrevlex_masked(const Exp& a, const Exp& b, const std::vector<char>& mask, char block);

    Kind kind_;
    std::vector<char> mask_;
};

} // namespace jetcalc

#endif
