#ifndef JETCALC_GROEBNER_HPP
#define JETCALC_GROEBNER_HPP

#include <string>
#include <vector>

#include "jetcalc/ideal.hpp"

namespace jetcalc {

// Reduced Groebner basis (Buchberger, sugar selection, both criteria).
// Deterministic for a fixed order.
std::vector<MPoly> groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                                  const GroebnerOptions& opts = {});

// Same ideal with a reduced degrevlex (or given-order) basis attached.
Ideal ensure_basis(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::degrevlex(),
                   const GroebnerOptions& opts = {});

// Remainder of f modulo the reduced basis; zero iff f lies in the ideal.
MPoly normal_form(const MPoly& f, const Ideal& ideal, const GroebnerOptions& opts = {});

bool ideal_contains(const Ideal& ideal, const MPoly& f, const GroebnerOptions& opts = {});
bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});

// Intersection via the standard one-tag elimination trick.
Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});

// (I : J) = { g : gJ subset of I }, as the intersection of (I : g) over the
// generators g of J, each computed by elimination.
Ideal ideal_colon(const Ideal& i, const Ideal& j, const GroebnerOptions& opts = {});

// Eliminate the named variables; the result lives in the restricted ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& vars_to_remove,
                const GroebnerOptions& opts = {});

// Dimension of the initial ideal over the algebraic closure (maximal
// independent variable sets). -1 for the unit ideal.
long krull_dim(const Ideal& ideal, const GroebnerOptions& opts = {});

// Quotient f / g; throws precondition_error when g does not divide f.
MPoly exact_divide(const MPoly& f, const MPoly& g);

} // namespace jetcalc

#endif
