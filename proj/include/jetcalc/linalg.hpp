#ifndef JETCALC_LINALG_HPP
#define JETCALC_LINALG_HPP

#include <vector>

#include "jetcalc/rational.hpp"

namespace jetcalc {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>; // row-major, rectangular

struct LinearSolution {
    bool consistent = false;
    QVec particular;            // one solution (free variables set to 0)
    std::vector<QVec> kernel;   // basis of the homogeneous solution space
};

// Solve A x = b exactly over Q. A may be any shape; b.size() == A rows.
LinearSolution solve_linear(const QMat& A, const QVec& b);

// Basis of { x : A x = 0 }, deterministic (unit free-variable assignment in
// column order).
std::vector<QVec> kernel_basis(const QMat& A, std::size_t cols);

// Row echelon accumulator: rows are added one at a time and reduced against
// the pivots seen so far; an inconsistent row (0 = c) is rejected without
// being stored, so the caller can solve the maximal consistent prefix.
class IncrementalSolver {
public:
    explicit IncrementalSolver(std::size_t cols) : cols_(cols) {}

    // Returns false (and stores nothing) if the row reduces to 0 = c, c != 0.
    bool add_row(QVec coeffs, Rational rhs);

    // Particular solution of the accepted rows, free variables = 0.
    QVec solve() const;

    std::size_t cols() const { return cols_; }

private:
    struct Row {
        std::size_t pivot;
        QVec coeffs; // normalized: coeffs[pivot] == 1
        Rational rhs;
    };
    std::size_t cols_;
    std::vector<Row> rows_; // sorted by pivot ascending
};

} // namespace jetcalc

#endif
