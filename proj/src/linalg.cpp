#include "jetcalc/linalg.hpp"

#include <algorithm>

#include "jetcalc/errors.hpp"

namespace jetcalc {

namespace {

// Reduce [A|b] to reduced row echelon form in place; returns pivot column of
// each nonzero row. b entries ride along at index cols.
std::vector<std::size_t> rref(QMat& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = m.size();
        for (std::size_t i = r; i < m.size(); ++i) {
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        }
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t k = c; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

LinearSolution solve_linear(const QMat& A, const QVec& b) {
    if (A.size() != b.size()) throw precondition_error("solve_linear: shape mismatch");
    std::size_t cols = A.empty() ? 0 : A[0].size();
    QMat m(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != cols) throw precondition_error("solve_linear: ragged matrix");
        m[i] = A[i];
        m[i].push_back(b[i]);
    }
    auto pivots = rref(m, cols);
    LinearSolution out;
    // Inconsistency: a row 0 ... 0 | c with c != 0.
    for (std::size_t i = pivots.size(); i < m.size(); ++i) {
        if (m[i][cols] != 0) {
            out.consistent = false;
            out.kernel = kernel_basis(A, cols);
            return out;
        }
    }
    out.consistent = true;
    out.particular.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = m[i][cols];
    out.kernel = kernel_basis(A, cols);
    return out;
}

std::vector<QVec> kernel_basis(const QMat& A, std::size_t cols) {
    QMat m(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != cols) throw precondition_error("kernel_basis: ragged matrix");
        m[i] = A[i];
    }
    auto pivots = rref(m, cols);
    std::vector<char> is_pivot(cols, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<QVec> basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        QVec v(cols, Rational(0));
        v[freec] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool IncrementalSolver::add_row(QVec coeffs, Rational rhs) {
    if (coeffs.size() != cols_) throw precondition_error("IncrementalSolver: row width mismatch");
    for (const Row& row : rows_) {
        if (coeffs[row.pivot] == 0) continue;
        Rational f = coeffs[row.pivot];
        for (std::size_t k = 0; k < cols_; ++k) coeffs[k] -= f * row.coeffs[k];
        rhs -= f * row.rhs;
    }
    std::size_t pivot = cols_;
    for (std::size_t k = 0; k < cols_; ++k) {
        if (coeffs[k] != 0) {
            pivot = k;
            break;
        }
    }
    if (pivot == cols_) return rhs == 0;
    Rational inv = 1 / coeffs[pivot];
    for (auto& x : coeffs) x *= inv;
    rhs *= inv;
    rows_.push_back(Row{pivot, std::move(coeffs), std::move(rhs)});
    std::sort(rows_.begin(), rows_.end(),
              [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    return true;
}

QVec IncrementalSolver::solve() const {
    QVec x(cols_, Rational(0));
    // Back-substitute from the highest pivot down.
    for (std::size_t i = rows_.size(); i-- > 0;) {
        const Row& row = rows_[i];
        Rational v = row.rhs;
        for (std::size_t k = row.pivot + 1; k < cols_; ++k) {
            if (row.coeffs[k] != 0) v -= row.coeffs[k] * x[k];
        }
        x[row.pivot] = v;
    }
    return x;
}

} // namespace jetcalc
