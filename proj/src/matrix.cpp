#include "jetcalc/matrix.hpp"

namespace jetcalc {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const MPoly& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<MPoly>> rows) {
    if (rows.empty() || rows[0].empty()) throw precondition_error("empty matrix");
    PolyMatrix m(rows.size(), rows[0].size(), rows[0][0]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw precondition_error("ragged matrix");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, std::move(rows[i][j]));
    }
    return m;
}

SeriesMatrix::SeriesMatrix(std::size_t rows, std::size_t cols, const TruncSeries& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

SeriesMatrix SeriesMatrix::from_rows(std::vector<std::vector<TruncSeries>> rows) {
    if (rows.empty() || rows[0].empty()) throw precondition_error("empty matrix");
    SeriesMatrix m(rows.size(), rows[0].size(), rows[0][0]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw precondition_error("ragged matrix");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, std::move(rows[i][j]));
    }
    return m;
}

SeriesMatrix SeriesMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    SeriesMatrix out(rows.size(), cols_, data_[0]);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(rows[i], j));
    return out;
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    if (m > n) return out;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        if (m == 0) break;
        // advance to the next lexicographic combination
        std::size_t i = m;
        while (i-- > 0) {
            if (idx[i] != i + n - m) {
                ++idx[i];
                for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
    return out;
}

namespace {

// Laplace expansion along the first listed row; minors here are tiny.
template <typename Mat, typename Elem>
Elem det_rec(const Mat& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols,
             const Elem& zero) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Elem acc = zero;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Elem& pivot = m.at(rows[0], cols[k]);
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Elem cof = pivot * det_rec(m, sub_rows, sub_cols, zero);
        if (k % 2 == 0)
            acc = acc + cof;
        else
            acc = acc - cof;
    }
    return acc;
}

template <typename Mat, typename Elem>
Elem det_on(const Mat& m, const std::vector<std::size_t>& rows,
            const std::vector<std::size_t>& cols, const Elem& zero, const Elem& one) {
    if (rows.size() != cols.size()) throw precondition_error("determinant of non-square selection");
    if (rows.empty()) return one;
    return det_rec<Mat, Elem>(m, rows, cols, zero);
}

} // namespace

MPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw precondition_error("determinant of non-square matrix");
    RingPtr ring = m.at(0, 0).ring();
    std::vector<std::size_t> all(m.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return det_on(m, all, all, MPoly::zero(ring), MPoly::constant(ring, Rational(1)));
}

TruncSeries determinant(const SeriesMatrix& m) {
    if (m.rows() != m.cols()) throw precondition_error("determinant of non-square matrix");
    const TruncSeries& probe = m.at(0, 0);
    TruncSeries zero = TruncSeries::zero(probe.coeff_ring(), probe.cap());
    TruncSeries one = TruncSeries::from_rationals(probe.coeff_ring(), probe.cap(), {Rational(1)});
    std::vector<std::size_t> all(m.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return det_on(m, all, all, zero, one);
}

std::vector<MPoly> minors(const PolyMatrix& m, std::size_t size) {
    if (size > m.rows() || size > m.cols())
        throw precondition_error("minor size exceeds matrix dimensions");
    RingPtr ring = m.at(0, 0).ring();
    MPoly zero = MPoly::zero(ring);
    MPoly one = MPoly::constant(ring, Rational(1));
    std::vector<MPoly> out;
    for (const auto& rs : index_subsets(m.rows(), size))
        for (const auto& cs : index_subsets(m.cols(), size))
            out.push_back(det_on(m, rs, cs, zero, one));
    return out;
}

std::vector<TruncSeries> minors(const SeriesMatrix& m, std::size_t size) {
    if (size > m.rows() || size > m.cols())
        throw precondition_error("minor size exceeds matrix dimensions");
    const TruncSeries& probe = m.at(0, 0);
    TruncSeries zero = TruncSeries::zero(probe.coeff_ring(), probe.cap());
    TruncSeries one = TruncSeries::from_rationals(probe.coeff_ring(), probe.cap(), {Rational(1)});
    std::vector<TruncSeries> out;
    for (const auto& rs : index_subsets(m.rows(), size))
        for (const auto& cs : index_subsets(m.cols(), size))
            out.push_back(det_on(m, rs, cs, zero, one));
    return out;
}

} // namespace jetcalc
