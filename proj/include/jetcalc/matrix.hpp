#ifndef JETCALC_MATRIX_HPP
#define JETCALC_MATRIX_HPP

#include <vector>

#include "jetcalc/mpoly.hpp"
#include "jetcalc/series.hpp"

namespace jetcalc {

// Dense matrix with polynomial entries (Jacobians and friends).
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, const MPoly& fill);
    static PolyMatrix from_rows(std::vector<std::vector<MPoly>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const MPoly& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
    void set(std::size_t i, std::size_t j, MPoly v) { data_.at(i * cols_ + j) = std::move(v); }

private:
    std::size_t rows_, cols_;
    std::vector<MPoly> data_;
};

// Dense matrix of truncated series (Jacobians along an arc).
class SeriesMatrix {
public:
    SeriesMatrix(std::size_t rows, std::size_t cols, const TruncSeries& fill);
    static SeriesMatrix from_rows(std::vector<std::vector<TruncSeries>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int cap() const { return data_.empty() ? 0 : data_[0].cap(); }
    const TruncSeries& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
    void set(std::size_t i, std::size_t j, TruncSeries v) { data_.at(i * cols_ + j) = std::move(v); }

    SeriesMatrix select_rows(const std::vector<std::size_t>& rows) const;

private:
    std::size_t rows_, cols_;
    std::vector<TruncSeries> data_;
};

// All size-m row/column index subsets in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t m);

MPoly determinant(const PolyMatrix& m);
TruncSeries determinant(const SeriesMatrix& m);

// All m x m minor determinants, lexicographic in (row-set, col-set). The
// empty minor (m = 0) is the constant 1.
std::vector<MPoly> minors(const PolyMatrix& m, std::size_t size);
std::vector<TruncSeries> minors(const SeriesMatrix& m, std::size_t size);

} // namespace jetcalc

#endif
