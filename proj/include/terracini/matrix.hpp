#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace terracini {

/// Dense row-major matrix over a field context F (PrimeField or
/// RationalField). Immutable once constructed; the elimination routines copy
/// the entry buffer and reduce the copy.
template <typename F>
class DenseMatrix {
public:
    using Field = F;
    using Element = typename F::Element;

    DenseMatrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

    DenseMatrix(F field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("entry count does not match matrix shape");
    }

    static DenseMatrix identity(F field, std::size_t n) {
        std::vector<Element> e(n * n, field.zero());
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = field.one();
        return DenseMatrix(std::move(field), n, n, std::move(e));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    const Element& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return at(r, c); }
    const std::vector<Element>& entries() const { return entries_; }

    DenseMatrix transpose() const {
        std::vector<Element> t(rows_ * cols_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = at(r, c);
        return DenseMatrix(field_, cols_, rows_, std::move(t));
    }

    /// Matrix-vector product A*v, exact.
    std::vector<Element> apply(const std::vector<Element>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
        std::vector<Element> out(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r) {
            Element acc = field_.zero();
            for (std::size_t c = 0; c < cols_; ++c)
                acc = field_.add(acc, field_.mul(at(r, c), v[c]));
            out[r] = acc;
        }
        return out;
    }

    /// Copy with rows and columns rearranged; used by the permutation
    /// invariance tests.
    DenseMatrix permuted(const std::vector<std::size_t>& row_perm,
                         const std::vector<std::size_t>& col_perm) const {
        if (row_perm.size() != rows_ || col_perm.size() != cols_)
            throw std::invalid_argument("permutation size mismatch");
        std::vector<Element> e(rows_ * cols_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                e[r * cols_ + c] = at(row_perm[r], col_perm[c]);
        return DenseMatrix(field_, rows_, cols_, std::move(e));
    }

private:
    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> entries_;
};

} // namespace terracini
