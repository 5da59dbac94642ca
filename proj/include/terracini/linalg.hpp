#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/rng.hpp"

namespace terracini {

namespace detail {

/// Gaussian elimination on a scratch row-major buffer. Pivoting picks the
/// first row with a nonzero entry in the current column, which is exact over
/// any field. With reduced=true the buffer ends in RREF (pivots 1, cleared
/// above and below); otherwise only entries below the pivots are cleared.
/// Returns the pivot columns in increasing order; their count is the rank.
template <typename F>
std::vector<std::size_t> eliminate(const F& f, std::vector<typename F::Element>& a,
                                   std::size_t rows, std::size_t cols, bool reduced) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && f.is_zero(a[pr * cols + c])) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(a[r * cols + j], a[pr * cols + j]);
        }
        if (reduced) {
            const auto pinv = f.inv(a[r * cols + c]);
            for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], pinv);
        }
        const std::size_t lo = reduced ? 0 : r + 1;
        for (std::size_t i = lo; i < rows; ++i) {
            if (i == r) continue;
            const auto lead = a[i * cols + c];
            if (f.is_zero(lead)) continue;
            const auto factor = reduced ? lead : f.div(lead, a[r * cols + c]);
            a[i * cols + c] = f.zero();
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

/// Rank over the matrix's scalar field. Deterministic; empty matrices have
/// rank 0.
template <typename F>
std::size_t rank(const DenseMatrix<F>& m) {
    auto scratch = m.entries();
    return detail::eliminate(m.field(), scratch, m.rows(), m.cols(), false).size();
}

/// Basis of the right kernel: cols - rank vectors, each normalized so its
/// first nonzero entry is 1. Full column rank yields an empty sequence.
template <typename F>
std::vector<std::vector<typename F::Element>> kernel_basis(const DenseMatrix<F>& m) {
    const F& f = m.field();
    const std::size_t cols = m.cols();
    auto scratch = m.entries();
    const auto pivots = detail::eliminate(f, scratch, m.rows(), cols, true);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<typename F::Element>> basis;
    basis.reserve(cols - pivots.size());
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<typename F::Element> v(cols, f.zero());
        v[free_col] = f.one();
        for (std::size_t t = 0; t < pivots.size(); ++t)
            v[pivots[t]] = f.neg(scratch[t * cols + free_col]);
        // normalize: first nonzero entry becomes 1
        for (std::size_t j = 0; j < cols; ++j) {
            if (!f.is_zero(v[j])) {
                const auto s = f.inv(v[j]);
                for (std::size_t t = j; t < cols; ++t) v[t] = f.mul(v[t], s);
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Maximum rank over `trials` matrices produced by a deterministic builder.
/// The builder receives the per-trial seed mix_seed(seed, trial); by lower
/// semicontinuity of rank the result is a lower bound for the generic rank.
/// Stops early once the shape bound min(rows, cols) is reached.
template <typename F, typename Builder>
std::size_t max_rank_over_trials(Builder&& build, unsigned trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    std::size_t best = 0;
    for (unsigned t = 0; t < trials; ++t) {
        const DenseMatrix<F> m = build(mix_seed(seed, t));
        best = std::max(best, rank(m));
        if (best == std::min(m.rows(), m.cols())) break;
    }
    return best;
}

} // namespace terracini
