#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "terracini/errors.hpp"

namespace terracini {

/// Integer divisor class in a rank-rho Neron-Severi lattice.
struct DivisorClass {
    std::vector<long long> coeffs;

    DivisorClass() = default;
    DivisorClass(std::initializer_list<long long> c) : coeffs(c) {}
    explicit DivisorClass(std::vector<long long> c) : coeffs(std::move(c)) {}

    std::size_t rank() const { return coeffs.size(); }

    DivisorClass operator+(const DivisorClass& o) const {
        if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("divisor rank mismatch");
        DivisorClass r = *this;
        for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
        return r;
    }
    DivisorClass operator-(const DivisorClass& o) const {
        if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("divisor rank mismatch");
        DivisorClass r = *this;
        for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
        return r;
    }
    DivisorClass scaled(long long s) const {
        DivisorClass r = *this;
        for (auto& c : r.coeffs) c *= s;
        return r;
    }

    bool operator==(const DivisorClass& o) const { return coeffs == o.coeffs; }
};

/// Symmetric integer pairing on the lattice.
class IntersectionForm {
public:
    IntersectionForm(std::size_t rank, std::vector<long long> pairing)
        : rank_(rank), pairing_(std::move(pairing)) {
        if (pairing_.size() != rank_ * rank_) throw std::invalid_argument("pairing matrix shape mismatch");
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (pairing_[i * rank_ + j] != pairing_[j * rank_ + i])
                    throw std::invalid_argument("intersection form must be symmetric");
    }

    std::size_t rank() const { return rank_; }
    long long entry(std::size_t i, std::size_t j) const { return pairing_[i * rank_ + j]; }

    /// a^T * pairing * b.
    long long pair(const DivisorClass& a, const DivisorClass& b) const {
        if (a.rank() != rank_ || b.rank() != rank_)
            throw std::invalid_argument("divisor rank does not match form rank");
        long long acc = 0;
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j)
                acc += a.coeffs[i] * pairing_[i * rank_ + j] * b.coeffs[j];
        return acc;
    }

    long long self(const DivisorClass& a) const { return pair(a, a); }

private:
    std::size_t rank_;
    std::vector<long long> pairing_;
};

/// The numerical data of a polarized surface: intersection form, canonical
/// class, chi(O_X), irregularity q, and an optional h^1 allowance consumed by
/// the RR-based h^0 estimate.
struct SurfaceNumerics {
    IntersectionForm form;
    DivisorClass canonical;
    long long chi_structure_sheaf = 1;
    long long irregularity = 0;
    long long h1_allowance = 0;
};

/// P^2 with the hyperplane class H: form [[1]], K = -3H, chi(O) = 1, q = 0.
inline SurfaceNumerics projective_plane_numerics() {
    return SurfaceNumerics{IntersectionForm(1, {1}), DivisorClass{-3}, 1, 0, 0};
}

/// P^1 x P^1 with the ruling classes: hyperbolic form [[0,1],[1,0]],
/// K = (-2,-2), chi(O) = 1, q = 0.
inline SurfaceNumerics line_product_numerics() {
    return SurfaceNumerics{IntersectionForm(2, {0, 1, 1, 0}), DivisorClass{-2, -2}, 1, 0, 0};
}

/// Riemann-Roch on a surface: chi(M) = chi(O) + M(M - K)/2. The half-integer
/// part is always even on an integral surface lattice; an odd value means the
/// numerics are inconsistent.
inline long long chi_riemann_roch(const SurfaceNumerics& s, const DivisorClass& m) {
    const long long mm = s.form.self(m);
    const long long mk = s.form.pair(m, s.canonical);
    const long long twice = mm - mk;
    if (twice % 2 != 0)
        throw ConfigError("parity violation: M(M - K) = " + std::to_string(twice) + " is odd");
    return s.chi_structure_sheaf + twice / 2;
}

} // namespace terracini
