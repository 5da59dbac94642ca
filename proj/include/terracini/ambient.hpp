#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/prime_field.hpp"
#include "terracini/rational.hpp"
#include "terracini/rng.hpp"

namespace terracini {

enum class AmbientKind { projective_space, product_of_lines };

/// The ambient variety: P^n, or a product of r projective lines. Everything
/// is computed in the dense affine chart, so a model is just its kind and
/// intrinsic dimension.
struct AmbientModel {
    AmbientKind kind;
    int dim; // n for P^n; number of factors r for (P^1)^r

    static AmbientModel projective_space(int n) {
        if (n < 1) throw std::invalid_argument("projective space needs n >= 1");
        return {AmbientKind::projective_space, n};
    }
    static AmbientModel product_of_lines(int r) {
        if (r < 1) throw std::invalid_argument("product of lines needs r >= 1");
        return {AmbientKind::product_of_lines, r};
    }

    /// Canonical id used in reports and cell seeds: "p2", "p1xp1", ...
    std::string id() const {
        if (kind == AmbientKind::projective_space) return "p" + std::to_string(dim);
        std::string s = "p1";
        for (int i = 1; i < dim; ++i) s += "xp1";
        return s;
    }

    bool operator==(const AmbientModel& o) const { return kind == o.kind && dim == o.dim; }
};

/// Degree of the line bundle: a single d for P^n, one entry per factor for
/// products of lines.
struct MultiDegree {
    std::vector<int> parts;

    MultiDegree() = default;
    MultiDegree(std::initializer_list<int> p) : parts(p) {}
    explicit MultiDegree(std::vector<int> p) : parts(std::move(p)) {}

    int total() const {
        int t = 0;
        for (int p : parts) t += p;
        return t;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s;
    }

    bool operator==(const MultiDegree& o) const { return parts == o.parts; }
};

/// Exponent vector of one affine monomial; length = model dimension.
struct Monomial {
    std::vector<int> exponents;

    int total_degree() const {
        int t = 0;
        for (int e : exponents) t += e;
        return t;
    }

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

inline void validate_degree(const AmbientModel& model, const MultiDegree& deg) {
    const std::size_t want = model.kind == AmbientKind::projective_space ? 1 : static_cast<std::size_t>(model.dim);
    if (deg.parts.size() != want)
        throw std::invalid_argument("degree has " + std::to_string(deg.parts.size()) +
                                    " parts, model " + model.id() + " needs " + std::to_string(want));
    for (int p : deg.parts)
        if (p < 0) throw std::invalid_argument("degree entries must be >= 0");
}

namespace detail {

inline void enumerate_exponents(const AmbientModel& model, const MultiDegree& deg, int coord,
                                int used_total, std::vector<int>& current,
                                std::vector<Monomial>& out) {
    if (coord == model.dim) {
        out.push_back(Monomial{current});
        return;
    }
    const int cap = model.kind == AmbientKind::projective_space ? deg.parts[0] - used_total
                                                                : deg.parts[coord];
    for (int e = 0; e <= cap; ++e) {
        current[coord] = e;
        enumerate_exponents(model, deg, coord + 1, used_total + e, current, out);
    }
    current[coord] = 0;
}

} // namespace detail

/// All basis monomials of H^0 of the degree-`deg` system, in graded
/// lexicographic order (total degree first, then lex on exponents). The order
/// is deterministic: every call returns the identical sequence.
inline std::vector<Monomial> monomial_basis(const AmbientModel& model, const MultiDegree& deg) {
    validate_degree(model, deg);
    std::vector<Monomial> out;
    std::vector<int> current(model.dim, 0);
    detail::enumerate_exponents(model, deg, 0, 0, current, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        const int ta = a.total_degree(), tb = b.total_degree();
        if (ta != tb) return ta < tb;
        return a.exponents < b.exponents;
    });
    return out;
}

/// Closed-form basis count: C(n+d, d) for P^n, prod(a_i + 1) for products.
/// Kept separate from the enumeration so the two can cross-check each other.
inline long long basis_dimension(const AmbientModel& model, const MultiDegree& deg) {
    validate_degree(model, deg);
    if (model.kind == AmbientKind::projective_space) {
        const long long n = model.dim, d = deg.parts[0];
        long long c = 1;
        for (long long i = 1; i <= n; ++i) c = c * (d + i) / i;
        return c;
    }
    long long c = 1;
    for (int a : deg.parts) c *= a + 1;
    return c;
}

namespace detail {

/// Per-coordinate power tables for one point, up to the needed exponent.
template <typename F>
std::vector<std::vector<typename F::Element>> power_tables(const F& f, const AmbientModel& model,
                                                           const MultiDegree& deg,
                                                           const std::vector<typename F::Element>& point) {
    std::vector<std::vector<typename F::Element>> pows(model.dim);
    for (int i = 0; i < model.dim; ++i) {
        const int cap = model.kind == AmbientKind::projective_space ? deg.parts[0] : deg.parts[i];
        auto& tab = pows[i];
        tab.reserve(cap + 1);
        tab.push_back(f.one());
        for (int e = 1; e <= cap; ++e) tab.push_back(f.mul(tab.back(), point[i]));
    }
    return pows;
}

/// Writes the dim+1 double-point rows for one point into `out` starting at
/// row `row0`: monomial values first, then the partial with respect to each
/// affine coordinate.
template <typename F>
void write_point_rows(const F& f, const AmbientModel& model, const MultiDegree& deg,
                      const std::vector<Monomial>& basis,
                      const std::vector<typename F::Element>& point,
                      std::vector<typename F::Element>& out, std::size_t row0, std::size_t cols) {
    const auto pows = power_tables(f, model, deg, point);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& e = basis[j].exponents;
        auto value = f.one();
        for (int i = 0; i < model.dim; ++i) value = f.mul(value, pows[i][e[i]]);
        out[row0 * cols + j] = value;
        for (int i = 0; i < model.dim; ++i) {
            auto& slot = out[(row0 + 1 + i) * cols + j];
            if (e[i] == 0) {
                slot = f.zero();
                continue;
            }
            auto d = f.from_int(e[i]);
            d = f.mul(d, pows[i][e[i] - 1]);
            for (int l = 0; l < model.dim; ++l)
                if (l != i) d = f.mul(d, pows[l][e[l]]);
            slot = d;
        }
    }
}

} // namespace detail

/// The (dim+1) x basis-size block of double-point functionals at one point:
/// row 0 holds the basis monomial values, row 1+i the partial derivative with
/// respect to affine coordinate i. Exact over the given field.
template <typename F>
DenseMatrix<F> evaluation_rows(const F& f, const AmbientModel& model, const MultiDegree& deg,
                               const std::vector<typename F::Element>& point) {
    validate_degree(model, deg);
    if (point.size() != static_cast<std::size_t>(model.dim))
        throw std::invalid_argument("point dimension mismatch");
    const auto basis = monomial_basis(model, deg);
    const std::size_t cols = basis.size();
    std::vector<typename F::Element> out(static_cast<std::size_t>(model.dim + 1) * cols, f.zero());
    detail::write_point_rows(f, model, deg, basis, point, out, 0, cols);
    return DenseMatrix<F>(f, model.dim + 1, cols, std::move(out));
}

/// k points with coordinates uniform in GF(p); point-major, one rng draw per
/// coordinate.
inline std::vector<std::vector<PrimeField::Element>> sample_points_mod(const PrimeField& f, int dim,
                                                                       long long k, SplitMix64& rng) {
    std::vector<std::vector<PrimeField::Element>> pts(static_cast<std::size_t>(k));
    for (auto& p : pts) {
        p.resize(dim);
        for (int i = 0; i < dim; ++i) p[i] = f.sample(rng);
    }
    return pts;
}

/// k points with integer coordinates uniform in [-box, box], as exact
/// rationals; the certification path samples these.
inline std::vector<std::vector<Rational>> sample_points_integer(int dim, long long k, long long box,
                                                                SplitMix64& rng) {
    std::vector<std::vector<Rational>> pts(static_cast<std::size_t>(k));
    for (auto& p : pts) {
        p.reserve(dim);
        for (int i = 0; i < dim; ++i)
            p.push_back(Rational(mpz_class(static_cast<long>(rng.symmetric(box)))));
    }
    return pts;
}

/// Product of two forms given by coefficient vectors over the monomial bases
/// of deg_a and deg_b, expanded in the basis of deg_out. Exponents add, so
/// deg_out must dominate deg_a + deg_b.
template <typename F>
std::vector<typename F::Element> multiply_forms(const F& f, const AmbientModel& model,
                                                const MultiDegree& deg_a,
                                                const std::vector<typename F::Element>& a,
                                                const MultiDegree& deg_b,
                                                const std::vector<typename F::Element>& b,
                                                const MultiDegree& deg_out) {
    const auto basis_a = monomial_basis(model, deg_a);
    const auto basis_b = monomial_basis(model, deg_b);
    const auto basis_out = monomial_basis(model, deg_out);
    if (a.size() != basis_a.size() || b.size() != basis_b.size())
        throw std::invalid_argument("coefficient vector length mismatch");

    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t j = 0; j < basis_out.size(); ++j) index[basis_out[j].exponents] = j;

    std::vector<typename F::Element> out(basis_out.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (f.is_zero(b[j])) continue;
            std::vector<int> e(model.dim);
            for (int l = 0; l < model.dim; ++l)
                e[l] = basis_a[i].exponents[l] + basis_b[j].exponents[l];
            const auto it = index.find(e);
            if (it == index.end()) throw std::invalid_argument("product exceeds output degree");
            out[it->second] = f.add(out[it->second], f.mul(a[i], b[j]));
        }
    }
    return out;
}

/// Value of a form (coefficients over the deg basis) at a point.
template <typename F>
typename F::Element evaluate_form(const F& f, const AmbientModel& model, const MultiDegree& deg,
                                  const std::vector<typename F::Element>& coeffs,
                                  const std::vector<typename F::Element>& point) {
    const auto rows = evaluation_rows(f, model, deg, point);
    if (coeffs.size() != rows.cols()) throw std::invalid_argument("coefficient vector length mismatch");
    auto acc = f.zero();
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        acc = f.add(acc, f.mul(rows.at(0, j), coeffs[j]));
    return acc;
}

} // namespace terracini
