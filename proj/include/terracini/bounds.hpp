#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "terracini/errors.hpp"
#include "terracini/intersection.hpp"
#include "terracini/rational.hpp"

namespace terracini {

/// chi(M + A2) - chi(M) evaluated through the twist constant:
/// gamma' + A2.M with gamma' = (A2^2 - A2.K)/2. Agrees with the direct
/// Riemann-Roch difference on every integral class.
inline long long twist_difference(const SurfaceNumerics& s, const DivisorClass& m,
                                  const DivisorClass& a2) {
    const long long a2a2 = s.form.self(a2);
    const long long a2k = s.form.pair(a2, s.canonical);
    const long long twice_gamma = a2a2 - a2k;
    if (twice_gamma % 2 != 0)
        throw ConfigError("parity violation: A2(A2 - K) = " + std::to_string(twice_gamma) + " is odd");
    return twice_gamma / 2 + s.form.pair(a2, m);
}

/// Hodge index bound M^2 L^2 <= (L.M)^2, non-strict: equality holds exactly
/// when M is numerically proportional to L, which is a valid input.
inline bool hodge_bound_check(const IntersectionForm& form, const DivisorClass& l,
                              const DivisorClass& m) {
    const long long ll = form.self(l);
    if (ll <= 0) throw std::invalid_argument("hodge bound needs L^2 > 0");
    const long long lm = form.pair(l, m);
    return form.self(m) * ll <= lm * lm;
}

/// Effectivity consequence of dL - 2M >= 0 against an ample A2:
/// 2 M.A2 <= d L.A2, non-strict (equality at dL = 2M).
inline bool effectivity_bound_check(const IntersectionForm& form, const DivisorClass& l,
                                    const DivisorClass& m, const DivisorClass& a2, long long d) {
    return 2 * form.pair(m, a2) <= d * form.pair(l, a2);
}

/// One member of the candidate set S(L, d): an effective class M with
/// dL - 2M still effective, with both sides of the obstruction inequality
/// q + h0(M) - 1 >= (h0(dL) - 2)/3 evaluated exactly.
struct ObstructionCandidate {
    DivisorClass m_class;
    long long h0_m = 0;
    long long lhs = 0;  // q + h0(M) - 1
    Rational rhs;       // (h0(dL) - 2)/3
};

struct BoundsReport {
    long long degree = 0;
    long long candidates_checked = 0;
    std::optional<ObstructionCandidate> worst_candidate; // lhs-maximizing class
    bool obstruction_possible = false;                   // some candidate has lhs >= rhs
    bool h0_exact = true;                                // false when the RR estimate stood in
};

/// Exact section counts for the built-in toric models, valid on the
/// nonnegative orthant: (m+1)(m+2)/2 on the plane, prod(m_i + 1) on products
/// of lines.
using H0Function = std::function<long long(const DivisorClass&)>;

inline H0Function toric_h0(const SurfaceNumerics& s) {
    if (s.form.rank() == 1)
        return [](const DivisorClass& m) { return (m.coeffs[0] + 1) * (m.coeffs[0] + 2) / 2; };
    return [](const DivisorClass& m) {
        long long c = 1;
        for (long long e : m.coeffs) c *= e + 1;
        return c;
    };
}

/// RR-based stand-in when no exact count is available: max(0, chi(M)) plus
/// the numerics' h^1 allowance. Over-approximates h^0 on the scan cone, so a
/// negative scan verdict from the estimate implies the exact verdict.
inline H0Function h0_rr_estimate(const SurfaceNumerics& s) {
    return [s](const DivisorClass& m) {
        const long long chi = chi_riemann_roch(s, m);
        return (chi > 0 ? chi : 0) + s.h1_allowance;
    };
}

namespace detail {

template <typename Visit>
void enumerate_cone(const std::vector<long long>& caps, std::vector<long long>& current,
                    std::size_t coord, Visit&& visit) {
    if (coord == caps.size()) {
        visit(current);
        return;
    }
    for (long long v = 0; v <= caps[coord]; ++v) {
        current[coord] = v;
        enumerate_cone(caps, current, coord + 1, visit);
    }
}

inline std::vector<long long> cone_caps(const DivisorClass& l, long long d) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<long long> caps(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (l.coeffs[i] < 0)
            throw std::invalid_argument("polarization must lie in the nonnegative orthant");
        caps[i] = d * l.coeffs[i] / 2; // componentwise 0 <= 2M <= dL
    }
    return caps;
}

} // namespace detail

/// Scans the lattice cone {M >= 0, dL - 2M >= 0 componentwise} and marks
/// whether any candidate satisfies the obstruction inequality. The recorded
/// candidate maximizes the left-hand side (first maximizer in lexicographic
/// enumeration order).
inline BoundsReport obstruction_scan(const SurfaceNumerics& s, const DivisorClass& l, long long d,
                                     const H0Function& h0_exact, bool h0_is_exact = true) {
    const auto caps = detail::cone_caps(l, d);
    const long long h0_top = h0_exact(l.scaled(d));

    BoundsReport rep;
    rep.degree = d;
    rep.h0_exact = h0_is_exact;

    std::vector<long long> current(caps.size(), 0);
    detail::enumerate_cone(caps, current, 0, [&](const std::vector<long long>& coeffs) {
        ++rep.candidates_checked;
        const DivisorClass m{std::vector<long long>(coeffs)};
        const long long h0m = h0_exact(m);
        const long long lhs = s.irregularity + h0m - 1;
        if (!rep.worst_candidate || lhs > rep.worst_candidate->lhs) {
            ObstructionCandidate c;
            c.m_class = m;
            c.h0_m = h0m;
            c.lhs = lhs;
            c.rhs = Rational(h0_top - 2, 3);
            rep.worst_candidate = std::move(c);
        }
    });
    // lhs >= (h0_top - 2)/3 compared in integers: 3*lhs >= h0_top - 2
    rep.obstruction_possible =
        rep.worst_candidate && 3 * rep.worst_candidate->lhs >= h0_top - 2;
    return rep;
}

/// Smallest d0 <= d_max with obstruction_possible false on all of
/// [d0, d_max]; absent when the obstruction survives at d_max itself.
/// Per-degree reports are appended to *audit when given.
inline std::optional<long long> find_degree_threshold(const SurfaceNumerics& s, const DivisorClass& l,
                                                      long long d_max, const H0Function& h0_exact,
                                                      std::vector<BoundsReport>* audit = nullptr) {
    if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
    long long last_obstructed = 0;
    for (long long d = 1; d <= d_max; ++d) {
        auto rep = obstruction_scan(s, l, d, h0_exact);
        if (rep.obstruction_possible) last_obstructed = d;
        if (audit) audit->push_back(std::move(rep));
    }
    if (last_obstructed == d_max) return std::nullopt;
    return last_obstructed + 1;
}

/// max h0(M) over the scan cone, divided by h0(dL), as an exact rational.
/// On the built-in models this tends to 1/4 from above as d grows: the
/// candidate count grows like L^2 d^2 / 8 against sections growing like
/// L^2 d^2 / 2.
inline Rational asymptotic_ratio(const SurfaceNumerics& s, const DivisorClass& l, long long d,
                                 const H0Function& h0_exact) {
    if (l.rank() != s.form.rank())
        throw std::invalid_argument("polarization rank does not match the surface lattice");
    const auto caps = detail::cone_caps(l, d);
    long long best = 0;
    std::vector<long long> current(caps.size(), 0);
    detail::enumerate_cone(caps, current, 0, [&](const std::vector<long long>& coeffs) {
        const long long h0m = h0_exact(DivisorClass{std::vector<long long>(coeffs)});
        if (h0m > best) best = h0m;
    });
    return Rational(best, h0_exact(l.scaled(d)));
}

} // namespace terracini
