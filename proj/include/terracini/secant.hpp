#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "terracini/interpolation.hpp"
#include "terracini/rational.hpp"

namespace terracini {

/// Dimension data for the k-secant variety of the embedding by the full
/// degree-deg system. The affine tangent space at an embedded point is the
/// row span of its dim+1 evaluation rows, so the stacked tangent matrix is
/// exactly the double-point conditions matrix and the projective span
/// dimension is its rank minus one.
struct SecantReport {
    long long ambient_dim = 0;          // N = basis size - 1
    long long expected_secant_dim = 0;  // min(N, k(dim+1) - 1)
    long long observed_secant_dim = 0;  // max rank over trials, minus 1
    long long secant_defect = 0;        // expected - observed >= 0
    // echo
    std::string model_id;
    MultiDegree degree;
    long long k = 0;
    unsigned trials_used = 0;
    std::uint64_t seed = 0;
};

inline SecantReport secant_dimension(const AmbientModel& model, const MultiDegree& deg, long long k,
                                     std::uint64_t prime = 10007, unsigned trials = 3,
                                     std::uint64_t seed = 0) {
    if (k < 1) throw std::invalid_argument("secant variety needs k >= 1");
    InterpolationTask task;
    task.model = model;
    task.degree = deg;
    task.k = k;
    task.prime = prime;
    task.trials = trials;
    task.seed = seed;
    detail::validate_task(task);

    const auto basis = monomial_basis(model, deg);
    const long long n_ambient = static_cast<long long>(basis.size()) - 1;

    const PrimeField f(prime);
    auto build = [&](std::uint64_t trial_seed) {
        const auto pts = sample_task_points_mod(f, model, k, trial_seed);
        return build_conditions_matrix(f, model, deg, pts);
    };
    const auto max_rank = max_rank_over_trials<PrimeField>(build, trials, seed);

    SecantReport rep;
    rep.ambient_dim = n_ambient;
    const long long span_rows = k * (model.dim + 1);
    rep.expected_secant_dim = std::min(n_ambient, span_rows - 1);
    rep.observed_secant_dim = static_cast<long long>(max_rank) - 1;
    rep.secant_defect = rep.expected_secant_dim - rep.observed_secant_dim;
    rep.model_id = model.id();
    rep.degree = deg;
    rep.k = k;
    rep.trials_used = trials;
    rep.seed = seed;
    return rep;
}

/// Exact identity between the two readings of the same sample: the Terracini
/// span dimension plus one must equal the interpolation conditions rank.
/// Both sides are computed from the identical seed-derived configuration;
/// this is a regression guard, not a theorem check.
inline bool duality_check(const AmbientModel& model, const MultiDegree& deg, long long k,
                          std::uint64_t prime = 10007, std::uint64_t seed = 0) {
    if (k < 1) throw std::invalid_argument("duality check needs k >= 1");
    const auto secant = secant_dimension(model, deg, k, prime, /*trials=*/1, seed);

    InterpolationTask task;
    task.model = model;
    task.degree = deg;
    task.k = k;
    task.prime = prime;
    task.trials = 1;
    task.seed = seed;
    const auto dim_rep = generic_dimension(task);
    const long long conditions_rank = dim_rep.basis_size - 1 - dim_rep.observed_dim;

    return secant.observed_secant_dim + 1 == conditions_rank;
}

/// Witness record for the multiple-base-curve phenomenon in the square-type
/// sporadic cases: the unique singular quartic is the square of the unique
/// quadric through the points. Exact rational arithmetic throughout.
struct BaseCurveCertificate {
    int n = 0, d = 0, k = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<Rational>> points;
    std::vector<Rational> quadric;  // kernel of the value-only degree-2 matrix
    std::vector<Rational> quartic;  // the singular degree-4 system's single member
    Rational scalar;                // quartic = scalar * quadric^2
    bool success = false;
};

inline bool is_square_exception_case(int n, int d, int k) {
    return (n == 2 && d == 4 && k == 5) || (n == 3 && d == 4 && k == 9) ||
           (n == 4 && d == 4 && k == 14);
}

/// Certificate computation at an explicit point configuration. Signals
/// GeometryViolation when the configuration is not general enough (the
/// quadric through the points, or the singular quartic, is not unique).
inline BaseCurveCertificate base_curve_certificate_at(int n, int d, int k,
                                                      const std::vector<std::vector<Rational>>& points,
                                                      std::uint64_t seed = 0) {
    if (!is_square_exception_case(n, d, k))
        throw std::invalid_argument("case (" + std::to_string(n) + "," + std::to_string(d) + "," +
                                    std::to_string(k) + ") is not a square-type exception");
    if (points.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("expected " + std::to_string(k) + " points");

    const RationalField f;
    const auto model = AmbientModel::projective_space(n);
    const MultiDegree deg2{2}, deg4{4};

    // value-only matrix of the degree-2 system at the points
    const auto basis2 = monomial_basis(model, deg2);
    std::vector<Rational> value_entries;
    value_entries.reserve(points.size() * basis2.size());
    for (const auto& p : points) {
        const auto rows = evaluation_rows(f, model, deg2, p);
        for (std::size_t j = 0; j < rows.cols(); ++j) value_entries.push_back(rows.at(0, j));
    }
    const DenseMatrix<RationalField> value_matrix(f, points.size(), basis2.size(),
                                                  std::move(value_entries));
    const auto quadrics = kernel_basis(value_matrix);
    if (quadrics.size() != 1)
        throw GeometryViolation("quadric through the points is not unique (kernel dimension " +
                                std::to_string(quadrics.size()) + "); resample");

    const auto conditions = build_conditions_matrix(f, model, deg4, points);
    const auto quartics = kernel_basis(conditions);
    if (quartics.size() != 1)
        throw GeometryViolation("singular quartic system is not one-dimensional (kernel dimension " +
                                std::to_string(quartics.size()) + "); resample");

    const auto square = multiply_forms(f, model, deg2, quadrics[0], deg2, quadrics[0], deg4);

    BaseCurveCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.k = k;
    cert.seed = seed;
    cert.points = points;
    cert.quadric = quadrics[0];
    cert.quartic = quartics[0];
    std::size_t lead = square.size();
    for (std::size_t j = 0; j < square.size(); ++j) {
        if (!square[j].is_zero()) {
            lead = j;
            break;
        }
    }
    if (lead == square.size()) throw GeometryViolation("quadric square vanished identically");
    cert.scalar = cert.quartic[lead] / square[lead];
    cert.success = true;
    for (std::size_t j = 0; j < square.size(); ++j) {
        if (cert.quartic[j] != cert.scalar * square[j]) {
            cert.success = false;
            break;
        }
    }
    return cert;
}

/// Seeded certificate: k integer points in [-100, 100]^n drawn from the seed.
inline BaseCurveCertificate base_curve_certificate(int n, int d, int k, std::uint64_t seed = 0) {
    if (!is_square_exception_case(n, d, k))
        throw std::invalid_argument("case (" + std::to_string(n) + "," + std::to_string(d) + "," +
                                    std::to_string(k) + ") is not a square-type exception");
    SplitMix64 rng(mix_seed(seed, 0));
    const auto points = sample_points_integer(n, k, 100, rng);
    return base_curve_certificate_at(n, d, k, points, seed);
}

} // namespace terracini
