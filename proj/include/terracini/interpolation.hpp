#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "terracini/ambient.hpp"
#include "terracini/errors.hpp"
#include "terracini/linalg.hpp"

namespace terracini {

enum class ArithmeticMode { modular, exact_rational };

/// One fat-point interpolation problem: k general double points imposed on
/// the degree-`degree` system of `model`. Sampling, trial count and scalar
/// mode are part of the task so results are a pure function of it.
struct InterpolationTask {
    AmbientModel model = AmbientModel::projective_space(2);
    MultiDegree degree{0};
    long long k = 0;
    std::uint64_t prime = 10007;
    unsigned trials = 3;
    std::uint64_t seed = 0;
    ArithmeticMode mode = ArithmeticMode::modular;
    long long coordinate_box = 100; // exact mode samples integer coords in [-box, box]
};

enum class Certainty { nondefective_certified, defect_probable };

inline std::string certainty_str(Certainty c) {
    return c == Certainty::nondefective_certified ? "nondefective-certified" : "defect-probable";
}

/// Outcome of a generic-dimension computation. observed_dim is derived from
/// the max rank over trials, so defect >= 0 always; defect 0 is a
/// certificate, positive defect is only probable (rank at special points can
/// undershoot the generic value, never overshoot it).
struct DimensionReport {
    long long basis_size = 0;   // h^0 of the unconstrained system
    long long conditions = 0;   // k * (dim + 1)
    long long expected_dim = -1;
    long long observed_dim = -1;
    long long defect = 0;
    Certainty certified = Certainty::nondefective_certified;
    unsigned trials_used = 0;
    std::uint64_t seed = 0;
    bool k_above_span_bound = false; // 3k > h^0: the span-genericity hypothesis is void
    // echo of the task
    std::string model_id;
    MultiDegree degree;
    long long k = 0;
    ArithmeticMode mode = ArithmeticMode::modular;
};

/// Naive parameter count: max(0, h0 - k(dim+1)) - 1; -1 means expected empty.
inline long long expected_dimension(long long h0, int dim, long long k) {
    if (h0 < 0 || dim < 0 || k < 0) throw std::invalid_argument("expected_dimension needs nonnegative inputs");
    const long long residual = h0 - k * (dim + 1);
    return (residual > 0 ? residual : 0) - 1;
}

/// Stacked double-point functionals: k(dim+1) rows (point-major, value row
/// then the dim partials) by basis-size columns.
template <typename F>
DenseMatrix<F> build_conditions_matrix(const F& f, const AmbientModel& model, const MultiDegree& deg,
                                       const std::vector<std::vector<typename F::Element>>& points) {
    validate_degree(model, deg);
    const auto basis = monomial_basis(model, deg);
    const std::size_t cols = basis.size();
    const std::size_t block = static_cast<std::size_t>(model.dim) + 1;
    std::vector<typename F::Element> entries(points.size() * block * cols, f.zero());
    for (std::size_t p = 0; p < points.size(); ++p)
        detail::write_point_rows(f, model, deg, basis, points[p], entries, p * block, cols);
    return DenseMatrix<F>(f, points.size() * block, cols, std::move(entries));
}

namespace detail {

inline void validate_task(const InterpolationTask& task) {
    validate_degree(task.model, task.degree);
    if (task.k < 0) throw std::invalid_argument("k must be >= 0");
    if (task.trials == 0) throw std::invalid_argument("trials must be >= 1");
    if (task.mode == ArithmeticMode::modular) {
        if (!is_prime(task.prime))
            throw ConfigError("modulus " + std::to_string(task.prime) + " is not prime");
        if (task.prime <= static_cast<std::uint64_t>(task.degree.total()))
            throw ConfigError("prime " + std::to_string(task.prime) +
                              " must exceed the total degree " + std::to_string(task.degree.total()));
    }
    if (task.mode == ArithmeticMode::exact_rational && task.coordinate_box < 1)
        throw std::invalid_argument("coordinate box must be >= 1");
}

} // namespace detail

/// The task's point sample for one trial, modular scalars. Trial seeds are
/// mix_seed(task.seed, trial); the stream layout (point-major, coordinate
/// order) is part of the reproducibility contract.
inline std::vector<std::vector<PrimeField::Element>> sample_task_points_mod(
    const PrimeField& f, const AmbientModel& model, long long k, std::uint64_t trial_seed) {
    SplitMix64 rng(trial_seed);
    return sample_points_mod(f, model.dim, k, rng);
}

/// Same, exact-rational scalars with integer coordinates in [-box, box].
inline std::vector<std::vector<Rational>> sample_task_points_exact(const AmbientModel& model,
                                                                   long long k, long long box,
                                                                   std::uint64_t trial_seed) {
    SplitMix64 rng(trial_seed);
    return sample_points_integer(model.dim, k, box, rng);
}

/// Generic dimension of |L_deg - 2(p_1 + ... + p_k)| by randomized rank:
/// each trial samples a fresh configuration, the max rank over trials is
/// taken, and observed_dim = h0 - 1 - max rank. Deterministic given the seed.
inline DimensionReport generic_dimension(const InterpolationTask& task) {
    detail::validate_task(task);
    const auto basis = monomial_basis(task.model, task.degree);
    const long long h0 = static_cast<long long>(basis.size());
    const long long conditions = task.k * (task.model.dim + 1);

    std::size_t max_rank = 0;
    if (task.mode == ArithmeticMode::modular) {
        const PrimeField f(task.prime);
        auto build = [&](std::uint64_t trial_seed) {
            const auto pts = sample_task_points_mod(f, task.model, task.k, trial_seed);
            return build_conditions_matrix(f, task.model, task.degree, pts);
        };
        max_rank = max_rank_over_trials<PrimeField>(build, task.trials, task.seed);
    } else {
        const RationalField f;
        auto build = [&](std::uint64_t trial_seed) {
            const auto pts = sample_task_points_exact(task.model, task.k, task.coordinate_box, trial_seed);
            return build_conditions_matrix(f, task.model, task.degree, pts);
        };
        max_rank = max_rank_over_trials<RationalField>(build, task.trials, task.seed);
    }

    DimensionReport rep;
    rep.basis_size = h0;
    rep.conditions = conditions;
    rep.expected_dim = expected_dimension(h0, task.model.dim, task.k);
    rep.observed_dim = h0 - 1 - static_cast<long long>(max_rank);
    rep.defect = rep.observed_dim - rep.expected_dim;
    rep.certified = rep.defect == 0 ? Certainty::nondefective_certified : Certainty::defect_probable;
    rep.trials_used = task.trials;
    rep.seed = task.seed;
    rep.k_above_span_bound = 3 * task.k > h0;
    rep.model_id = task.model.id();
    rep.degree = task.degree;
    rep.k = task.k;
    rep.mode = task.mode;
    return rep;
}

/// Kernel of the conditions matrix at one sampled configuration (trial 0 of
/// the task's seed): coefficient vectors of forms singular at every sampled
/// point, in monomial-basis order.
template <typename F>
std::vector<std::vector<typename F::Element>> singular_system_basis(const F& f,
                                                                    const InterpolationTask& task) {
    detail::validate_task(task);
    const std::uint64_t trial_seed = mix_seed(task.seed, 0);
    DenseMatrix<F> m = [&] {
        if constexpr (std::is_same_v<F, RationalField>) {
            const auto pts = sample_task_points_exact(task.model, task.k, task.coordinate_box, trial_seed);
            return build_conditions_matrix(f, task.model, task.degree, pts);
        } else {
            const auto pts = sample_task_points_mod(f, task.model, task.k, trial_seed);
            return build_conditions_matrix(f, task.model, task.degree, pts);
        }
    }();
    return kernel_basis(m);
}

/// Exact-rational singular system at the task's seed, the certification path.
inline std::vector<std::vector<Rational>> singular_system_basis_exact(InterpolationTask task) {
    task.mode = ArithmeticMode::exact_rational;
    return singular_system_basis(RationalField{}, task);
}

} // namespace terracini
