#include <catch2/catch.hpp>

#include <terracini/interpolation.hpp>
#include <terracini/scan.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace terracini;

namespace {

InterpolationTask plane_task(int d, long long k, std::uint64_t seed = 0) {
    InterpolationTask task;
    task.model = AmbientModel::projective_space(2);
    task.degree = MultiDegree{d};
    task.k = k;
    task.seed = seed;
    return task;
}

} // namespace

TEST_CASE("expected_dimension") {
    CHECK(expected_dimension(15, 2, 0) == 14);
    CHECK(expected_dimension(15, 2, 5) == -1);
    CHECK(expected_dimension(70, 4, 14) == -1);
    CHECK(expected_dimension(6, 2, 2) == -1);
    CHECK(expected_dimension(0, 1, 0) == -1);
    CHECK_THROWS_AS(expected_dimension(-1, 2, 0), std::invalid_argument);
}

TEST_CASE("build_conditions_matrix: shapes") {
    const PrimeField f(10007);
    const auto p2 = AmbientModel::projective_space(2);

    const auto empty = build_conditions_matrix(
        f, p2, MultiDegree{4}, std::vector<std::vector<PrimeField::Element>>{});
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 15);

    SplitMix64 rng(0);
    const auto m245 = build_conditions_matrix(f, p2, MultiDegree{4}, sample_points_mod(f, 2, 5, rng));
    CHECK(m245.rows() == 15);
    CHECK(m245.cols() == 15);

    const auto p3 = AmbientModel::projective_space(3);
    const auto m349 = build_conditions_matrix(f, p3, MultiDegree{4}, sample_points_mod(f, 3, 9, rng));
    CHECK(m349.rows() == 36);
    CHECK(m349.cols() == 35);
}

TEST_CASE("generic_dimension: plane quartics") {
    const auto full = generic_dimension(plane_task(4, 4));
    CHECK(full.expected_dim == 2);
    CHECK(full.observed_dim == 2);
    CHECK(full.defect == 0);
    CHECK(full.certified == Certainty::nondefective_certified);

    const auto defective = generic_dimension(plane_task(4, 5));
    CHECK(defective.basis_size == 15);
    CHECK(defective.conditions == 15);
    CHECK(defective.expected_dim == -1);
    CHECK(defective.observed_dim == 0);
    CHECK(defective.defect == 1);
    CHECK(defective.certified == Certainty::defect_probable);

    // exact-rational oracle confirms both
    for (long long k : {4, 5}) {
        auto task = plane_task(4, k, 31);
        task.mode = ArithmeticMode::exact_rational;
        task.trials = 1;
        const auto rep = generic_dimension(task);
        CHECK(rep.observed_dim == (k == 4 ? 2 : 0));
    }
}

TEST_CASE("generic_dimension: two double points on conics") {
    const auto rep = generic_dimension(plane_task(2, 2));
    CHECK(rep.basis_size == 6);
    CHECK(rep.expected_dim == -1);
    CHECK(rep.observed_dim == 0);
    CHECK(rep.defect == 1);
}

TEST_CASE("generic_dimension: p1xp1 bidegree (2,2) with 3 points, exact oracle") {
    InterpolationTask task;
    task.model = AmbientModel::product_of_lines(2);
    task.degree = MultiDegree{2, 2};
    task.k = 3;

    const auto modular = generic_dimension(task);
    CHECK(modular.basis_size == 9);
    CHECK(modular.expected_dim == -1);

    task.mode = ArithmeticMode::exact_rational;
    task.trials = 2;
    task.seed = 17;
    const auto exact = generic_dimension(task);
    CHECK(exact.observed_dim == 0);
    CHECK(exact.defect == 1);
    CHECK(modular.observed_dim == exact.observed_dim);
    CHECK(modular.defect == exact.defect);
}

TEST_CASE("generic_dimension: the line is never defective") {
    const auto p1 = AmbientModel::projective_space(1);
    for (int d = 1; d <= 12; ++d) {
        const long long k_max = saturation_k(p1, MultiDegree{d}) + 1;
        for (long long k = 1; k <= k_max; ++k) {
            InterpolationTask task;
            task.model = p1;
            task.degree = MultiDegree{d};
            task.k = k;
            const auto rep = generic_dimension(task);
            CHECK(rep.defect == 0);
        }
    }
}

TEST_CASE("generic_dimension: single double point is independent for d >= 2") {
    for (const auto& model : {AmbientModel::projective_space(2), AmbientModel::projective_space(3)}) {
        for (int d = 2; d <= 5; ++d) {
            InterpolationTask task;
            task.model = model;
            task.degree = MultiDegree{d};
            task.k = 1;
            CHECK(generic_dimension(task).defect == 0);
        }
    }
    InterpolationTask task;
    task.model = AmbientModel::product_of_lines(2);
    task.degree = MultiDegree{2, 3};
    task.k = 1;
    CHECK(generic_dimension(task).defect == 0);

    // triple product of lines: 4 rows per point
    InterpolationTask triple;
    triple.model = AmbientModel::product_of_lines(3);
    triple.degree = MultiDegree{2, 2, 2};
    triple.k = 1;
    const auto rep = generic_dimension(triple);
    CHECK(rep.basis_size == 27);
    CHECK(rep.conditions == 4);
    CHECK(rep.defect == 0);
}

TEST_CASE("generic_dimension: validation") {
    auto task = plane_task(4, 5);
    task.prime = 10008; // composite
    CHECK_THROWS_AS(generic_dimension(task), ConfigError);
    task.prime = 3; // not above the total degree
    CHECK_THROWS_AS(generic_dimension(task), ConfigError);
    task.prime = 10007;
    task.trials = 0;
    CHECK_THROWS_AS(generic_dimension(task), std::invalid_argument);
    task.trials = 3;
    task.k = -1;
    CHECK_THROWS_AS(generic_dimension(task), std::invalid_argument);
}

TEST_CASE("generic_dimension: span-bound note and determinism") {
    const auto saturated = generic_dimension(plane_task(4, 6));
    CHECK(saturated.k_above_span_bound); // 18 > 15
    const auto unsaturated = generic_dimension(plane_task(4, 5));
    CHECK_FALSE(unsaturated.k_above_span_bound); // 15 = 15, not above

    const auto a = generic_dimension(plane_task(5, 6, 77));
    const auto b = generic_dimension(plane_task(5, 6, 77));
    CHECK(a.observed_dim == b.observed_dim);
    CHECK(a.seed == b.seed);
}

TEST_CASE("rank monotonicity in k on nested samples") {
    const PrimeField f(10007);
    const auto p2 = AmbientModel::projective_space(2);
    const MultiDegree deg{5};
    SplitMix64 rng(13);
    const long long k_max = saturation_k(p2, deg) + 1;
    const auto pts = sample_points_mod(f, 2, k_max, rng);

    std::size_t prev = 0;
    for (long long k = 1; k <= k_max; ++k) {
        const std::vector<std::vector<PrimeField::Element>> prefix(pts.begin(), pts.begin() + k);
        const auto r = rank(build_conditions_matrix(f, p2, deg, prefix));
        CHECK(r >= prev);
        CHECK(r <= prev + 3);
        prev = r;
    }
}

TEST_CASE("rank is invariant under point order") {
    const PrimeField f(10007);
    const auto p2 = AmbientModel::projective_space(2);
    const MultiDegree deg{4};
    SplitMix64 rng(29);
    auto pts = sample_points_mod(f, 2, 5, rng);
    const auto base = rank(build_conditions_matrix(f, p2, deg, pts));
    for (int i = 0; i < 5; ++i) {
        for (std::size_t j = pts.size(); j > 1; --j) std::swap(pts[j - 1], pts[rng.below(j)]);
        CHECK(rank(build_conditions_matrix(f, p2, deg, pts)) == base);
    }
}

TEST_CASE("semicontinuity: max rank never decreases with more trials") {
    const auto task0 = plane_task(6, 8, 5);
    long long prev_rank = 0;
    for (unsigned trials = 1; trials <= 5; ++trials) {
        auto task = task0;
        task.trials = trials;
        const auto rep = generic_dimension(task);
        const long long r = rep.basis_size - 1 - rep.observed_dim;
        CHECK(r >= prev_rank);
        prev_rank = r;
    }
}

TEST_CASE("singular_system_basis: plane quartic cases") {
    auto task = plane_task(4, 5, 3);
    const auto one = singular_system_basis_exact(task);
    REQUIRE(one.size() == 1);

    // the singular quartic vanishes to order two at every sampled point
    const RationalField q;
    const auto points = sample_task_points_exact(task.model, task.k, task.coordinate_box,
                                                 mix_seed(task.seed, 0));
    const auto conditions = build_conditions_matrix(q, task.model, task.degree, points);
    for (const auto& entry : conditions.apply(one[0])) CHECK(entry.is_zero());

    task = plane_task(4, 6, 3);
    CHECK(singular_system_basis_exact(task).empty());

    task = plane_task(1, 0);
    const auto all_lines = singular_system_basis_exact(task);
    CHECK(all_lines.size() == 3);
}

TEST_CASE("scanner consistency: plane defects across three primes") {
    const auto p2 = AmbientModel::projective_space(2);
    std::vector<MultiDegree> degrees;
    for (int d = 1; d <= 10; ++d) degrees.push_back(MultiDegree{d});

    for (std::uint64_t prime : {10007ULL, 32003ULL, 65537ULL}) {
        const auto reports = run_scan(p2, degrees, prime, 3, 0);
        std::set<std::pair<int, long long>> defective;
        for (const auto& rep : reports)
            if (rep.defect > 0) defective.insert({rep.degree.parts[0], rep.k});
        CHECK(defective == std::set<std::pair<int, long long>>{{2, 2}, {4, 5}});
    }
}
