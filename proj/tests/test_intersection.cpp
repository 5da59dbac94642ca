#include <catch2/catch.hpp>

#include <terracini/ambient.hpp>
#include <terracini/intersection.hpp>
#include <terracini/rng.hpp>

using namespace terracini;

TEST_CASE("pair: built-in forms") {
    const auto plane = projective_plane_numerics();
    CHECK(plane.form.pair(DivisorClass{1}, DivisorClass{1}) == 1);

    const auto product = line_product_numerics();
    const DivisorClass l{1, 1};
    CHECK(product.form.self(l) == 2);
    CHECK(product.form.pair(l, product.canonical) == -4);
}

TEST_CASE("pair: symmetry and rank mismatch") {
    const auto product = line_product_numerics();
    SplitMix64 rng(23);
    for (int i = 0; i < 30; ++i) {
        const DivisorClass a{rng.symmetric(50), rng.symmetric(50)};
        const DivisorClass b{rng.symmetric(50), rng.symmetric(50)};
        CHECK(product.form.pair(a, b) == product.form.pair(b, a));
    }
    CHECK_THROWS_AS(product.form.pair(DivisorClass{1}, DivisorClass{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(IntersectionForm(2, {0, 1, 2, 0}), std::invalid_argument);
}

TEST_CASE("chi_riemann_roch: plane and product values") {
    const auto plane = projective_plane_numerics();
    CHECK(chi_riemann_roch(plane, DivisorClass{4}) == 15);
    CHECK(chi_riemann_roch(plane, DivisorClass{0}) == 1);
    for (long long m = 0; m <= 12; ++m)
        CHECK(chi_riemann_roch(plane, DivisorClass{m}) == (m + 1) * (m + 2) / 2);

    const auto product = line_product_numerics();
    CHECK(chi_riemann_roch(product, DivisorClass{2, 2}) == 9);
    CHECK(chi_riemann_roch(product, DivisorClass{0, 0}) == 1);
}

TEST_CASE("chi_riemann_roch: equals the monomial basis count on built-in models") {
    const auto plane = projective_plane_numerics();
    const auto p2 = AmbientModel::projective_space(2);
    for (int d = 0; d <= 10; ++d) {
        const auto count = static_cast<long long>(monomial_basis(p2, MultiDegree{d}).size());
        CHECK(chi_riemann_roch(plane, DivisorClass{d}) == count);
    }
    const auto product = line_product_numerics();
    const auto pp = AmbientModel::product_of_lines(2);
    for (int a = 0; a <= 10; ++a) {
        for (int b = 0; b <= 10; ++b) {
            const auto count = static_cast<long long>(monomial_basis(pp, MultiDegree{a, b}).size());
            CHECK(chi_riemann_roch(product, DivisorClass{a, b}) == count);
        }
    }
}

TEST_CASE("chi_riemann_roch: parity violation on inconsistent numerics") {
    // odd pairing with K = 0 makes M(M - K) odd for M = H
    const SurfaceNumerics broken{IntersectionForm(1, {1}), DivisorClass{0}, 1, 0, 0};
    CHECK_THROWS_AS(chi_riemann_roch(broken, DivisorClass{1}), ConfigError);
}
