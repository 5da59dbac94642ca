#include <catch2/catch.hpp>

#include <terracini/scan.hpp>
#include <terracini/serialize.hpp>

#include <set>
#include <string>
#include <vector>

using namespace terracini;

TEST_CASE("saturation_k") {
    const auto p2 = AmbientModel::projective_space(2);
    CHECK(saturation_k(p2, MultiDegree{4}) == 5);  // 15 / 3
    CHECK(saturation_k(p2, MultiDegree{2}) == 2);  // ceil(6 / 3)
    const auto p3 = AmbientModel::projective_space(3);
    CHECK(saturation_k(p3, MultiDegree{4}) == 9);  // ceil(35 / 4)
    const auto p4 = AmbientModel::projective_space(4);
    CHECK(saturation_k(p4, MultiDegree{6}) == 42); // ceil(210 / 5)
}

TEST_CASE("derive_cell_seed: stable and collision-averse") {
    const auto a = derive_cell_seed(0, "p2", MultiDegree{4}, 5);
    CHECK(a == derive_cell_seed(0, "p2", MultiDegree{4}, 5));
    CHECK(a != derive_cell_seed(0, "p2", MultiDegree{4}, 6));
    CHECK(a != derive_cell_seed(0, "p3", MultiDegree{4}, 5));
    CHECK(a != derive_cell_seed(1, "p2", MultiDegree{4}, 5));
    CHECK(derive_cell_seed(0, "p1xp1", MultiDegree{2, 2}, 3) !=
          derive_cell_seed(0, "p1xp1", MultiDegree{2, 3}, 3));
}

TEST_CASE("run_scan: plane defective rows and k range") {
    const auto p2 = AmbientModel::projective_space(2);
    std::vector<MultiDegree> degrees;
    for (int d = 1; d <= 10; ++d) degrees.push_back(MultiDegree{d});
    const auto reports = run_scan(p2, degrees, 10007, 3, 0);

    std::set<std::pair<int, long long>> defective;
    long long rows_for_d4 = 0;
    for (const auto& rep : reports) {
        if (rep.defect > 0) defective.insert({rep.degree.parts[0], rep.k});
        if (rep.degree.parts[0] == 4) ++rows_for_d4;
    }
    CHECK(defective == std::set<std::pair<int, long long>>{{2, 2}, {4, 5}});
    CHECK(rows_for_d4 == 6); // k = 1..saturation+1
}

TEST_CASE("run_scan: parallel equals serial") {
    const auto p2 = AmbientModel::projective_space(2);
    std::vector<MultiDegree> degrees;
    for (int d = 1; d <= 8; ++d) degrees.push_back(MultiDegree{d});

    const auto serial = run_scan(p2, degrees, 10007, 3, 42, 1);
    const auto parallel = run_scan(p2, degrees, 10007, 3, 42, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(csv_row(serial[i]) == csv_row(parallel[i]));
        CHECK(to_json(serial[i]) == to_json(parallel[i]));
    }
}

TEST_CASE("run_scan: product of lines") {
    const auto pp = AmbientModel::product_of_lines(2);
    const auto reports = run_scan(pp, {MultiDegree{2, 2}}, 10007, 3, 0);
    REQUIRE(!reports.empty());
    for (const auto& rep : reports) {
        CHECK(rep.model_id == "p1xp1");
        CHECK(rep.basis_size == 9);
        CHECK(rep.defect >= 0);
    }
}

TEST_CASE("surface scan: p1xp1 defects are prime-independent and oracle-confirmed") {
    const auto pp = AmbientModel::product_of_lines(2);
    std::vector<MultiDegree> degrees;
    for (int d = 1; d <= 4; ++d) degrees.push_back(MultiDegree{d, d});

    std::set<std::pair<std::string, long long>> first_defective;
    for (std::uint64_t prime : {10007ULL, 32003ULL, 65537ULL}) {
        const auto reports = run_scan(pp, degrees, prime, 3, 0);
        std::set<std::pair<std::string, long long>> defective;
        for (const auto& rep : reports)
            if (rep.defect > 0) defective.insert({rep.degree.str(), rep.k});
        if (first_defective.empty() && prime == 10007) first_defective = defective;
        CHECK(defective == first_defective);
    }
    // whatever the modular scan flags, the exact-rational oracle must agree
    CHECK(first_defective.count({"2,2", 3}) == 1); // the known doubled-curve case
    for (const auto& [deg_text, k] : first_defective) {
        InterpolationTask task;
        task.model = pp;
        const auto comma = deg_text.find(',');
        task.degree = MultiDegree{std::stoi(deg_text.substr(0, comma)),
                                  std::stoi(deg_text.substr(comma + 1))};
        task.k = k;
        task.mode = ArithmeticMode::exact_rational;
        task.trials = 2;
        task.seed = 5;
        CHECK(generic_dimension(task).defect > 0);
    }
}

TEST_CASE("ExceptionTable membership") {
    CHECK(ExceptionTable::contains(2, 2, 2));
    CHECK(ExceptionTable::contains(4, 2, 4));
    CHECK_FALSE(ExceptionTable::contains(4, 2, 5));
    CHECK_FALSE(ExceptionTable::contains(2, 2, 1));
    CHECK(ExceptionTable::contains(2, 4, 5));
    CHECK(ExceptionTable::contains(3, 4, 9));
    CHECK(ExceptionTable::contains(4, 3, 7));
    CHECK(ExceptionTable::contains(4, 4, 14));
    CHECK_FALSE(ExceptionTable::contains(2, 4, 4));
    CHECK_FALSE(ExceptionTable::contains(3, 4, 8));
    CHECK_FALSE(ExceptionTable::contains(1, 5, 3));
}

TEST_CASE("verify_exceptions: small grids") {
    const auto small = verify_exceptions(2, 3, 10007, 3, 0);
    CHECK(small.match);
    REQUIRE(small.defective.size() == 1);
    CHECK(small.defective[0] == ExceptionTriple{2, 2, 2});

    const auto line_only = verify_exceptions(1, 10, 10007, 3, 0);
    CHECK(line_only.match);
    CHECK(line_only.defective.empty());
}

TEST_CASE("verify_exceptions: identical verdict across the three default primes") {
    const std::vector<ExceptionTriple> want = {
        {2, 2, 2}, {2, 4, 5}, {3, 2, 2}, {3, 2, 3}, {3, 4, 9}};
    for (std::uint64_t prime : {10007ULL, 32003ULL, 65537ULL}) {
        const auto result = verify_exceptions(3, 4, prime, 3, 0);
        CHECK(result.match);
        CHECK(result.defective == want);
    }
}

TEST_CASE("serialization: CSV and JSON shapes") {
    InterpolationTask task;
    task.model = AmbientModel::projective_space(2);
    task.degree = MultiDegree{4};
    task.k = 5;
    task.seed = 9;
    const auto rep = generic_dimension(task);

    CHECK(csv_header() ==
          "model,degree,k,basis_size,conditions,expected_dim,observed_dim,defect,certified,trials,seed");
    CHECK(csv_row(rep) == "p2,4,5,15,15,-1,0,1,defect-probable,3,9");

    const auto j = to_json(rep);
    CHECK(j["model"] == "p2");
    CHECK(j["degree"] == 4);
    CHECK(j["k"] == 5);
    CHECK(j["basis_size"] == 15);
    CHECK(j["conditions"] == 15);
    CHECK(j["expected_dim"] == -1);
    CHECK(j["observed_dim"] == 0);
    CHECK(j["defect"] == 1);
    CHECK(j["certified"] == "defect-probable");
    CHECK(j["trials_used"] == 3);
    CHECK(j["seed"] == 9);
    CHECK_FALSE(j.contains("note")); // 3k = h0 is not above the bound

    // product degrees are quoted in CSV and stringified in JSON
    InterpolationTask product_task;
    product_task.model = AmbientModel::product_of_lines(2);
    product_task.degree = MultiDegree{2, 2};
    product_task.k = 4;
    const auto product_rep = generic_dimension(product_task);
    CHECK(csv_row(product_rep).rfind("p1xp1,\"2,2\",4,9,", 0) == 0);
    CHECK(to_json(product_rep)["degree"] == "2,2");
    CHECK(to_json(product_rep).contains("note")); // 12 > 9
}

TEST_CASE("verify_summary text") {
    const auto result = verify_exceptions(2, 4, 10007, 3, 0);
    const auto text = verify_summary(result, 2, 4);
    CHECK(text.find("defective cells found: 2") != std::string::npos);
    CHECK(text.find("(2,2,2)") != std::string::npos);
    CHECK(text.find("(2,4,5)") != std::string::npos);
    CHECK(text.find("MATCH") != std::string::npos);
}
