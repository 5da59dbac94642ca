#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "terracini/interpolation.hpp"

namespace terracini {

/// One (model, degree, k) grid cell. The cell seed is a stable 64-bit hash
/// of (base seed, model id, degree, k), pre-derived so worker scheduling
/// cannot influence any result.
struct ScanCell {
    AmbientModel model = AmbientModel::projective_space(2);
    MultiDegree degree;
    long long k = 0;
    std::uint64_t seed = 0;
};

inline std::uint64_t derive_cell_seed(std::uint64_t base, const std::string& model_id,
                                      const MultiDegree& degree, long long k) {
    std::uint64_t h = mix_seed(base, hash_bytes(model_id));
    for (int part : degree.parts) h = mix_seed(h, static_cast<std::uint64_t>(part));
    return mix_seed(h, static_cast<std::uint64_t>(k));
}

/// k runs from 1 to saturation + 1, one past the count that exactly uses up
/// the sections, so the super-saturated side of the boundary is probed too.
inline long long saturation_k(const AmbientModel& model, const MultiDegree& deg) {
    const long long h0 = basis_dimension(model, deg);
    const long long block = model.dim + 1;
    return (h0 + block - 1) / block;
}

inline std::vector<ScanCell> make_scan_cells(const AmbientModel& model,
                                             const std::vector<MultiDegree>& degrees,
                                             std::uint64_t base_seed) {
    std::vector<ScanCell> cells;
    const std::string id = model.id();
    for (const auto& deg : degrees) {
        const long long k_max = saturation_k(model, deg) + 1;
        for (long long k = 1; k <= k_max; ++k)
            cells.push_back(ScanCell{model, deg, k, derive_cell_seed(base_seed, id, deg, k)});
    }
    return cells;
}

/// Runs every cell and returns the reports in cell order (sorted by degree
/// position, then k). With jobs > 1 the cells are consumed by a worker pool;
/// each report lands in its cell's slot, so the output is identical to the
/// serial run regardless of scheduling.
inline std::vector<DimensionReport> run_scan(const std::vector<ScanCell>& cells, std::uint64_t prime,
                                             unsigned trials, unsigned jobs = 1) {
    std::vector<DimensionReport> reports(cells.size());
    auto run_cell = [&](std::size_t i) {
        InterpolationTask task;
        task.model = cells[i].model;
        task.degree = cells[i].degree;
        task.k = cells[i].k;
        task.prime = prime;
        task.trials = trials;
        task.seed = cells[i].seed;
        reports[i] = generic_dimension(task);
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const unsigned workers = std::min<std::size_t>(jobs, cells.size() ? cells.size() : 1);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    run_cell(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(cells.size()); // drain remaining work
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return reports;
}

inline std::vector<DimensionReport> run_scan(const AmbientModel& model,
                                             const std::vector<MultiDegree>& degrees,
                                             std::uint64_t prime, unsigned trials,
                                             std::uint64_t base_seed, unsigned jobs = 1) {
    return run_scan(make_scan_cells(model, degrees, base_seed), prime, trials, jobs);
}

/// The Alexander-Hirschowitz exception table: double points on P^n fail to
/// impose independent conditions on degree-d forms exactly for d = 2 with
/// 2 <= k <= n and the four sporadic triples.
struct ExceptionTable {
    static bool contains(int n, int d, long long k) {
        if (d == 2) return k >= 2 && k <= n;
        return (n == 2 && d == 4 && k == 5) || (n == 3 && d == 4 && k == 9) ||
               (n == 4 && d == 3 && k == 7) || (n == 4 && d == 4 && k == 14);
    }
};

struct ExceptionTriple {
    int n = 0, d = 0;
    long long k = 0;
    bool operator==(const ExceptionTriple& o) const { return n == o.n && d == o.d && k == o.k; }
    bool operator<(const ExceptionTriple& o) const {
        return std::tie(n, d, k) < std::tie(o.n, o.d, o.k);
    }
};

struct VerifyResult {
    bool match = false;
    std::vector<ExceptionTriple> defective;  // found by the scan
    std::vector<ExceptionTriple> expected;   // table restricted to the grid
    std::vector<ExceptionTriple> missing;    // in table, not found
    std::vector<ExceptionTriple> unexpected; // found, not in table
};

/// Full grid n in [1, n_max], d in [2, d_max], k in [1, saturation + 1]:
/// compares the scanned defective set against the exception table.
inline VerifyResult verify_exceptions(int n_max, int d_max, std::uint64_t prime, unsigned trials,
                                      std::uint64_t base_seed, unsigned jobs = 1) {
    if (n_max < 1 || d_max < 2) throw std::invalid_argument("need n_max >= 1 and d_max >= 2");
    VerifyResult result;
    for (int n = 1; n <= n_max; ++n) {
        const auto model = AmbientModel::projective_space(n);
        std::vector<MultiDegree> degrees;
        for (int d = 2; d <= d_max; ++d) degrees.push_back(MultiDegree{d});
        const auto reports = run_scan(model, degrees, prime, trials, base_seed, jobs);
        for (const auto& rep : reports) {
            const int d = rep.degree.parts[0];
            if (rep.defect > 0) result.defective.push_back({n, d, rep.k});
            if (ExceptionTable::contains(n, d, rep.k)) result.expected.push_back({n, d, rep.k});
        }
    }
    std::sort(result.defective.begin(), result.defective.end());
    std::sort(result.expected.begin(), result.expected.end());
    std::set_difference(result.expected.begin(), result.expected.end(), result.defective.begin(),
                        result.defective.end(), std::back_inserter(result.missing));
    std::set_difference(result.defective.begin(), result.defective.end(), result.expected.begin(),
                        result.expected.end(), std::back_inserter(result.unexpected));
    result.match = result.missing.empty() && result.unexpected.empty();
    return result;
}

} // namespace terracini
