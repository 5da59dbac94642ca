// Command-line front end: dimension reports, degree/k scans, exception-list
// verification, secant dimensions, base-curve certificates, and obstruction
// degree thresholds. Every command is a pure function of its flags and seed,
// and re-running one produces byte-identical output.

#include <CLI11.hpp>

#include <terracini/terracini.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace terracini;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitArithmetic = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

AmbientModel parse_model(const std::string& name, int n) {
    if (name == "pn") {
        if (n < 1) throw UsageError("--model pn requires --n >= 1");
        return AmbientModel::projective_space(n);
    }
    if (name == "p1xp1") return AmbientModel::product_of_lines(2);
    if (name.size() >= 2 && name[0] == 'p' && name.find('x') == std::string::npos) {
        const int dim = std::atoi(name.c_str() + 1);
        if (dim >= 1) return AmbientModel::projective_space(dim);
    }
    throw UsageError("unknown model '" + name + "' (use pn with --n, p1..p4, or p1xp1)");
}

MultiDegree parse_degree(const std::string& text) {
    MultiDegree deg;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            deg.parts.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("cannot parse degree component '" + part + "'");
        }
    }
    if (deg.parts.empty()) throw UsageError("empty degree");
    return deg;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << content;
}

struct CommonFlags {
    std::string model = "pn";
    int n = 0;
    std::string degree;
    long long k = 0;
    std::uint64_t prime = 10007;
    unsigned trials = 3;
    std::uint64_t seed = 0;
    bool exact = false;
    long long box = 100;
    std::string format = "json";
    std::string out;
};

void add_model_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--model", flags.model, "ambient model: pn (with --n), p1..p4, or p1xp1")
        ->capture_default_str();
    cmd->add_option("--n", flags.n, "projective space dimension for --model pn");
    cmd->add_option("--prime", flags.prime, "prime modulus for the randomized rank")
        ->capture_default_str();
    cmd->add_option("--trials", flags.trials, "independent point configurations per cell")
        ->capture_default_str();
    cmd->add_option("--seed", flags.seed, "base seed")->capture_default_str();
    cmd->add_option("--out", flags.out, "output path (default: standard output)");
}

int cmd_dim(const CommonFlags& flags) {
    const auto model = parse_model(flags.model, flags.n);
    InterpolationTask task;
    task.model = model;
    task.degree = parse_degree(flags.degree);
    task.k = flags.k;
    task.prime = flags.prime;
    task.trials = flags.trials;
    task.seed = flags.seed;
    task.mode = flags.exact ? ArithmeticMode::exact_rational : ArithmeticMode::modular;
    task.coordinate_box = flags.box;
    if (task.k < 0) throw UsageError("--k must be >= 0");

    const auto rep = generic_dimension(task);
    if (flags.format == "csv")
        write_output(flags.out, csv_header() + "\n" + csv_row(rep) + "\n");
    else
        write_output(flags.out, to_json(rep).dump(2) + "\n");
    return kExitOk;
}

int cmd_scan(const CommonFlags& flags, int dmin, int dmax, unsigned jobs) {
    const auto model = parse_model(flags.model, flags.n);
    if (dmin < 1) throw UsageError("--dmin must be >= 1");
    if (jobs < 1) throw UsageError("--jobs must be >= 1");

    std::vector<MultiDegree> degrees;
    for (int d = dmin; d <= dmax; ++d) {
        if (model.kind == AmbientKind::projective_space)
            degrees.push_back(MultiDegree{d});
        else
            degrees.push_back(MultiDegree{std::vector<int>(model.dim, d)});
    }
    const auto reports = run_scan(model, degrees, flags.prime, flags.trials, flags.seed, jobs);

    if (flags.format == "json") {
        OrderedJson arr = OrderedJson::array();
        for (const auto& rep : reports) arr.push_back(to_json(rep));
        write_output(flags.out, arr.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream os;
    os << csv_header() << "\n";
    for (const auto& rep : reports) os << csv_row(rep) << "\n";
    write_output(flags.out, os.str());
    return kExitOk;
}

int cmd_verify(const CommonFlags& flags, int n_max, int d_max, unsigned jobs) {
    if (n_max < 1 || n_max > 4) throw UsageError("--nmax must be in [1, 4]");
    if (d_max < 2) throw UsageError("--dmax must be >= 2");
    // desk-scale guard: the largest cell matrix has basis-size columns
    const auto widest = basis_dimension(AmbientModel::projective_space(n_max), MultiDegree{d_max});
    if (widest > 500)
        throw UsageError("grid too large: the (" + std::to_string(n_max) + "," +
                         std::to_string(d_max) + ") cell has " + std::to_string(widest) +
                         " columns (limit 500)");
    if (jobs < 1) throw UsageError("--jobs must be >= 1");
    const auto result = verify_exceptions(n_max, d_max, flags.prime, flags.trials, flags.seed, jobs);
    write_output(flags.out, verify_summary(result, n_max, d_max));
    return result.match ? kExitOk : kExitMismatch;
}

int cmd_secant(const CommonFlags& flags) {
    const auto model = parse_model(flags.model, flags.n);
    if (flags.k < 1) throw UsageError("--k must be >= 1 for secant varieties");
    const auto rep = secant_dimension(model, parse_degree(flags.degree), flags.k, flags.prime,
                                      flags.trials, flags.seed);
    write_output(flags.out, to_json(rep).dump(2) + "\n");
    return kExitOk;
}

int cmd_base_curve(const std::string& case_text, std::uint64_t seed, const std::string& out) {
    const auto deg = parse_degree(case_text); // reuse the comma-separated int parser
    if (deg.parts.size() != 3) throw UsageError("--case must be n,d,k");
    const int n = deg.parts[0], d = deg.parts[1], k = deg.parts[2];
    if (!is_square_exception_case(n, d, k))
        throw UsageError("--case must be one of 2,4,5 3,4,9 4,4,14");
    const auto cert = base_curve_certificate(n, d, k, seed);
    write_output(out, to_json(cert).dump(2) + "\n");
    return cert.success ? kExitOk : kExitMismatch;
}

int cmd_bounds(const std::string& model_name, long long d_max, std::optional<long long> single_d,
               const std::string& out) {
    SurfaceNumerics numerics = projective_plane_numerics();
    DivisorClass l{1};
    std::string id = "p2";
    if (model_name == "p1xp1") {
        numerics = line_product_numerics();
        l = DivisorClass{1, 1};
        id = "p1xp1";
    } else if (model_name != "p2") {
        throw UsageError("bounds supports --model p2 or p1xp1");
    }
    const auto h0 = toric_h0(numerics);
    if (single_d) {
        if (*single_d < 1) throw UsageError("--d must be >= 1");
        write_output(out, to_json(obstruction_scan(numerics, l, *single_d, h0)).dump(2) + "\n");
        return kExitOk;
    }
    if (d_max < 1) throw UsageError("--dmax must be >= 1");
    std::vector<BoundsReport> audit;
    const auto d0 = find_degree_threshold(numerics, l, d_max, h0, &audit);
    write_output(out, threshold_json(id, l, d_max, d0, audit).dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"terracini: exact dimensions of linear systems with general double points"};
    app.require_subcommand(1);

    CommonFlags dim_flags;
    auto* dim = app.add_subcommand("dim", "dimension report for one (model, degree, k)");
    add_model_flags(dim, dim_flags);
    dim->add_option("--d", dim_flags.degree, "degree (integer, or comma pair for p1xp1)")->required();
    dim->add_option("--k", dim_flags.k, "number of general double points")->required();
    dim->add_flag("--exact", dim_flags.exact, "exact rational arithmetic at integer points");
    dim->add_option("--box", dim_flags.box, "half-width of the integer sampling box in exact mode")
        ->capture_default_str();
    dim->add_option("--format", dim_flags.format, "json or csv")->capture_default_str();

    CommonFlags scan_flags;
    scan_flags.format = "csv";
    int scan_dmin = 1, scan_dmax = 0;
    unsigned scan_jobs = 1;
    auto* scan = app.add_subcommand("scan", "reports over a degree range, k = 1..saturation+1");
    add_model_flags(scan, scan_flags);
    scan->add_option("--dmin", scan_dmin, "first degree")->capture_default_str();
    scan->add_option("--dmax", scan_dmax, "last degree (empty range gives a header-only CSV)")->required();
    scan->add_option("--jobs", scan_jobs, "worker threads (output is scheduling-independent)")
        ->capture_default_str();
    scan->add_option("--format", scan_flags.format, "csv or json")->capture_default_str();

    CommonFlags verify_flags;
    int verify_nmax = 4, verify_dmax = 6;
    unsigned verify_jobs = 1;
    auto* verify = app.add_subcommand("verify-exceptions",
                                      "compare the defective set on a grid against the exception table");
    verify->add_option("--nmax", verify_nmax, "largest projective space dimension (<= 4)")
        ->capture_default_str();
    verify->add_option("--dmax", verify_dmax, "largest degree (2..8)")->capture_default_str();
    verify->add_option("--prime", verify_flags.prime, "prime modulus")->capture_default_str();
    verify->add_option("--trials", verify_flags.trials, "trials per cell")->capture_default_str();
    verify->add_option("--seed", verify_flags.seed, "base seed")->capture_default_str();
    verify->add_option("--jobs", verify_jobs, "worker threads")->capture_default_str();
    verify->add_option("--out", verify_flags.out, "output path");

    CommonFlags secant_flags;
    auto* secant = app.add_subcommand("secant", "secant variety dimension via the tangent-span rank");
    add_model_flags(secant, secant_flags);
    secant->add_option("--d", secant_flags.degree, "degree")->required();
    secant->add_option("--k", secant_flags.k, "number of spanning points")->required();

    std::string case_text;
    std::uint64_t case_seed = 0;
    std::string case_out;
    auto* base_curve = app.add_subcommand("base-curve",
                                          "doubled-quadric certificate for a square exceptional case");
    base_curve->add_option("--case", case_text, "n,d,k: one of 2,4,5 3,4,9 4,4,14")->required();
    base_curve->add_option("--seed", case_seed, "base seed")->capture_default_str();
    base_curve->add_option("--out", case_out, "output path");

    std::string bounds_model = "p2";
    long long bounds_dmax = 0;
    long long bounds_d_single = 0;
    std::string bounds_out;
    auto* bounds = app.add_subcommand("bounds", "obstruction inequality scan and degree threshold");
    bounds->add_option("--model", bounds_model, "p2 or p1xp1")->capture_default_str();
    auto* dmax_opt = bounds->add_option("--dmax", bounds_dmax, "threshold search range [1, dmax]");
    auto* d_opt = bounds->add_option("--d", bounds_d_single, "report a single degree instead");
    dmax_opt->excludes(d_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dim->parsed()) return cmd_dim(dim_flags);
        if (scan->parsed()) return cmd_scan(scan_flags, scan_dmin, scan_dmax, scan_jobs);
        if (verify->parsed()) return cmd_verify(verify_flags, verify_nmax, verify_dmax, verify_jobs);
        if (secant->parsed()) return cmd_secant(secant_flags);
        if (base_curve->parsed()) return cmd_base_curve(case_text, case_seed, case_out);
        if (bounds->parsed()) {
            std::optional<long long> single;
            if (d_opt->count() > 0) single = bounds_d_single;
            if (dmax_opt->count() == 0 && !single) throw UsageError("bounds needs --dmax or --d");
            return cmd_bounds(bounds_model, bounds_dmax, single, bounds_out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "arithmetic configuration error: " << e.what() << "\n";
        return kExitArithmetic;
    } catch (const GeometryViolation& e) {
        std::cerr << "geometry violation: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
