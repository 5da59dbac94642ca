#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "terracini/bounds.hpp"
#include "terracini/interpolation.hpp"
#include "terracini/scan.hpp"
#include "terracini/secant.hpp"

namespace terracini {

using OrderedJson = nlohmann::ordered_json;

namespace detail {

/// Degree echo: a plain number for single-part degrees, "a,b" otherwise.
inline OrderedJson degree_json(const MultiDegree& deg) {
    if (deg.parts.size() == 1) return OrderedJson(deg.parts[0]);
    return OrderedJson(deg.str());
}

/// Exact integers: numbers below 2^53, decimal strings above.
inline OrderedJson exact_int(const mpz_class& v) {
    static const mpz_class limit = mpz_class(1) << 53;
    if (abs(v) < limit) return OrderedJson(v.get_si());
    return OrderedJson(v.get_str());
}

inline OrderedJson rational_json(const Rational& r) { return OrderedJson(r.str()); }

} // namespace detail

inline OrderedJson to_json(const DimensionReport& rep) {
    OrderedJson j;
    j["model"] = rep.model_id;
    j["degree"] = detail::degree_json(rep.degree);
    j["k"] = rep.k;
    j["basis_size"] = rep.basis_size;
    j["conditions"] = rep.conditions;
    j["expected_dim"] = rep.expected_dim;
    j["observed_dim"] = rep.observed_dim;
    j["defect"] = rep.defect;
    j["certified"] = certainty_str(rep.certified);
    j["trials_used"] = rep.trials_used;
    j["seed"] = rep.seed;
    if (rep.k_above_span_bound)
        j["note"] = "k exceeds h0/3; the span-genericity hypothesis is not enforced";
    return j;
}

inline OrderedJson to_json(const SecantReport& rep) {
    OrderedJson j;
    j["model"] = rep.model_id;
    j["degree"] = detail::degree_json(rep.degree);
    j["k"] = rep.k;
    j["ambient_dim"] = rep.ambient_dim;
    j["expected_secant_dim"] = rep.expected_secant_dim;
    j["observed_secant_dim"] = rep.observed_secant_dim;
    j["secant_defect"] = rep.secant_defect;
    j["trials_used"] = rep.trials_used;
    j["seed"] = rep.seed;
    return j;
}

/// Primitive integer form of a rational vector: clear denominators, divide by
/// the content, make the first nonzero entry positive.
inline std::vector<mpz_class> primitive_integer_form(const std::vector<Rational>& v) {
    mpz_class lcm_den = 1;
    for (const auto& x : v) {
        mpz_class den = x.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        lcm_den = lcm_den / g * den;
    }
    std::vector<mpz_class> out;
    out.reserve(v.size());
    mpz_class content = 0;
    for (const auto& x : v) {
        mpz_class scaled = x.numerator() * (lcm_den / x.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        out.push_back(std::move(scaled));
    }
    if (content == 0) return out;
    int lead_sign = 0;
    for (auto& x : out) {
        x /= content;
        if (lead_sign == 0 && x != 0) lead_sign = sgn(x);
    }
    if (lead_sign < 0)
        for (auto& x : out) x = -x;
    return out;
}

inline OrderedJson to_json(const BaseCurveCertificate& cert) {
    OrderedJson j;
    j["case"] = std::to_string(cert.n) + "," + std::to_string(cert.d) + "," + std::to_string(cert.k);
    j["seed"] = cert.seed;
    j["success"] = cert.success;
    const auto quadric_int = primitive_integer_form(cert.quadric);
    const auto quartic_int = primitive_integer_form(cert.quartic);
    auto vec = [](const std::vector<mpz_class>& v) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& x : v) arr.push_back(x.get_str());
        return arr;
    };
    j["quadric"] = vec(quadric_int);
    j["quartic"] = vec(quartic_int);
    // scalar relating the emitted vectors: quartic = scalar * quadric^2,
    // so the record can be audited without renormalizing
    const auto model = AmbientModel::projective_space(cert.n);
    const RationalField f;
    std::vector<Rational> q_rat;
    q_rat.reserve(quadric_int.size());
    for (const auto& x : quadric_int) q_rat.push_back(Rational(x));
    const auto square = multiply_forms(f, model, MultiDegree{2}, q_rat, MultiDegree{2}, q_rat,
                                       MultiDegree{4});
    Rational printed_scalar;
    for (std::size_t i = 0; i < square.size(); ++i) {
        if (!square[i].is_zero()) {
            printed_scalar = Rational(quartic_int[i]) / square[i];
            break;
        }
    }
    j["scalar"] = printed_scalar.str();
    OrderedJson pts = OrderedJson::array();
    for (const auto& p : cert.points) {
        OrderedJson coords = OrderedJson::array();
        for (const auto& c : p) coords.push_back(detail::exact_int(c.numerator()));
        pts.push_back(coords);
    }
    j["points"] = pts;
    return j;
}

inline OrderedJson to_json(const BoundsReport& rep) {
    OrderedJson j;
    j["degree"] = rep.degree;
    j["candidates_checked"] = rep.candidates_checked;
    j["obstruction_possible"] = rep.obstruction_possible;
    j["h0_exact"] = rep.h0_exact;
    if (rep.worst_candidate) {
        const auto& c = *rep.worst_candidate;
        j["worst_m"] = c.m_class.coeffs;
        j["worst_h0"] = c.h0_m;
        j["lhs"] = c.lhs;
        j["rhs"] = detail::rational_json(c.rhs);
    }
    return j;
}

inline OrderedJson threshold_json(const std::string& model_id, const DivisorClass& l, long long d_max,
                                  const std::optional<long long>& d0,
                                  const std::vector<BoundsReport>& audit) {
    OrderedJson j;
    j["model"] = model_id;
    j["l_class"] = l.coeffs;
    j["d_max"] = d_max;
    if (d0)
        j["d0"] = *d0;
    else
        j["d0"] = nullptr;
    OrderedJson reports = OrderedJson::array();
    for (const auto& rep : audit) reports.push_back(to_json(rep));
    j["reports"] = reports;
    return j;
}

inline std::string csv_header() {
    return "model,degree,k,basis_size,conditions,expected_dim,observed_dim,defect,certified,trials,seed";
}

inline std::string csv_row(const DimensionReport& rep) {
    std::ostringstream os;
    os << rep.model_id << ',';
    if (rep.degree.parts.size() == 1)
        os << rep.degree.parts[0];
    else
        os << '"' << rep.degree.str() << '"';
    os << ',' << rep.k << ',' << rep.basis_size << ',' << rep.conditions << ',' << rep.expected_dim
       << ',' << rep.observed_dim << ',' << rep.defect << ',' << certainty_str(rep.certified) << ','
       << rep.trials_used << ',' << rep.seed;
    return os.str();
}

inline std::string verify_summary(const VerifyResult& result, int n_max, int d_max) {
    std::ostringstream os;
    auto triple = [](const ExceptionTriple& t) {
        return "(" + std::to_string(t.n) + "," + std::to_string(t.d) + "," + std::to_string(t.k) + ")";
    };
    os << "grid: n <= " << n_max << ", d in [2," << d_max << "], k in [1, saturation+1]\n";
    os << "defective cells found: " << result.defective.size() << "\n";
    for (const auto& t : result.defective) os << "  defective " << triple(t) << "\n";
    if (result.match) {
        os << "result: MATCH — defective set equals the Alexander-Hirschowitz exception table on this grid\n";
    } else {
        os << "result: MISMATCH\n";
        for (const auto& t : result.missing) os << "  missing (in table, not observed): " << triple(t) << "\n";
        for (const auto& t : result.unexpected) os << "  unexpected (observed, not in table): " << triple(t) << "\n";
    }
    return os.str();
}

} // namespace terracini
