#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "terracini/errors.hpp"
#include "terracini/rng.hpp"

namespace terracini {

/// Deterministic trial-division primality test. Moduli in scope are < 2^31,
/// so this is instantaneous.
constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

/// Arithmetic context for GF(p). Elements are plain uint64_t residues in
/// [0, p); the field object owns the modulus, so matrices over different
/// primes cannot be mixed by accident.
class PrimeField {
public:
    using Element = std::uint64_t;

    static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 31) - 1;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 3 || p > max_modulus || !is_prime(p))
            throw ConfigError("modulus must be an odd prime below 2^31, got " + std::to_string(p));
    }

    std::uint64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }

    Element from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<Element>(r);
    }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }

    Element pow(Element base, std::uint64_t e) const {
        Element r = 1;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
        return pow(a, p_ - 2);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }

    /// Uniform element; one rng draw per call.
    Element sample(SplitMix64& rng) const { return rng.below(p_); }

    std::string str(Element a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
};

} // namespace terracini
