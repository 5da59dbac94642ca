#pragma once

#include <stdexcept>

namespace terracini {

/// Invalid arithmetic configuration: composite modulus, modulus not exceeding
/// the total degree in use, or surface numerics violating integrality.
/// The CLI maps this to exit code 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sampled point configuration failed a genericity requirement (e.g. the
/// quadric through the points is not unique). Resample with another seed.
struct GeometryViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace terracini
