#ifndef KUMMERCALC_INT_TYPES_HPP
#define KUMMERCALC_INT_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace kummer {

// All arithmetic in this library is exact. Intermediate values in the
// normal-form algorithms overflow 64-bit words even for small inputs,
// so every integer is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Int>;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division and the matching remainder (0 <= rem < |d| for d > 0).
inline Int floor_div(const Int& a, const Int& d) {
    Int q = a / d;
    if ((a % d) != 0 && ((a < 0) != (d < 0))) --q;
    return q;
}
inline Int floor_mod(const Int& a, const Int& d) { return a - floor_div(a, d) * d; }

// Input is structurally fine but outside what the implemented algorithms
// can decide (e.g. cone computations above the supported rank).
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematically invalid request: violated precondition, failed membership,
// rejected chart, ...
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed description file or option value.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace kummer

#endif
