#ifndef CY3RINGS_BIGINT_HPP
#define CY3RINGS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cy3 {

// Every quantity in this library is an exact integer or rational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

// Rationals render as "p" or "p/q" in lowest terms.
inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

// Malformed user input (flags, basket strings, matrix documents).  CLI exit 2.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that the mathematics rejects (registry miss, inconsistent
// degree matrix, shape-fit failure, non-integral count).  CLI exit 1.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cy3

#endif
