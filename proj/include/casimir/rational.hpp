#ifndef CASIMIR_RATIONAL_HPP
#define CASIMIR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace casimir::exact {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// reduced to lowest terms with a positive denominator, so 0 is always 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

/// Strict parse of "-?digits(/digits)?". Returns nullopt on any deviation
/// (spaces, empty parts, zero denominator, stray characters).
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace casimir::exact

#endif
