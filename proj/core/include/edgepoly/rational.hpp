#ifndef EDGEPOLY_RATIONAL_HPP
#define EDGEPOLY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace edgepoly {

/// Exactness carrier for every weight, margin and pivot. cpp_rational keeps
/// the fraction canonical: denominator positive, lowest terms.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Scale a rational vector to integers with overall gcd 1, preserving
/// direction. Zero vector stays zero.
std::vector<BigInt> normalize_to_integers(const std::vector<Rational>& v);

std::string to_string(const Rational& r);

}  // namespace edgepoly

#endif  // EDGEPOLY_RATIONAL_HPP
