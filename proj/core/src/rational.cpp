#include "edgepoly/rational.hpp"

namespace edgepoly {

std::vector<BigInt> normalize_to_integers(const std::vector<Rational>& v) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;

  BigInt denom_lcm = 1;
  for (const Rational& r : v)
    if (r != 0) denom_lcm = lcm(denom_lcm, denominator(r));

  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt common = 0;
  for (const Rational& r : v) {
    BigInt scaled = numerator(r) * (denom_lcm / denominator(r));
    common = gcd(common, scaled);
    out.push_back(std::move(scaled));
  }
  if (common > 1)
    for (BigInt& x : out) x /= common;
  return out;
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace edgepoly
