#ifndef EDGEPOLY_SIMPLEX_HPP
#define EDGEPOLY_SIMPLEX_HPP

#include <vector>

#include "edgepoly/rational.hpp"

namespace edgepoly::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational objective;
  std::vector<Rational> x;  // structural variable values
};

/// Exact-rational dense-tableau simplex with Bland's anti-cycling rule:
///   maximize c.x  subject to  A x <= b,  x >= 0.
/// Two-phase; phase 1 runs only when some b_i is negative. Always
/// terminates (Bland), never touches floating point.
Result maximize(const std::vector<std::vector<Rational>>& A,
                const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace edgepoly::lp

#endif  // EDGEPOLY_SIMPLEX_HPP
