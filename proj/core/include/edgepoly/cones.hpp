#ifndef EDGEPOLY_CONES_HPP
#define EDGEPOLY_CONES_HPP

#include <optional>
#include <vector>

#include "edgepoly/rational.hpp"
#include "edgepoly/simplex.hpp"
#include "edgepoly/walks.hpp"

namespace edgepoly {

/// Intersection of strict half-spaces {x : f_i . x > 0}, one row per chosen
/// connector. provenance records the generating selection; empty for
/// synthetic systems (tests, random differentials).
struct OpenCone {
  std::vector<InequalityVector> rows;
  std::vector<Connector> provenance;
};

/// Exact rational point of an open cone. Construction re-verifies every
/// margin by direct arithmetic, independent of whatever solver produced w.
class Witness {
 public:
  static Witness verified(const std::vector<InequalityVector>& rows,
                          std::vector<Rational> w);

  const std::vector<Rational>& w() const { return w_; }
  const std::vector<Rational>& margins() const { return margins_; }

  /// Integer form with gcd 1, for display and the JSON report.
  std::vector<BigInt> normalized() const { return normalize_to_integers(w_); }

 private:
  Witness() = default;
  std::vector<Rational> w_;
  std::vector<Rational> margins_;
};

/// Strict feasibility by exact LP: maximize t with f_i.w >= t, t <= 1.
/// The cone is nonempty iff the optimum is 1 (homogeneity); any optimal w
/// with t > 0 is a witness.
std::optional<Witness> strict_feasible(const OpenCone& cone);

/// Gordan-dual pointedness: the cone sum(R>=0 f_i) is strongly convex iff
/// {sum lambda_i f_i = 0, sum lambda_i = 1, lambda >= 0} is infeasible,
/// decided by exact LP. Equivalent to strict feasibility of the rows.
bool dual_cone_pointed(const std::vector<InequalityVector>& rows);

}  // namespace edgepoly

#endif  // EDGEPOLY_CONES_HPP
