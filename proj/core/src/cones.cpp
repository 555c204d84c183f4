#include "edgepoly/cones.hpp"

#include <stdexcept>

namespace edgepoly {

Witness Witness::verified(const std::vector<InequalityVector>& rows,
                          std::vector<Rational> w) {
  Witness out;
  out.margins_.reserve(rows.size());
  for (const InequalityVector& f : rows) {
    if (f.coeffs.size() != w.size())
      throw std::invalid_argument("witness dimension mismatch");
    Rational margin = 0;
    for (size_t k = 0; k < w.size(); ++k)
      if (f.coeffs[k] != 0) margin += f.coeffs[k] * w[k];
    if (margin <= 0)
      throw Error("witness fails re-verification: margin " +
                  to_string(margin) + " is not positive");
    out.margins_.push_back(std::move(margin));
  }
  out.w_ = std::move(w);
  return out;
}

std::optional<Witness> strict_feasible(const OpenCone& cone) {
  if (cone.rows.empty()) throw std::invalid_argument("cone needs rows");
  size_t n = cone.rows.front().coeffs.size();
  for (const auto& f : cone.rows)
    if (f.coeffs.size() != n) throw std::invalid_argument("ragged cone rows");

  // Variables: w = u - v with u, v >= 0, plus t. Rows: t - f_i.(u-v) <= 0
  // and t <= 1. b >= 0, so the origin basis is feasible from the start.
  int m = static_cast<int>(cone.rows.size());
  int vars = static_cast<int>(2 * n + 1);
  std::vector<std::vector<Rational>> A(m + 1, std::vector<Rational>(vars, 0));
  std::vector<Rational> b(m + 1, 0), c(vars, 0);
  for (int i = 0; i < m; ++i) {
    for (size_t k = 0; k < n; ++k) {
      A[i][k] = -cone.rows[i].coeffs[k];
      A[i][n + k] = cone.rows[i].coeffs[k];
    }
    A[i][2 * n] = 1;
  }
  A[m][2 * n] = 1;
  b[m] = 1;
  c[2 * n] = 1;

  lp::Result res = lp::maximize(A, b, c);
  if (res.status != lp::Status::Optimal)
    throw Error("strict feasibility LP did not reach an optimum");
  // Homogeneity collapses the optimum to 0 or 1.
  if (res.objective == 0) return std::nullopt;
  if (res.objective != 1)
    throw Error("strict feasibility LP returned interior optimum " +
                to_string(res.objective));

  std::vector<Rational> w(n);
  for (size_t k = 0; k < n; ++k) w[k] = res.x[k] - res.x[n + k];
  return Witness::verified(cone.rows, std::move(w));
}

bool dual_cone_pointed(const std::vector<InequalityVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("pointedness needs rows");
  size_t n = rows.front().coeffs.size();
  int m = static_cast<int>(rows.size());
  for (const auto& f : rows) {
    if (f.coeffs.size() != n) throw std::invalid_argument("ragged rows");
    bool all_zero = true;
    for (int v : f.coeffs) all_zero = all_zero && v == 0;
    if (all_zero) throw std::invalid_argument("zero row has no direction");
  }

  // Feasibility of {sum_i lambda_i f_i = 0, sum_i lambda_i = 1, lambda >= 0}
  // as inequality pairs.
  std::vector<std::vector<Rational>> A(2 * n + 2, std::vector<Rational>(m, 0));
  std::vector<Rational> b(2 * n + 2, 0), c(m, 0);
  for (size_t k = 0; k < n; ++k) {
    for (int i = 0; i < m; ++i) {
      A[2 * k][i] = rows[i].coeffs[k];
      A[2 * k + 1][i] = -rows[i].coeffs[k];
    }
  }
  for (int i = 0; i < m; ++i) {
    A[2 * n][i] = 1;
    A[2 * n + 1][i] = -1;
  }
  b[2 * n] = 1;
  b[2 * n + 1] = -1;

  lp::Result res = lp::maximize(A, b, c);
  return res.status == lp::Status::Infeasible;
}

}  // namespace edgepoly
