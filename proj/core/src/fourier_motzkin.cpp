#include "edgepoly/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

namespace edgepoly {

namespace {

constexpr int kMaxVars = 12;
constexpr int kMaxRows = 16;
constexpr size_t kRowBlowupCap = 100'000;

using Row = std::vector<BigInt>;

bool is_zero(const Row& r) {
  for (const BigInt& x : r)
    if (x != 0) return false;
  return true;
}

void normalize(Row& r) {
  using boost::multiprecision::gcd;
  BigInt g = 0;
  for (const BigInt& x : r) g = gcd(g, x);
  if (g > 1)
    for (BigInt& x : r) x /= g;
}

}  // namespace

bool fm_feasible(const OpenCone& cone) {
  if (cone.rows.empty()) throw std::invalid_argument("cone needs rows");
  size_t n = cone.rows.front().coeffs.size();
  if (n > kMaxVars || cone.rows.size() > kMaxRows)
    throw OracleScaleExceeded("fm_feasible supports n <= 12, m <= 16; got n=" +
                              std::to_string(n) +
                              " m=" + std::to_string(cone.rows.size()));

  std::set<Row> rows;
  for (const InequalityVector& f : cone.rows) {
    Row r(f.coeffs.begin(), f.coeffs.end());
    if (is_zero(r)) return false;  // 0 > 0
    normalize(r);
    rows.insert(std::move(r));
  }

  std::vector<char> eliminated(n, 0);
  for (size_t step = 0; step < n; ++step) {
    if (rows.empty()) return true;

    // Greedy order: eliminate the variable with the fewest pos*neg combos.
    size_t best = n;
    size_t best_cost = SIZE_MAX;
    for (size_t k = 0; k < n; ++k) {
      if (eliminated[k]) continue;
      size_t pos = 0, neg = 0;
      for (const Row& r : rows) {
        if (r[k] > 0) ++pos;
        if (r[k] < 0) ++neg;
      }
      size_t cost = pos * neg;
      if (cost < best_cost) {
        best_cost = cost;
        best = k;
      }
    }
    size_t k = best;
    eliminated[k] = 1;

    std::vector<Row> pos, neg;
    std::set<Row> next;
    for (const Row& r : rows) {
      if (r[k] > 0)
        pos.push_back(r);
      else if (r[k] < 0)
        neg.push_back(r);
      else
        next.insert(r);
    }
    // Strict + strict with positive multipliers stays strict.
    for (const Row& p : pos) {
      for (const Row& q : neg) {
        Row combo(n);
        for (size_t j = 0; j < n; ++j) combo[j] = p[k] * q[j] - q[k] * p[j];
        if (is_zero(combo)) return false;
        normalize(combo);
        next.insert(std::move(combo));
        if (next.size() > kRowBlowupCap)
          throw OracleScaleExceeded("fm_feasible intermediate system exceeded " +
                                    std::to_string(kRowBlowupCap) + " rows");
      }
    }
    rows = std::move(next);
  }
  return rows.empty();
}

}  // namespace edgepoly
