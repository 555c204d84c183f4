#include "edgepoly/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace edgepoly::lp {

namespace {

// Tableau rows are B^{-1}[A | I | (-1 artificial) | b]; the objective row
// holds reduced costs with obj_[last] = -z.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& A,
          const std::vector<Rational>& b, int structurals, bool artificial)
      : m_(static_cast<int>(A.size())),
        n_(structurals),
        art_col_(artificial ? n_ + m_ : -1),
        cols_(n_ + m_ + (artificial ? 1 : 0)) {
    rows_.assign(m_, std::vector<Rational>(cols_ + 1, 0));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) rows_[i][j] = A[i][j];
      rows_[i][n_ + i] = 1;  // slack
      if (artificial) rows_[i][art_col_] = -1;
      rows_[i][cols_] = b[i];
      basis_[i] = n_ + i;
    }
    obj_.assign(cols_ + 1, 0);
  }

  void pivot(int row, int col) {
    Rational piv = rows_[row][col];
    assert(piv != 0);
    for (Rational& v : rows_[row]) v /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      Rational factor = rows_[i][col];
      for (int j = 0; j <= cols_; ++j)
        rows_[i][j] -= factor * rows_[row][j];
    }
    if (obj_[col] != 0) {
      Rational factor = obj_[col];
      for (int j = 0; j <= cols_; ++j) obj_[j] -= factor * rows_[row][j];
    }
    basis_[row] = col;
  }

  // Bland: entering = lowest-index column with positive reduced cost;
  // leaving = lowest basic index among the minimum-ratio rows.
  Status run(bool allow_artificial) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!allow_artificial && j == art_col_) continue;
        if (obj_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Status::Optimal;

      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  // Phase 1: maximize -a0 after the forced pivot that makes b nonnegative.
  // Returns false when the original system is infeasible.
  bool phase1() {
    obj_.assign(cols_ + 1, 0);
    obj_[art_col_] = -1;

    int worst = 0;
    for (int i = 1; i < m_; ++i)
      if (rows_[i][cols_] < rows_[worst][cols_]) worst = i;
    assert(rows_[worst][cols_] < 0);
    pivot(worst, art_col_);

    Status s = run(true);
    assert(s == Status::Optimal);  // -a0 <= 0 is bounded
    (void)s;
    if (-obj_[cols_] < 0) return false;  // max -a0 < 0

    // Drive a0 out of the basis if it sits there at value zero.
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] != art_col_) continue;
      assert(rows_[i][cols_] == 0);
      int col = -1;
      for (int j = 0; j < cols_ && col < 0; ++j)
        if (j != art_col_ && rows_[i][j] != 0) col = j;
      if (col >= 0) {
        pivot(i, col);
      } else {
        rows_.erase(rows_.begin() + i);  // redundant 0 = 0 row
        basis_.erase(basis_.begin() + i);
        --m_;
        --i;
      }
    }
    return true;
  }

  // Install reduced costs for the real objective under the current basis.
  void set_objective(const std::vector<Rational>& c) {
    obj_.assign(cols_ + 1, 0);
    for (int j = 0; j < n_; ++j) obj_[j] = c[j];
    for (int i = 0; i < m_; ++i) {
      int bv = basis_[i];
      if (bv < n_ && c[bv] != 0) {
        Rational factor = c[bv];
        for (int j = 0; j <= cols_; ++j) obj_[j] -= factor * rows_[i][j];
      }
    }
  }

  Rational objective() const { return -obj_[cols_]; }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_, 0);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][cols_];
    return x;
  }

 private:
  int m_;
  int n_;
  int art_col_;
  int cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
};

}  // namespace

Result maximize(const std::vector<std::vector<Rational>>& A,
                const std::vector<Rational>& b,
                const std::vector<Rational>& c) {
  if (A.size() != b.size()) throw std::invalid_argument("A/b size mismatch");
  int n = static_cast<int>(c.size());
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("A/c size mismatch");

  bool need_phase1 = false;
  for (const Rational& bi : b)
    if (bi < 0) need_phase1 = true;

  Tableau t(A, b, n, need_phase1);
  if (need_phase1 && !t.phase1()) return {Status::Infeasible, 0, {}};

  t.set_objective(c);
  Status s = t.run(false);
  if (s == Status::Unbounded) return {Status::Unbounded, 0, {}};
  return {Status::Optimal, t.objective(), t.solution()};
}

}  // namespace edgepoly::lp
