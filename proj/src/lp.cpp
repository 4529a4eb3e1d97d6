#include "conespec/lp.hpp"

#include <limits>
#include <string>

#include "conespec/error.hpp"

namespace conespec {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * (cols + 1)), basis_(rows, kNone) {}

  Rational& at(std::size_t i, std::size_t j) { return cells_[i * (cols_ + 1) + j]; }
  Rational& rhs(std::size_t i) { return at(i, cols_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (!is_zero(at(r, j))) at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Rational factor = at(i, c);
      if (is_zero(factor)) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!is_zero(at(r, j))) at(i, j) -= factor * at(r, j);
      }
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
                 cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Minimizes cost·y over columns [0, active). Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t active) {
    std::vector<Rational> reduced(active);
    for (;;) {
      for (std::size_t j = 0; j < active; ++j) reduced[j] = cost[j];
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& cb = cost[basis_[i]];
        if (is_zero(cb)) continue;
        for (std::size_t j = 0; j < active; ++j) {
          if (!is_zero(at(i, j))) reduced[j] -= cb * at(i, j);
        }
      }
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < active; ++j) {
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, enter) <= 0) continue;
        Rational ratio = rhs(i) / at(i, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

 private:
  static bool is_zero(const Rational& v) { return v.is_zero(); }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_solve(const RationalLP& lp, const LpLimits& limits) {
  const std::size_t n = lp.num_vars;
  if (lp.objective.size() != n) throw Error(ErrorKind::DimensionMismatch, "LP objective has wrong length");
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "LP sign vector has wrong length");
  }
  // Column layout: one column per nonnegative variable, two (y⁺, y⁻) per free
  // one, then slack/surplus columns, then artificials.
  std::vector<std::size_t> first_col(n);
  std::size_t structural = 0;
  for (std::size_t v = 0; v < n; ++v) {
    first_col[v] = structural;
    structural += (!lp.nonnegative.empty() && lp.nonnegative[v]) ? 1 : 2;
  }
  const std::size_t m = lp.constraints.size();
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (const auto& con : lp.constraints) {
    if (con.coeffs.size() != n) throw Error(ErrorKind::DimensionMismatch, "LP constraint has wrong length");
    if (con.sense != LpSense::Equal) ++slacks;
    ++artificials;  // upper bound; slack rows with rhs ≥ 0 reuse their slack
  }
  const std::size_t cols = structural + slacks + artificials;
  if (m * (cols + 1) > limits.max_cells) {
    throw Error(ErrorKind::SizeLimit, "LP tableau of " + std::to_string(m) + "×" + std::to_string(cols + 1) +
                                          " exceeds the cell limit");
  }

  Tableau t(m, cols);
  std::size_t next_slack = structural;
  std::size_t next_art = structural + slacks;
  std::vector<bool> is_artificial(cols, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    const bool flip = con.rhs < 0;
    const Rational sign = flip ? -1 : 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (con.coeffs[v].is_zero()) continue;
      const Rational a = sign * con.coeffs[v];
      t.at(i, first_col[v]) = a;
      if (!(!lp.nonnegative.empty() && lp.nonnegative[v])) t.at(i, first_col[v] + 1) = -a;
    }
    t.rhs(i) = sign * con.rhs;
    LpSense sense = con.sense;
    if (flip && sense == LpSense::LessEqual) {
      sense = LpSense::GreaterEqual;
    } else if (flip && sense == LpSense::GreaterEqual) {
      sense = LpSense::LessEqual;
    }
    if (sense == LpSense::LessEqual) {
      t.at(i, next_slack) = 1;
      t.basis()[i] = next_slack++;
      continue;
    }
    if (sense == LpSense::GreaterEqual) t.at(i, next_slack++) = -1;
    t.at(i, next_art) = 1;
    is_artificial[next_art] = true;
    t.basis()[i] = next_art++;
  }
  const std::size_t real_cols = structural + slacks;

  // Phase one: drive the artificials to zero.
  std::vector<Rational> cost(cols);
  bool any_artificial = false;
  for (std::size_t j = real_cols; j < next_art; ++j) {
    cost[j] = 1;
    any_artificial = true;
  }
  if (any_artificial) {
    t.optimize(cost, next_art);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (is_artificial[t.basis()[i]]) infeasibility += t.rhs(i);
    }
    if (infeasibility > 0) return {LpStatus::Infeasible, 0, {}};
    // Pivot zero-level artificials out of the basis; drop rows that are
    // linear combinations of others.
    for (std::size_t i = 0; i < t.rows();) {
      if (!is_artificial[t.basis()[i]]) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < real_cols; ++j) {
        if (!t.at(i, j).is_zero()) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        t.drop_row(i);
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
  }

  // Phase two on the real columns only.
  std::fill(cost.begin(), cost.end(), Rational(0));
  const Rational goal_sign = lp.goal == LpGoal::Minimize ? 1 : -1;
  for (std::size_t v = 0; v < n; ++v) {
    if (lp.objective[v].is_zero()) continue;
    cost[first_col[v]] = goal_sign * lp.objective[v];
    if (!(!lp.nonnegative.empty() && lp.nonnegative[v])) cost[first_col[v] + 1] = -goal_sign * lp.objective[v];
  }
  if (!t.optimize(cost, real_cols)) return {LpStatus::Unbounded, 0, {}};

  std::vector<Rational> column_value(cols);
  for (std::size_t i = 0; i < t.rows(); ++i) column_value[t.basis()[i]] = t.rhs(i);
  LpResult result{LpStatus::Optimal, 0, std::vector<Rational>(n)};
  for (std::size_t v = 0; v < n; ++v) {
    result.point[v] = column_value[first_col[v]];
    if (!(!lp.nonnegative.empty() && lp.nonnegative[v])) result.point[v] -= column_value[first_col[v] + 1];
    result.value += lp.objective[v] * result.point[v];
  }
  return result;
}

}  // namespace conespec
