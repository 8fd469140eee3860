#pragma once

// Exact two-phase primal simplex over the rationals with Bland's rule.
//
// Callers state a natural-form problem
//
//     maximize    c . x
//     subject to  E x  = f
//                 L x <= g
//                 x_j >= l_j  (or x_j free)
//
// and solve_lp() converts it to standard form internally (bound shifts, free
// variable splitting, slack columns, sign-normalized right-hand sides). Bland's
// smallest-index rule guarantees termination on degenerate problems.

#include "barylab/rational.hpp"

#include <optional>
#include <vector>

namespace barylab {

struct LinearProgram {
  RationalVector objective;  // maximized
  std::vector<RationalVector> equality_rows;
  RationalVector equality_rhs;
  std::vector<RationalVector> inequality_rows;  // row . x <= rhs
  RationalVector inequality_rhs;
  /// Either empty (every variable >= 0) or one entry per variable; nullopt = free.
  std::vector<std::optional<Rational>> lower_bounds;

  LinearProgram() = default;
  explicit LinearProgram(RationalVector c) : objective(std::move(c)) {}

  std::size_t variable_count() const { return objective.size(); }

  void add_equality(RationalVector row, Rational rhs) {
    equality_rows.push_back(std::move(row));
    equality_rhs.push_back(std::move(rhs));
  }
  void add_less_equal(RationalVector row, Rational rhs) {
    inequality_rows.push_back(std::move(row));
    inequality_rhs.push_back(std::move(rhs));
  }
  void add_greater_equal(RationalVector row, const Rational& rhs) {
    for (auto& v : row) v = -v;
    add_less_equal(std::move(row), -rhs);
  }
  void set_free(std::size_t j) {
    if (lower_bounds.empty()) lower_bounds.assign(variable_count(), Rational(0));
    lower_bounds.at(j) = std::nullopt;
  }
  void set_lower_bound(std::size_t j, Rational l) {
    if (lower_bounds.empty()) lower_bounds.assign(variable_count(), Rational(0));
    lower_bounds.at(j) = std::move(l);
  }

  std::optional<Rational> lower_bound(std::size_t j) const {
    if (lower_bounds.empty()) return Rational(0);
    return lower_bounds[j];
  }

  void validate() const {
    const auto n = variable_count();
    if (equality_rows.size() != equality_rhs.size() || inequality_rows.size() != inequality_rhs.size())
      throw InputError("linear program: row count and rhs length differ");
    for (const auto& r : equality_rows)
      if (r.size() != n) throw InputError("linear program: equality row has wrong width");
    for (const auto& r : inequality_rows)
      if (r.size() != n) throw InputError("linear program: inequality row has wrong width");
    if (!lower_bounds.empty() && lower_bounds.size() != n)
      throw InputError("linear program: lower bound list has wrong length");
  }

  /// Exact check of every constraint at x.
  bool is_feasible(const RationalVector& x) const {
    if (x.size() != variable_count()) return false;
    for (std::size_t i = 0; i < equality_rows.size(); ++i)
      if (dot(equality_rows[i], x) != equality_rhs[i]) return false;
    for (std::size_t i = 0; i < inequality_rows.size(); ++i)
      if (dot(inequality_rows[i], x) > inequality_rhs[i]) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (auto l = lower_bound(j); l && x[j] < *l) return false;
    return true;
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational optimum;         // meaningful when Optimal
  RationalVector solution;  // meaningful when Optimal

  bool optimal() const { return status == LpStatus::Optimal; }
};

namespace detail {

/// Dense tableau in canonical form with respect to `basis`.
class SimplexTableau {
 public:
  SimplexTableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * (cols + 1)), reduced_(cols + 1), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  const Rational& rhs(std::size_t r) const { return at(r, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  /// Installs the reduced-cost row for objective `cost` given the current basis.
  void set_objective(const RationalVector& cost) {
    for (std::size_t c = 0; c <= cols_; ++c) reduced_[c] = c < cols_ ? cost[c] : Rational(0);
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) reduced_[c] -= cb * at(r, c);
    }
  }

  /// Current objective value.
  Rational value() const { return -reduced_[cols_]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || at(r, pc) == 0) continue;
      const Rational f = at(r, pc);
      for (std::size_t c = 0; c <= cols_; ++c)
        if (at(pr, c) != 0) at(r, c) -= f * at(pr, c);
    }
    if (reduced_[pc] != 0) {
      const Rational f = reduced_[pc];
      for (std::size_t c = 0; c <= cols_; ++c)
        if (at(pr, c) != 0) reduced_[c] -= f * at(pr, c);
    }
    basis_[pr] = pc;
  }

  /// Bland's rule iterations over columns with allowed[c]. Returns false if unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (allowed[c] && reduced_[c] > 0) {
          enter = c;
          break;
        }
      }
      if (enter == cols_) return true;

      std::size_t leave = rows_;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, enter) <= 0) continue;
        Rational ratio = rhs(r) / at(r, enter);
        if (leave == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  /// Removes row r (used for redundant equality rows after phase 1).
  void drop_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
                 cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cells_;
  RationalVector reduced_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Solves `lp` exactly. Throws InputError on malformed dimensions.
inline LpOutcome solve_lp(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.variable_count();

  // Column map: original variable j -> (positive column, optional negative column).
  // x_j = l_j + x'_j for bounded variables, x_j = x+_j - x-_j for free ones.
  std::vector<std::size_t> pos_col(n);
  std::vector<std::optional<std::size_t>> neg_col(n);
  RationalVector shift(n, Rational(0));
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = structural++;
    if (auto l = lp.lower_bound(j)) {
      shift[j] = *l;
    } else {
      neg_col[j] = structural++;
    }
  }
  const std::size_t n_eq = lp.equality_rows.size();
  const std::size_t n_le = lp.inequality_rows.size();
  const std::size_t m = n_eq + n_le;
  const std::size_t slack0 = structural;
  const std::size_t art0 = slack0 + n_le;
  const std::size_t cols = art0 + m;

  detail::SimplexTableau tab(m, cols);
  auto fill_row = [&](std::size_t r, const RationalVector& row, const Rational& rhs) {
    Rational b = rhs - dot(row, shift);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == 0) continue;
      tab.at(r, pos_col[j]) = row[j];
      if (neg_col[j]) tab.at(r, *neg_col[j]) = -row[j];
    }
    tab.rhs(r) = std::move(b);
  };
  for (std::size_t i = 0; i < n_eq; ++i) fill_row(i, lp.equality_rows[i], lp.equality_rhs[i]);
  for (std::size_t i = 0; i < n_le; ++i) {
    fill_row(n_eq + i, lp.inequality_rows[i], lp.inequality_rhs[i]);
    tab.at(n_eq + i, slack0 + i) = 1;
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.rhs(r) < 0)
      for (std::size_t c = 0; c <= cols; ++c) tab.at(r, c) = -tab.at(r, c);
    tab.at(r, art0 + r) = 1;
    tab.basis()[r] = art0 + r;
  }

  // Phase 1: maximize -(sum of artificials).
  RationalVector phase1(cols, Rational(0));
  for (std::size_t r = 0; r < m; ++r) phase1[art0 + r] = -1;
  tab.set_objective(phase1);
  std::vector<bool> allowed(cols, true);
  tab.optimize(allowed);  // bounded below by construction
  if (tab.value() < 0) return {LpStatus::Infeasible, {}, {}};

  // Drive zero-valued artificials out of the basis; drop rows that are redundant.
  for (std::size_t r = 0; r < tab.rows();) {
    if (tab.basis()[r] < art0) {
      ++r;
      continue;
    }
    std::size_t col = art0;
    for (std::size_t c = 0; c < art0; ++c) {
      if (tab.at(r, c) != 0) {
        col = c;
        break;
      }
    }
    if (col == art0) {
      tab.drop_row(r);
    } else {
      tab.pivot(r, col);
      ++r;
    }
  }

  // Phase 2 over structural and slack columns.
  RationalVector cost(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[pos_col[j]] = lp.objective[j];
    if (neg_col[j]) cost[*neg_col[j]] = -lp.objective[j];
  }
  for (std::size_t c = art0; c < cols; ++c) allowed[c] = false;
  tab.set_objective(cost);
  if (!tab.optimize(allowed)) return {LpStatus::Unbounded, {}, {}};

  RationalVector column_value(cols, Rational(0));
  for (std::size_t r = 0; r < tab.rows(); ++r) column_value[tab.basis()[r]] = tab.rhs(r);
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = shift[j] + column_value[pos_col[j]];
    if (neg_col[j]) x[j] -= column_value[*neg_col[j]];
  }
  if (!lp.is_feasible(x)) throw std::logic_error("solve_lp: simplex returned an infeasible point");
  Rational optimum = dot(lp.objective, x);
  return {LpStatus::Optimal, std::move(optimum), std::move(x)};
}

}  // namespace barylab
