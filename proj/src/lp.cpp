#include "arcstab/lp.hpp"

#include <optional>

namespace arcstab::lp {

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis, std::size_t ncols)
      : rows_(std::move(rows)), basis_(std::move(basis)), ncols_(ncols) {}

  // Minimizes cost over the columns with allowed[j]; returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed, Budget& budget) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < ncols_ && !entering; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        if (reduced_cost(cost, j) < 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*entering];
        if (a <= 0) continue;
        Rational ratio = rows_[i][ncols_] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      budget.step("simplex pivot");
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= ncols_; ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      }
    }
    basis_[r] = c;
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rows_[i][ncols_];
    return v;
  }

  std::vector<Rational> values() const {
    std::vector<Rational> x(ncols_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][ncols_];
    return x;
  }

  // Pivots artificial columns out of the basis; drops rows that are redundant.
  void expel(const std::vector<bool>& artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (!artificial[basis_[i]]) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < ncols_ && !col; ++j) {
        if (!artificial[j] && rows_[i][j] != 0) col = j;
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

 private:
  bool is_basic(std::size_t j) const {
    for (auto b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  Rational reduced_cost(const std::vector<Rational>& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][j] != 0) r -= cost[basis_[i]] * rows_[i][j];
    }
    return r;
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::size_t ncols_;
};

}  // namespace

Solution solve(const Problem& problem, Budget& budget) {
  const std::size_t n = problem.num_vars;
  // Column layout: structural (free vars split into +/-), slacks, artificials.
  std::vector<std::size_t> pos_col(n);
  std::vector<std::optional<std::size_t>> neg_col(n);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = ncols++;
    if (problem.free[j]) neg_col[j] = ncols++;
  }
  const std::size_t structural = ncols;

  struct Row {
    std::vector<Rational> coeffs;
    Sense sense;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (const auto& c : problem.constraints) {
    Row r{std::vector<Rational>(structural, 0), c.sense, c.rhs};
    for (std::size_t j = 0; j < n && j < c.coeffs.size(); ++j) {
      r.coeffs[pos_col[j]] = c.coeffs[j];
      if (neg_col[j]) r.coeffs[*neg_col[j]] = -c.coeffs[j];
    }
    if (r.rhs < 0) {
      for (auto& v : r.coeffs) v = -v;
      r.rhs = -r.rhs;
      if (r.sense == Sense::LessEq) {
        r.sense = Sense::GreaterEq;
      } else if (r.sense == Sense::GreaterEq) {
        r.sense = Sense::LessEq;
      }
    }
    rows.push_back(std::move(r));
  }

  std::size_t nslack = 0;
  std::size_t nart = 0;
  for (const auto& r : rows) {
    if (r.sense != Sense::Equal) ++nslack;
    if (r.sense != Sense::LessEq) ++nart;
  }
  const std::size_t total = structural + nslack + nart;
  std::vector<std::vector<Rational>> tab;
  std::vector<std::size_t> basis;
  std::vector<bool> artificial(total, false);
  std::size_t next_slack = structural;
  std::size_t next_art = structural + nslack;
  for (auto& r : rows) {
    std::vector<Rational> row(total + 1, 0);
    for (std::size_t j = 0; j < structural; ++j) row[j] = r.coeffs[j];
    row[total] = r.rhs;
    if (r.sense == Sense::LessEq) {
      row[next_slack] = 1;
      basis.push_back(next_slack++);
    } else {
      if (r.sense == Sense::GreaterEq) row[next_slack++] = -1;
      row[next_art] = 1;
      artificial[next_art] = true;
      basis.push_back(next_art++);
    }
    tab.push_back(std::move(row));
  }

  Tableau t(std::move(tab), std::move(basis), total);
  std::vector<bool> all(total, true);
  Solution sol;
  if (nart > 0) {
    std::vector<Rational> phase1(total, 0);
    for (std::size_t j = 0; j < total; ++j) {
      if (artificial[j]) phase1[j] = 1;
    }
    t.optimize(phase1, all, budget);
    if (t.objective(phase1) != 0) {
      sol.status = Status::Infeasible;
      return sol;
    }
    t.expel(artificial);
  }

  std::vector<Rational> cost(total, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = problem.minimize ? problem.objective[j] : Rational(-problem.objective[j]);
    cost[pos_col[j]] = c;
    if (neg_col[j]) cost[*neg_col[j]] = -c;
  }
  std::vector<bool> allowed(total);
  for (std::size_t j = 0; j < total; ++j) allowed[j] = !artificial[j];
  if (!t.optimize(cost, allowed, budget)) {
    sol.status = Status::Unbounded;
    return sol;
  }
  auto vals = t.values();
  sol.status = Status::Optimal;
  sol.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sol.x[j] = vals[pos_col[j]];
    if (neg_col[j]) sol.x[j] -= vals[*neg_col[j]];
  }
  Rational v = 0;
  for (std::size_t j = 0; j < n; ++j) v += problem.objective[j] * sol.x[j];
  sol.value = v;
  return sol;
}

}  // namespace arcstab::lp
