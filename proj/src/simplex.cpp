#include "qbound/simplex.hpp"

#include <stdexcept>

namespace qbound {

PhaseOneResult solve_phase_one(const std::vector<LinearRow>& rows, int num_vars) {
  const int m = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.coeff.size()) != num_vars)
      throw std::invalid_argument("row width mismatch");

  // Standard form: one slack per Le row, one artificial per row, rhs >= 0.
  int n_slack = 0;
  for (const auto& r : rows)
    if (r.rel == Rel::Le) ++n_slack;
  const int slack0 = num_vars;
  const int art0 = num_vars + n_slack;
  const int ncols = art0 + m;

  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(ncols, Rational(0)));
  std::vector<Rational> b(m);
  std::vector<bool> flipped(m, false);

  int slack_idx = slack0;
  for (int i = 0; i < m; ++i) {
    bool flip = rows[i].rhs.sign() < 0;
    flipped[i] = flip;
    for (int j = 0; j < num_vars; ++j)
      a[i][j] = flip ? -rows[i].coeff[j] : rows[i].coeff[j];
    b[i] = flip ? -rows[i].rhs : rows[i].rhs;
    if (rows[i].rel == Rel::Le) {
      a[i][slack_idx] = flip ? Rational(-1) : Rational(1);
      ++slack_idx;
    }
    a[i][art0 + i] = Rational(1);
  }

  // All-artificial starting basis;  reduced costs for min sum(artificials).
  std::vector<int> basis(m);
  std::vector<Rational> cost(ncols, Rational(0));
  Rational obj(0);
  for (int i = 0; i < m; ++i) {
    basis[i] = art0 + i;
    obj += b[i];
  }
  for (int j = 0; j < ncols; ++j) {
    Rational z(0);
    for (int i = 0; i < m; ++i) z += a[i][j];
    cost[j] = (j >= art0 ? Rational(1) : Rational(0)) - z;
  }

  auto pivot = [&](int r, int c) {
    Rational p = a[r][c];
    for (int j = 0; j < ncols; ++j) a[r][j] /= p;
    b[r] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c].sign() == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    if (cost[c].sign() != 0) {
      Rational f = cost[c];
      for (int j = 0; j < ncols; ++j) cost[j] -= f * a[r][j];
      obj += f * b[r];
    }
    basis[r] = c;
  };

  for (;;) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (a[i][enter].sign() <= 0) continue;
      Rational ratio = b[i] / a[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("phase-one objective unbounded");
    pivot(leave, enter);
  }

  PhaseOneResult res;
  if (obj.sign() == 0) {
    res.feasible = true;
    res.x.assign(num_vars, Rational(0));
    for (int i = 0; i < m; ++i)
      if (basis[i] < num_vars) res.x[basis[i]] = b[i];
  } else {
    res.feasible = false;
    res.farkas.resize(m);
    for (int i = 0; i < m; ++i) {
      Rational y = Rational(1) - cost[art0 + i];
      res.farkas[i] = flipped[i] ? -y : y;
    }
  }
  return res;
}

bool check_farkas(const std::vector<LinearRow>& rows, int num_vars,
                  const std::vector<Rational>& y) {
  const int m = static_cast<int>(rows.size());
  if (static_cast<int>(y.size()) != m) return false;
  for (int i = 0; i < m; ++i)
    if (rows[i].rel == Rel::Le && y[i].sign() > 0) return false;
  for (int j = 0; j < num_vars; ++j) {
    Rational col(0);
    for (int i = 0; i < m; ++i) col += y[i] * rows[i].coeff[j];
    if (col.sign() > 0) return false;
  }
  Rational rhs(0);
  for (int i = 0; i < m; ++i) rhs += y[i] * rows[i].rhs;
  return rhs.sign() > 0;
}

}  // namespace qbound
