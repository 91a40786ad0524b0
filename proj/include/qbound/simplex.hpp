#pragma once
// Exact-rational phase-one simplex with Bland's anti-cycling rule.  Decides
// feasibility of { x >= 0 : eq/le rows } and returns either a point or row
// multipliers certifying infeasibility.

#include "qbound/rational.hpp"

#include <vector>

namespace qbound {

enum class Rel { Eq, Le };

struct LinearRow {
  std::vector<Rational> coeff;
  Rel rel = Rel::Eq;
  Rational rhs;
};

struct PhaseOneResult {
  bool feasible = false;
  std::vector<Rational> x;       // structural solution when feasible
  std::vector<Rational> farkas;  // per-row multipliers when infeasible
};

// Farkas orientation on infeasibility:
//   sum_i y_i * rows[i].coeff[j] <= 0 for every variable j,
//   y_i <= 0 for every Le row,
//   sum_i y_i * rows[i].rhs > 0.
PhaseOneResult solve_phase_one(const std::vector<LinearRow>& rows, int num_vars);

bool check_farkas(const std::vector<LinearRow>& rows, int num_vars,
                  const std::vector<Rational>& y);

}  // namespace qbound
