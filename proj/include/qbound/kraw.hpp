#pragma once
// Krawtchouk polynomial engine over exact rationals, for alphabet parameters
// q = 2 and q = 4.  Tables are built by the three-term recurrence; the
// defining sum is kept separate so the two routes can check each other.

#include "qbound/rational.hpp"

#include <vector>

namespace qbound {

// P_i(x) by the defining sum: sum_j (-1)^j (q-1)^{i-j} C(x,j) C(n-x,i-j).
// Independent of the memoized tables.
Rational kraw_value(int q, int n, int i, int x);

// Same sum evaluated at a rational argument via generalized binomials;
// needed for Christoffel-Darboux kernels and root bisection.
Rational kraw_value_at(int q, int n, int i, const Rational& x);

class KrawTable {
 public:
  KrawTable(int q, int n);

  int q() const { return q_; }
  int n() const { return n_; }
  const Rational& value(int i, int x) const { return grid_[static_cast<size_t>(i) * (n_ + 1) + x]; }

  // Process-wide memo, one immutable table per (q, n).
  static const KrawTable& shared(int q, int n);

 private:
  int q_;
  int n_;
  std::vector<Rational> grid_;
};

// True iff the values computed from the defining sum satisfy the three-term
// recurrence at every grid point (with P_{-1} := 0).
bool kraw_recurrence_check(int q, int n);

struct KrawExpansion {
  int q = 0;
  int n = 0;
  std::vector<Rational> coeffs;  // f_i with f(x) = sum_i f_i P_i(x)
};

// Inverts point values f(0..n) into Krawtchouk coefficients,
// f_i = q^{-n} sum_j f(j) P_j(i).
KrawExpansion expand_in_kraw(int q, int n, const std::vector<Rational>& point_values);

// Evaluates an expansion back to point values at x = 0..n.
std::vector<Rational> expansion_point_values(const KrawExpansion& e);

// Linearization coefficients c_k with P_r(x)P_s(x) = sum_k c_k P_k(x) on the
// grid, by the closed forms (quaternary product formula, binary identity).
std::vector<Rational> linearize_product(int q, int n, int r, int s);

// Exact check of the binary Christoffel-Darboux identity at integer x and
// rational a.
bool christoffel_darboux_check(int n, int t, int x, const Rational& a);

struct RootBracket {
  Rational lo, hi;  // P_t(lo) > 0 > P_t(hi), hi - lo <= width
};

// Bracket around the smallest real root of P_t, found by integer scan and
// exact sign-change bisection.
RootBracket first_root_bracket(int q, int n, int t,
                               const Rational& width = Rational(1, 1L << 30));

}  // namespace qbound
