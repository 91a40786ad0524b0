#pragma once
// Floating-point asymptotic bound curves and the exponent machinery behind
// them: entropy functions, Krawtchouk root asymptotics, the alpha(tau, xi)
// saddle point, log-Krawtchouk integrals and their closed-form
// antiderivative.  Exactness lives in the other modules; these are curves,
// not proofs, and carry explicit tolerances.

#include <stdexcept>
#include <string>
#include <vector>

namespace qbound {

class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurvePoint {
  double delta = 0.0;
  double exponent = 0.0;
  std::string curve_id;
  bool valid = true;  // inside the proven range
};

// Binary entropy, H(0) = H(1) = 0 by continuity.
double entropy(double x);

// Gilbert-Varshamov exponent 1 - delta log2(3) - H(delta), 0 <= delta <= 3/4.
double gv_exponent(double delta);

// Hamming-type exponent 1 - (delta/2) log2(3) - H(delta/2); valid while
// delta <= xi_e(delta/2).
CurvePoint hamming_exponent(double delta);

// Singleton exponent 1 - 2 delta on [0, 1/2].
double singleton_exponent(double delta);

// Relative first root of the quaternary Krawtchouk polynomial of relative
// degree tau: 3/4 - tau/2 - (1/2) sqrt(3 tau (1 - tau)).
double xi_e(double tau);

// The saddle data behind the quaternary exponent at (tau, xi).
struct ExponentParams {
  double tau = 0.0;
  double xi = 0.0;
  double nu_lo = 0.0;  // max(0, tau - xi)
  double nu_hi = 0.0;  // tau - xi/2
  double alpha = 0.0;  // root of the derivative inside [nu_lo, nu_hi]
  double xi_e = 0.0;   // root asymptote at this tau
};

ExponentParams exponent_params(double tau, double xi);

// Root in nu of the quaternary exponent derivative on
// [max(0, tau - xi), tau - xi/2]; exactly one sign change is asserted by a
// scan before bisecting.  |residual| < 1e-10.
double alpha_root(double tau, double xi);

// (1/n) log2 P_e(x) in the limit, by entropy head term plus the ratio
// integral; adaptive quadrature with absolute error below 1e-10.
// q = 4: H(tau) + tau log2(3) + integral; q = 2: H(tau) + integral.
double kalai_log_kraw(int q, double tau, double xi);

// Closed-form antiderivative of the quaternary ratio integrand, base-2
// logs throughout; z-free constant terms are dropped (only differences
// F(xi) - F(0) are meaningful).
double antiderivative_closed_form(double tau, double z);

// H(1/2 - sqrt(delta(1-delta))); valid for delta <= 0.1865.
CurvePoint lp1_exponent_binary(double delta);

struct ScanResult {
  double argmax_xi = 0.0;
  double max_value = 0.0;
  // Variant with the 2^{2e-2s-x} factor folded into the objective instead
  // of the constant leading term; both must place the maximum at xi = 0.
  double argmax_xi_alt = 0.0;
  double max_value_alt = 0.0;
};

// Maximizes the quaternary Hamming exponent objective over xi in [0, delta]
// (grid refined to 1e-4), for 0 < delta <= 0.34.
ScanResult hamming_exponent_scan(double delta);

struct BinaryScanResult {
  double argmax_xi = 0.0;
  double max_value = 0.0;
};

// Maximizes the binary first-LP exponent objective over xi in
// [0, xi_1(tau)); the maximum sits at xi = 0 for tau >= 0.11.
BinaryScanResult lp1_binary_scan(double tau);

// curve_id in {"hamming", "gv", "singleton", "lp1_binary"}.
std::vector<CurvePoint> tabulate_curve(const std::string& curve_id, double delta_min,
                                       double delta_max, double step);

}  // namespace qbound
