#pragma once
// Dual polynomial certificates: the key inequality as a checker, plus the
// Singleton, Hamming and binary first-LP constructions.  A certificate is a
// coefficient vector f_i >= 0 whose polynomial f = sum f_i P_i is positive
// below w and nonpositive from w on; max_{j<w} f(j)/f_j then bounds the code
// size (divided by 2^n it bounds K in the quaternary case, and it bounds S
// directly in the binary case).

#include "qbound/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qbound {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignViolation : public CertificateError {
 public:
  SignViolation(std::string cond, int idx)
      : CertificateError("sign violation (" + cond + ") at index " + std::to_string(idx)),
        condition(std::move(cond)),
        index(idx) {}
  std::string condition;
  int index;
};

class ZeroDenominator : public CertificateError {
 public:
  explicit ZeroDenominator(int idx)
      : CertificateError("f_j = 0 with f(j) > 0 at j = " + std::to_string(idx) +
                         "; the bound degenerates"),
        index(idx) {}
  int index;
};

class NoValidA : public CertificateError {
 public:
  using CertificateError::CertificateError;
};

struct DualCertificate {
  int q = 4;
  int n = 0;
  int w = 0;
  std::vector<Rational> coeffs;        // f_i
  std::vector<Rational> point_values;  // f(0..n), derived from coeffs
  Rational bound;                      // on K for q = 4, on S for q = 2
  int argmax_j = 0;

  const char* bound_on() const { return q == 4 ? "K" : "S"; }
};

// Builds and fully verifies a certificate from coefficients alone.
// Throws SignViolation / ZeroDenominator naming the failed condition.
DualCertificate make_certificate(int q, int n, int w, std::vector<Rational> coeffs);

// Re-derives everything from cert.coeffs (stored point values and bound are
// never trusted) and returns the verified bound.
Rational check_certificate(const DualCertificate& cert);

// f_i = C(n-i, w-1)/C(n, w-1); bound is exactly 2^{n-2w+2}.
// Requires 1 <= w <= (n+2)/2 (the range where the ratio is monotone).
DualCertificate singleton_certificate(int n, int w);

// f_i = P_e(i)^2 with e = (w-1)/2; point values are 4^n times the
// linearization of P_e^2.  Odd w only; throws ZeroDenominator when P_e
// vanishes at an integer below w.
DualCertificate hamming_certificate(int n, int w);

struct FirstLpReport {
  DualCertificate cert;
  int t = 0;            // kernel degree actually used
  int t_asymptotic = 0; // round(n(1/2 - sqrt(delta(1-delta))))
  Rational a;           // rational evaluation point
};

// Binary first-LP certificate f(x) = (1/(a-x)) {P_{t+1}(x)P_t(a) -
// P_t(x)P_{t+1}(a)}^2 with rational a strictly between the first roots of
// P_{t+1} and P_t and inside (w-1, w).  Every condition is verified exactly
// before the certificate is returned; throws NoValidA when no candidate
// passes.
FirstLpReport first_lp_binary_certificate(int n, int w);

}  // namespace qbound
