#pragma once
// Exact rational arithmetic (GMP-backed) plus the combinatorial helpers the
// bound machinery is built on.  Every finite-n quantity in the library is a
// Rational; nothing in the exact modules ever rounds.

#include <gmpxx.h>

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qbound {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int value) : v_(static_cast<long>(value)) {}
  Rational(long value) : v_(value) {}
  Rational(long long value) : v_(BigInt(std::to_string(value))) {}
  Rational(const BigInt& value) : v_(value) {}
  Rational(long num, long den) : v_(num, den) {
    require_nonzero_den();
    v_.canonicalize();
  }
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    require_nonzero_den();
    v_.canonicalize();
  }

  // Accepts "p" or "p/q".
  static Rational from_string(const std::string& s) {
    Rational r;
    try {
      r.v_ = mpq_class(s);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("not a rational: '" + s + "'");
    }
    r.require_nonzero_den();
    r.v_.canonicalize();
    return r;
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  double to_double() const { return v_.get_d(); }

  // "p/q" with the denominator always spelled out; the serialized format.
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }
  // "p" or "p/q", for human-facing output.
  std::string str_pretty() const {
    return is_integer() ? v_.get_num().get_str() : str();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str_pretty();
  }

 private:
  void require_nonzero_den() {
    if (v_.get_den() == 0) throw std::domain_error("zero denominator");
  }
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), ue);
  if (invert) {
    if (num == 0) throw std::domain_error("zero to a negative power");
    return Rational(den, num);
  }
  return Rational(num, den);
}

inline Rational pow2(long e) { return rational_pow(Rational(2), e); }

inline BigInt int_pow(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// C(n, k) over the integers; 0 when k < 0 or k > n.  Negative n is rejected
// (the generalized definition is deliberately not used here).
inline BigInt binomial_int(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Rational binomial(long n, long k) { return Rational(binomial_int(n, k)); }

// Generalized C(a, k) = a(a-1)...(a-k+1)/k! for rational a.
inline Rational binomial_rational(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (long i = 0; i < k; ++i) num *= a - Rational(i);
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
  return num / Rational(fact);
}

// log2 of a positive rational, accurate to double precision even when the
// operands far exceed double range.
inline double log2_value(const Rational& r) {
  if (r.sign() <= 0) throw std::domain_error("log2 of non-positive rational");
  signed long en = 0, ed = 0;
  double dn = mpz_get_d_2exp(&en, r.numerator().get_mpz_t());
  double dd = mpz_get_d_2exp(&ed, r.denominator().get_mpz_t());
  return std::log2(dn) + static_cast<double>(en) - std::log2(dd) - static_cast<double>(ed);
}

}  // namespace qbound
