#include "qbound/kraw.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qbound {

namespace {

void check_q(int q) {
  if (q != 2 && q != 4) throw std::invalid_argument("q must be 2 or 4");
}

void check_range(int n, int i, int x) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (i < 0 || i > n) throw std::out_of_range("degree i out of [0, n]");
  if (x < 0 || x > n) throw std::out_of_range("argument x out of [0, n]");
}

}  // namespace

Rational kraw_value(int q, int n, int i, int x) {
  check_q(q);
  check_range(n, i, x);
  BigInt acc(0);
  for (int j = 0; j <= i; ++j) {
    BigInt cx = binomial_int(x, j);
    if (cx == 0) continue;
    BigInt cnx = binomial_int(n - x, i - j);
    if (cnx == 0) continue;
    BigInt term = cx * cnx * int_pow(static_cast<unsigned long>(q - 1),
                                     static_cast<unsigned long>(i - j));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return Rational(acc);
}

Rational kraw_value_at(int q, int n, int i, const Rational& x) {
  check_q(q);
  if (n < 0) throw std::invalid_argument("negative n");
  if (i < 0 || i > n) throw std::out_of_range("degree i out of [0, n]");
  Rational acc(0);
  Rational nx = Rational(n) - x;
  for (int j = 0; j <= i; ++j) {
    Rational term = binomial_rational(x, j) * binomial_rational(nx, i - j) *
                    Rational(int_pow(static_cast<unsigned long>(q - 1),
                                     static_cast<unsigned long>(i - j)));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

KrawTable::KrawTable(int q, int n) : q_(q), n_(n) {
  check_q(q);
  if (n < 0) throw std::invalid_argument("negative n");
  grid_.assign(static_cast<size_t>(n + 1) * (n + 1), Rational(0));
  auto at = [this](int i, int x) -> Rational& {
    return grid_[static_cast<size_t>(i) * (n_ + 1) + x];
  };
  for (int x = 0; x <= n; ++x) at(0, x) = Rational(1);
  if (n >= 1) {
    for (int x = 0; x <= n; ++x) at(1, x) = Rational((q - 1) * n - q * x);
  }
  // (i+1) P_{i+1}(x) = [(q-1)(n-i) + i - qx] P_i(x) - (q-1)(n-i+1) P_{i-1}(x)
  for (int i = 1; i < n; ++i) {
    for (int x = 0; x <= n; ++x) {
      Rational lead((q - 1) * (n - i) + i - q * x);
      Rational prev((q - 1) * (n - i + 1));
      at(i + 1, x) = (lead * at(i, x) - prev * at(i - 1, x)) / Rational(i + 1);
    }
  }
}

const KrawTable& KrawTable::shared(int q, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<KrawTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<KrawTable>(q, n)).first;
  return *it->second;
}

bool kraw_recurrence_check(int q, int n) {
  check_q(q);
  if (n < 0) throw std::invalid_argument("negative n");
  // Values from the defining sum, then the recurrence is tested on them.
  std::vector<std::vector<Rational>> def(n + 1, std::vector<Rational>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int x = 0; x <= n; ++x) def[i][x] = kraw_value(q, n, i, x);
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x <= n; ++x) {
      Rational lead((q - 1) * (n - i) + i - q * x);
      Rational prev((q - 1) * (n - i + 1));
      Rational lower = (i == 0) ? Rational(0) : def[i - 1][x];
      if (Rational(i + 1) * def[i + 1][x] != lead * def[i][x] - prev * lower)
        return false;
    }
  }
  return true;
}

KrawExpansion expand_in_kraw(int q, int n, const std::vector<Rational>& point_values) {
  check_q(q);
  if (static_cast<int>(point_values.size()) != n + 1)
    throw std::invalid_argument("expected n+1 point values");
  const KrawTable& t = KrawTable::shared(q, n);
  Rational qn = rational_pow(Rational(q), n);
  KrawExpansion e;
  e.q = q;
  e.n = n;
  e.coeffs.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rational acc(0);
    for (int j = 0; j <= n; ++j) acc += point_values[j] * t.value(j, i);
    e.coeffs[i] = acc / qn;
  }
  return e;
}

std::vector<Rational> expansion_point_values(const KrawExpansion& e) {
  const KrawTable& t = KrawTable::shared(e.q, e.n);
  std::vector<Rational> values(e.n + 1, Rational(0));
  for (int x = 0; x <= e.n; ++x) {
    Rational acc(0);
    for (int i = 0; i <= e.n; ++i) acc += e.coeffs[i] * t.value(i, x);
    values[x] = acc;
  }
  return values;
}

std::vector<Rational> linearize_product(int q, int n, int r, int s) {
  check_q(q);
  if (r < 0 || r > n || s < 0 || s > n) throw std::out_of_range("degree out of [0, n]");
  std::vector<Rational> c(n + 1, Rational(0));
  if (q == 2) {
    // P_r P_s = sum_j C(n-j, (r+s-j)/2) C(j, (r-s+j)/2) P_j, terms with
    // r+s-j even.
    for (int j = 0; j <= n; ++j) {
      if ((r + s - j) % 2 != 0) continue;
      BigInt a = binomial_int(n - j, (r + s - j) / 2);
      if (a == 0) continue;
      BigInt b = binomial_int(j, (r - s + j) / 2);
      if (b == 0) continue;
      c[j] = Rational(a * b);
    }
    return c;
  }
  // Quaternary product formula:
  // c_k = sum_s' C(k, 2k+2s'-r-s) C(n-k, s') C(2k+2s'-r-s, k+s'-s) 2^{r+s-2s'-k} 3^{s'}.
  for (int k = 0; k <= n; ++k) {
    BigInt acc(0);
    for (int sp = 0; sp <= n - k; ++sp) {
      long m = 2L * k + 2L * sp - r - s;
      if (m < 0 || m > k) continue;
      BigInt b1 = binomial_int(k, m);
      if (b1 == 0) continue;
      BigInt b2 = binomial_int(n - k, sp);
      if (b2 == 0) continue;
      BigInt b3 = binomial_int(m, k + sp - s);
      if (b3 == 0) continue;
      long e2 = r + s - 2L * sp - k;  // = k - m >= 0 whenever b1 != 0
      acc += b1 * b2 * b3 * int_pow(2, static_cast<unsigned long>(e2)) *
             int_pow(3, static_cast<unsigned long>(sp));
    }
    c[k] = Rational(acc);
  }
  return c;
}

bool christoffel_darboux_check(int n, int t, int x, const Rational& a) {
  if (t < 0 || t >= n) throw std::out_of_range("need 0 <= t < n");
  if (x < 0 || x > n) throw std::out_of_range("x out of [0, n]");
  std::vector<Rational> px(t + 2), pa(t + 2);
  for (int i = 0; i <= t + 1; ++i) {
    px[i] = kraw_value(2, n, i, x);
    pa[i] = kraw_value_at(2, n, i, a);
  }
  Rational lhs = px[t + 1] * pa[t] - px[t] * pa[t + 1];
  Rational kernel(0);
  for (int i = 0; i <= t; ++i)
    kernel += px[i] * pa[i] / Rational(binomial_int(n, i));
  Rational rhs = Rational(2) * (a - Rational(x)) / Rational(t + 1) *
                 Rational(binomial_int(n, t)) * kernel;
  return lhs == rhs;
}

RootBracket first_root_bracket(int q, int n, int t, const Rational& width) {
  check_q(q);
  if (t < 1 || t > n) throw std::invalid_argument("need 1 <= t <= n");
  if (width.sign() <= 0) throw std::invalid_argument("width must be positive");

  auto eval = [&](const Rational& x) { return kraw_value_at(q, n, t, x); };

  int m = -1;
  int sign_at_m = 0;
  for (int x = 1; x <= n; ++x) {
    int s = kraw_value(q, n, t, x).sign();
    if (s <= 0) {
      m = x;
      sign_at_m = s;
      break;
    }
  }
  if (m < 0) throw std::logic_error("no sign change of P_t on [0, n]");

  if (sign_at_m == 0) {
    // Root exactly at the integer m; shrink a symmetric bracket around it.
    Rational eps = width / Rational(4);
    for (int it = 0; it < 128; ++it) {
      if (eval(Rational(m) - eps).sign() > 0 && eval(Rational(m) + eps).sign() < 0)
        return {Rational(m) - eps, Rational(m) + eps};
      eps /= Rational(2);
    }
    throw std::logic_error("failed to isolate integer root");
  }

  Rational lo(m - 1), hi(m);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / Rational(2);
    int s = eval(mid).sign();
    if (s > 0) {
      lo = mid;
    } else if (s < 0) {
      hi = mid;
    } else {
      // Exact rational root at mid.
      Rational eps = std::min((hi - lo) / Rational(8), width / Rational(4));
      for (int it = 0; it < 128; ++it) {
        if (eval(mid - eps).sign() > 0 && eval(mid + eps).sign() < 0)
          return {mid - eps, mid + eps};
        eps /= Rational(2);
      }
      throw std::logic_error("failed to isolate rational root");
    }
  }
  return {lo, hi};
}

}  // namespace qbound
