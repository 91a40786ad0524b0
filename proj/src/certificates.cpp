#include "qbound/certificates.hpp"

#include "qbound/kraw.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace qbound {

DualCertificate make_certificate(int q, int n, int w, std::vector<Rational> coeffs) {
  if (q != 2 && q != 4) throw std::invalid_argument("q must be 2 or 4");
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (w < 1 || w > n + 1) throw std::invalid_argument("need 1 <= w <= n+1");
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw std::invalid_argument("expected n+1 coefficients");

  DualCertificate cert;
  cert.q = q;
  cert.n = n;
  cert.w = w;
  cert.coeffs = std::move(coeffs);

  for (int i = 0; i <= n; ++i)
    if (cert.coeffs[i].sign() < 0) throw SignViolation("f_i >= 0", i);

  KrawExpansion e{q, n, cert.coeffs};
  cert.point_values = expansion_point_values(e);

  for (int x = 0; x <= w - 1; ++x)
    if (cert.point_values[x].sign() <= 0)
      throw SignViolation("f(x) > 0 for x < w", x);
  for (int x = w; x <= n; ++x)
    if (cert.point_values[x].sign() > 0)
      throw SignViolation("f(x) <= 0 for x >= w", x);

  bool have = false;
  Rational best;
  for (int j = 0; j <= w - 1; ++j) {
    if (cert.coeffs[j].sign() == 0) throw ZeroDenominator(j);
    Rational ratio = cert.point_values[j] / cert.coeffs[j];
    if (!have || ratio > best) {
      have = true;
      best = ratio;
      cert.argmax_j = j;
    }
  }
  cert.bound = (q == 4) ? best / pow2(n) : best;
  return cert;
}

Rational check_certificate(const DualCertificate& cert) {
  return make_certificate(cert.q, cert.n, cert.w, cert.coeffs).bound;
}

DualCertificate singleton_certificate(int n, int w) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (w < 1 || 2 * w > n + 2)
    throw std::invalid_argument("need 1 <= w <= (n+2)/2");
  Rational denom(binomial_int(n, w - 1));
  std::vector<Rational> coeffs(n + 1);
  for (int i = 0; i <= n; ++i)
    coeffs[i] = Rational(binomial_int(n - i, w - 1)) / denom;
  DualCertificate cert = make_certificate(4, n, w, std::move(coeffs));
  if (cert.bound != pow2(n - 2 * w + 2))
    throw std::logic_error("singleton certificate bound mismatch");
  return cert;
}

DualCertificate hamming_certificate(int n, int w) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (w % 2 == 0) throw std::invalid_argument("even w is not supported");
  if (w < 3 || w > n + 1) throw std::invalid_argument("need 3 <= w <= n+1");
  const int e = (w - 1) / 2;
  const KrawTable& t = KrawTable::shared(4, n);
  std::vector<Rational> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) coeffs[i] = t.value(e, i) * t.value(e, i);
  for (int j = 0; j <= w - 1; ++j)
    if (coeffs[j].sign() == 0) throw ZeroDenominator(j);
  DualCertificate cert = make_certificate(4, n, w, std::move(coeffs));
  // Cross-check the point values against the product linearization route.
  std::vector<Rational> c = linearize_product(4, n, e, e);
  Rational four_n = rational_pow(Rational(4), n);
  for (int x = 0; x <= n; ++x)
    if (cert.point_values[x] != four_n * c[x])
      throw std::logic_error("hamming certificate linearization mismatch");
  return cert;
}

namespace {

// Largest t (capped so deg f = 2t+1 <= n) with P_t strictly positive at all
// integers below w; consecutive first roots then straddle (w-1, w).
int root_informed_degree(int n, int w) {
  int best = 0;
  int cap = (n - 1) / 2;
  for (int t = 1; t <= cap; ++t) {
    bool positive = true;
    for (int j = 0; j <= w - 1 && positive; ++j)
      positive = kraw_value(2, n, t, j).sign() > 0;
    if (!positive) break;
    best = t;
  }
  return best;
}

std::optional<FirstLpReport> try_first_lp(int n, int w, int t, int t0) {
  if (t < 0 || 2 * t + 1 > n) return std::nullopt;

  // a must lie strictly above the first root of P_{t+1} and strictly below
  // the first root of P_t, and inside (w-1, w) for the sign pattern.
  Rational lo(w - 1), hi(w);
  RootBracket below = first_root_bracket(2, n, t + 1);
  lo = std::max(lo, below.hi);
  if (t >= 1) {
    RootBracket above = first_root_bracket(2, n, t);
    hi = std::min(hi, above.lo);
  }
  if (lo >= hi) return std::nullopt;

  auto g = [&](const Rational& x) {
    return kraw_value_at(2, n, t, x) + kraw_value_at(2, n, t + 1, x);
  };

  std::vector<Rational> candidates;
  // Root of P_t + P_{t+1} (where P_t/P_{t+1} = -1, the classical tuning) when
  // it lies inside.
  if (g(lo).sign() > 0 && g(hi).sign() < 0) {
    Rational u = lo, v = hi;
    Rational width(1, 1L << 30);
    while (v - u > width) {
      Rational mid = (u + v) / Rational(2);
      int s = g(mid).sign();
      if (s == 0) {
        u = mid - width / Rational(4);
        v = mid + width / Rational(4);
        break;
      }
      (s > 0 ? u : v) = mid;
    }
    candidates.push_back((u + v) / Rational(2));
  }
  for (int num = 1; num <= 7; num += 2)
    candidates.push_back(lo + (hi - lo) * Rational(num, 8));

  for (Rational a : candidates) {
    if (a <= lo || a >= hi) continue;
    if (a.is_integer()) a += (hi - a) / Rational(3);
    std::vector<Rational> pt(n + 1), pt1(n + 1);
    for (int x = 0; x <= n; ++x) {
      pt[x] = kraw_value(2, n, t, x);
      pt1[x] = kraw_value(2, n, t + 1, x);
    }
    Rational pta = kraw_value_at(2, n, t, a);
    Rational pt1a = kraw_value_at(2, n, t + 1, a);
    std::vector<Rational> values(n + 1);
    for (int x = 0; x <= n; ++x) {
      Rational bracket = pt1[x] * pta - pt[x] * pt1a;
      values[x] = bracket * bracket / (a - Rational(x));
    }
    try {
      KrawExpansion e = expand_in_kraw(2, n, values);
      DualCertificate cert = make_certificate(2, n, w, e.coeffs);
      FirstLpReport rep;
      rep.cert = std::move(cert);
      rep.t = t;
      rep.t_asymptotic = t0;
      rep.a = a;
      return rep;
    } catch (const CertificateError&) {
      // try the next candidate point
    }
  }
  return std::nullopt;
}

}  // namespace

FirstLpReport first_lp_binary_certificate(int n, int w) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (w < 1 || w > n) throw std::invalid_argument("need 1 <= w <= n");

  double delta = static_cast<double>(w) / n;
  int t0 = static_cast<int>(std::lround(n * (0.5 - std::sqrt(delta * (1.0 - delta)))));
  int t_root = root_informed_degree(n, w);

  std::vector<int> tried;
  auto push = [&](int t) {
    if (t < 0 || 2 * t + 1 > n) return;
    for (int u : tried)
      if (u == t) return;
    tried.push_back(t);
  };
  // The asymptotic prescription first, then the root-informed degree; at
  // moderate n the first roots sit well above their limits and only the
  // latter straddles (w-1, w).
  push(t0);
  push(t0 - 1);
  push(t0 + 1);
  push(t_root);
  push(t_root - 1);
  push(t_root + 1);

  for (int t : tried) {
    auto rep = try_first_lp(n, w, t, t0);
    if (rep) return std::move(*rep);
  }
  std::string msg = "no rational evaluation point passed verification for t in {";
  for (size_t i = 0; i < tried.size(); ++i)
    msg += (i ? "," : "") + std::to_string(tried[i]);
  msg += "}";
  throw NoValidA(msg);
}

}  // namespace qbound
