#include "qbound/mixed_bounds.hpp"

#include <stdexcept>

namespace qbound {

namespace {

BigInt sphere_volume_int(int l, int n_total, int e) {
  BigInt acc(0);
  for (int i = 0; i <= e; ++i) {
    for (int j = 0; j <= i; ++j) {
      BigInt cl = binomial_int(l, j);
      if (cl == 0) continue;
      BigInt cq = binomial_int(n_total - l, i - j);
      if (cq == 0) continue;
      acc += cl * cq * int_pow(3, static_cast<unsigned long>(i - j));
    }
  }
  return acc;
}

void check_mixed(int l, int n_total) {
  if (l < 0 || n_total < 0 || l > n_total)
    throw std::invalid_argument("need 0 <= l <= n_total");
}

int max_d_scan(int l, int n_total, long rhs_exponent, PackingRadius kind) {
  if (rhs_exponent < 0) throw std::invalid_argument("cardinality exceeds the space");
  BigInt rhs = int_pow(2, static_cast<unsigned long>(rhs_exponent));
  int best = 0;
  for (int d = 1; d <= n_total + 1; ++d) {
    int e = packing_radius(d, kind);
    if (sphere_volume_int(l, n_total, e) > rhs) break;
    best = d;
  }
  return best;
}

}  // namespace

void StabilizerType::validate() const {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (k0 < 0 || k1 < 0) throw std::invalid_argument("need k0, k1 >= 0");
  if (2 * k0 + k1 > n) throw std::invalid_argument("need 2 k0 + k1 <= n");
}

ShortenResult shorten_params(int n, int k0, int k1) {
  StabilizerType type{n, k0, k1};
  type.validate();
  const int k = type.k();
  ShortenResult res;
  res.general = {k1, n - k0, 2 * k};
  res.degenerate = (k0 == 0 && k1 == 0);
  if (k1 == 0) {
    res.reduced = MixedCodeParams{0, (n + k) / 2, 2 * k};
  } else if (k1 < 2 * k) {
    res.reduced = MixedCodeParams{0, (n + k - k1) / 2, 2 * k - k1};
  }
  return res;
}

Rational mixed_plotkin(int l, int n_total, int k_bin) {
  check_mixed(l, n_total);
  if (k_bin < 1) throw std::invalid_argument("need k >= 1");
  // l 2^{k-1} + 3 (n-l) 2^{k-2}, kept rational so k = 1 stays exact.
  Rational num = Rational(l) * pow2(k_bin - 1) + Rational(3 * (n_total - l)) * pow2(k_bin - 2);
  Rational den = pow2(k_bin) - Rational(1);
  return num / den;
}

Rational mixed_sphere_volume(int l, int n_total, int e) {
  check_mixed(l, n_total);
  if (e < 0 || e > n_total) throw std::invalid_argument("need 0 <= e <= n_total");
  return Rational(sphere_volume_int(l, n_total, e));
}

int mixed_hamming_max_d(int l, int n_total, int k_bin) {
  check_mixed(l, n_total);
  if (k_bin < 0) throw std::invalid_argument("need k >= 0");
  return max_d_scan(l, n_total, 2L * n_total - l - k_bin, PackingRadius::Floor);
}

namespace {

void check_type_from_nk(int n, int k, int k1) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (k1 < 0) throw std::invalid_argument("need k1 >= 0");
  int twice_k0 = n - k - k1;
  if (twice_k0 < 0 || twice_k0 % 2 != 0)
    throw std::invalid_argument("no type 4^{k0} 2^{k1} matches (n, k, k1)");
}

}  // namespace

Rational stabilizer_plotkin(int n, int k, int k1) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  check_type_from_nk(n, k, k1);
  Rational factor = rational_pow(Rational(4), k - 1) / (rational_pow(Rational(4), k) - Rational(1));
  return Rational(n + k, 2) * Rational(3) * factor + Rational(k1, 2) * factor;
}

StabilizerHammingResult stabilizer_hamming(int n, int k, int k1) {
  if (k < 0) throw std::invalid_argument("need k >= 0");
  check_type_from_nk(n, k, k1);
  int k0 = (n - k - k1) / 2;
  ShortenResult sh = shorten_params(n, k0, k1);
  const MixedCodeParams& m = sh.general;
  StabilizerHammingResult res;
  // Composition of the shortening map with the packing bound:
  // 2 n_total - l - k_bin = n - k exactly.
  res.d_composed = max_d_scan(m.l, m.n_total, static_cast<long>(n) - k, PackingRadius::Ceil);
  res.d_relaxed = max_d_scan(m.l, m.n_total, static_cast<long>(n) - k + 2L * k1, PackingRadius::Ceil);
  return res;
}

}  // namespace qbound
