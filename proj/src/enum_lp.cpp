#include "qbound/enum_lp.hpp"

#include "qbound/kraw.hpp"

#include <stdexcept>

namespace qbound {

void EnumeratorPair::validate() const {
  if (static_cast<int>(B.size()) != n + 1 || static_cast<int>(Bperp.size()) != n + 1)
    throw std::invalid_argument("enumerator length mismatch");
  if (B[0] != Rational(1) || Bperp[0] != Rational(1))
    throw std::invalid_argument("B_0 and Bperp_0 must equal 1");
  Rational s(0);
  for (int i = 0; i <= n; ++i) {
    if (B[i].sign() < 0 || B[i] > Bperp[i])
      throw std::invalid_argument("need 0 <= B_i <= Bperp_i");
    s += Bperp[i];
  }
  if (s < Rational(1)) throw std::invalid_argument("sum Bperp must be >= 1");
}

void CodeParams::validate() const {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (K < 1) throw std::invalid_argument("need K >= 1");
  if (w < 1 || w > n + 1) throw std::invalid_argument("need 1 <= w <= n+1");
}

std::vector<Rational> macwilliams_image(const std::vector<Rational>& Bperp, int n) {
  if (static_cast<int>(Bperp.size()) != n + 1)
    throw std::invalid_argument("expected n+1 entries");
  Rational s(0);
  for (const auto& v : Bperp) {
    if (v.sign() < 0) throw std::invalid_argument("entries must be nonnegative");
    s += v;
  }
  if (s.sign() == 0) throw std::invalid_argument("all-zero enumerator");
  const KrawTable& t = KrawTable::shared(4, n);
  std::vector<Rational> B(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rational acc(0);
    for (int j = 0; j <= n; ++j) acc += Bperp[j] * t.value(i, j);
    B[i] = acc / s;
  }
  return B;
}

int min_distance_of_pair(const EnumeratorPair& pair) {
  pair.validate();
  for (int i = 0; i <= pair.n; ++i)
    if (pair.B[i] != pair.Bperp[i]) return i;
  return pair.n + 1;
}

EnumeratorLp::EnumeratorLp(const CodeParams& params) : params_(params) {
  params_.validate();
  const int n = params_.n;
  const KrawTable& t = KrawTable::shared(4, n);
  const int nv = num_vars();
  const Rational two_n = pow2(n);
  const Rational K(params_.K);
  auto A = [](int i) { return i; };
  auto Aperp = [n](int i) { return n + 1 + i; };

  // 2^n A_i - sum_t P_i(t) Aperp_t = 0
  for (int i = 0; i <= n; ++i) {
    LinearRow row;
    row.coeff.assign(nv, Rational(0));
    row.coeff[A(i)] = two_n;
    for (int j = 0; j <= n; ++j) row.coeff[Aperp(j)] -= t.value(i, j);
    row.rel = Rel::Eq;
    row.rhs = Rational(0);
    rows_.push_back(std::move(row));
  }
  // A_0 = K^2, Aperp_0 = K
  {
    LinearRow row;
    row.coeff.assign(nv, Rational(0));
    row.coeff[A(0)] = Rational(1);
    row.rhs = K * K;
    rows_.push_back(row);
    LinearRow row2;
    row2.coeff.assign(nv, Rational(0));
    row2.coeff[Aperp(0)] = Rational(1);
    row2.rhs = K;
    rows_.push_back(row2);
  }
  // A_i = K Aperp_i below the distance, A_i <= K Aperp_i from it on.
  for (int i = 1; i <= n; ++i) {
    LinearRow row;
    row.coeff.assign(nv, Rational(0));
    row.coeff[A(i)] = Rational(1);
    row.coeff[Aperp(i)] = -K;
    row.rel = (i <= params_.w - 1) ? Rel::Eq : Rel::Le;
    row.rhs = Rational(0);
    rows_.push_back(std::move(row));
  }
}

bool EnumeratorLp::satisfied_by(const std::vector<Rational>& A,
                                const std::vector<Rational>& Aperp) const {
  const int n = params_.n;
  if (static_cast<int>(A.size()) != n + 1 || static_cast<int>(Aperp.size()) != n + 1)
    return false;
  for (int i = 0; i <= n; ++i)
    if (A[i].sign() < 0 || Aperp[i].sign() < 0) return false;
  std::vector<Rational> x;
  x.reserve(num_vars());
  x.insert(x.end(), A.begin(), A.end());
  x.insert(x.end(), Aperp.begin(), Aperp.end());
  for (const auto& row : rows_) {
    Rational lhs(0);
    for (int j = 0; j < num_vars(); ++j) lhs += row.coeff[j] * x[j];
    if (row.rel == Rel::Eq ? lhs != row.rhs : lhs > row.rhs) return false;
  }
  return true;
}

LpOutcome lp_feasible(int n, long long K, int w) {
  CodeParams params{n, K, w};
  EnumeratorLp lp(params);
  PhaseOneResult r = solve_phase_one(lp.rows(), lp.num_vars());
  LpOutcome out;
  out.feasible = r.feasible;
  if (r.feasible) {
    out.A.assign(r.x.begin(), r.x.begin() + (n + 1));
    out.Aperp.assign(r.x.begin() + (n + 1), r.x.end());
    if (!lp.satisfied_by(out.A, out.Aperp))
      throw std::logic_error("simplex returned an invalid witness");
  } else {
    out.farkas = r.farkas;
    if (!check_farkas(lp.rows(), lp.num_vars(), out.farkas))
      throw std::logic_error("simplex returned an invalid Farkas certificate");
  }
  return out;
}

LpScanResult lp_max_K(int n, int w) {
  CodeParams probe{n, 1, w};
  probe.validate();
  LpScanResult res;
  long e = n - 2L * w + 2;
  if (e < 0) return res;
  if (e > 40) throw std::invalid_argument("Singleton cap too large to scan");
  long long cap = 1LL << e;
  for (long long K = cap; K >= 1; --K) {
    LpOutcome out = lp_feasible(n, K, w);
    if (out.feasible) {
      res.K_max = K;
      res.outcome = std::move(out);
      break;
    }
  }
  return res;
}

}  // namespace qbound
