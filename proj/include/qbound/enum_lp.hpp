#pragma once
// Quantum enumerator model and the exact feasibility LP over unnormalized
// enumerators A_i = K^2 B_i, Aperp_i = K Bperp_i (which makes the
// MacWilliams relation and the enumerator inequalities linear for fixed K).

#include "qbound/rational.hpp"
#include "qbound/simplex.hpp"

#include <vector>

namespace qbound {

struct EnumeratorPair {
  int n = 0;
  std::vector<Rational> B;
  std::vector<Rational> Bperp;

  // B_0 = Bperp_0 = 1, 0 <= B_i <= Bperp_i, sum Bperp >= 1.
  void validate() const;
};

struct CodeParams {
  int n = 0;
  long long K = 1;  // dimension, a positive integer
  int w = 1;        // minimum distance, 1 <= w <= n+1

  void validate() const;
  Rational S() const { return Rational(K) * pow2(n); }
};

// B_i = (1/S) sum_t Bperp_t P_i(t) with S = sum Bperp_j, quaternary P.
std::vector<Rational> macwilliams_image(const std::vector<Rational>& Bperp, int n);

// Largest w with B_i = Bperp_i for all i <= w-1; n+1 when equal everywhere.
int min_distance_of_pair(const EnumeratorPair& pair);

class EnumeratorLp {
 public:
  explicit EnumeratorLp(const CodeParams& params);

  const CodeParams& params() const { return params_; }
  const std::vector<LinearRow>& rows() const { return rows_; }
  int num_vars() const { return 2 * (params_.n + 1); }

  bool satisfied_by(const std::vector<Rational>& A,
                    const std::vector<Rational>& Aperp) const;

 private:
  CodeParams params_;
  std::vector<LinearRow> rows_;
};

struct LpOutcome {
  bool feasible = false;
  std::vector<Rational> A;       // witness when feasible
  std::vector<Rational> Aperp;
  std::vector<Rational> farkas;  // infeasibility certificate otherwise
};

// Exact phase-one simplex on the (n, K, w) enumerator LP.  The witness (or
// the Farkas certificate) is substitution-checked before being returned.
LpOutcome lp_feasible(int n, long long K, int w);

struct LpScanResult {
  long long K_max = 0;  // 0 when no K >= 1 under the Singleton cap is feasible
  LpOutcome outcome;    // witness for K_max when K_max >= 1
};

// Scans K downward from the Singleton cap 2^{n-2w+2}; feasibility is not
// assumed monotone in K, so the first feasible K found is returned.
LpScanResult lp_max_K(int n, int w);

}  // namespace qbound
