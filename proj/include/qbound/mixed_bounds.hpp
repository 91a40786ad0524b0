#pragma once
// Bounds for stabilizer codes of type 4^{k0} 2^{k1} via mixed-alphabet
// classical codes: the shortening map to a mixed group code, the mixed
// Plotkin and sphere-packing bounds, and the stabilizer-level compositions.

#include "qbound/rational.hpp"

#include <optional>

namespace qbound {

struct StabilizerType {
  int n = 0;
  int k0 = 0;
  int k1 = 0;

  int k() const { return n - 2 * k0 - k1; }
  void validate() const;
};

// A group code over GF(2)^l x GF(4)^{n_total - l}.
struct MixedCodeParams {
  int l = 0;        // binary-restricted coordinates
  int n_total = 0;  // total length
  int k_bin = 0;    // log2 of the cardinality
};

struct ShortenResult {
  MixedCodeParams general;                 // lengths k1 and n-k0-k1, |C| = 2^{2k}
  std::optional<MixedCodeParams> reduced;  // pure quaternary reduction when available
  bool degenerate = false;                 // k0 = k1 = 0: complementary code is everything
};

// Parameters of the complementary mixed code whose minimum distance upper
// bounds the stabilizer code's distance.
ShortenResult shorten_params(int n, int k0, int k1);

// d <= (l 2^{k-1} + 3 (n-l) 2^{k-2}) / (2^k - 1), exact (not floored).
Rational mixed_plotkin(int l, int n_total, int k_bin);

// Number of words of GF(2)^l x GF(4)^{n-l} within Hamming distance e of a
// fixed word: sum_{i<=e} sum_j C(l,j) 3^{i-j} C(n-l, i-j).
Rational mixed_sphere_volume(int l, int n_total, int e);

enum class PackingRadius {
  Floor,  // e = floor((d-1)/2): spheres provably disjoint for every d
  Ceil,   // e = ceil((d-1)/2): half-distance radius, agrees with Floor for odd d
};

inline int packing_radius(int d, PackingRadius kind) {
  return kind == PackingRadius::Ceil ? d / 2 : (d - 1) / 2;
}

// Largest d (capped at n_total + 1) whose packing radius e keeps
// V_e <= 2^{2 n_total - l - k_bin}; monotone scan with the rigorous floor
// radius.
int mixed_hamming_max_d(int l, int n_total, int k_bin);

// Closed-form Plotkin-type bound for an [[n, k]] code of type with given k1:
// d <= ((n+k)/2) 3 4^{k-1}/(4^k-1) + (k1/2) 4^{k-1}/(4^k-1), exact.
Rational stabilizer_plotkin(int n, int k, int k1);

struct StabilizerHammingResult {
  int d_composed = 0;  // V_e <= 2^{n-k} from composing the shortening map
  int d_relaxed = 0;   // right-hand side relaxed to 2^{n-k+2k1}
};

// Sphere-packing bound on the complementary mixed code, scanned with the
// ceil radius convention.  Both right-hand sides are reported.
StabilizerHammingResult stabilizer_hamming(int n, int k, int k1);

}  // namespace qbound
