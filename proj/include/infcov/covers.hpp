#pragma once

#include "infcov/complex.hpp"
#include "infcov/exactlin.hpp"
#include "infcov/fields.hpp"
#include "infcov/fox.hpp"
#include "infcov/laurent.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace infcov {

/// Delta_i: canonical minor gcd of the map into degree i (1 for a zero map).
/// Throws DegreeOutOfRange.
CanonicalAlexanderRep alexander_poly(const EquivariantComplex& cx, std::size_t i);

/// rank C_i - rank d_i - rank d_{i-1} over Frac(K[t]); only the
/// characteristic of K matters.
std::int64_t alpha(const EquivariantComplex& cx, std::size_t i, std::int64_t characteristic);
inline std::int64_t alpha(const EquivariantComplex& cx, std::size_t i, const Field& field) {
  return alpha(cx, i, field.characteristic());
}

/// Sum of the spans of the Fitting gcds over F_p (or Q) of the maps into and
/// out of degree i: bounds betti(N) - N * alpha from above.
std::int64_t stabilization_constant(const EquivariantComplex& cx, std::size_t i, std::int64_t characteristic);

struct DegreeHomology {
  std::size_t degree = 0;
  std::map<std::int64_t, std::int64_t> betti; ///< characteristic -> dimension
  std::optional<SnfResult> elementary_divisors;
  TorsionSummary torsion;
};

struct CoverHomologyReport {
  std::int64_t n = 0;
  std::vector<DegreeHomology> degrees;
};

/// Homology of the N-fold cyclic cover through t -> J_N.
CoverHomologyReport cover_homology(const EquivariantComplex& cx, std::int64_t n,
                                   const std::vector<std::int64_t>& characteristics, bool with_integral);

/// Violations of betti_Q <= betti_p and of "strict inequality forces
/// p-torsion in degree i or i-1". Empty when consistent.
std::vector<std::string> uct_violations(const CoverHomologyReport& report);

struct ScanPoint {
  std::int64_t n = 0;
  std::int64_t betti = 0;
  BigInt torsion_order = 1;
  double betti_ratio = 0;   ///< betti / N
  double mahler_ratio = 0;  ///< log |tor| / N
};

struct LimitReport {
  std::size_t degree = 0;
  std::int64_t characteristic = 0;
  std::vector<ScanPoint> points;
  std::int64_t alpha_exact = 0;
  std::int64_t stabilization_c = 0;
  std::optional<std::int64_t> alpha_stabilized;
  CanonicalAlexanderRep delta = CanonicalAlexanderRep::one();
  MahlerMeasure mahler_exact;
};

/// Scans N = 1..n_max. Independent N run on `workers` threads (0 picks the
/// hardware concurrency); results do not depend on the worker count.
LimitReport limit_scan(const EquivariantComplex& cx, std::size_t i, std::int64_t n_max,
                       std::int64_t characteristic, unsigned workers = 0,
                       double mahler_tol = kDefaultMahlerTolerance);

/// floor(betti/N) constant over the last quartile with 0 <= betti/N - a <= c/N.
std::optional<std::int64_t> stabilized_alpha(const std::vector<ScanPoint>& points, std::int64_t c);

struct GenericDimReport {
  std::int64_t value = 0;
  std::vector<std::int64_t> samples;
  bool stable = false;
};

/// dim H_i of the complex specialized at random nonzero t in `field`.
/// Throws FieldTooSmall when the field has fewer than trials + 3 nonzero
/// elements.
GenericDimReport generic_local_system_dim(const EquivariantComplex& cx, std::size_t i, const FieldPtr& field,
                                          int trials, std::uint64_t seed);

struct TorsionWitness {
  bool found = false;
  std::optional<std::int64_t> n;
  std::optional<std::size_t> witness_degree;
  std::int64_t alpha_rational = 0;
  std::int64_t alpha_mod_p = 0;
};
TorsionWitness p_torsion_witness(const EquivariantComplex& cx, std::size_t i, std::int64_t p, std::int64_t n_max);

struct ParallelConnectionResult {
  IntMatrix big_matrix;
  SnfResult big;
  SnfResult small;
  bool surjection_ok = false;
};

/// A is the chain matrix (rows = source basis) over Z[t]/(t^m - 1). Builds
/// the (m1 - 1)-fold block matrix with the (t - 1) id coupling column,
/// substitutes t -> J_m and compares torsion. Throws MultiplicityTooSmall
/// for m1 < 3.
ParallelConnectionResult parallel_connection_check(const LaurentMatrixZ& a, std::int64_t m, std::int64_t m1);

/// A finite abelian group with invariant factors `big` surjects onto one
/// with factors `small`.
bool torsion_surjects(const std::vector<BigInt>& big, const std::vector<BigInt>& small);

struct PredictedInvariants {
  std::int64_t alpha1 = 0;
  BigInt mahler1_exp = 1;
  LaurentPolyZ delta1_divisor;
};
PredictedInvariants predicted_invariants(const OrbifoldData& d, std::int64_t p);

} // namespace infcov
