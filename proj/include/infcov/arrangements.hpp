#pragma once

#include "infcov/complex.hpp"
#include "infcov/exactlin.hpp"
#include "infcov/fields.hpp"
#include "infcov/fox.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace infcov {

enum class Ambient { P1, P2 };

/// Lines in P2 given by normal vectors (a, b, c) for ax + by + cz = 0, or
/// points of P1 given by (a, b). Coordinates live in `field`, which is Q for
/// integer input and Q(zeta) for the cyclotomic constructions.
struct LineArrangement {
  Ambient ambient = Ambient::P2;
  FieldPtr field;
  std::vector<std::vector<FieldElem>> lines;
  /// Line removed to pass to the affine complement (P2 only).
  std::optional<std::size_t> infinity;

  std::size_t size() const { return lines.size(); }
  /// Shapes, nonzero normals, infinity index. Throws InvalidInput.
  void validate() const;

  /// Integer normals; each must be primitive (gcd 1).
  static LineArrangement from_integers(Ambient ambient, const std::vector<std::vector<std::int64_t>>& normals,
                                       std::optional<std::size_t> infinity = std::nullopt);
};

struct IntersectionPoint {
  std::vector<FieldElem> coords;     ///< first nonzero coordinate is 1 (empty for P1)
  std::vector<std::size_t> lines;    ///< sorted incident line indices
  std::size_t multiplicity() const { return lines.size(); }
};

struct IntersectionData {
  /// Ordered by first appearance when scanning pairs (i < j) lexicographically.
  std::vector<IntersectionPoint> points;
  /// point_of[i][j]: index of the point where lines i and j meet.
  std::vector<std::vector<std::size_t>> point_of;

  std::size_t meet(std::size_t i, std::size_t j) const { return point_of[i][j]; }
};

/// Throws DegenerateInput for proportional lines, InvalidInput for fewer
/// than two lines.
IntersectionData intersection_points(const LineArrangement& arr);

/// Degree <= 2 cochain complex (H^0 -> H^1 -> H^2, cup with nu) over Z.
/// Row convention: d0 is 1 x |H^1|, d1 is |H^1| x |H^2|.
struct AomotoComplexZ {
  IntMatrix d0;
  IntMatrix d1;
  std::vector<std::size_t> h1_lines;  ///< arrangement index of each H^1 generator
  std::vector<std::size_t> h2_points; ///< intersection point of each H^2 block
  std::vector<std::int64_t> nu;
};

/// nu has one entry per H^1 generator: all lines except the infinity line
/// (if any). With an infinity line, points on it carry no H^2 class.
/// Throws NotEpimorphism when gcd(nu) != 1.
AomotoComplexZ aomoto_complex(const LineArrangement& arr, const std::vector<std::int64_t>& nu);
AomotoComplexZ aomoto_complex(const LineArrangement& arr, const IntersectionData& inter,
                              const std::vector<std::int64_t>& nu);

struct AomotoNumbers {
  std::map<std::int64_t, std::int64_t> beta0;
  std::map<std::int64_t, std::int64_t> beta1;
  BigInt tau1 = 1;
  std::vector<BigInt> torsion; ///< invariant factors > 1 of coker(d1)
};

AomotoNumbers beta_tau(const AomotoComplexZ& cx, const std::vector<std::int64_t>& characteristics);

/// Equivariant chain complex of the pencil of d lines with weights n.
/// Throws NotEpimorphism when gcd(n) != 1.
EquivariantComplex pencil_complex(std::size_t d, const std::vector<std::int64_t>& n);

struct Multinet {
  LineArrangement arrangement;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::int64_t> weights;    ///< n_H per line
  std::vector<std::size_t> base_locus;  ///< intersection point indices

  std::size_t k() const { return classes.size(); }
};

struct MultinetCheck {
  bool valid = false;
  std::vector<char> violated; ///< subset of 'a'..'e'
  std::int64_t kappa = 0;     ///< weight of the first class
};

/// Throws InvalidInput when the classes do not partition the lines, k < 3,
/// a weight is not positive or a base-locus index is out of range.
MultinetCheck verify_multinet(const Multinet& mn);

struct CertificateResult {
  bool assumption_ok = false;
  std::optional<char> failed_condition; ///< 'a', 'b' or 'c'
  std::vector<std::size_t> deletion_order; ///< lines of the third class, when (c) succeeds
  std::vector<std::int64_t> nu;
  BigInt tau1 = 1;
  bool no_parallel_component = false;
};

/// Throws NotAThreeNet unless k = 3, InvalidInput if the multinet is invalid.
CertificateResult check_assumption_and_certificate(const Multinet& mn);

struct DeletedMonomial {
  LineArrangement arrangement;
  OrbifoldData orbifold_type;
};
/// y, z, then x - zeta^j y, x - zeta^j z, y - zeta^j z for j = 0..mu-1.
DeletedMonomial deleted_monomial_arrangement(std::int64_t mu);

/// Lines x - zeta^j y, x - zeta^j z, y - zeta^j z (j = 0..m-1).
LineArrangement ceva_arrangement(std::int64_t m);
/// Intersection points met by lines of at least two different classes.
std::vector<std::size_t> mixed_points(const LineArrangement& arr, const std::vector<std::vector<std::size_t>>& classes);

/// The three coordinate classes with unit weights; the base locus is every
/// point met by two different classes.
Multinet ceva_multinet(std::int64_t m);

/// z, x, y, x-y, x-z, y-z, x-y-z, x-y+z with z = 0 at infinity.
LineArrangement deleted_b3_arrangement();

struct MultiplicityVector {
  std::vector<std::int64_t> m;
  std::int64_t total = 0;
};

/// m_l = chi_l + N q_l > 0 with p not dividing m / N; q is the
/// lexicographically smallest such vector. Throws InvalidInput if N does not
/// divide sum(chi).
MultiplicityVector lift_multiplicity(const std::vector<std::int64_t>& chi, std::int64_t n, std::int64_t p);

} // namespace infcov
