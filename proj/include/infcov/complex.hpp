#pragma once

#include "infcov/exactlin.hpp"

#include <cstdint>
#include <vector>

namespace infcov {

/// Bounded complex of free Z[t, t^-1]-modules. boundaries[i] is a
/// ranks[i] x ranks[i+1] matrix (column convention) for the map from
/// degree i+1 to degree i. Missing trailing boundaries are zero maps.
struct EquivariantComplex {
  std::vector<std::int64_t> ranks;
  std::vector<LaurentMatrixZ> boundaries;

  std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  /// The map into degree i (zero matrix when absent).
  LaurentMatrixZ boundary_into(std::size_t i) const;
  /// The map out of degree i (zero matrix when i = 0 or absent).
  LaurentMatrixZ boundary_from(std::size_t i) const;

  /// Shape checks plus the composition-zero check. Throws `kind` on failure.
  void validate(ErrorKind kind = ErrorKind::InvalidInput) const;
};

} // namespace infcov
