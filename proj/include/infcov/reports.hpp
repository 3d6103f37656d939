#pragma once

#include "infcov/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace infcov::reports {

using io::Json;

struct Options {
  std::vector<std::int64_t> characteristics{0, 2, 3, 5};
  std::int64_t n_min = 1;
  std::int64_t n_max = 40;
  std::uint64_t seed = 0;
  double tolerance = kDefaultMahlerTolerance;
  unsigned workers = 0; ///< 0: hardware concurrency; never affects results
  std::optional<std::size_t> degree;
  int trials = 5;
};

/// Characteristics prime or 0, 1 <= n_min <= n_max <= 2000, tolerance > 0,
/// trials >= 1. Throws InvalidInput with a message naming the field.
void validate_options(const Options& opts);

Json provenance(const Options& opts);

/// Every report has "command", "inputs", "results", "cross_checks" and
/// "provenance". A cross check is {"name", "ok", "strict", "detail"}; a failed
/// strict check signals an internal inconsistency.
Json invariants_report(const EquivariantComplex& cx, const Options& opts);
Json cover_report(const EquivariantComplex& cx, const Options& opts);
Json orbifold_report(const OrbifoldData& d, const Options& opts);
Json arrangement_report(const LineArrangement& arr, const std::vector<std::int64_t>& nu, const Options& opts);
Json multinet_report(const Multinet& mn, const Options& opts);
Json mahler_report(const LaurentPolyZ& p, const Options& opts);

Json construct_deleted_monomial(std::int64_t mu, const Options& opts);
Json construct_lift(const std::vector<std::int64_t>& chi, std::int64_t n, std::int64_t p, const Options& opts);
Json construct_pencil(std::size_t d, const std::vector<std::int64_t>& n, const Options& opts);

bool has_strict_failure(const Json& report);

} // namespace infcov::reports
