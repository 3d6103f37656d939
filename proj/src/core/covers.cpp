#include "infcov/covers.hpp"

#include "infcov/laurent_field.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cmath>
#include <random>
#include <thread>

namespace infcov {

namespace {

void check_degree(const EquivariantComplex& cx, std::size_t i) {
  if (cx.ranks.empty() || i > cx.top_degree())
    fail(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(i) + " is not present in the complex");
}

FieldPtr prime_field_or_q(std::int64_t characteristic) {
  return characteristic == 0 ? rationals() : prime_field(characteristic);
}

std::int64_t fraction_rank(const LaurentMatrixZ& m, std::int64_t characteristic) {
  if (m.empty())
    return 0;
  if (characteristic == 0)
    return static_cast<std::int64_t>(rank_over_fraction_field(m));
  return static_cast<std::int64_t>(rank_over_fraction_field(to_field(m, prime_field(characteristic))));
}

std::size_t cover_rank(const IntMatrix& m, std::int64_t characteristic) {
  if (m.empty())
    return 0;
  return characteristic == 0 ? snf_int(m).rank : rank_mod_p(m, characteristic);
}

double log_big(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

unsigned resolve_workers(unsigned workers) {
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  return workers;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k)
      fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
        }
      }
    });
  for (auto& t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

} // namespace

CanonicalAlexanderRep alexander_poly(const EquivariantComplex& cx, std::size_t i) {
  check_degree(cx, i);
  return minor_gcd_laurent(cx.boundary_into(i)).delta;
}

std::int64_t alpha(const EquivariantComplex& cx, std::size_t i, std::int64_t characteristic) {
  check_degree(cx, i);
  if (characteristic != 0 && !is_prime(characteristic))
    fail(ErrorKind::InvalidInput, std::to_string(characteristic) + " is not prime");
  return cx.ranks[i] - fraction_rank(cx.boundary_into(i), characteristic) -
         fraction_rank(cx.boundary_from(i), characteristic);
}

std::int64_t stabilization_constant(const EquivariantComplex& cx, std::size_t i, std::int64_t characteristic) {
  check_degree(cx, i);
  const FieldPtr f = prime_field_or_q(characteristic);
  std::int64_t c = 0;
  for (const auto& m : {cx.boundary_into(i), cx.boundary_from(i)})
    if (!m.empty())
      c += minor_gcd_over_field(to_field(m, f), f).delta.span();
  return c;
}

CoverHomologyReport cover_homology(const EquivariantComplex& cx, std::int64_t n,
                                   const std::vector<std::int64_t>& characteristics, bool with_integral) {
  if (n < 1)
    fail(ErrorKind::InvalidInput, "cover order must be positive");
  cx.validate();
  const std::size_t nb = cx.boundaries.size();
  std::vector<IntMatrix> sub(nb);
  std::vector<SnfResult> snf(nb);
  std::vector<std::map<std::int64_t, std::size_t>> rank(nb);
  const bool need_snf = with_integral ||
                        std::find(characteristics.begin(), characteristics.end(), 0) != characteristics.end();
  for (std::size_t k = 0; k < nb; ++k) {
    sub[k] = cyclic_substitute(cx.boundaries[k], n);
    if (need_snf) {
      snf[k] = snf_int(sub[k]);
      rank[k][0] = snf[k].rank;
    }
    for (auto p : characteristics)
      if (p != 0)
        rank[k][p] = rank_mod_p(sub[k], p);
  }
  CoverHomologyReport rep;
  rep.n = n;
  for (std::size_t i = 0; i <= cx.top_degree(); ++i) {
    DegreeHomology dh;
    dh.degree = i;
    for (auto p : characteristics) {
      std::int64_t b = cx.ranks[i] * n;
      if (i < nb)
        b -= static_cast<std::int64_t>(rank[i][p]);
      if (i > 0 && i - 1 < nb)
        b -= static_cast<std::int64_t>(rank[i - 1][p]);
      dh.betti[p] = b;
    }
    if (with_integral) {
      dh.elementary_divisors = i < nb ? snf[i] : SnfResult{};
      dh.torsion = torsion_from_snf(*dh.elementary_divisors);
    }
    rep.degrees.push_back(std::move(dh));
  }
  return rep;
}

std::vector<std::string> uct_violations(const CoverHomologyReport& report) {
  std::vector<std::string> out;
  for (const auto& dh : report.degrees) {
    auto q = dh.betti.find(0);
    if (q == dh.betti.end())
      continue;
    for (const auto& [p, b] : dh.betti) {
      if (p == 0)
        continue;
      if (q->second > b)
        out.push_back("N=" + std::to_string(report.n) + " degree " + std::to_string(dh.degree) +
                      ": betti over Q exceeds betti over F_" + std::to_string(p));
      if (q->second < b && dh.elementary_divisors) {
        const BigInt bp(static_cast<long>(p));
        bool torsion = dh.torsion.factorization.count(bp) > 0;
        if (dh.degree > 0 && report.degrees[dh.degree - 1].torsion.factorization.count(bp) > 0)
          torsion = true;
        if (!torsion)
          out.push_back("N=" + std::to_string(report.n) + " degree " + std::to_string(dh.degree) +
                        ": betti jump at p=" + std::to_string(p) + " without p-torsion");
      }
    }
  }
  return out;
}

std::optional<std::int64_t> stabilized_alpha(const std::vector<ScanPoint>& points, std::int64_t c) {
  if (points.size() < 4)
    return std::nullopt;
  const std::size_t start = points.size() - std::max<std::size_t>(1, points.size() / 4);
  std::optional<std::int64_t> value;
  for (std::size_t k = start; k < points.size(); ++k) {
    const auto& pt = points[k];
    const std::int64_t a = pt.betti / pt.n; // betti >= 0
    if (value && *value != a)
      return std::nullopt;
    value = a;
    // betti(N) - N a must lie in [0, c] once N > c
    const std::int64_t excess = pt.betti - pt.n * a;
    if (pt.n <= c || excess > c)
      return std::nullopt;
  }
  return value;
}

LimitReport limit_scan(const EquivariantComplex& cx, std::size_t i, std::int64_t n_max, std::int64_t characteristic,
                       unsigned workers, double mahler_tol) {
  check_degree(cx, i);
  if (n_max < 4)
    fail(ErrorKind::InvalidInput, "limit scans need N_max >= 4");
  cx.validate();
  LimitReport rep;
  rep.degree = i;
  rep.characteristic = characteristic;
  rep.alpha_exact = alpha(cx, i, characteristic);
  rep.stabilization_c = stabilization_constant(cx, i, characteristic);
  rep.delta = alexander_poly(cx, i);
  rep.mahler_exact = mahler_measure(rep.delta.poly(), mahler_tol);

  const LaurentMatrixZ into = cx.boundary_into(i);
  const LaurentMatrixZ from = cx.boundary_from(i);
  rep.points.resize(static_cast<std::size_t>(n_max));
  parallel_for(static_cast<std::size_t>(n_max), workers, [&](std::size_t k) {
    const std::int64_t n = static_cast<std::int64_t>(k) + 1;
    ScanPoint pt;
    pt.n = n;
    const IntMatrix a = cyclic_substitute(into, n);
    const IntMatrix b = cyclic_substitute(from, n);
    SnfResult s = a.empty() ? SnfResult{} : snf_int(a);
    const std::size_t ra = characteristic == 0 ? s.rank : cover_rank(a, characteristic);
    pt.betti = cx.ranks[i] * n - static_cast<std::int64_t>(ra) - static_cast<std::int64_t>(cover_rank(b, characteristic));
    pt.torsion_order = torsion_from_snf(s).order;
    pt.betti_ratio = static_cast<double>(pt.betti) / static_cast<double>(n);
    pt.mahler_ratio = log_big(pt.torsion_order) / static_cast<double>(n);
    rep.points[k] = std::move(pt);
  });
  rep.alpha_stabilized = stabilized_alpha(rep.points, rep.stabilization_c);
  return rep;
}

GenericDimReport generic_local_system_dim(const EquivariantComplex& cx, std::size_t i, const FieldPtr& field,
                                          int trials, std::uint64_t seed) {
  check_degree(cx, i);
  if (trials < 1)
    fail(ErrorKind::InvalidInput, "need at least one trial");
  if (field->is_finite() && field->size() - 1 < trials + 3)
    fail(ErrorKind::FieldTooSmall, "field of size " + field->size().get_str() + " is too small for " +
                                       std::to_string(trials) + " generic samples");
  const LaurentMatrixZ into = cx.boundary_into(i);
  const LaurentMatrixZ from = cx.boundary_from(i);
  std::mt19937_64 rng(seed);
  GenericDimReport rep;
  for (int k = 0; k < trials; ++k) {
    const FieldElem x = field->random_nonzero(rng);
    const auto ra = rank_over_field(specialize(into, *field, x), *field);
    const auto rb = rank_over_field(specialize(from, *field, x), *field);
    rep.samples.push_back(cx.ranks[i] - static_cast<std::int64_t>(ra + rb));
  }
  rep.value = *std::min_element(rep.samples.begin(), rep.samples.end());
  rep.stable = std::count(rep.samples.begin(), rep.samples.end(), rep.value) >= trials - 1;
  return rep;
}

TorsionWitness p_torsion_witness(const EquivariantComplex& cx, std::size_t i, std::int64_t p, std::int64_t n_max) {
  check_degree(cx, i);
  if (!is_prime(p))
    fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (n_max < 1)
    fail(ErrorKind::InvalidInput, "N_max must be positive");
  TorsionWitness w;
  w.alpha_rational = alpha(cx, i, 0);
  w.alpha_mod_p = alpha(cx, i, p);
  const LaurentMatrixZ into = cx.boundary_into(i);
  const LaurentMatrixZ from = cx.boundary_from(i);
  const BigInt bp(static_cast<long>(p));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::size_t which = 0; which < 2; ++which) {
      if (which == 1 && i == 0)
        continue;
      const IntMatrix m = cyclic_substitute(which == 0 ? into : from, n);
      if (m.empty())
        continue;
      for (const auto& d : snf_int(m).divisors)
        if (mpz_divisible_p(d.get_mpz_t(), bp.get_mpz_t())) {
          w.found = true;
          w.n = n;
          w.witness_degree = which == 0 ? i : i - 1;
          return w;
        }
    }
  }
  return w;
}

bool torsion_surjects(const std::vector<BigInt>& big, const std::vector<BigInt>& small) {
  std::map<BigInt, std::map<int, int>> count_big, count_small; // prime -> j -> #divisors with q^j
  auto tally = [](const std::vector<BigInt>& ds, std::map<BigInt, std::map<int, int>>& out) {
    for (const auto& d : ds) {
      if (d <= 1)
        continue;
      for (const auto& [q, e] : factorize(d))
        for (int j = 1; j <= e; ++j)
          ++out[q][j];
    }
  };
  tally(big, count_big);
  tally(small, count_small);
  for (const auto& [q, per] : count_small)
    for (const auto& [j, c] : per) {
      auto it = count_big.find(q);
      const int have = it == count_big.end() || !it->second.count(j) ? 0 : it->second.at(j);
      if (have < c)
        return false;
    }
  return true;
}

ParallelConnectionResult parallel_connection_check(const LaurentMatrixZ& a, std::int64_t m, std::int64_t m1) {
  if (m1 < 3)
    fail(ErrorKind::MultiplicityTooSmall, "parallel connection needs m1 >= 3, got " + std::to_string(m1));
  if (m < 1)
    fail(ErrorKind::InvalidInput, "cover order must be positive");
  const std::size_t ar = a.rows(), ac = a.cols();
  const auto blocks = static_cast<std::size_t>(m1 - 1);
  LaurentMatrixZ big(blocks * ar, blocks * ac + ar, LaurentPolyZ{});
  for (std::size_t k = 0; k < blocks; ++k)
    for (std::size_t i = 0; i < ar; ++i) {
      for (std::size_t j = 0; j < ac; ++j)
        big(k * ar + i, k * ac + j) = a(i, j);
      big(k * ar + i, blocks * ac + i) = LaurentPolyZ::t_minus_one();
    }
  ParallelConnectionResult out;
  out.big_matrix = cyclic_substitute(big, m);
  out.big = snf_int(out.big_matrix);
  out.small = snf_int(cyclic_substitute(a, m));
  out.surjection_ok = torsion_surjects(out.big.divisors, out.small.divisors);
  return out;
}

PredictedInvariants predicted_invariants(const OrbifoldData& d, std::int64_t p) {
  d.validate();
  if (p != 0 && !is_prime(p))
    fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  PredictedInvariants out;
  out.alpha1 = 2 * d.g + d.r - 2;
  for (auto m : d.mu) {
    if (p != 0 && m % p == 0)
      ++out.alpha1;
    out.mahler1_exp *= static_cast<long>(m);
  }
  out.delta1_divisor = LaurentPolyZ::constant(out.mahler1_exp);
  return out;
}

} // namespace infcov
