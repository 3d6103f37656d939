#include "doctest.h"
#include "support.hpp"

#include "infcov/laurent_field.hpp"

using namespace infcov;
using testsupport::lmat;
using testsupport::lz;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

LaurentMatrixZ pencil_boundary(const std::vector<std::int64_t>& n) {
  // d x (d-1): first row 1 - t^{n_l}, then t^S - 1 on the subdiagonal.
  const std::size_t d = n.size();
  std::int64_t s = 0;
  for (auto v : n)
    s += v;
  LaurentMatrixZ m(d, d - 1, LaurentPolyZ());
  for (std::size_t l = 0; l + 1 < d; ++l) {
    m(0, l) = -LaurentPolyZ::t_pow_minus_one(n[l]);
    m(l + 1, l) = LaurentPolyZ::t_pow_minus_one(s);
  }
  return m;
}

} // namespace

TEST_CASE("Smith normal form fixtures") {
  auto s = snf_int(int_matrix({{2, 4}, {6, 8}}));
  CHECK(s.divisors == ints({2, 4}));
  CHECK(s.rank == 2);
  CHECK(snf_int(identity_int(3)).divisors == ints({1, 1, 1}));
  auto z = snf_int(IntMatrix(3, 2, BigInt(0)));
  CHECK(z.divisors.empty());
  CHECK(z.rank == 0);
  CHECK(snf_int(IntMatrix()).rank == 0);
}

TEST_CASE("Smith normal form against determinantal divisors") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 2 + trial % 3, c = 2 + (trial / 3) % 3;
    auto m = testsupport::random_int_matrix(rng, r, c, -9, 9);
    if (trial % 7 == 0)
      for (std::size_t j = 0; j < c; ++j)
        m(r - 1, j) = m(0, j) * 2;
    auto s = snf_int(m);
    CHECK(s.divisors == testsupport::brute_force_divisors(m));
    CHECK(s.rank == testsupport::rational_rank(m));
    for (std::size_t k = 1; k < s.divisors.size(); ++k)
      CHECK(s.divisors[k] % s.divisors[k - 1] == 0);
  }
}

TEST_CASE("Smith normal form leaves 64-bit range") {
  const long big = 3'000'000'000'000'000'000L / 3;
  IntMatrix m = int_matrix({{big, big - 1, 7}, {big + 5, 3, big}, {11, big, big - 2}});
  auto s = snf_int(m);
  CHECK(s.divisors == testsupport::brute_force_divisors(m));
}

TEST_CASE("torsion summaries and factoring") {
  auto t = torsion_from_snf(SnfResult{ints({1, 1, 2, 4}), 4});
  CHECK(t.order == 8);
  CHECK(t.factorization == std::map<BigInt, int>{{2, 3}});
  auto u = torsion_from_snf(SnfResult{ints({1, 1, 1}), 3});
  CHECK(u.order == 1);
  CHECK(u.factorization.empty());
  auto v = torsion_from_snf(SnfResult{ints({2, 6}), 2});
  CHECK(v.order == 12);
  CHECK(v.factorization == std::map<BigInt, int>{{2, 2}, {3, 1}});
  CHECK(factorize(BigInt("600851475143")) == std::map<BigInt, int>{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}});
  CHECK(factorize(BigInt("2305843009213693951")) == std::map<BigInt, int>{{BigInt("2305843009213693951"), 1}});
  CHECK(factorize(1).empty());
}

TEST_CASE("ranks") {
  CHECK(rank_over_fraction_field(lmat(2, 2, {lz({-1, 1}), {}, {}, {}})) == 1);
  CHECK(rank_over_fraction_field(pencil_boundary({1, 1, 1})) == 2);
  CHECK(rank_over_fraction_field(lmat(2, 1, {{}, lz({2})})) == 1);
  CHECK(rank_over_fraction_field(to_field(lmat(2, 1, {{}, lz({2})}), prime_field(2))) == 0);
  auto m = int_matrix({{2, 4}, {6, 8}});
  CHECK(rank_mod_p(m, 2) == 0);
  CHECK(rank_mod_p(m, 3) == 2);
  CHECK(rank_int(m) == 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    auto a = testsupport::random_int_matrix(rng, 4, 5, -3, 3);
    for (std::int64_t p : {2, 3, 5, 7})
      CHECK(rank_mod_p(a, p) == testsupport::rank_mod(a, p));
  }
}

TEST_CASE("minor gcd") {
  auto d = minor_gcd_laurent(lmat(2, 2, {lz({-1, 1}), {}, {}, lz({-1, 0, 1})}));
  CHECK(d.rank == 2);
  CHECK(d.delta == canonical_rep(lz({-1, 1}) * lz({-1, 0, 1})));
  auto c = minor_gcd_laurent(lmat(2, 1, {{}, lz({2})}));
  CHECK(c.rank == 1);
  CHECK(c.delta.poly() == lz({2}));
  auto p = minor_gcd_laurent(pencil_boundary({1, 1, 1}));
  CHECK(p.rank == 2);
  CHECK(p.delta == canonical_rep(lz({-1, 1}) * lz({-1, 0, 0, 1})));
  CHECK(minor_gcd_laurent(LaurentMatrixZ(2, 2, LaurentPolyZ())).delta == CanonicalAlexanderRep::one());

  auto f2 = prime_field(2);
  auto k = minor_gcd_over_field(to_field(lmat(2, 2, {lz({-1, 0, 1}), {}, {}, lz({1, 1})}), f2), f2);
  CHECK(k.rank == 2);
  CHECK(k.delta == reduce_mod_p(pow(lz({1, 1}), 3), f2));
}

TEST_CASE("cyclic substitution") {
  auto j3 = cyclic_substitute(lmat(1, 1, {lz({-1, 1})}), 3);
  CHECK(j3.rows() == 3);
  CHECK(rank_int(j3) == 2);
  for (std::size_t i = 0; i < 3; ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < 3; ++j)
      row += j3(i, j);
    CHECK(row == 0);
  }
  CHECK(cyclic_substitute(lmat(1, 1, {lz({1})}), 5) == identity_int(5));
  CHECK(is_zero(cyclic_substitute(lmat(1, 1, {LaurentPolyZ::t_pow_minus_one(4)}), 4)));
  CHECK(is_zero(cyclic_substitute(lmat(1, 1, {LaurentPolyZ::t_pow_minus_one(-8)}), 4)));

  // rank h(J_N) = N - deg gcd(t^N - 1, h) over Q.
  std::mt19937_64 rng(9);
  auto q = rationals();
  for (int i = 0; i < 25; ++i) {
    auto h = testsupport::random_laurent(rng, 4, 3) * (i % 2 ? lz({-1, 1}) : lz({1, 1}));
    if (h.is_zero())
      continue;
    const std::int64_t n = 1 + i % 12;
    auto g = gcd_over_field(LaurentPolyK::from_z(q, LaurentPolyZ::t_pow_minus_one(n)), LaurentPolyK::from_z(q, h));
    CHECK(testsupport::rational_rank(cyclic_substitute(lmat(1, 1, {h}), n)) ==
          static_cast<std::size_t>(n - g.span()));
  }
}

TEST_CASE("elementary operations keep the Fitting gcd") {
  using K = ElementaryOp::Kind;
  auto m = lmat(2, 2, {lz({-1, 1}), {}, {}, lz({2})});
  const auto base = minor_gcd_laurent(m).delta;
  CHECK(minor_gcd_laurent(elementary_ops_normalize(m, {{K::SwapRows, 0, 1}})).delta == base);
  CHECK(minor_gcd_laurent(elementary_ops_normalize(m, {{K::AddRow, 1, 0, lz({0, 1})}})).delta == base);
  CHECK(minor_gcd_laurent(elementary_ops_normalize(m, {{K::ScaleCol, 1, 0, lz({-1}, 3)}})).delta == base);
  try {
    elementary_ops_normalize(m, {{K::ScaleRow, 0, 0, lz({2})}});
    FAIL("scaling by 2 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllegalOp);
  }
}

TEST_CASE("specialization") {
  auto q = rationals();
  auto f = specialize(lmat(1, 2, {lz({-1, 1}), lz({1, 1})}), *q, q->one());
  CHECK(q->is_zero(f(0, 0)));
  CHECK(f(0, 1) == q->from_int(2));
  CHECK(rank_over_field(f, *q) == 1);
}
