#include "doctest.h"
#include "support.hpp"

#include <cmath>

using namespace infcov;
using testsupport::lz;

TEST_CASE("canonical representative") {
  CHECK(canonical_rep(lz({-1, 3, -1}, -1)).poly() == lz({1, -3, 1}));
  CHECK(canonical_rep(lz({-1}, 3)) == CanonicalAlexanderRep::one());
  CHECK(canonical_rep(lz({2, 0, -2}, 2)).poly() == lz({-2, 0, 2}));
  CHECK_THROWS_AS(canonical_rep(LaurentPolyZ()), Error);
  try {
    canonical_rep(LaurentPolyZ());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroPolynomial);
  }
}

TEST_CASE("ring arithmetic against evaluation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testsupport::random_laurent(rng, 5, 7).shifted(trial % 5 - 2);
    const auto b = testsupport::random_laurent(rng, 5, 7).shifted(trial % 3 - 1);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK((a * b).eval(-1) == a.eval(-1) * b.eval(-1));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      auto q = divide_exact(a * b, b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }
  CHECK(lz({1, -3, 1}).to_string() == "t^2 - 3*t + 1");
  CHECK(pow(lz({-1, 1}), 3) == lz({-1, 3, -3, 1}));
  CHECK(!divide_exact(lz({1, 0, 1}), lz({-1, 1})).has_value());
  CHECK(LaurentPolyZ::t_pow_minus_one(0).is_zero());
  CHECK(lz({3}, 2).is_unit() == false);
  CHECK(lz({-1}, -4).is_unit());
}

TEST_CASE("gcd over the integers") {
  CHECK(gcd(lz({-2, 1, 1}), lz({3, -4, 1})) == lz({-1, 1}));
  CHECK(gcd(lz({2, 2}), lz({4, 4})) == lz({2, 2}));
  CHECK(gcd(lz({-1, 0, 0, 0, 0, 0, 1}), lz({1, -3, 1})) == lz({1}));
  CHECK(gcd(LaurentPolyZ(), LaurentPolyZ()).is_zero());
  CHECK(gcd(lz({6}), lz({4, 0, 2}, 3)) == lz({2}));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == lz({-1, 1}));
  CHECK(cyclotomic_poly(2) == lz({1, 1}));
  CHECK(cyclotomic_poly(2).eval_at_one() == 2);
  CHECK(cyclotomic_poly(6) == lz({1, -1, 1}));
  CHECK(cyclotomic_poly(6).eval_at_one() == 1);
  // Phi_p = 1 + t + ... + t^(p-1); Phi_k(1) = q for k = q^r and 1 for composite non prime powers.
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    std::vector<BigInt> ones(static_cast<std::size_t>(p), BigInt(1));
    CHECK(cyclotomic_poly(p) == LaurentPolyZ(0, ones));
  }
  CHECK(cyclotomic_poly(8).eval_at_one() == 2);
  CHECK(cyclotomic_poly(27).eval_at_one() == 3);
  CHECK(cyclotomic_poly(12).eval_at_one() == 1);
  CHECK(cyclotomic_poly(30).eval_at_one() == 1);
  for (std::int64_t k = 1; k <= 40; ++k)
    CHECK(cyclotomic_poly(k).span() == euler_phi(k));
}

TEST_CASE("cyclotomic type and splitting") {
  const auto a = lz({-1, 1}) * lz({-1, 0, 0, 1});
  CHECK(is_cyclotomic_type(a));
  CHECK_FALSE(is_cyclotomic_type(lz({1, -3, 1})));
  CHECK(is_cyclotomic_type(lz({2, 2})));
  const auto p = lz({2}) * pow(lz({-1, 1}), 2) * lz({1, 1}) * lz({1, -3, 1});
  const auto s = split_cyclotomic(p);
  CHECK(s.content == 2);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0] == std::pair<std::int64_t, int>{1, 2});
  CHECK(s.factors[1] == std::pair<std::int64_t, int>{2, 1});
  CHECK(s.rest == lz({1, -3, 1}));
}

TEST_CASE("Mahler measure") {
  const auto m2 = mahler_measure(lz({2, 2}));
  REQUIRE(m2.exact_exp.has_value());
  CHECK(*m2.exact_exp == 2);
  CHECK(m2.numeric == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  const auto mg = mahler_measure(lz({1, -3, 1}), 1e-9);
  CHECK_FALSE(mg.exact_exp.has_value());
  CHECK(std::abs(mg.numeric - std::log((3 + std::sqrt(5.0)) / 2)) < 1e-9);
  CHECK(mg.error_bound <= 1e-9);

  const auto m1 = mahler_measure(lz({-1, 1}));
  REQUIRE(m1.exact_exp.has_value());
  CHECK(*m1.exact_exp == 1);
  CHECK(m1.numeric == 0.0);

  // Jensen: M(c * prod (t - a)) = log|c| + sum log max(1, |a|).
  const auto q = lz({3}) * lz({-5, 1}) * lz({2, 1}) * lz({1, 7});
  const double expect = std::log(3.0 * 7.0) + std::log(5.0) + std::log(2.0) + 0.0;
  CHECK(std::abs(mahler_measure(q, 1e-10).numeric - expect) < 1e-9);
  CHECK_THROWS_AS(mahler_measure(LaurentPolyZ()), Error);
}

TEST_CASE("roots at one") {
  CHECK(strip_unit_roots_at_one(lz({-1, 1}) * lz({-1, 0, 0, 1})) == lz({1, 1, 1}));
  CHECK(strip_unit_roots_at_one(lz({2, 2})) == lz({2, 2}));
  CHECK(strip_unit_roots_at_one(pow(lz({-1, 1}), 2)) == lz({1}));
  CHECK(multiplicity_at_one(pow(lz({-1, 1}), 3) * lz({1, 1})) == 3);
  CHECK(multiplicity_at_one(lz({1, -3, 1})) == 0);
  // (1 + t + ... + t^(S-1))^(d-2) at 1 is S^(d-2).
  const auto d = lz({-1, 1}) * pow(LaurentPolyZ::t_pow_minus_one(6), 2);
  CHECK(strip_unit_roots_at_one(d).eval_at_one() == 36);
}
