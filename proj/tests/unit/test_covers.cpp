#include "doctest.h"
#include "support.hpp"

#include <cmath>

using namespace infcov;
using testsupport::lmat;
using testsupport::lz;

namespace {

EquivariantComplex orbifold_complex(const OrbifoldData& d) {
  return equivariant_complex_from_presentation(orbifold_presentation(d), orbifold_epimorphism(d));
}

// R --h--> R --0--> R: H_1 = R / h.
EquivariantComplex cyclic_module(const LaurentPolyZ& h) {
  return EquivariantComplex{{1, 1, 1}, {lmat(1, 1, {{}}), lmat(1, 1, {h})}};
}

EquivariantComplex zero_complex() {
  return EquivariantComplex{{1, 2, 1}, {LaurentMatrixZ(1, 2, LaurentPolyZ()), LaurentMatrixZ(2, 1, LaurentPolyZ())}};
}

} // namespace

TEST_CASE("Alexander polynomials") {
  CHECK(alexander_poly(orbifold_complex({0, 2, {2}}), 1).poly() == lz({2}));
  CHECK(alexander_poly(orbifold_complex({1, 0, {2, 3}}), 1).poly() == lz({-6, 6}));
  CHECK(alexander_poly(pencil_complex(3, {1, 1, 1}), 1) == canonical_rep(lz({-1, 1}) * lz({-1, 0, 0, 1})));
  CHECK(alexander_poly(pencil_complex(3, {1, 1, 1}), 0).poly() == lz({-1, 1}));
  try {
    alexander_poly(pencil_complex(3, {1, 1, 1}), 7);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeOutOfRange);
  }
}

TEST_CASE("alpha") {
  for (std::int64_t p : {0, 2, 3, 5})
    CHECK(alpha(pencil_complex(3, {1, 1, -2}), 1, p) == 1);
  CHECK(alpha(orbifold_complex({0, 2, {2}}), 1, 2) == 1);
  CHECK(alpha(orbifold_complex({0, 2, {2}}), 1, 0) == 0);
  CHECK(alpha(orbifold_complex({0, 2, {3}}), 1, 3) == 1);
  const auto z = zero_complex();
  for (std::size_t i = 0; i <= 2; ++i)
    CHECK(alpha(z, i, 0) == z.ranks[i]);
  CHECK_THROWS_AS(alpha(z, 1, 4), Error);
}

TEST_CASE("finite cover homology") {
  auto orb = orbifold_complex({0, 2, {2}});
  auto rep = cover_homology(orb, 4, {0, 2}, true);
  const auto& h1 = rep.degrees[1];
  BigInt ord = h1.torsion.order;
  CHECK(ord >= 2);
  while (ord % 2 == 0)
    ord /= 2;
  CHECK(ord == 1);

  // Oracle: determinantal divisors of the substituted relation matrix for N = 2.
  auto small = cover_homology(orb, 2, {0}, true);
  auto brute = testsupport::brute_force_divisors(cyclic_substitute(orb.boundaries[1], 2));
  BigInt brute_order = 1;
  for (const auto& d : brute)
    brute_order *= d;
  CHECK(small.degrees[1].torsion.order == brute_order);

  auto two = cover_homology(cyclic_module(lz({2})), 5, {0, 2}, true);
  CHECK(two.degrees[1].torsion.order == 32);
  CHECK(two.degrees[1].torsion.factorization == std::map<BigInt, int>{{2, 5}});
  CHECK(two.degrees[1].betti.at(2) == 5);
  CHECK(two.degrees[1].betti.at(0) == 0);

  // Pencil betti numbers against Gauss-Jordan over Q on the substituted maps.
  auto pen = pencil_complex(3, {1, 1, 1});
  auto p3 = cover_homology(pen, 3, {0}, false);
  const auto into = cyclic_substitute(pen.boundary_into(1), 3);
  const auto from = cyclic_substitute(pen.boundary_from(1), 3);
  const auto expect = 3 * pen.ranks[1] - static_cast<std::int64_t>(testsupport::rational_rank(into)) -
                      static_cast<std::int64_t>(testsupport::rational_rank(from));
  CHECK(p3.degrees[1].betti.at(0) == expect);
  CHECK(uct_violations(p3).empty());
  CHECK(uct_violations(rep).empty());

  CoverHomologyReport bad;
  bad.n = 1;
  DegreeHomology dh;
  dh.degree = 0;
  dh.betti = {{0, 3}, {2, 1}};
  bad.degrees.push_back(dh);
  CHECK_FALSE(uct_violations(bad).empty());
}

TEST_CASE("limit scans") {
  auto orb = limit_scan(orbifold_complex({0, 2, {2}}), 1, 40, 0, 2);
  CHECK(std::abs(orb.points.back().mahler_ratio - std::log(2.0)) < 1e-9);
  REQUIRE(orb.mahler_exact.exact_exp.has_value());
  CHECK(*orb.mahler_exact.exact_exp == 2);
  CHECK(orb.alpha_stabilized == std::optional<std::int64_t>(0));

  auto pen = limit_scan(pencil_complex(3, {1, 1, 1}), 1, 30, 0, 1);
  CHECK(*pen.mahler_exact.exact_exp == 1);
  CHECK(pen.points.back().mahler_ratio < 0.2);

  auto golden = limit_scan(cyclic_module(lz({1, -3, 1})), 1, 40, 0);
  const double target = std::log((3 + std::sqrt(5.0)) / 2);
  CHECK(std::abs(golden.points.back().mahler_ratio - target) < 1e-6);
  CHECK(std::abs(golden.mahler_exact.numeric - target) < 1e-9);

  // Worker count never changes the result.
  auto a = limit_scan(orbifold_complex({1, 1, {2, 3}}), 1, 24, 3, 1);
  auto b = limit_scan(orbifold_complex({1, 1, {2, 3}}), 1, 24, 3, 4);
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    CHECK(a.points[k].betti == b.points[k].betti);
    CHECK(a.points[k].torsion_order == b.points[k].torsion_order);
  }
  CHECK_THROWS_AS(limit_scan(orbifold_complex({0, 2, {2}}), 1, 3, 0), Error);
}

TEST_CASE("stabilized alpha") {
  std::vector<ScanPoint> pts;
  for (std::int64_t n = 1; n <= 20; ++n)
    pts.push_back(ScanPoint{n, 2 * n + 1, 1, 0, 0});
  CHECK(stabilized_alpha(pts, 1) == std::optional<std::int64_t>(2));
  for (auto& p : pts)
    p.betti = p.n * p.n;
  CHECK_FALSE(stabilized_alpha(pts, 1).has_value());
}

TEST_CASE("generic specialization") {
  auto g = generic_local_system_dim(pencil_complex(3, {1, 1, -2}), 1, rationals(), 7, 0);
  CHECK(g.value == 1);
  CHECK(g.samples.size() == 7);
  auto f = make_field_with_min_size(2, 3, 64);
  CHECK(generic_local_system_dim(orbifold_complex({0, 2, {2}}), 1, f, 5, 1).value == 1);
  auto z = generic_local_system_dim(zero_complex(), 1, rationals(), 5, 3);
  for (auto s : z.samples)
    CHECK(s == 2);
  try {
    generic_local_system_dim(zero_complex(), 1, make_splitting_field(2, 3), 5, 0);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldTooSmall);
  }
}

TEST_CASE("p-torsion witnesses") {
  auto w = p_torsion_witness(orbifold_complex({0, 2, {2}}), 1, 2, 8);
  CHECK(w.found);
  REQUIRE(w.n.has_value());
  CHECK(*w.n <= 8);
  auto s = p_torsion_witness(cyclic_module(lz({2})), 1, 2, 5);
  CHECK(s.found);
  CHECK(s.n == std::optional<std::int64_t>(1));
  CHECK_FALSE(p_torsion_witness(pencil_complex(3, {1, 1, -2}), 1, 5, 30).found);
}

TEST_CASE("parallel connection") {
  auto r = parallel_connection_check(lmat(1, 1, {lz({2})}), 2, 3);
  CHECK(r.surjection_ok);
  CHECK(r.big_matrix.rows() == 4);
  CHECK(r.big_matrix.cols() == 6);
  CHECK(r.big.divisors == testsupport::brute_force_divisors(r.big_matrix));

  auto id = parallel_connection_check(lmat(2, 2, {lz({1}), {}, {}, lz({1})}), 3, 3);
  CHECK(id.surjection_ok);
  CHECK(torsion_from_snf(id.big).order == 1);
  CHECK(torsion_from_snf(id.small).order == 1);

  try {
    parallel_connection_check(lmat(1, 1, {lz({2})}), 2, 2);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MultiplicityTooSmall);
  }
}

TEST_CASE("torsion surjection criterion") {
  auto v = [](std::initializer_list<long> x) {
    std::vector<BigInt> o;
    for (long y : x)
      o.emplace_back(y);
    return o;
  };
  CHECK(torsion_surjects(v({4}), v({2})));
  CHECK_FALSE(torsion_surjects(v({2}), v({4})));
  CHECK_FALSE(torsion_surjects(v({4}), v({2, 2})));
  CHECK(torsion_surjects(v({12}), v({2, 3})));
  CHECK_FALSE(torsion_surjects(v({6}), v({2, 2})));
  CHECK(torsion_surjects(v({1, 2, 4}), v({2, 2})));
}

TEST_CASE("predicted invariants") {
  auto a = predicted_invariants({0, 2, {2}}, 2);
  CHECK(a.alpha1 == 1);
  CHECK(a.mahler1_exp == 2);
  auto b = predicted_invariants({0, 2, {2}}, 0);
  CHECK(b.alpha1 == 0);
  CHECK(b.mahler1_exp == 2);
  for (std::int64_t p : {0, 2, 3})
    CHECK(predicted_invariants({1, 1, {}}, p).alpha1 == 1);
  CHECK(predicted_invariants({1, 1, {}}, 0).mahler1_exp == 1);
}
