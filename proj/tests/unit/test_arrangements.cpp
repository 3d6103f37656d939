#include "doctest.h"
#include "support.hpp"

using namespace infcov;
using testsupport::lz;

namespace {

const std::vector<std::vector<std::int64_t>> kCeva2{{1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {1, 0, 1}, {0, 1, -1}, {0, 1, 1}};
const std::vector<std::vector<std::int64_t>> kDeletedB3{{0, 0, 1}, {1, 0, 0},  {0, 1, 0},  {1, -1, 0},
                                                        {1, 0, -1}, {0, 1, -1}, {1, -1, -1}, {1, -1, 1}};
const std::vector<std::vector<std::int64_t>> kB3{{1, 0, 0},  {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 1, 0},
                                                 {1, 0, -1}, {1, 0, 1}, {0, 1, -1}, {0, 1, 1}};

std::set<std::vector<std::size_t>> incidence(const IntersectionData& d) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& p : d.points)
    out.insert(p.lines);
  return out;
}

LineArrangement p1_points(std::size_t d) {
  std::vector<std::vector<std::int64_t>> pts;
  for (std::size_t j = 0; j < d; ++j)
    pts.push_back({1, static_cast<std::int64_t>(j)});
  return LineArrangement::from_integers(Ambient::P1, pts);
}

std::vector<std::size_t> points_between_classes(const LineArrangement& arr,
                                                const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<std::size_t> cls(arr.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto h : classes[c])
      cls[h] = c;
  const auto inter = intersection_points(arr);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < inter.points.size(); ++x) {
    std::set<std::size_t> seen;
    for (auto h : inter.points[x].lines)
      seen.insert(cls[h]);
    if (seen.size() > 1)
      out.push_back(x);
  }
  return out;
}

Multinet ceva2_multinet() {
  Multinet mn{LineArrangement::from_integers(Ambient::P2, kCeva2), {{0, 1}, {2, 3}, {4, 5}}, {1, 1, 1, 1, 1, 1}, {}};
  mn.base_locus = points_between_classes(mn.arrangement, mn.classes);
  return mn;
}

} // namespace

TEST_CASE("intersection points") {
  auto pencil = LineArrangement::from_integers(Ambient::P2, {{1, 0, 0}, {1, -1, 0}, {1, -2, 0}, {1, -3, 0}});
  auto pi = intersection_points(pencil);
  REQUIRE(pi.points.size() == 1);
  CHECK(pi.points[0].multiplicity() == 4);

  auto ceva = intersection_points(LineArrangement::from_integers(Ambient::P2, kCeva2));
  CHECK(incidence(ceva) == testsupport::brute_force_incidence(kCeva2));
  std::size_t triple = 0, dbl = 0;
  for (const auto& p : ceva.points)
    (p.multiplicity() == 3 ? triple : dbl) += 1;
  CHECK(triple == 4);
  CHECK(dbl == 3);

  auto b3 = intersection_points(LineArrangement::from_integers(Ambient::P2, kDeletedB3, 0));
  CHECK(incidence(b3) == testsupport::brute_force_incidence(kDeletedB3));
  CHECK(b3.points.size() == 11);
  for (std::size_t i = 0; i < kDeletedB3.size(); ++i)
    for (std::size_t j = i + 1; j < kDeletedB3.size(); ++j) {
      const auto& l = b3.points[b3.meet(i, j)].lines;
      CHECK(std::count(l.begin(), l.end(), i) == 1);
      CHECK(std::count(l.begin(), l.end(), j) == 1);
    }

  try {
    intersection_points(LineArrangement::from_integers(Ambient::P2, {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInput);
  }
  CHECK_THROWS_AS(LineArrangement::from_integers(Ambient::P2, {{2, 4, 0}, {0, 1, 0}}), Error);
}

TEST_CASE("Aomoto complex of a pencil") {
  auto cx = aomoto_complex(p1_points(3), {1, 2, 3});
  REQUIRE(cx.d1.rows() == 3);
  REQUIRE(cx.d1.cols() == 2);
  // Rows: (n2, n3), (-(S - n2), n3), (n2, -(S - n3)) with S = 6.
  CHECK(cx.d1 == int_matrix({{2, 3}, {-4, 3}, {2, -3}}));
  CHECK(is_zero(multiply(cx.d0, cx.d1)));

  auto n = beta_tau(cx, {0, 2, 3, 5});
  CHECK(n.tau1 == 6);
  CHECK(n.beta1 == std::map<std::int64_t, std::int64_t>{{0, 0}, {2, 1}, {3, 1}, {5, 0}});

  auto z = beta_tau(aomoto_complex(p1_points(3), {1, 1, -2}), {0, 2, 3, 5});
  CHECK(z.tau1 == 1);
  for (auto [p, b] : z.beta1)
    CHECK(b == 1);

  try {
    aomoto_complex(p1_points(3), {2, 4, 6});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEpimorphism);
  }
  CHECK_THROWS_AS(aomoto_complex(p1_points(3), {1, 2}), Error);
}

TEST_CASE("Aomoto complex of the deleted B3 arrangement") {
  auto arr = LineArrangement::from_integers(Ambient::P2, kDeletedB3, 0);
  auto cx = aomoto_complex(arr, {1, -1, 0, -1, 1, 2, -2});
  CHECK(cx.h1_lines.size() == 7);
  CHECK(is_zero(multiply(cx.d0, cx.d1)));
  auto n = beta_tau(cx, {0, 2, 3, 5});
  CHECK(n.tau1 == 4);
  CHECK(n.torsion == std::vector<BigInt>{4});
  CHECK(n.beta1 == std::map<std::int64_t, std::int64_t>{{0, 0}, {2, 1}, {3, 0}, {5, 0}});
  // Same arrangement from the built-in constructor.
  CHECK(beta_tau(aomoto_complex(deleted_b3_arrangement(), {1, -1, 0, -1, 1, 2, -2}), {0}).tau1 == 4);
}

TEST_CASE("two lines in the affine plane") {
  // x = 0 and y = 0 meet at the origin; z = 0 is at infinity.
  auto arr = LineArrangement::from_integers(Ambient::P2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 0);
  auto cx = aomoto_complex(arr, {1, 0});
  CHECK(cx.h2_points.size() == 1);
  auto n = beta_tau(cx, {0, 2});
  CHECK(n.tau1 == 1);
  CHECK(n.beta1.at(0) == 0);
}

TEST_CASE("pencil chain complexes") {
  auto a = pencil_complex(3, {1, 1, 1});
  CHECK_NOTHROW(a.validate());
  CHECK(alexander_poly(a, 1) == canonical_rep(lz({-1, 1}) * lz({-1, 0, 0, 1})));
  CHECK(alexander_poly(pencil_complex(3, {1, 1, -2}), 1).poly() == lz({-1, 1}));
  auto b = pencil_complex(2, {1, -1});
  CHECK(alexander_poly(b, 1).poly() == lz({-1, 1}));
  CHECK(alpha(b, 1, 0) == 0);
  for (std::size_t d = 3; d <= 5; ++d) {
    std::vector<std::int64_t> n(d, 1);
    n.back() = 2;
    const std::int64_t s = testsupport::integer_sum(n);
    CHECK(alexander_poly(pencil_complex(d, n), 1) ==
          canonical_rep(lz({-1, 1}) * pow(LaurentPolyZ::t_pow_minus_one(s), static_cast<unsigned>(d - 2))));
  }
  CHECK_THROWS_AS(pencil_complex(3, {2, 2, 4}), Error);
}

TEST_CASE("multinets") {
  auto mn = ceva2_multinet();
  CHECK(mn.base_locus.size() == 4);
  auto chk = verify_multinet(mn);
  CHECK(chk.valid);
  CHECK(chk.kappa == 2);
  CHECK(chk.violated.empty());

  auto built = ceva_multinet(2);
  CHECK(verify_multinet(built).valid);
  CHECK(built.base_locus.size() == 4);

  Multinet pencil{LineArrangement::from_integers(Ambient::P2, {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}}), {{0}, {1}, {2}}, {1, 1, 1}, {0}};
  auto pc = verify_multinet(pencil);
  CHECK(pc.valid);
  CHECK(pc.kappa == 1);

  auto moved = mn;
  moved.classes = {{0, 1, 2}, {3}, {4, 5}};
  auto mc = verify_multinet(moved);
  CHECK_FALSE(mc.valid);
  CHECK(std::count(mc.violated.begin(), mc.violated.end(), 'a') == 1);

  auto too_few = mn;
  too_few.classes = {{0, 1, 2}, {3, 4, 5}};
  CHECK_THROWS_AS(verify_multinet(too_few), Error);
}

TEST_CASE("assumption and certificate") {
  auto res = check_assumption_and_certificate(ceva2_multinet());
  CHECK(res.assumption_ok);
  CHECK(res.nu == std::vector<std::int64_t>{1, 1, 1, 1, -2, -2});
  CHECK(res.tau1 == 1);
  CHECK(res.no_parallel_component);

  auto c3 = check_assumption_and_certificate(ceva_multinet(3));
  CHECK_FALSE(c3.assumption_ok);
  CHECK_FALSE(c3.no_parallel_component);

  // B3 with doubled coordinate lines: classes {x^2, y^2 - z^2}, {y^2, x^2 - z^2}, {z^2, x^2 - y^2}.
  Multinet b3{LineArrangement::from_integers(Ambient::P2, kB3), {{0, 7, 8}, {1, 5, 6}, {2, 3, 4}},
              {2, 2, 2, 1, 1, 1, 1, 1, 1}, {}};
  b3.base_locus = points_between_classes(b3.arrangement, b3.classes);
  auto vb = verify_multinet(b3);
  CHECK(vb.valid);
  CHECK(vb.kappa == 4);
  auto rb = check_assumption_and_certificate(b3);
  CHECK_FALSE(rb.assumption_ok);
  CHECK(rb.failed_condition == std::optional<char>('a'));

  Multinet four{LineArrangement::from_integers(Ambient::P2, {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, 1, 0}}),
                {{0}, {1}, {2}, {3}}, {1, 1, 1, 1}, {0}};
  try {
    check_assumption_and_certificate(four);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAThreeNet);
  }
}

TEST_CASE("deleted monomial arrangements") {
  auto d2 = deleted_monomial_arrangement(2);
  CHECK(d2.arrangement.size() == 8);
  CHECK(d2.orbifold_type.mu == std::vector<std::int64_t>{2});
  CHECK(d2.orbifold_type.g == 0);
  CHECK(d2.orbifold_type.r == 2);
  auto d3 = deleted_monomial_arrangement(3);
  CHECK(d3.arrangement.size() == 11);
  for (std::int64_t mu = 2; mu <= 5; ++mu)
    CHECK(predicted_invariants(deleted_monomial_arrangement(mu).orbifold_type, 0).mahler1_exp == mu);
  CHECK(intersection_points(d3.arrangement).points.size() == 18);
  CHECK_THROWS_AS(deleted_monomial_arrangement(1), Error);
}

TEST_CASE("multiplicity lifts") {
  // mu = 2, N = 6, k = 1: (mu, kN - mu, 1^mu, (N-1)^mu, N^mu) has sum (2 mu + k) N.
  auto m = lift_multiplicity({2, 4, 1, 1, 5, 5, 0, 0}, 6, 2);
  CHECK(m.m == std::vector<std::int64_t>{2, 4, 1, 1, 5, 5, 6, 6});
  CHECK(m.total == 30);
  CHECK((m.total / 6) % 2 == 1);

  auto z = lift_multiplicity({0, 0, 0}, 4, 3);
  for (auto v : z.m)
    CHECK(v % 4 == 0);
  CHECK((z.total / 4) % 3 != 0);

  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> r(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::int64_t> chi(6);
    for (auto& c : chi)
      c = r(rng);
    chi.back() = (4 - (testsupport::integer_sum(chi) - chi.back()) % 4) % 4;
    auto l = lift_multiplicity(chi, 4, 3);
    CHECK(l.total == testsupport::integer_sum(l.m));
    CHECK(l.total % 4 == 0);
    CHECK((l.total / 4) % 3 != 0);
    for (std::size_t k = 0; k < chi.size(); ++k) {
      CHECK(l.m[k] > 0);
      CHECK((l.m[k] - chi[k]) % 4 == 0);
    }
  }
  CHECK_THROWS_AS(lift_multiplicity({1, 1}, 4, 3), Error);
  CHECK_THROWS_AS(lift_multiplicity({1, 3}, 4, 6), Error);
}
