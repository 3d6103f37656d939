#include "doctest.h"
#include "support.hpp"

#include "infcov/io.hpp"
#include "infcov/reports.hpp"

using namespace infcov;
using testsupport::lz;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no infcov::Error thrown");
  return ErrorKind::InvariantBreach;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const io::Json* find_check(const io::Json& report, const std::string& name) {
  for (const auto& c : report["cross_checks"])
    if (c["name"] == name)
      return &c;
  return nullptr;
}

} // namespace

TEST_CASE("JSON parsing reports positions") {
  const auto msg = message_of([] { io::parse_json("{\n  \"a\": [1,\n", "input.json"); });
  CHECK(msg.find("input.json:3:") != std::string::npos);
  CHECK(kind_of([] { io::parse_json("{,}", "x"); }) == ErrorKind::Parse);
}

TEST_CASE("round trips") {
  const auto p = lz({3, 0, -7}, -2);
  CHECK(io::laurent_from_json(io::to_json(p), "p") == p);

  const BigInt huge("123456789012345678901234567890");
  CHECK(io::big_to_json(huge).is_string());
  CHECK(io::big_from_json(io::big_to_json(huge), "v") == huge);
  CHECK(io::big_to_json(BigInt(-5)).is_number_integer());

  auto cx = pencil_complex(3, {1, 2, 3});
  auto back = io::complex_from_json(io::to_json(cx));
  CHECK(back.ranks == cx.ranks);
  REQUIRE(back.boundaries.size() == cx.boundaries.size());
  for (std::size_t i = 0; i < cx.boundaries.size(); ++i)
    CHECK(back.boundaries[i] == cx.boundaries[i]);

  auto bad = io::to_json(cx);
  bad["boundaries"][1]["entries"][0][0] = io::to_json(lz({1}));
  CHECK_THROWS_AS(io::complex_from_json(bad), Error);

  auto spec = make_splitting_field(2, 7)->spec();
  CHECK(io::field_spec_from_json(io::to_json(spec), "f") == spec);

  auto pres = io::presentation_from_json(io::to_json(orbifold_presentation({1, 0, {2, 3}})));
  CHECK(pres.relators == orbifold_presentation({1, 0, {2, 3}}).relators);
}

TEST_CASE("arrangement and multinet input") {
  auto j = io::parse_json(R"({"ambient":"P2","lines":[[0,0,1],[1,0,0],[0,1,0]],"infinity":0})", "a");
  auto arr = io::arrangement_from_json(j);
  CHECK(arr.size() == 3);
  CHECK(arr.infinity == std::optional<std::size_t>(0));
  CHECK(io::to_json(arr) == j);
  CHECK(kind_of([] { io::arrangement_from_json(io::parse_json(R"({"ambient":"P3","lines":[]})", "a")); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::arrangement_from_json(io::parse_json(R"({"ambient":"P2","lines":[[2,2,0],[0,1,0]]})", "a")); }) ==
        ErrorKind::InvalidInput);

  auto ceva = io::arrangement_from_json(
      io::parse_json(R"({"ambient":"P2","lines":[[1,-1,0],[1,1,0],[1,0,-1],[1,0,1],[0,1,-1],[0,1,1]]})", "c"));
  auto mn = io::multinet_from_json(io::parse_json(R"({"classes":[[0,1],[2,3],[4,5]],"base_locus":[0,1,2,3]})", "m"), ceva);
  CHECK(mn.weights == std::vector<std::int64_t>(6, 1));
  auto implied = io::multinet_from_json(io::parse_json(R"({"classes":[[0,1],[2,3],[4,5]]})", "m"), ceva);
  CHECK(implied.base_locus == ceva_multinet(2).base_locus);
  CHECK(implied.base_locus.size() == 4);
}

TEST_CASE("option validation") {
  reports::Options o;
  o.characteristics = {0, 4};
  CHECK(message_of([&] { reports::validate_options(o); }).find("4 is not prime") != std::string::npos);
  o.characteristics = {0, 2};
  o.n_max = 5000;
  CHECK_THROWS_AS(reports::validate_options(o), Error);
  o.n_max = 10;
  o.n_min = 11;
  CHECK_THROWS_AS(reports::validate_options(o), Error);
  o.n_min = 1;
  CHECK_NOTHROW(reports::validate_options(o));
}

TEST_CASE("orbifold report") {
  reports::Options o;
  o.characteristics = {0, 2};
  o.n_max = 40;
  auto r = reports::orbifold_report(OrbifoldData{0, 2, {2}}, o);
  CHECK(r["command"] == "orbifold");
  CHECK(r["results"]["alpha1_computed"]["0"] == 0);
  CHECK(r["results"]["alpha1_computed"]["2"] == 1);
  CHECK(r["results"]["exp_M1_predicted"] == 2);
  CHECK(r["results"]["scan"].size() == 40);
  CHECK(r.contains("provenance"));
  CHECK(r["provenance"]["version"] == std::string(library_version()));
  CHECK_FALSE(reports::has_strict_failure(r));

  // Determinism across worker counts.
  o.workers = 1;
  const auto a = reports::orbifold_report(OrbifoldData{0, 2, {2}}, o).dump();
  o.workers = 3;
  CHECK(reports::orbifold_report(OrbifoldData{0, 2, {2}}, o).dump() == a);
  CHECK(io::Json::parse(a).dump() == a);
}

TEST_CASE("arrangement report") {
  reports::Options o;
  o.characteristics = {0, 2};
  auto r = reports::arrangement_report(deleted_b3_arrangement(), {1, -1, 0, -1, 1, 2, -2}, o);
  CHECK(r["results"]["tau1"] == 4);
  CHECK(r["results"]["beta1"]["2"] == 1);
  CHECK(r["results"]["beta1"]["0"] == 0);
  CHECK_FALSE(reports::has_strict_failure(r));

  auto p1 = LineArrangement::from_integers(Ambient::P1, {{1, 0}, {1, 1}, {1, 2}});
  auto rp = reports::arrangement_report(p1, {1, 2, 3}, o);
  REQUIRE(rp["results"].contains("pencil"));
  CHECK(find_check(rp, "strip_delta_at_one_divides_tau1") != nullptr);
  CHECK_FALSE(reports::has_strict_failure(rp));
}

TEST_CASE("other reports") {
  reports::Options o;
  o.characteristics = {0, 3};
  o.n_max = 12;
  auto inv = reports::invariants_report(pencil_complex(3, {1, 1, -2}), o);
  CHECK_FALSE(reports::has_strict_failure(inv));
  CHECK(inv["results"]["degrees"][1]["alpha"]["0"] == 1);

  auto cov = reports::cover_report(pencil_complex(3, {1, 1, 1}), o);
  CHECK(cov["results"]["covers"].size() == 12);
  CHECK_FALSE(reports::has_strict_failure(cov));

  auto mah = reports::mahler_report(lz({2, 2}), o);
  CHECK(mah["results"]["cyclotomic_type"] == true);
  CHECK(mah["results"]["mahler"]["exact_exp"] == 2);

  auto mn = reports::multinet_report(ceva_multinet(2), o);
  CHECK(mn["results"]["valid"] == true);
  CHECK(mn["results"]["tau1"] == 1);

  auto lift = reports::construct_lift({2, 4, 1, 1, 5, 5, 0, 0}, 6, 2, o);
  CHECK(lift["results"]["total"] == 30);
  CHECK_FALSE(reports::has_strict_failure(lift));

  auto dm = reports::construct_deleted_monomial(2, o);
  CHECK(dm["results"]["line_count"] == 8);

  io::Json fake{{"cross_checks", io::Json::array({{{"name", "x"}, {"ok", false}, {"strict", true}, {"detail", ""}}})}};
  CHECK(reports::has_strict_failure(fake));
}
