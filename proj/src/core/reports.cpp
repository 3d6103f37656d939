#include "infcov/reports.hpp"

#include <cmath>
#include <numeric>

namespace infcov::reports {

namespace {

using io::big_to_json;
using io::to_json;

std::string key(std::int64_t p) { return std::to_string(p); }

void check(Json& checks, const std::string& name, bool ok, bool strict, const std::string& detail = {}) {
  checks.push_back(Json{{"name", name}, {"ok", ok}, {"strict", strict}, {"detail", detail}});
}

Json envelope(const std::string& command, Json inputs, Json results, Json checks, const Options& opts) {
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"cross_checks", std::move(checks)},
              {"provenance", provenance(opts)}};
}

Json alexander_json(const CanonicalAlexanderRep& d) {
  return Json{{"poly", to_json(d.poly())}, {"text", d.poly().to_string()}};
}

FieldPtr generic_field(std::int64_t p) {
  return p == 0 ? rationals() : make_field_with_min_size(p, 1, 1024);
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

double log_of(const BigInt& v) { return std::log(v.get_d()); }

// Scans for every characteristic, merged into one row per N.
struct ScanBundle {
  std::map<std::int64_t, LimitReport> per_char;
  Json rows = Json::array();
};

ScanBundle scan_all(const EquivariantComplex& cx, std::size_t i, const Options& opts) {
  ScanBundle b;
  for (auto p : opts.characteristics)
    b.per_char.emplace(p, limit_scan(cx, i, opts.n_max, p, opts.workers, opts.tolerance));
  const auto& first = b.per_char.begin()->second;
  for (std::int64_t n = opts.n_min; n <= opts.n_max; ++n) {
    const auto k = static_cast<std::size_t>(n - 1);
    Json betti = Json::object();
    for (const auto& [p, rep] : b.per_char)
      betti[key(p)] = rep.points[k].betti;
    const auto& pt = first.points[k];
    b.rows.push_back(Json{{"N", n},
                          {"betti", betti},
                          {"torsion_order", big_to_json(pt.torsion_order)},
                          {"log_torsion_over_N", pt.mahler_ratio}});
  }
  return b;
}

void uct_scan_check(Json& checks, const ScanBundle& b, std::size_t i) {
  auto q = b.per_char.find(0);
  if (q == b.per_char.end())
    return;
  std::string bad;
  for (const auto& [p, rep] : b.per_char)
    for (std::size_t k = 0; k < rep.points.size(); ++k)
      if (q->second.points[k].betti > rep.points[k].betti && bad.empty())
        bad = "N=" + std::to_string(k + 1) + " p=" + std::to_string(p);
  check(checks, "uct_monotone[" + std::to_string(i) + "]", bad.empty(), true, bad);
}

void mahler_self_check(Json& checks, const std::string& name, const MahlerMeasure& m, double tol) {
  if (!m.exact_exp)
    return;
  const double exact = log_of(*m.exact_exp);
  check(checks, name, close(exact, m.numeric, tol + m.error_bound + 1e-12), true,
        "log " + m.exact_exp->get_str() + " vs numeric");
}

Json per_char(const std::map<std::int64_t, std::int64_t>& m) {
  Json out = Json::object();
  for (const auto& [p, v] : m)
    out[key(p)] = v;
  return out;
}

} // namespace

void validate_options(const Options& opts) {
  if (opts.characteristics.empty())
    fail(ErrorKind::InvalidInput, "chars: at least one characteristic is required");
  for (auto p : opts.characteristics)
    if (p != 0 && !is_prime(p))
      fail(ErrorKind::InvalidInput, "chars: " + std::to_string(p) + " is not prime");
  if (opts.n_min < 1 || opts.n_max < opts.n_min)
    fail(ErrorKind::InvalidInput, "N range: need 1 <= N_min <= N_max");
  if (opts.n_max > 2000)
    fail(ErrorKind::InvalidInput, "N range: N_max is capped at 2000");
  if (!(opts.tolerance > 0))
    fail(ErrorKind::InvalidInput, "tolerance must be positive");
  if (opts.trials < 1)
    fail(ErrorKind::InvalidInput, "trials must be at least 1");
}

Json provenance(const Options& opts) {
  return Json{{"seed", opts.seed},
              {"n_range", Json::array({opts.n_min, opts.n_max})},
              {"tolerance", opts.tolerance},
              {"characteristics", opts.characteristics},
              {"version", std::string(library_version())}};
}

bool has_strict_failure(const Json& report) {
  if (!report.contains("cross_checks"))
    return false;
  for (const auto& c : report["cross_checks"])
    if (c.value("strict", false) && !c.value("ok", true))
      return true;
  return false;
}

Json invariants_report(const EquivariantComplex& cx, const Options& opts) {
  validate_options(opts);
  cx.validate();
  if (opts.n_max < 4)
    fail(ErrorKind::InvalidInput, "N range: invariants need N_max >= 4");
  std::vector<std::size_t> degrees;
  if (opts.degree) {
    if (*opts.degree > cx.top_degree())
      fail(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(*opts.degree) + " is not in the complex");
    degrees.push_back(*opts.degree);
  } else {
    for (std::size_t i = 0; i <= cx.top_degree(); ++i)
      degrees.push_back(i);
  }

  Json checks = Json::array();
  Json out = Json::array();
  for (auto i : degrees) {
    const std::string tag = "[" + std::to_string(i) + "]";
    const auto delta = alexander_poly(cx, i);
    const auto mm = mahler_measure(delta.poly(), opts.tolerance);
    std::map<std::int64_t, std::int64_t> alphas, generic, consts;
    Json stabilized = Json::object(), samples = Json::object();
    const ScanBundle scans = scan_all(cx, i, opts);
    for (auto p : opts.characteristics) {
      alphas[p] = alpha(cx, i, p);
      const auto g = generic_local_system_dim(cx, i, generic_field(p), opts.trials, opts.seed + i);
      generic[p] = g.value;
      samples[key(p)] = g.samples;
      const auto& rep = scans.per_char.at(p);
      consts[p] = rep.stabilization_c;
      stabilized[key(p)] = rep.alpha_stabilized ? Json(*rep.alpha_stabilized) : Json(nullptr);
      check(checks, "alpha_equals_generic" + tag + "[" + key(p) + "]", alphas[p] == g.value, true);
      if (rep.alpha_stabilized)
        check(checks, "alpha_equals_scan" + tag + "[" + key(p) + "]", *rep.alpha_stabilized == alphas[p], true);
      else
        check(checks, "alpha_equals_scan" + tag + "[" + key(p) + "]", false, false,
              "betti(N)/N did not stabilize by N_max");
    }
    uct_scan_check(checks, scans, i);
    mahler_self_check(checks, "mahler_exact_vs_numeric" + tag, mm, opts.tolerance);
    const double last = scans.rows.empty() ? 0.0 : scans.rows.back()["log_torsion_over_N"].get<double>();
    check(checks, "torsion_growth_vs_mahler" + tag, close(last, mm.numeric, std::max(0.1 * mm.numeric, 0.1)), false,
          "log|tor|/N at N_max vs M(Delta)");
    out.push_back(Json{{"degree", i},
                       {"alexander", alexander_json(delta)},
                       {"mahler", to_json(mm)},
                       {"alpha", per_char(alphas)},
                       {"generic_dim", per_char(generic)},
                       {"generic_samples", samples},
                       {"scan_stabilized_alpha", stabilized},
                       {"stabilization_constant", per_char(consts)},
                       {"scan", scans.rows}});
  }
  Json inputs{{"complex", to_json(cx)}};
  if (opts.degree)
    inputs["degree"] = *opts.degree;
  return envelope("invariants", std::move(inputs), Json{{"degrees", out}}, std::move(checks), opts);
}

Json cover_report(const EquivariantComplex& cx, const Options& opts) {
  validate_options(opts);
  cx.validate();
  Json rows = Json::array();
  Json checks = Json::array();
  std::vector<std::string> violations;
  for (std::int64_t n = opts.n_min; n <= opts.n_max; ++n) {
    const auto rep = cover_homology(cx, n, opts.characteristics, true);
    for (auto& v : uct_violations(rep))
      violations.push_back(std::move(v));
    Json degs = Json::array();
    for (const auto& dh : rep.degrees) {
      if (opts.degree && dh.degree != *opts.degree)
        continue;
      Json divs = Json::array();
      for (const auto& d : dh.elementary_divisors->divisors)
        if (d > 1)
          divs.push_back(big_to_json(d));
      degs.push_back(Json{{"degree", dh.degree},
                          {"betti", per_char(dh.betti)},
                          {"torsion_divisors", divs},
                          {"torsion", to_json(dh.torsion)}});
    }
    rows.push_back(Json{{"N", n}, {"degrees", degs}});
  }
  check(checks, "uct", violations.empty(), true, violations.empty() ? "" : violations.front());
  Json inputs{{"complex", to_json(cx)}};
  return envelope("cover", std::move(inputs), Json{{"covers", rows}}, std::move(checks), opts);
}

Json orbifold_report(const OrbifoldData& d, const Options& opts) {
  validate_options(opts);
  d.validate();
  if (opts.n_max < 4)
    fail(ErrorKind::InvalidInput, "N range: orbifold scans need N_max >= 4");
  const auto pres = orbifold_presentation(d);
  const auto nu = orbifold_epimorphism(d);
  const auto cx = equivariant_complex_from_presentation(pres, nu);
  const auto delta = alexander_poly(cx, 1);
  const auto mm = mahler_measure(delta.poly(), opts.tolerance);
  BigInt prod = 1;
  double log_prod = 0;
  for (auto m : d.mu) {
    prod *= static_cast<long>(m);
    log_prod += std::log(static_cast<double>(m));
  }

  Json checks = Json::array();
  std::map<std::int64_t, std::int64_t> predicted, computed;
  for (auto p : opts.characteristics) {
    predicted[p] = predicted_invariants(d, p).alpha1;
    computed[p] = alpha(cx, 1, p);
    check(checks, "alpha1_formula[" + key(p) + "]", predicted[p] == computed[p], true);
  }
  check(checks, "exp_M1_equals_prod_mu", mm.exact_exp && *mm.exact_exp == prod, true,
        "exp(M(Delta_1)) vs prod mu = " + prod.get_str());
  mahler_self_check(checks, "mahler_exact_vs_numeric", mm, opts.tolerance);

  const ScanBundle scans = scan_all(cx, 1, opts);
  Json stabilized = Json::object();
  for (const auto& [p, rep] : scans.per_char) {
    stabilized[key(p)] = rep.alpha_stabilized ? Json(*rep.alpha_stabilized) : Json(nullptr);
    if (rep.alpha_stabilized)
      check(checks, "alpha_equals_scan[" + key(p) + "]", *rep.alpha_stabilized == computed[p], true);
  }
  uct_scan_check(checks, scans, 1);
  const double last = scans.rows.back()["log_torsion_over_N"].get<double>();
  check(checks, "torsion_growth_vs_log_prod_mu", close(last, log_prod, std::max(log_prod / 10, 1e-12)), false,
        "log|tor|/N at N_max within log(prod mu)/10");

  Json results{{"presentation", to_json(pres)},
               {"epimorphism", nu.images},
               {"complex", to_json(cx)},
               {"alexander_1", alexander_json(delta)},
               {"mahler_1", to_json(mm)},
               {"exp_M1_predicted", big_to_json(prod)},
               {"log_prod_mu", log_prod},
               {"alpha1_predicted", per_char(predicted)},
               {"alpha1_computed", per_char(computed)},
               {"scan_stabilized_alpha", stabilized},
               {"scan", scans.rows}};
  return envelope("orbifold", Json{{"orbifold", to_json(d)}}, std::move(results), std::move(checks), opts);
}

Json arrangement_report(const LineArrangement& arr, const std::vector<std::int64_t>& nu, const Options& opts) {
  validate_options(opts);
  const auto inter = intersection_points(arr);
  const auto cx = aomoto_complex(arr, inter, nu);
  const auto bt = beta_tau(cx, opts.characteristics);
  Json checks = Json::array();

  std::size_t expected_h2 = 0;
  for (const auto& pt : inter.points) {
    const bool at_infinity =
        arr.infinity && std::find(pt.lines.begin(), pt.lines.end(), *arr.infinity) != pt.lines.end();
    if (!at_infinity)
      expected_h2 += pt.multiplicity() - 1;
  }
  check(checks, "h2_rank_brieskorn", cx.d1.cols() == expected_h2, true,
        std::to_string(cx.d1.cols()) + " vs " + std::to_string(expected_h2));
  check(checks, "composition_zero", cx.d1.cols() == 0 || is_zero(multiply(cx.d0, cx.d1)), true);
  if (bt.beta1.count(0))
    for (const auto& [p, b] : bt.beta1)
      check(checks, "beta1_uct[" + key(p) + "]", b >= bt.beta1.at(0), true);

  Json torsion = Json::array();
  for (const auto& t : bt.torsion)
    torsion.push_back(big_to_json(t));
  Json results{{"points", to_json(inter, *arr.field)},
               {"h1_lines", cx.h1_lines},
               {"h2_points", cx.h2_points},
               {"h2_rank", cx.d1.cols()},
               {"d0", to_json(cx.d0)},
               {"d1", to_json(cx.d1)},
               {"beta0", per_char(bt.beta0)},
               {"beta1", per_char(bt.beta1)},
               {"tau1", big_to_json(bt.tau1)},
               {"torsion_invariant_factors", torsion}};

  if (arr.ambient == Ambient::P1) {
    const auto pc = pencil_complex(arr.size(), nu);
    const auto delta = alexander_poly(pc, 1);
    const auto mm = mahler_measure(delta.poly(), opts.tolerance);
    const BigInt at_one = strip_unit_roots_at_one(delta.poly()).eval_at_one();
    std::map<std::int64_t, std::int64_t> alphas;
    for (auto p : opts.characteristics) {
      alphas[p] = alpha(pc, 1, p);
      check(checks, "alpha_le_beta[" + key(p) + "]", alphas[p] <= bt.beta1.at(p), true);
    }
    if (mm.exact_exp)
      check(checks, "exp_M1_divides_tau1", bt.tau1 % *mm.exact_exp == 0, true);
    check(checks, "strip_delta_at_one_divides_tau1", at_one != 0 && bt.tau1 % abs(at_one) == 0, true,
          at_one.get_str() + " | " + bt.tau1.get_str());
    results["pencil"] = Json{{"complex", to_json(pc)},
                             {"alexander_1", alexander_json(delta)},
                             {"mahler_1", to_json(mm)},
                             {"stripped_delta_at_one", big_to_json(abs(at_one))},
                             {"alpha1", per_char(alphas)}};
  }
  Json inputs{{"arrangement", to_json(arr)}, {"nu", nu}};
  return envelope("arrangement", std::move(inputs), std::move(results), std::move(checks), opts);
}

Json multinet_report(const Multinet& mn, const Options& opts) {
  validate_options(opts);
  const auto chk = verify_multinet(mn);
  Json checks = Json::array();
  Json violated = Json::array();
  for (char c : chk.violated)
    violated.push_back(std::string(1, c));
  Json results{{"valid", chk.valid}, {"violated", violated}, {"k", mn.k()}, {"kappa", chk.kappa}};
  if (chk.valid && mn.k() == 3) {
    const auto cert = check_assumption_and_certificate(mn);
    results["assumption_ok"] = cert.assumption_ok;
    results["assumption_failed_condition"] =
        cert.failed_condition ? Json(std::string(1, *cert.failed_condition)) : Json(nullptr);
    results["deletion_order"] = cert.deletion_order;
    results["certificate_nu"] = cert.nu;
    results["tau1"] = big_to_json(cert.tau1);
    results["no_parallel_component"] = cert.no_parallel_component;
    check(checks, "certificate_consistent", cert.no_parallel_component == (cert.assumption_ok && cert.tau1 == 1),
          true);
  }
  Json inputs{{"arrangement", to_json(mn.arrangement)},
              {"classes", mn.classes},
              {"weights", mn.weights},
              {"base_locus", mn.base_locus}};
  return envelope("multinet", std::move(inputs), std::move(results), std::move(checks), opts);
}

Json mahler_report(const LaurentPolyZ& p, const Options& opts) {
  validate_options(opts);
  const auto rep = canonical_rep(p);
  const auto mm = mahler_measure(p, opts.tolerance);
  const auto split = split_cyclotomic(p);
  const auto stripped = strip_unit_roots_at_one(p);
  Json factors = Json::array();
  for (const auto& [k, e] : split.factors)
    factors.push_back(Json{{"k", k}, {"exponent", e}});
  Json checks = Json::array();
  mahler_self_check(checks, "mahler_exact_vs_numeric", mm, opts.tolerance);
  check(checks, "cyclotomic_type_iff_exact", is_cyclotomic_type(p) == mm.exact_exp.has_value(), true);
  Json results{{"canonical", alexander_json(rep)},
               {"cyclotomic_type", is_cyclotomic_type(p)},
               {"content", big_to_json(split.content)},
               {"cyclotomic_factors", factors},
               {"non_cyclotomic_rest", to_json(split.rest)},
               {"mahler", to_json(mm)},
               {"multiplicity_at_one", multiplicity_at_one(p)},
               {"stripped_at_one", to_json(stripped)},
               {"stripped_value_at_one", big_to_json(stripped.eval_at_one())}};
  return envelope("mahler", Json{{"poly", to_json(p)}, {"text", p.to_string()}}, std::move(results),
                  std::move(checks), opts);
}

Json construct_deleted_monomial(std::int64_t mu, const Options& opts) {
  validate_options(opts);
  const auto dm = deleted_monomial_arrangement(mu);
  const auto inter = intersection_points(dm.arrangement);
  Json predicted = Json::object();
  for (auto p : opts.characteristics) {
    const auto pi = predicted_invariants(dm.orbifold_type, p);
    predicted[key(p)] = Json{{"alpha1", pi.alpha1}, {"exp_M1", big_to_json(pi.mahler1_exp)}};
  }
  Json checks = Json::array();
  check(checks, "line_count", dm.arrangement.size() == static_cast<std::size_t>(3 * mu + 2), true);
  Json results{{"arrangement", to_json(dm.arrangement)},
               {"line_count", dm.arrangement.size()},
               {"intersection_points", inter.points.size()},
               {"orbifold_type", to_json(dm.orbifold_type)},
               {"predicted", predicted}};
  return envelope("construct", Json{{"kind", "deleted-monomial"}, {"mu", mu}}, std::move(results), std::move(checks),
                  opts);
}

Json construct_lift(const std::vector<std::int64_t>& chi, std::int64_t n, std::int64_t p, const Options& opts) {
  validate_options(opts);
  const auto mv = lift_multiplicity(chi, n, p);
  Json checks = Json::array();
  bool congruent = true, positive = true;
  for (std::size_t l = 0; l < chi.size(); ++l) {
    congruent = congruent && ((mv.m[l] - chi[l]) % n == 0);
    positive = positive && mv.m[l] > 0;
  }
  check(checks, "congruent_mod_N", congruent, true);
  check(checks, "positive", positive, true);
  check(checks, "p_does_not_divide_m_over_N", mv.total % n == 0 && (mv.total / n) % p != 0, true);
  Json results{{"m", mv.m}, {"total", mv.total}, {"m_over_N", mv.total / n}};
  return envelope("construct", Json{{"kind", "lift"}, {"chi", chi}, {"N", n}, {"p", p}}, std::move(results),
                  std::move(checks), opts);
}

Json construct_pencil(std::size_t d, const std::vector<std::int64_t>& n, const Options& opts) {
  validate_options(opts);
  const auto cx = pencil_complex(d, n);
  const auto delta = alexander_poly(cx, 1);
  std::map<std::int64_t, std::int64_t> alphas;
  for (auto p : opts.characteristics)
    alphas[p] = alpha(cx, 1, p);
  Json checks = Json::array();
  Json results{{"complex", to_json(cx)},
               {"alexander_1", alexander_json(delta)},
               {"mahler_1", to_json(mahler_measure(delta.poly(), opts.tolerance))},
               {"alpha1", per_char(alphas)}};
  return envelope("construct", Json{{"kind", "pencil"}, {"d", d}, {"n", n}}, std::move(results), std::move(checks),
                  opts);
}

} // namespace infcov::reports
