// Command-line front end over the C API.

#include "infcov/infcov.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBreach = 3;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void invalid(const std::string& msg) { throw Failure{kExitValidation, msg}; }

void ok_or_throw(infcov_status st) {
  if (st == INFCOV_OK)
    return;
  const std::string msg = std::string(infcov_status_name(st)) + ": " + infcov_last_error();
  const bool breach = st == INFCOV_E_INVARIANT_BREACH || st == INFCOV_E_INTERNAL;
  throw Failure{breach ? kExitBreach : kExitValidation, msg};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    invalid(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Owned {
  char* s = nullptr;
  ~Owned() { infcov_string_free(s); }
};

struct Common {
  std::vector<std::int64_t> chars{0, 2, 3, 5};
  std::int64_t n_min = 1;
  std::int64_t n_max = 40;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  int trials = 5;
  std::string format = "json";
  std::string output;
};

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

void validate_common(const Common& c) {
  for (auto p : c.chars)
    if (p != 0 && !is_prime(p))
      invalid("--chars: " + std::to_string(p) + " is not prime");
  if (c.n_min < 1 || c.n_max < c.n_min)
    invalid("--n-min/--max-cover: need 1 <= N_min <= N_max");
  if (c.n_max > 2000)
    invalid("--max-cover: at most 2000");
  if (!(c.tolerance > 0))
    invalid("--tolerance must be positive");
  if (c.trials < 1)
    invalid("--trials must be at least 1");
}

void validate_epimorphism(const std::vector<std::int64_t>& nu, const char* flag) {
  std::int64_t g = 0;
  for (auto v : nu)
    g = std::gcd(g, v);
  if (g != 1)
    invalid(std::string(flag) + ": not an epimorphism (gcd of entries is " + std::to_string(g) + ")");
}

unsigned workers_from_env() {
  const char* w = std::getenv("INFCOV_WORKERS");
  if (!w || !*w)
    return 0;
  char* end = nullptr;
  const long v = std::strtol(w, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096)
    invalid("INFCOV_WORKERS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

infcov_options to_options(const Common& c, std::optional<std::size_t> degree) {
  infcov_options o;
  infcov_options_default(&o);
  o.chars = c.chars.data();
  o.num_chars = c.chars.size();
  o.n_min = c.n_min;
  o.n_max = c.n_max;
  o.seed = c.seed;
  o.tolerance = c.tolerance;
  o.trials = c.trials;
  o.workers = workers_from_env();
  if (degree) {
    o.has_degree = 1;
    o.degree = *degree;
  }
  return o;
}

// ---- table rendering ------------------------------------------------------

std::string scalar(const Json& v) {
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_null())
    return "-";
  return v.dump();
}

bool is_matrix(const Json& v) { return v.is_object() && v.contains("rows") && v.contains("entries"); }

bool flat_object(const Json& v) {
  if (!v.is_object())
    return false;
  for (const auto& [k, x] : v.items())
    if (x.is_structured())
      return false;
  return true;
}

std::string inline_value(const Json& v) {
  if (is_matrix(v))
    return "<" + v["rows"].dump() + " x " + v["cols"].dump() + " matrix>";
  if (v.is_object() && v.contains("text") && v["text"].is_string())
    return v["text"].get<std::string>();
  if (flat_object(v)) {
    std::string s;
    for (const auto& [k, x] : v.items())
      s += (s.empty() ? "" : ", ") + k + "=" + scalar(x);
    return "{" + s + "}";
  }
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v)
      s += (s.empty() ? "" : ", ") + (x.is_structured() ? x.dump() : scalar(x));
    return "[" + s + "]";
  }
  return scalar(v);
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object() && !is_matrix(v)) {
    for (const auto& [k, x] : v.items())
      flatten(x, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out.emplace_back(prefix, inline_value(v));
  }
}

bool row_table(const Json& v) {
  if (!v.is_array() || v.empty())
    return false;
  for (const auto& x : v)
    if (!x.is_object() || is_matrix(x))
      return false;
  return true;
}

void print_table(std::ostream& os, const Json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  std::vector<std::vector<std::pair<std::string, std::string>>> cells;
  for (const auto& r : rows) {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(r, "", flat);
    for (const auto& [k, _] : flat)
      if (std::find(cols.begin(), cols.end(), k) == cols.end())
        cols.push_back(k);
    cells.push_back(std::move(flat));
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    width[c] = cols[c].size();
  auto lookup = [&](const std::vector<std::pair<std::string, std::string>>& flat, const std::string& k) {
    for (const auto& [kk, v] : flat)
      if (kk == k)
        return v;
    return std::string();
  };
  for (const auto& flat : cells)
    for (std::size_t c = 0; c < cols.size(); ++c)
      width[c] = std::max(width[c], lookup(flat, cols[c]).size());
  os << indent;
  for (std::size_t c = 0; c < cols.size(); ++c)
    os << std::left << std::setw(static_cast<int>(width[c] + 2)) << cols[c];
  os << "\n";
  for (const auto& flat : cells) {
    os << indent;
    for (std::size_t c = 0; c < cols.size(); ++c)
      os << std::left << std::setw(static_cast<int>(width[c] + 2)) << lookup(flat, cols[c]);
    os << "\n";
  }
}

void render(std::ostream& os, const Json& v, const std::string& indent) {
  for (const auto& [k, x] : v.items()) {
    if (row_table(x)) {
      os << indent << k << ":\n";
      print_table(os, x, indent + "  ");
    } else if (x.is_object() && !is_matrix(x) && !flat_object(x) && !(x.contains("text"))) {
      os << indent << k << ":\n";
      render(os, x, indent + "  ");
    } else {
      os << indent << k << ": " << inline_value(x) << "\n";
    }
  }
}

std::string render_table(const Json& report) {
  std::ostringstream os;
  os << "command: " << report.value("command", "") << "\n";
  if (report.contains("results")) {
    os << "results:\n";
    const auto& res = report["results"];
    if (res.contains("degrees") && res["degrees"].is_array()) {
      for (const auto& d : res["degrees"]) {
        os << "  degree " << d["degree"].dump() << ":\n";
        render(os, d, "    ");
      }
      Json rest = res;
      rest.erase("degrees");
      render(os, rest, "  ");
    } else if (res.contains("covers")) {
      Json rows = Json::array();
      for (const auto& c : res["covers"])
        for (const auto& d : c["degrees"]) {
          Json r{{"N", c["N"]}};
          for (const auto& [k, x] : d.items())
            r[k] = x;
          rows.push_back(std::move(r));
        }
      print_table(os, rows, "  ");
    } else {
      render(os, res, "  ");
    }
  }
  if (report.contains("cross_checks") && !report["cross_checks"].empty()) {
    os << "cross_checks:\n";
    print_table(os, report["cross_checks"], "  ");
  }
  os << "provenance: " << inline_value(report["provenance"]) << "\n";
  return os.str();
}

// ---- dispatch ---------------------------------------------------------------

int finish(const Common& c, char* raw) {
  Owned owned{raw};
  const Json report = Json::parse(owned.s);
  const std::string text = c.format == "table" ? render_table(report) : report.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    if (!out)
      invalid(c.output + ": cannot write");
    out << text;
  }
  bool strict_failure = false;
  for (const auto& chk : report["cross_checks"])
    if (chk.value("strict", false) && !chk.value("ok", true)) {
      std::cerr << "invariant breach: cross check " << chk.value("name", "?") << " failed " << chk.value("detail", "")
                << "\n";
      strict_failure = true;
    }
  return strict_failure ? kExitBreach : kExitOk;
}

struct ComplexHandle {
  infcov_complex* cx = nullptr;
  ~ComplexHandle() { infcov_complex_free(cx); }
};

struct ArrangementHandle {
  infcov_arrangement* arr = nullptr;
  ~ArrangementHandle() { infcov_arrangement_free(arr); }
};

void load_complex(ComplexHandle& h, const std::string& complex_path, const std::string& pres_path,
                  const std::string& epi_path) {
  if (!complex_path.empty()) {
    if (!pres_path.empty() || !epi_path.empty())
      invalid("give either a complex file or --presentation/--epimorphism, not both");
    std::string text = read_file(complex_path);
    // A construct report is accepted too; its complex sits under results.
    const auto doc = nlohmann::json::parse(text, nullptr, false);
    if (!doc.is_discarded() && doc.is_object() && doc.contains("results") && doc["results"].is_object() &&
        doc["results"].contains("complex"))
      text = doc["results"]["complex"].dump();
    ok_or_throw(infcov_complex_from_json(text.c_str(), complex_path.c_str(), &h.cx));
    return;
  }
  if (pres_path.empty() || epi_path.empty())
    invalid("need a complex file, or both --presentation and --epimorphism");
  ok_or_throw(infcov_complex_from_presentation(read_file(pres_path).c_str(), read_file(epi_path).c_str(), &h.cx));
}

void add_common(CLI::App* app, Common& c, bool scans) {
  app->add_option("--chars", c.chars, "Characteristics (0 or primes)")->delimiter(',');
  if (scans) {
    app->add_option("--n-min", c.n_min, "Smallest cover order");
    app->add_option("--max-cover,--n-max", c.n_max, "Largest cover order");
    app->add_option("--seed", c.seed, "Seed for randomized sampling");
    app->add_option("--trials", c.trials, "Random specializations per field");
  }
  app->add_option("--tolerance", c.tolerance, "Numeric tolerance for Mahler measures");
  app->add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app->add_option("-o,--output", c.output, "Write the report here instead of stdout");
}

int run(int argc, char** argv) {
  CLI::App app{"Invariants of infinite cyclic covers"};
  app.set_version_flag("--version", std::string(infcov_version()));
  app.require_subcommand(1);
  Common c;

  std::string complex_path, pres_path, epi_path;
  std::optional<std::size_t> degree;
  auto* inv = app.add_subcommand("invariants", "Alexander polynomials, alpha and limit scans");
  inv->add_option("complex", complex_path, "Complex JSON");
  inv->add_option("--presentation", pres_path, "Presentation JSON");
  inv->add_option("--epimorphism", epi_path, "Epimorphism JSON");
  inv->add_option("--degree", degree, "Restrict to one degree");
  add_common(inv, c, true);

  auto* cov = app.add_subcommand("cover", "Homology of finite cyclic covers");
  cov->add_option("complex", complex_path, "Complex JSON");
  cov->add_option("--presentation", pres_path, "Presentation JSON");
  cov->add_option("--epimorphism", epi_path, "Epimorphism JSON");
  cov->add_option("--degree", degree, "Restrict to one degree");
  add_common(cov, c, true);

  int g = 0, r = 0;
  std::vector<std::int64_t> mu;
  auto* orb = app.add_subcommand("orbifold", "Orbifold group: predicted versus computed invariants");
  orb->add_option("--g", g, "Genus")->required();
  orb->add_option("--r", r, "Punctures")->required();
  orb->add_option("--mu", mu, "Orbifold weights")->delimiter(',');
  add_common(orb, c, true);

  std::string arr_path;
  std::vector<std::int64_t> nu;
  auto* arrc = app.add_subcommand("arrangement", "Aomoto complex, Betti and torsion numbers");
  arrc->add_option("arrangement", arr_path, "Arrangement JSON")->required();
  arrc->add_option("--nu", nu, "Weights on the H^1 lines")->delimiter(',')->required();
  add_common(arrc, c, false);

  std::string mn_path;
  std::int64_t ceva = 0;
  auto* mnc = app.add_subcommand("multinet", "Multinet conditions and the torsion certificate");
  mnc->add_option("arrangement", arr_path, "Arrangement JSON");
  mnc->add_option("multinet", mn_path, "Multinet JSON");
  mnc->add_option("--ceva", ceva, "Use the built-in Ceva(m) multinet");
  add_common(mnc, c, false);

  std::string poly_path;
  std::vector<std::string> coeffs;
  std::int64_t min_exp = 0;
  auto* mah = app.add_subcommand("mahler", "Mahler measure and cyclotomic structure");
  mah->add_option("poly", poly_path, "Laurent polynomial JSON");
  mah->add_option("--coeffs", coeffs, "Coefficients from the lowest power")->delimiter(',');
  mah->add_option("--min-exp", min_exp, "Exponent of the first coefficient");
  add_common(mah, c, false);

  auto* con = app.add_subcommand("construct", "Fixture constructions");
  con->require_subcommand(1);
  std::int64_t cmu = 2, cn = 0, cp = 2;
  std::vector<std::int64_t> chi, weights;
  auto* dmc = con->add_subcommand("deleted-monomial", "Deleted monomial arrangement");
  dmc->add_option("--mu", cmu, "mu >= 2")->required();
  add_common(dmc, c, false);
  auto* lift = con->add_subcommand("lift", "Multiplicity vector lifting a Z/N character");
  lift->add_option("--chi", chi, "Residues per line")->delimiter(',')->required();
  lift->add_option("--N", cn, "Cover order")->required();
  lift->add_option("--p", cp, "Prime")->required();
  add_common(lift, c, false);
  auto* pen = con->add_subcommand("pencil", "Chain complex of a weighted pencil");
  pen->add_option("--n", weights, "Weights, one per line")->delimiter(',')->required();
  add_common(pen, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  validate_common(c);
  char* out = nullptr;

  if (*inv || *cov) {
    ComplexHandle h;
    load_complex(h, complex_path, pres_path, epi_path);
    const auto o = to_options(c, degree);
    ok_or_throw(*inv ? infcov_report_invariants(h.cx, &o, &out) : infcov_report_cover(h.cx, &o, &out));
    return finish(c, out);
  }
  if (*orb) {
    const auto o = to_options(c, std::nullopt);
    ok_or_throw(infcov_report_orbifold(g, r, mu.data(), mu.size(), &o, &out));
    return finish(c, out);
  }
  if (*arrc) {
    validate_epimorphism(nu, "--nu");
    ArrangementHandle h;
    ok_or_throw(infcov_arrangement_from_json(read_file(arr_path).c_str(), arr_path.c_str(), &h.arr));
    const auto o = to_options(c, std::nullopt);
    ok_or_throw(infcov_report_arrangement(h.arr, nu.data(), nu.size(), &o, &out));
    return finish(c, out);
  }
  if (*mnc) {
    const auto o = to_options(c, std::nullopt);
    if (ceva > 0) {
      if (!arr_path.empty() || !mn_path.empty())
        invalid("--ceva takes no input files");
      ok_or_throw(infcov_report_ceva_multinet(ceva, &o, &out));
    } else {
      if (arr_path.empty() || mn_path.empty())
        invalid("need an arrangement file and a multinet file, or --ceva m");
      ArrangementHandle h;
      ok_or_throw(infcov_arrangement_from_json(read_file(arr_path).c_str(), arr_path.c_str(), &h.arr));
      ok_or_throw(infcov_report_multinet(h.arr, read_file(mn_path).c_str(), mn_path.c_str(), &o, &out));
    }
    return finish(c, out);
  }
  if (*mah) {
    std::string text;
    if (!poly_path.empty()) {
      if (!coeffs.empty())
        invalid("give either a polynomial file or --coeffs, not both");
      text = read_file(poly_path);
    } else {
      if (coeffs.empty())
        invalid("need a polynomial file or --coeffs");
      Json cs = Json::array();
      for (const auto& s : coeffs)
        cs.push_back(s);
      text = Json{{"min_exp", min_exp}, {"coeffs", cs}}.dump();
      poly_path = "--coeffs";
    }
    const auto o = to_options(c, std::nullopt);
    ok_or_throw(infcov_report_mahler(text.c_str(), poly_path.c_str(), &o, &out));
    return finish(c, out);
  }
  const auto o = to_options(c, std::nullopt);
  if (*dmc) {
    ok_or_throw(infcov_report_construct_deleted_monomial(cmu, &o, &out));
  } else if (*lift) {
    ok_or_throw(infcov_report_construct_lift(chi.data(), chi.size(), cn, cp, &o, &out));
  } else {
    validate_epimorphism(weights, "--n");
    ok_or_throw(infcov_report_construct_pencil(weights.size(), weights.data(), &o, &out));
  }
  return finish(c, out);
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBreach;
  }
}
