#include "infcov/io.hpp"

#include <fstream>
#include <sstream>

namespace infcov::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorKind::InvalidInput, where + ": " + what);
}

const Json& field_of(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object())
    bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array())
    bad(where, "expected an array");
  return j;
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  const auto v = int_from_json(j, where);
  if (v < 0)
    bad(where, "index must be non-negative");
  return static_cast<std::size_t>(v);
}

} // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                               e.what() + ")");
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorKind::Parse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Json big_to_json(const BigInt& v) {
  if (fits_int64(v))
    return to_int64(v);
  return v.get_str();
}

BigInt big_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer())
    return BigInt(j.get<long>());
  if (j.is_number_unsigned())
    return BigInt(j.get<unsigned long>());
  if (j.is_string()) {
    BigInt v;
    const std::string s = j.get<std::string>();
    if (s.empty() || v.set_str(s, 10) != 0)
      bad(where, "\"" + s + "\" is not a decimal integer");
    return v;
  }
  bad(where, "expected an integer");
}

std::int64_t int_from_json(const Json& j, const std::string& where) {
  const BigInt v = big_from_json(j, where);
  if (!fits_int64(v))
    bad(where, "integer out of 64-bit range");
  return to_int64(v);
}

Json to_json(const LaurentPolyZ& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs())
    coeffs.push_back(big_to_json(c));
  return Json{{"min_exp", p.is_zero() ? 0 : p.min_exp()}, {"coeffs", coeffs}};
}

LaurentPolyZ laurent_from_json(const Json& j, const std::string& where) {
  const auto e = int_from_json(field_of(j, "min_exp", where), where + ".min_exp");
  std::vector<BigInt> coeffs;
  const auto& cs = array_of(field_of(j, "coeffs", where), where + ".coeffs");
  for (std::size_t k = 0; k < cs.size(); ++k)
    coeffs.push_back(big_from_json(cs[k], where + ".coeffs[" + std::to_string(k) + "]"));
  return LaurentPolyZ(e, std::move(coeffs));
}

Json to_json(const LaurentMatrixZ& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

LaurentMatrixZ laurent_matrix_from_json(const Json& j, const std::string& where) {
  const auto r = index_from_json(field_of(j, "rows", where), where + ".rows");
  const auto c = index_from_json(field_of(j, "cols", where), where + ".cols");
  const auto& es = array_of(field_of(j, "entries", where), where + ".entries");
  if (es.size() != r)
    bad(where, "entries has " + std::to_string(es.size()) + " rows, expected " + std::to_string(r));
  LaurentMatrixZ m(r, c, LaurentPolyZ{});
  for (std::size_t i = 0; i < r; ++i) {
    const auto& row = array_of(es[i], where + ".entries[" + std::to_string(i) + "]");
    if (row.size() != c)
      bad(where, "row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries, expected " +
                     std::to_string(c));
    for (std::size_t k = 0; k < c; ++k)
      m(i, k) = laurent_from_json(row[k], where + ".entries[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(big_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const EquivariantComplex& cx) {
  Json bs = Json::array();
  for (const auto& b : cx.boundaries)
    bs.push_back(to_json(b));
  return Json{{"ranks", cx.ranks}, {"boundaries", bs}};
}

EquivariantComplex complex_from_json(const Json& j) {
  EquivariantComplex cx;
  const auto& ranks = array_of(field_of(j, "ranks", "complex"), "complex.ranks");
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const auto r = int_from_json(ranks[k], "complex.ranks[" + std::to_string(k) + "]");
    if (r < 0)
      bad("complex.ranks", "ranks must be non-negative");
    cx.ranks.push_back(r);
  }
  const auto& bs = array_of(field_of(j, "boundaries", "complex"), "complex.boundaries");
  for (std::size_t k = 0; k < bs.size(); ++k)
    cx.boundaries.push_back(laurent_matrix_from_json(bs[k], "complex.boundaries[" + std::to_string(k) + "]"));
  cx.validate(ErrorKind::InvalidInput);
  return cx;
}

Json to_json(const FieldSpec& f) {
  Json mod = Json::array();
  for (const auto& c : f.modulus)
    mod.push_back(big_to_json(c));
  return Json{{"char", f.characteristic}, {"modulus", mod}, {"unity_order", f.unity_order}};
}

FieldSpec field_spec_from_json(const Json& j, const std::string& where) {
  FieldSpec f;
  f.characteristic = int_from_json(field_of(j, "char", where), where + ".char");
  if (j.contains("modulus")) {
    f.modulus.clear();
    for (const auto& c : array_of(j["modulus"], where + ".modulus"))
      f.modulus.push_back(big_from_json(c, where + ".modulus"));
  }
  if (j.contains("unity_order"))
    f.unity_order = int_from_json(j["unity_order"], where + ".unity_order");
  return f;
}

Json to_json(const GroupPresentation& p) {
  Json rels = Json::array();
  for (const auto& w : p.relators) {
    Json word = Json::array();
    for (const auto& l : w)
      word.push_back(Json::array({l.gen, l.exp}));
    rels.push_back(std::move(word));
  }
  return Json{{"generators", p.num_generators}, {"relators", rels}};
}

GroupPresentation presentation_from_json(const Json& j) {
  GroupPresentation p;
  p.num_generators = static_cast<int>(int_from_json(field_of(j, "generators", "presentation"),
                                                    "presentation.generators"));
  const auto& rels = array_of(field_of(j, "relators", "presentation"), "presentation.relators");
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const std::string where = "presentation.relators[" + std::to_string(r) + "]";
    Word w;
    for (const auto& letter : array_of(rels[r], where)) {
      if (!letter.is_array() || letter.size() != 2)
        bad(where, "letters are [generator, exponent] pairs");
      w.push_back(Letter{static_cast<int>(int_from_json(letter[0], where)),
                         static_cast<int>(int_from_json(letter[1], where))});
    }
    p.relators.push_back(std::move(w));
  }
  p.validate();
  return p;
}

EpimorphismToZ epimorphism_from_json(const Json& j) {
  EpimorphismToZ nu;
  for (const auto& v : array_of(field_of(j, "images", "epimorphism"), "epimorphism.images"))
    nu.images.push_back(int_from_json(v, "epimorphism.images"));
  return nu;
}

Character character_from_json(const Json& j) {
  Character rho;
  rho.field = std::make_shared<const Field>(field_spec_from_json(field_of(j, "field", "character"), "character.field"));
  for (const auto& v : array_of(field_of(j, "values", "character"), "character.values")) {
    std::vector<BigRat> coeffs;
    for (const auto& c : array_of(v, "character.values")) {
      if (c.is_string()) {
        BigRat q;
        if (q.set_str(c.get<std::string>(), 10) != 0)
          bad("character.values", "bad rational \"" + c.get<std::string>() + "\"");
        q.canonicalize();
        coeffs.push_back(q);
      } else {
        coeffs.emplace_back(big_from_json(c, "character.values"));
      }
    }
    rho.values.push_back(rho.field->from_coeffs(std::move(coeffs)));
  }
  return rho;
}

Json to_json(const OrbifoldData& d) { return Json{{"g", d.g}, {"r", d.r}, {"mu", d.mu}}; }

LineArrangement arrangement_from_json(const Json& j) {
  const auto& amb = field_of(j, "ambient", "arrangement");
  if (!amb.is_string() || (amb != "P1" && amb != "P2"))
    bad("arrangement.ambient", "must be \"P1\" or \"P2\"");
  const Ambient ambient = amb == "P1" ? Ambient::P1 : Ambient::P2;
  std::vector<std::vector<std::int64_t>> normals;
  const auto& ls = array_of(field_of(j, "lines", "arrangement"), "arrangement.lines");
  for (std::size_t k = 0; k < ls.size(); ++k) {
    const std::string where = "arrangement.lines[" + std::to_string(k) + "]";
    std::vector<std::int64_t> row;
    for (const auto& c : array_of(ls[k], where))
      row.push_back(int_from_json(c, where));
    normals.push_back(std::move(row));
  }
  std::optional<std::size_t> inf;
  if (j.contains("infinity") && !j["infinity"].is_null())
    inf = index_from_json(j["infinity"], "arrangement.infinity");
  return LineArrangement::from_integers(ambient, normals, inf);
}

Json to_json(const LineArrangement& arr) {
  Json lines = Json::array();
  const Field& f = *arr.field;
  const bool rational = f.degree() == 1;
  for (const auto& l : arr.lines) {
    Json row = Json::array();
    for (const auto& c : l) {
      if (rational && c.rep.empty())
        row.push_back(0);
      else if (rational && c.rep[0].get_den() == 1)
        row.push_back(big_to_json(c.rep[0].get_num()));
      else
        row.push_back(f.to_string(c));
    }
    lines.push_back(std::move(row));
  }
  Json out{{"ambient", arr.ambient == Ambient::P1 ? "P1" : "P2"}, {"lines", lines}};
  if (arr.infinity)
    out["infinity"] = *arr.infinity;
  if (!rational)
    out["field"] = to_json(f.spec());
  return out;
}

Json to_json(const IntersectionData& inter, const Field& field) {
  Json pts = Json::array();
  for (const auto& p : inter.points) {
    Json coords = Json::array();
    for (const auto& c : p.coords)
      coords.push_back(field.to_string(c));
    pts.push_back(Json{{"coords", coords}, {"lines", p.lines}, {"multiplicity", p.multiplicity()}});
  }
  return pts;
}

Multinet multinet_from_json(const Json& j, const LineArrangement& arr) {
  Multinet mn;
  mn.arrangement = arr;
  const auto& cls = array_of(field_of(j, "classes", "multinet"), "multinet.classes");
  for (std::size_t c = 0; c < cls.size(); ++c) {
    std::vector<std::size_t> members;
    for (const auto& h : array_of(cls[c], "multinet.classes[" + std::to_string(c) + "]"))
      members.push_back(index_from_json(h, "multinet.classes"));
    mn.classes.push_back(std::move(members));
  }
  if (j.contains("weights")) {
    for (const auto& w : array_of(j["weights"], "multinet.weights"))
      mn.weights.push_back(int_from_json(w, "multinet.weights"));
  } else {
    mn.weights.assign(arr.size(), 1);
  }
  if (!j.contains("base_locus")) {
    mn.base_locus = mixed_points(arr, mn.classes);
    return mn;
  }
  for (const auto& x : array_of(j["base_locus"], "multinet.base_locus"))
    mn.base_locus.push_back(index_from_json(x, "multinet.base_locus"));
  return mn;
}

Json to_json(const SnfResult& s) {
  Json ds = Json::array();
  for (const auto& d : s.divisors)
    ds.push_back(big_to_json(d));
  return Json{{"rank", s.rank}, {"divisors", ds}};
}

Json to_json(const TorsionSummary& t) {
  Json fac = Json::object();
  for (const auto& [p, e] : t.factorization)
    fac[p.get_str()] = e;
  return Json{{"order", big_to_json(t.order)}, {"factorization", fac}};
}

Json to_json(const MahlerMeasure& m) {
  Json out{{"numeric", m.numeric}, {"error_bound", m.error_bound}};
  out["exact_exp"] = m.exact_exp ? big_to_json(*m.exact_exp) : Json(nullptr);
  return out;
}

} // namespace infcov::io
