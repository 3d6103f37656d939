#include "infcov/infcov.h"

#include "infcov/arrangements.hpp"
#include "infcov/covers.hpp"
#include "infcov/io.hpp"
#include "infcov/reports.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct infcov_complex {
  infcov::EquivariantComplex cx;
};

struct infcov_arrangement {
  infcov::LineArrangement arr;
};

namespace {

thread_local std::string g_last_error;

infcov_status status_of(infcov::ErrorKind kind) {
  using K = infcov::ErrorKind;
  switch (kind) {
  case K::InvalidInput: return INFCOV_E_INVALID_INPUT;
  case K::Parse: return INFCOV_E_PARSE;
  case K::ZeroPolynomial: return INFCOV_E_ZERO_POLYNOMIAL;
  case K::ToleranceNotReached: return INFCOV_E_TOLERANCE_NOT_REACHED;
  case K::FieldMismatch: return INFCOV_E_FIELD_MISMATCH;
  case K::BothZero: return INFCOV_E_BOTH_ZERO;
  case K::OrderUnavailable: return INFCOV_E_ORDER_UNAVAILABLE;
  case K::DivisionByZero: return INFCOV_E_DIVISION_BY_ZERO;
  case K::IllegalOp: return INFCOV_E_ILLEGAL_OP;
  case K::InvalidEpimorphism: return INFCOV_E_INVALID_EPIMORPHISM;
  case K::CharacterInvalid: return INFCOV_E_CHARACTER_INVALID;
  case K::InvalidType: return INFCOV_E_INVALID_TYPE;
  case K::InvalidProfile: return INFCOV_E_INVALID_PROFILE;
  case K::DegreeOutOfRange: return INFCOV_E_DEGREE_OUT_OF_RANGE;
  case K::FieldTooSmall: return INFCOV_E_FIELD_TOO_SMALL;
  case K::MultiplicityTooSmall: return INFCOV_E_MULTIPLICITY_TOO_SMALL;
  case K::DegenerateInput: return INFCOV_E_DEGENERATE_INPUT;
  case K::NotEpimorphism: return INFCOV_E_NOT_EPIMORPHISM;
  case K::NotAThreeNet: return INFCOV_E_NOT_A_THREE_NET;
  case K::InvariantBreach: return INFCOV_E_INVARIANT_BREACH;
  }
  return INFCOV_E_INTERNAL;
}

template <class Fn>
infcov_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return INFCOV_OK;
  } catch (const infcov::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return INFCOV_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return INFCOV_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return INFCOV_E_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p)
    infcov::fail(infcov::ErrorKind::InvalidInput, std::string(name) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string src(const char* s) { return s ? s : "<input>"; }

std::vector<std::int64_t> vec(const std::int64_t* p, std::size_t n) {
  if (n > 0)
    need(p, "array");
  return std::vector<std::int64_t>(p, p + n);
}

infcov::reports::Options options(const infcov_options* o) {
  infcov::reports::Options out;
  if (!o)
    return out;
  if (o->chars && o->num_chars > 0)
    out.characteristics.assign(o->chars, o->chars + o->num_chars);
  out.n_min = o->n_min;
  out.n_max = o->n_max;
  out.seed = o->seed;
  out.tolerance = o->tolerance;
  out.workers = o->workers;
  if (o->has_degree)
    out.degree = o->degree;
  out.trials = o->trials;
  return out;
}

void emit(char** out, const infcov::io::Json& j) {
  need(out, "out");
  *out = dup(j.dump(2));
}

} // namespace

extern "C" {

const char* infcov_version(void) { return infcov::library_version().data(); }

const char* infcov_status_name(infcov_status status) {
  if (status == INFCOV_OK)
    return "Ok";
  if (status == INFCOV_E_NULL_ARGUMENT)
    return "NullArgument";
  if (status == INFCOV_E_INTERNAL)
    return "Internal";
  if (status >= INFCOV_E_INVALID_INPUT && status <= INFCOV_E_INVARIANT_BREACH)
    return infcov::to_string(static_cast<infcov::ErrorKind>(status - 1)).data();
  return "Unknown";
}

const char* infcov_last_error(void) { return g_last_error.c_str(); }

void infcov_string_free(char* s) { std::free(s); }

void infcov_options_default(infcov_options* opts) {
  if (!opts)
    return;
  const infcov::reports::Options d;
  opts->chars = nullptr;
  opts->num_chars = 0;
  opts->n_min = d.n_min;
  opts->n_max = d.n_max;
  opts->seed = d.seed;
  opts->tolerance = d.tolerance;
  opts->workers = d.workers;
  opts->has_degree = 0;
  opts->degree = 0;
  opts->trials = d.trials;
}

infcov_status infcov_complex_from_json(const char* json, const char* source, infcov_complex** out) {
  if (!json || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    auto j = infcov::io::parse_json(json, src(source));
    *out = new infcov_complex{infcov::io::complex_from_json(j)};
  });
}

infcov_status infcov_complex_from_presentation(const char* presentation_json, const char* epimorphism_json,
                                               infcov_complex** out) {
  if (!presentation_json || !epimorphism_json || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    const auto pres = infcov::io::presentation_from_json(infcov::io::parse_json(presentation_json, "presentation"));
    const auto nu = infcov::io::epimorphism_from_json(infcov::io::parse_json(epimorphism_json, "epimorphism"));
    *out = new infcov_complex{infcov::equivariant_complex_from_presentation(pres, nu)};
  });
}

infcov_status infcov_complex_orbifold(int g, int r, const int64_t* mu, size_t s, infcov_complex** out) {
  if (!out || (s > 0 && !mu))
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    infcov::OrbifoldData d{g, r, vec(mu, s)};
    *out = new infcov_complex{
        infcov::equivariant_complex_from_presentation(infcov::orbifold_presentation(d), infcov::orbifold_epimorphism(d))};
  });
}

infcov_status infcov_complex_pencil(size_t d, const int64_t* n, infcov_complex** out) {
  if (!out || (d > 0 && !n))
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { *out = new infcov_complex{infcov::pencil_complex(d, vec(n, d))}; });
}

void infcov_complex_free(infcov_complex* cx) { delete cx; }

infcov_status infcov_complex_top_degree(const infcov_complex* cx, size_t* out) {
  if (!cx || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { *out = cx->cx.top_degree(); });
}

infcov_status infcov_complex_to_json(const infcov_complex* cx, char** out) {
  if (!cx || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { emit(out, infcov::io::to_json(cx->cx)); });
}

infcov_status infcov_alexander_poly(const infcov_complex* cx, size_t degree, char** out) {
  if (!cx || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { *out = dup(infcov::io::to_json(infcov::alexander_poly(cx->cx, degree).poly()).dump()); });
}

infcov_status infcov_alpha(const infcov_complex* cx, size_t degree, int64_t characteristic, int64_t* out) {
  if (!cx || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { *out = infcov::alpha(cx->cx, degree, characteristic); });
}

infcov_status infcov_cover_betti(const infcov_complex* cx, size_t degree, int64_t n, int64_t characteristic,
                                 int64_t* out) {
  if (!cx || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    if (degree > cx->cx.top_degree())
      infcov::fail(infcov::ErrorKind::DegreeOutOfRange, "degree is not in the complex");
    const auto rep = infcov::cover_homology(cx->cx, n, {characteristic}, false);
    *out = rep.degrees[degree].betti.at(characteristic);
  });
}

infcov_status infcov_cover_torsion_order(const infcov_complex* cx, size_t degree, int64_t n, char** out) {
  if (!cx || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    if (degree > cx->cx.top_degree())
      infcov::fail(infcov::ErrorKind::DegreeOutOfRange, "degree is not in the complex");
    const auto rep = infcov::cover_homology(cx->cx, n, {0}, true);
    *out = dup(rep.degrees[degree].torsion.order.get_str());
  });
}

infcov_status infcov_arrangement_from_json(const char* json, const char* source, infcov_arrangement** out) {
  if (!json || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    *out = new infcov_arrangement{infcov::io::arrangement_from_json(infcov::io::parse_json(json, src(source)))};
  });
}

infcov_status infcov_arrangement_deleted_monomial(int64_t mu, infcov_arrangement** out) {
  if (!out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { *out = new infcov_arrangement{infcov::deleted_monomial_arrangement(mu).arrangement}; });
}

infcov_status infcov_arrangement_ceva(int64_t m, infcov_arrangement** out) {
  if (!out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { *out = new infcov_arrangement{infcov::ceva_arrangement(m)}; });
}

void infcov_arrangement_free(infcov_arrangement* arr) { delete arr; }

infcov_status infcov_arrangement_size(const infcov_arrangement* arr, size_t* out) {
  if (!arr || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { *out = arr->arr.size(); });
}

infcov_status infcov_aomoto_tau1(const infcov_arrangement* arr, const int64_t* nu, size_t len, char** out) {
  if (!arr || !out || (len > 0 && !nu))
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    const auto bt = infcov::beta_tau(infcov::aomoto_complex(arr->arr, vec(nu, len)), {});
    *out = dup(bt.tau1.get_str());
  });
}

infcov_status infcov_report_invariants(const infcov_complex* cx, const infcov_options* opts, char** out) {
  if (!cx || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { emit(out, infcov::reports::invariants_report(cx->cx, options(opts))); });
}

infcov_status infcov_report_cover(const infcov_complex* cx, const infcov_options* opts, char** out) {
  if (!cx || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { emit(out, infcov::reports::cover_report(cx->cx, options(opts))); });
}

infcov_status infcov_report_orbifold(int g, int r, const int64_t* mu, size_t s, const infcov_options* opts,
                                     char** out) {
  if (!out || (s > 0 && !mu))
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    emit(out, infcov::reports::orbifold_report(infcov::OrbifoldData{g, r, vec(mu, s)}, options(opts)));
  });
}

infcov_status infcov_report_arrangement(const infcov_arrangement* arr, const int64_t* nu, size_t len,
                                        const infcov_options* opts, char** out) {
  if (!arr || !out || (len > 0 && !nu))
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { emit(out, infcov::reports::arrangement_report(arr->arr, vec(nu, len), options(opts))); });
}

infcov_status infcov_report_multinet(const infcov_arrangement* arr, const char* multinet_json, const char* source,
                                     const infcov_options* opts, char** out) {
  if (!arr || !multinet_json || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    const auto mn = infcov::io::multinet_from_json(infcov::io::parse_json(multinet_json, src(source)), arr->arr);
    emit(out, infcov::reports::multinet_report(mn, options(opts)));
  });
}

infcov_status infcov_report_ceva_multinet(int64_t m, const infcov_options* opts, char** out) {
  if (!out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { emit(out, infcov::reports::multinet_report(infcov::ceva_multinet(m), options(opts))); });
}

infcov_status infcov_report_mahler(const char* poly_json, const char* source, const infcov_options* opts,
                                   char** out) {
  if (!poly_json || !out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] {
    const auto p = infcov::io::laurent_from_json(infcov::io::parse_json(poly_json, src(source)), "poly");
    emit(out, infcov::reports::mahler_report(p, options(opts)));
  });
}

infcov_status infcov_report_construct_deleted_monomial(int64_t mu, const infcov_options* opts, char** out) {
  if (!out)
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { emit(out, infcov::reports::construct_deleted_monomial(mu, options(opts))); });
}

infcov_status infcov_report_construct_lift(const int64_t* chi, size_t len, int64_t n, int64_t p,
                                           const infcov_options* opts, char** out) {
  if (!out || (len > 0 && !chi))
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { emit(out, infcov::reports::construct_lift(vec(chi, len), n, p, options(opts))); });
}

infcov_status infcov_report_construct_pencil(size_t d, const int64_t* n, const infcov_options* opts, char** out) {
  if (!out || (d > 0 && !n))
    return INFCOV_E_NULL_ARGUMENT;
  return guarded([&] { emit(out, infcov::reports::construct_pencil(d, vec(n, d), options(opts))); });
}

} // extern "C"
