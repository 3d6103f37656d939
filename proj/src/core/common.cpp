#include "infcov/common.hpp"

#include <limits>

#ifndef INFCOV_VERSION_STRING
#define INFCOV_VERSION_STRING "0.0.0"
#endif

namespace infcov {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidInput: return "InvalidInput";
  case ErrorKind::Parse: return "Parse";
  case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
  case ErrorKind::ToleranceNotReached: return "ToleranceNotReached";
  case ErrorKind::FieldMismatch: return "FieldMismatch";
  case ErrorKind::BothZero: return "BothZero";
  case ErrorKind::OrderUnavailable: return "OrderUnavailable";
  case ErrorKind::DivisionByZero: return "DivisionByZero";
  case ErrorKind::IllegalOp: return "IllegalOp";
  case ErrorKind::InvalidEpimorphism: return "InvalidEpimorphism";
  case ErrorKind::CharacterInvalid: return "CharacterInvalid";
  case ErrorKind::InvalidType: return "InvalidType";
  case ErrorKind::InvalidProfile: return "InvalidProfile";
  case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
  case ErrorKind::FieldTooSmall: return "FieldTooSmall";
  case ErrorKind::MultiplicityTooSmall: return "MultiplicityTooSmall";
  case ErrorKind::DegenerateInput: return "DegenerateInput";
  case ErrorKind::NotEpimorphism: return "NotEpimorphism";
  case ErrorKind::NotAThreeNet: return "NotAThreeNet";
  case ErrorKind::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

bool fits_int64(const BigInt& v) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v >= lo && v <= hi;
}

std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v))
    fail(ErrorKind::InvalidInput, "integer " + v.get_str() + " does not fit in 64 bits");
  if (v.fits_slong_p())
    return v.get_si();
  return std::stoll(v.get_str());
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::string_view library_version() { return INFCOV_VERSION_STRING; }

} // namespace infcov
