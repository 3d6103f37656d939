#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace infcov {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Failure categories surfaced by the library. The C API maps each kind to a
/// status code; the CLI maps them to exit codes.
enum class ErrorKind {
  InvalidInput,
  Parse,
  ZeroPolynomial,
  ToleranceNotReached,
  FieldMismatch,
  BothZero,
  OrderUnavailable,
  DivisionByZero,
  IllegalOp,
  InvalidEpimorphism,
  CharacterInvalid,
  InvalidType,
  InvalidProfile,
  DegreeOutOfRange,
  FieldTooSmall,
  MultiplicityTooSmall,
  DegenerateInput,
  NotEpimorphism,
  NotAThreeNet,
  InvariantBreach,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

/// Checked narrowing used where a big integer must fit a machine word.
std::int64_t to_int64(const BigInt& v);
bool fits_int64(const BigInt& v);

BigInt ipow(const BigInt& base, unsigned long exp);
bool is_prime(std::int64_t n);

std::string_view library_version();

} // namespace infcov
