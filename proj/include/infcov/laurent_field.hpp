#pragma once

#include "infcov/fields.hpp"
#include "infcov/laurent.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace infcov {

/// Element of K[t, t^-1] for an exact field K. Same trimming rules as
/// LaurentPolyZ; every coefficient lives in `field()`.
class LaurentPolyK {
public:
  explicit LaurentPolyK(FieldPtr field) : field_(std::move(field)) {}
  LaurentPolyK(FieldPtr field, std::int64_t min_exp, std::vector<FieldElem> coeffs);

  static LaurentPolyK constant(FieldPtr field, const FieldElem& c);
  static LaurentPolyK monomial(FieldPtr field, const FieldElem& c, std::int64_t exp);
  /// Image of an integer Laurent polynomial (coefficientwise reduction in
  /// positive characteristic).
  static LaurentPolyK from_z(FieldPtr field, const LaurentPolyZ& p);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exp() const { return min_exp_; }
  std::int64_t max_exp() const { return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::int64_t span() const { return is_zero() ? 0 : max_exp() - min_exp_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  FieldElem coeff(std::int64_t exp) const;
  const FieldElem& leading() const { return coeffs_.back(); }
  /// Nonzero monomial c t^j.
  bool is_unit() const { return coeffs_.size() == 1; }

  /// Shifted to min_exp 0 and scaled to leading coefficient 1.
  LaurentPolyK monic() const;
  FieldElem eval(const FieldElem& x) const;

  LaurentPolyK operator-() const;
  LaurentPolyK& operator+=(const LaurentPolyK& o);
  LaurentPolyK& operator-=(const LaurentPolyK& o);
  friend LaurentPolyK operator+(LaurentPolyK a, const LaurentPolyK& b) { return a += b; }
  friend LaurentPolyK operator-(LaurentPolyK a, const LaurentPolyK& b) { return a -= b; }
  friend LaurentPolyK operator*(const LaurentPolyK& a, const LaurentPolyK& b);
  LaurentPolyK scaled(const FieldElem& c) const;
  friend bool operator==(const LaurentPolyK& a, const LaurentPolyK& b);

  std::string to_string() const;

private:
  void trim();
  void check_same_field(const LaurentPolyK& o) const;

  FieldPtr field_;
  std::int64_t min_exp_ = 0;
  std::vector<FieldElem> coeffs_;
};

bool same_field(const Field& a, const Field& b);

/// Quotient and remainder in K[t] of the polynomial parts (both shifted to
/// min_exp 0). b must be nonzero.
std::pair<LaurentPolyK, LaurentPolyK> poly_divmod(const LaurentPolyK& a, const LaurentPolyK& b);
/// a / b in K[t, t^-1] when exact.
std::optional<LaurentPolyK> divide_exact(const LaurentPolyK& a, const LaurentPolyK& b);

/// Monic gcd in K[t] of the polynomial parts, with min_exp 0.
/// Throws FieldMismatch or BothZero.
LaurentPolyK gcd_over_field(const LaurentPolyK& a, const LaurentPolyK& b);

/// Coefficientwise reduction into a field of prime characteristic.
LaurentPolyK reduce_mod_p(const LaurentPolyZ& p, FieldPtr field);

} // namespace infcov
