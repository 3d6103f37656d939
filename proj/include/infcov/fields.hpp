#pragma once

#include "infcov/common.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace infcov {

/// Description of an exact field: the prime field (Q or F_p) adjoined a root
/// of `modulus`. Degree-1 moduli describe the prime field itself.
struct FieldSpec {
  std::int64_t characteristic = 0;
  std::vector<BigInt> modulus{BigInt(-1), BigInt(1)}; ///< ascending, monic
  std::int64_t unity_order = 1;

  int degree() const { return static_cast<int>(modulus.size()) - 1; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Residue of degree < deg(modulus). Coefficients are rationals in
/// characteristic 0 and integers in [0, p) otherwise.
struct FieldElem {
  std::vector<BigRat> rep;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

class Field {
public:
  /// Validates the spec: prime characteristic, monic irreducible modulus,
  /// unity order compatible with the multiplicative group.
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::int64_t characteristic() const { return spec_.characteristic; }
  int degree() const { return spec_.degree(); }
  bool is_finite() const { return spec_.characteristic != 0; }
  /// Characteristic 0: the k with modulus = Phi_k (0 if none).
  std::int64_t cyclotomic_index() const { return cyclo_index_; }
  /// Number of elements (finite fields only).
  BigInt size() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(const BigInt& v) const;
  FieldElem from_rational(const BigRat& v) const;
  /// Residue class of x.
  FieldElem gen() const;
  /// Normalizes arbitrary coefficient vectors into a residue.
  FieldElem from_coeffs(std::vector<BigRat> coeffs) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
  FieldElem pow(const FieldElem& a, std::int64_t e) const;

  bool is_zero(const FieldElem& a) const;
  bool is_one(const FieldElem& a) const;

  /// Smallest k in [1, bound] with a^k = 1.
  std::optional<std::int64_t> multiplicative_order(const FieldElem& a, std::int64_t bound) const;

  /// Finite fields: element with the given base-p digit index.
  FieldElem element_at(std::uint64_t index) const;
  /// Finite fields: the generator of the multiplicative group with the
  /// smallest index.
  FieldElem primitive_element() const;

  FieldElem random(std::mt19937_64& rng) const;
  FieldElem random_nonzero(std::mt19937_64& rng) const;

  std::string to_string(const FieldElem& a) const;

private:
  void reduce_scalar(BigRat& c) const;
  std::vector<BigRat> reduce_poly(std::vector<BigRat> p) const;

  FieldSpec spec_;
  std::vector<BigRat> modulus_;
  std::int64_t cyclo_index_ = 0;
  mutable std::optional<FieldElem> primitive_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr rationals();
FieldPtr prime_field(std::int64_t p);

/// mu with every factor of p removed (mu itself when p = 0).
std::int64_t coprime_part(std::int64_t mu, std::int64_t p);
/// Multiplicative order of p modulo n (n coprime to p, n >= 1).
std::int64_t order_mod(std::int64_t p, std::int64_t n);

/// Smallest field of the given characteristic containing a primitive
/// coprime_part(n, char)-th root of unity.
FieldPtr make_splitting_field(std::int64_t characteristic, std::int64_t n);
/// Like make_splitting_field but enlarged (finite case) until it has at least
/// `min_nonzero` nonzero elements.
FieldPtr make_field_with_min_size(std::int64_t characteristic, std::int64_t n,
                                  std::uint64_t min_nonzero);

/// Element of exact multiplicative order coprime_part(n, char).
FieldElem root_of_unity(const Field& field, std::int64_t n);

} // namespace infcov
