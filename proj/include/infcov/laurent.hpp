#pragma once

#include "infcov/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace infcov {

/// Element of Z[t, t^-1] stored as t^min_exp * (c_0 + c_1 t + ... ).
/// The coefficient vector is always trimmed; zero is the empty vector with
/// min_exp 0.
class LaurentPolyZ {
public:
  LaurentPolyZ() = default;
  LaurentPolyZ(std::int64_t min_exp, std::vector<BigInt> coeffs);

  static LaurentPolyZ constant(const BigInt& c);
  static LaurentPolyZ monomial(const BigInt& c, std::int64_t exp);
  /// t^e - 1 (zero when e == 0).
  static LaurentPolyZ t_pow_minus_one(std::int64_t e);
  /// t - 1
  static LaurentPolyZ t_minus_one() { return t_pow_minus_one(1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exp() const { return min_exp_; }
  /// Highest exponent; undefined (returns min_exp - 1) for zero.
  std::int64_t max_exp() const {
    return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// max_exp - min_exp, the degree of the polynomial part.
  std::int64_t span() const { return is_zero() ? 0 : max_exp() - min_exp_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::int64_t exp) const;
  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& trailing() const { return coeffs_.front(); }
  bool is_constant() const { return coeffs_.size() <= 1 && min_exp_ == 0; }
  /// True for +-t^j.
  bool is_unit() const;

  /// Non-negative gcd of the coefficients.
  BigInt content() const;
  /// p / content, sign normalized so that the leading coefficient is positive.
  LaurentPolyZ primitive_part() const;

  BigInt eval(const BigInt& x) const; ///< Requires x = +-1 when min_exp < 0.
  BigInt eval_at_one() const;

  /// t^k * p
  LaurentPolyZ shifted(std::int64_t k) const;

  LaurentPolyZ operator-() const;
  LaurentPolyZ& operator+=(const LaurentPolyZ& o);
  LaurentPolyZ& operator-=(const LaurentPolyZ& o);
  LaurentPolyZ& operator*=(const LaurentPolyZ& o);
  LaurentPolyZ& operator*=(const BigInt& c);

  friend LaurentPolyZ operator+(LaurentPolyZ a, const LaurentPolyZ& b) { return a += b; }
  friend LaurentPolyZ operator-(LaurentPolyZ a, const LaurentPolyZ& b) { return a -= b; }
  friend LaurentPolyZ operator*(const LaurentPolyZ& a, const LaurentPolyZ& b);
  friend LaurentPolyZ operator*(LaurentPolyZ a, const BigInt& c) { return a *= c; }
  friend LaurentPolyZ operator*(const BigInt& c, LaurentPolyZ a) { return a *= c; }
  friend bool operator==(const LaurentPolyZ& a, const LaurentPolyZ& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form, e.g. "t^2 - 3*t + 1".
  std::string to_string() const;

private:
  void trim();

  std::int64_t min_exp_ = 0;
  std::vector<BigInt> coeffs_;
};

LaurentPolyZ pow(const LaurentPolyZ& p, unsigned exp);

/// a / b if b divides a in Z[t, t^-1], otherwise nullopt.
std::optional<LaurentPolyZ> divide_exact(const LaurentPolyZ& a, const LaurentPolyZ& b);
bool divides(const LaurentPolyZ& b, const LaurentPolyZ& a);

/// gcd in Z[t, t^-1] normalized to the canonical representative
/// (gcd(0, 0) = 0).
LaurentPolyZ gcd(const LaurentPolyZ& a, const LaurentPolyZ& b);

/// Associate-class representative: no negative powers, nonzero constant term,
/// positive leading coefficient.
class CanonicalAlexanderRep {
public:
  const LaurentPolyZ& poly() const { return poly_; }
  /// The representative of the unit class, used for "Delta = 1" conventions.
  static CanonicalAlexanderRep one();

  friend bool operator==(const CanonicalAlexanderRep&, const CanonicalAlexanderRep&) = default;
  friend CanonicalAlexanderRep canonical_rep(const LaurentPolyZ& p);

private:
  explicit CanonicalAlexanderRep(LaurentPolyZ p) : poly_(std::move(p)) {}
  LaurentPolyZ poly_;
};

/// Throws ZeroPolynomial for p = 0.
CanonicalAlexanderRep canonical_rep(const LaurentPolyZ& p);

std::int64_t euler_phi(std::int64_t n);
/// Phi_k(t) computed from t^k - 1 = prod_{d | k} Phi_d(t).
LaurentPolyZ cyclotomic_poly(std::int64_t k);

/// p = unit * content * prod Phi_k^e_k * rest, rest primitive with no
/// cyclotomic factor.
struct CyclotomicSplit {
  BigInt content;
  std::vector<std::pair<std::int64_t, int>> factors; ///< (k, e_k), k increasing
  LaurentPolyZ rest;                                 ///< canonical, min_exp 0
};
CyclotomicSplit split_cyclotomic(const LaurentPolyZ& p);

bool is_cyclotomic_type(const LaurentPolyZ& p);

struct MahlerMeasure {
  /// exp(M) when p is of cyclotomic type.
  std::optional<BigInt> exact_exp;
  double numeric = 0.0;
  /// Certified bound on |numeric - M(p)| (0 up to double rounding when exact).
  double error_bound = 0.0;
};

inline constexpr double kDefaultMahlerTolerance = 1e-9;

MahlerMeasure mahler_measure(const LaurentPolyZ& p, double tol = kDefaultMahlerTolerance);

/// Multiplicity of the root t = 1.
int multiplicity_at_one(const LaurentPolyZ& p);
LaurentPolyZ strip_unit_roots_at_one(const LaurentPolyZ& p);

} // namespace infcov
