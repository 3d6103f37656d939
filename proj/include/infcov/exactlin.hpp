#pragma once

#include "infcov/fields.hpp"
#include "infcov/laurent.hpp"
#include "infcov/laurent_field.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace infcov {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using LaurentMatrixZ = Matrix<LaurentPolyZ>;
using LaurentMatrixK = Matrix<LaurentPolyK>;
/// Entries interpreted in a Field passed alongside.
using FieldMatrix = Matrix<FieldElem>;

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);
IntMatrix identity_int(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
LaurentMatrixZ multiply(const LaurentMatrixZ& a, const LaurentMatrixZ& b);
LaurentMatrixZ transpose(const LaurentMatrixZ& m);
LaurentMatrixZ block_diag(const LaurentMatrixZ& a, const LaurentMatrixZ& b);
bool is_zero(const LaurentMatrixZ& m);
bool is_zero(const IntMatrix& m);

struct SnfResult {
  std::vector<BigInt> divisors; ///< d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;
};

/// Elementary divisors over Z. A checked 64-bit pass runs first and falls
/// back to GMP integers on overflow.
SnfResult snf_int(const IntMatrix& m);

struct TorsionSummary {
  BigInt order = 1;
  std::map<BigInt, int> factorization;
};
TorsionSummary torsion_from_snf(const SnfResult& s);
/// Prime factorization of n >= 1 (trial division plus Pollard rho).
std::map<BigInt, int> factorize(const BigInt& n);

std::size_t rank_int(const IntMatrix& m);
std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p);
std::size_t rank_over_field(const FieldMatrix& m, const Field& field);

std::size_t rank_over_fraction_field(const LaurentMatrixZ& m);
std::size_t rank_over_fraction_field(const LaurentMatrixK& m);

struct MinorGcdZ {
  std::size_t rank = 0;
  CanonicalAlexanderRep delta = CanonicalAlexanderRep::one();
};
/// Rank over Q(t) and the canonical gcd of all rank x rank minors
/// (1 for the zero matrix).
MinorGcdZ minor_gcd_laurent(const LaurentMatrixZ& m);

struct MinorGcdK {
  std::size_t rank = 0;
  LaurentPolyK delta; ///< monic, min_exp 0
};
/// Same over K[t, t^-1], computed through a Smith form over K[t].
MinorGcdK minor_gcd_over_field(const LaurentMatrixK& m, FieldPtr field);

/// h(t) -> h(J_N) blockwise, J_N the cyclic shift.
IntMatrix cyclic_substitute(const LaurentMatrixZ& m, std::int64_t n);

LaurentMatrixK to_field(const LaurentMatrixZ& m, FieldPtr field);
/// Entrywise evaluation at t = x.
FieldMatrix specialize(const LaurentMatrixZ& m, const Field& field, const FieldElem& x);

struct ElementaryOp {
  enum class Kind { SwapRows, SwapCols, ScaleRow, ScaleCol, AddRow, AddCol };
  Kind kind;
  std::size_t a = 0; ///< target row/column
  std::size_t b = 0; ///< source for Add*, partner for Swap*
  LaurentPolyZ factor = LaurentPolyZ::constant(1);
};

/// Applies the operations in order. AddRow adds factor * row b to row a.
/// Scalings must be by units +-t^j (IllegalOp otherwise).
LaurentMatrixZ elementary_ops_normalize(LaurentMatrixZ m, const std::vector<ElementaryOp>& ops);

} // namespace infcov
