#pragma once
// Helpers and brute-force oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's elimination code.

#include "infcov/arrangements.hpp"
#include "infcov/covers.hpp"
#include "infcov/exactlin.hpp"
#include "infcov/fox.hpp"
#include "infcov/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace testsupport {

using namespace infcov;

inline LaurentPolyZ lz(std::initializer_list<long> coeffs, std::int64_t min_exp = 0) {
  std::vector<BigInt> c;
  for (long v : coeffs)
    c.emplace_back(v);
  return LaurentPolyZ(min_exp, std::move(c));
}

inline LaurentMatrixZ lmat(std::size_t rows, std::size_t cols, std::vector<LaurentPolyZ> entries) {
  LaurentMatrixZ m(rows, cols, LaurentPolyZ());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = entries[i * cols + j];
  return m;
}

inline Word word(std::initializer_list<std::pair<int, int>> letters) {
  Word w;
  for (auto [g, e] : letters)
    w.push_back(Letter{g, e});
  return w;
}

// Determinant by cofactor expansion along the first row.
inline BigInt laplace_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0)
    return 1;
  if (n == 1)
    return a[0][0];
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0)
      continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j)
          row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    const BigInt term = a[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t v = start; v + (k - pos) <= n; ++v) {
      idx[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

// Elementary divisors from determinantal divisors D_k = gcd of all k x k minors.
inline std::vector<BigInt> brute_force_divisors(const IntMatrix& m) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    BigInt g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            a[i][j] = m(rows[i], cols[j]);
        BigInt d = laplace_det(a);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0)
      break;
    out.push_back(BigInt(g / prev));
    prev = g;
  }
  return out;
}

// Rank over Q by textbook Gauss-Jordan on rationals.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<BigRat>> a(m.rows(), std::vector<BigRat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = BigRat(m(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0)
      ++piv;
    if (piv == m.rows())
      continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      const BigRat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Rank over F_p with machine integers.
inline std::size_t rank_mod(const IntMatrix& m, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt v = m(i, j) % p;
      if (v < 0)
        v += p;
      a[i][j] = v.get_si();
    }
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1)
        r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0)
      ++piv;
    if (piv == m.rows())
      continue;
    std::swap(a[piv], a[r]);
    const std::int64_t iv = inv(a[r][c]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      const std::int64_t f = a[i][c] * iv % p;
      for (std::size_t j = c; j < m.cols(); ++j)
        a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(rows, cols, BigInt(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = d(rng);
  return m;
}

inline LaurentPolyZ random_laurent(std::mt19937_64& rng, int max_deg, long bound) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<BigInt> co(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : co)
    x = c(rng);
  return LaurentPolyZ(0, std::move(co));
}

// Primitive integer vector up to sign: first nonzero entry positive.
inline std::vector<BigInt> normalize_point(std::vector<BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (auto& x : v)
    x /= g;
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0)
        for (auto& y : v)
          y = -y;
      break;
    }
  return v;
}

// Points of an integer P2 arrangement as sets of incident lines, found by
// cross products and dot products only.
inline std::set<std::vector<std::size_t>> brute_force_incidence(const std::vector<std::vector<std::int64_t>>& lines) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& a = lines[i];
      const auto& b = lines[j];
      std::vector<BigInt> p{BigInt(a[1] * b[2] - a[2] * b[1]), BigInt(a[2] * b[0] - a[0] * b[2]),
                            BigInt(a[0] * b[1] - a[1] * b[0])};
      p = normalize_point(p);
      std::vector<std::size_t> inc;
      for (std::size_t k = 0; k < lines.size(); ++k)
        if (lines[k][0] * p[0] + lines[k][1] * p[1] + lines[k][2] * p[2] == 0)
          inc.push_back(k);
      out.insert(inc);
    }
  return out;
}

inline std::int64_t integer_sum(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

} // namespace testsupport
