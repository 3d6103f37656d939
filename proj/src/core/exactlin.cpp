#include "infcov/exactlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace infcov {

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c, BigInt(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      fail(ErrorKind::InvalidInput, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorKind::InvalidInput, "matrix dimensions do not chain");
  IntMatrix out(a.rows(), b.cols(), BigInt(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(out(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

LaurentMatrixZ multiply(const LaurentMatrixZ& a, const LaurentMatrixZ& b) {
  if (a.cols() != b.rows())
    fail(ErrorKind::InvalidInput, "matrix dimensions do not chain");
  LaurentMatrixZ out(a.rows(), b.cols(), LaurentPolyZ{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero())
          out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

LaurentMatrixZ transpose(const LaurentMatrixZ& m) {
  LaurentMatrixZ out(m.cols(), m.rows(), LaurentPolyZ{});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(j, i) = m(i, j);
  return out;
}

LaurentMatrixZ block_diag(const LaurentMatrixZ& a, const LaurentMatrixZ& b) {
  LaurentMatrixZ out(a.rows() + b.rows(), a.cols() + b.cols(), LaurentPolyZ{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

bool is_zero(const LaurentMatrixZ& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        return false;
  return true;
}

bool is_zero(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Smith normal form over Z

namespace {

struct Overflow {};

struct I64Ops {
  using T = std::int64_t;
  static bool zero(T a) { return a == 0; }
  static bool abs_less(T a, T b) { return (a < 0 ? -a : a) < (b < 0 ? -b : b); }
  static T quot(T a, T b) { return a / b; }
  // a -= q * b
  static void submul(T& a, T q, T b) {
    T p;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &a) ||
        a == INT64_MIN)
      throw Overflow{};
  }
};

struct BigOps {
  using T = BigInt;
  static bool zero(const T& a) { return a == 0; }
  static bool abs_less(const T& a, const T& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  static T quot(const T& a, const T& b) {
    T q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static void submul(T& a, const T& q, const T& b) { mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t()); }
};

/// Diagonalizes an m x n matrix in place; returns the nonzero diagonal.
template <class Ops>
std::vector<typename Ops::T> diagonalize(std::vector<typename Ops::T> a, std::size_t m, std::size_t n) {
  using T = typename Ops::T;
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
  std::vector<T> diag;
  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    // global minimum pivot of the remaining block
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!Ops::zero(at(i, j)) && (pi == m || Ops::abs_less(at(i, j), at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m)
      break;
    for (;;) {
      if (pi != t)
        for (std::size_t j = t; j < n; ++j)
          std::swap(at(pi, j), at(t, j));
      if (pj != t)
        for (std::size_t i = t; i < m; ++i)
          std::swap(at(i, pj), at(i, t));
      const T piv = at(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (Ops::zero(at(i, t)))
          continue;
        const T q = Ops::quot(at(i, t), piv);
        if (!Ops::zero(q))
          for (std::size_t j = t; j < n; ++j)
            if (!Ops::zero(at(t, j)))
              Ops::submul(at(i, j), q, at(t, j));
        if (!Ops::zero(at(i, t)))
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (Ops::zero(at(t, j)))
          continue;
        const T q = Ops::quot(at(t, j), piv);
        if (!Ops::zero(q))
          for (std::size_t i = t; i < m; ++i)
            if (!Ops::zero(at(i, t)))
              Ops::submul(at(i, j), q, at(i, t));
        if (!Ops::zero(at(t, j)))
          clean = false;
      }
      if (clean)
        break;
      pi = t;
      pj = t;
      for (std::size_t i = t + 1; i < m; ++i)
        if (!Ops::zero(at(i, t)) && Ops::abs_less(at(i, t), at(pi, pj))) {
          pi = i;
          pj = t;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (!Ops::zero(at(t, j)) && Ops::abs_less(at(t, j), at(pi, pj))) {
          pi = t;
          pj = j;
        }
    }
    diag.push_back(at(t, t));
  }
  return diag;
}

} // namespace

SnfResult snf_int(const IntMatrix& mat) {
  const std::size_t m = mat.rows(), n = mat.cols();
  std::vector<BigInt> diag;
  bool small = true;
  for (std::size_t i = 0; i < m && small; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!fits_int64(mat(i, j))) {
        small = false;
        break;
      }
  if (small) {
    std::vector<std::int64_t> a(m * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a[i * n + j] = to_int64(mat(i, j));
    try {
      for (std::int64_t d : diagonalize<I64Ops>(std::move(a), m, n))
        diag.emplace_back(static_cast<long>(d));
    } catch (const Overflow&) {
      small = false;
      diag.clear();
    }
  }
  if (!small) {
    std::vector<BigInt> a(m * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a[i * n + j] = mat(i, j);
    diag = diagonalize<BigOps>(std::move(a), m, n);
  }
  for (auto& d : diag)
    d = abs(d);
  // diag(a, b) ~ diag(gcd, lcm) restores the divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (mpz_divisible_p(diag[j].get_mpz_t(), diag[i].get_mpz_t()))
        continue;
      BigInt g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  SnfResult out;
  out.rank = diag.size();
  out.divisors = std::move(diag);
  return out;
}

namespace {

BigInt pollard_rho(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t()))
    return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      f(x);
      f(y);
      f(y);
      BigInt diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n)
      return d;
  }
}

void factor_into(BigInt n, std::map<BigInt, int>& out) {
  if (n == 1)
    return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  BigInt rest = n / d;
  factor_into(d, out);
  factor_into(rest, out);
}

} // namespace

std::map<BigInt, int> factorize(const BigInt& n_in) {
  if (n_in < 1)
    fail(ErrorKind::InvalidInput, "factorize expects a positive integer");
  std::map<BigInt, int> out;
  BigInt n = n_in;
  for (unsigned long p = 2; p < 10000; ++p) {
    if (p > 2 && p % 2 == 0)
      continue;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[BigInt(p)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
    if (n == 1)
      return out;
  }
  factor_into(n, out);
  return out;
}

TorsionSummary torsion_from_snf(const SnfResult& s) {
  TorsionSummary t;
  for (const auto& d : s.divisors)
    if (d > 1) {
      t.order *= d;
      for (const auto& [p, e] : factorize(d))
        t.factorization[p] += e;
    }
  return t;
}

// ---------------------------------------------------------------------------
// ranks

namespace {

/// Fraction-free elimination over an integral domain. `div` must be exact.
/// Returns pivot rows/columns (original indices) and the last pivot.
template <class T, class Ring>
std::size_t bareiss(Matrix<T>& a, const Ring& ring, std::vector<std::size_t>* prow = nullptr,
                    std::vector<std::size_t>* pcol = nullptr, T* last_pivot = nullptr) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  T prev = ring.one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = m;
    for (std::size_t i = r; i < m; ++i)
      if (!ring.is_zero(a(i, c))) {
        p = i;
        break;
      }
    if (p == m)
      continue;
    a.swap_rows(p, r);
    std::swap(perm[p], perm[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a(i, j) = ring.div(ring.sub(ring.mul(a(r, c), a(i, j)), ring.mul(a(i, c), a(r, j))), prev);
      a(i, c) = ring.zero();
    }
    prev = a(r, c);
    if (prow)
      prow->push_back(perm[r]);
    if (pcol)
      pcol->push_back(c);
    ++r;
  }
  if (last_pivot)
    *last_pivot = prev;
  return r;
}

struct BigRing {
  BigInt one() const { return 1; }
  BigInt zero() const { return 0; }
  bool is_zero(const BigInt& a) const { return a == 0; }
  BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
  BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
  BigInt div(const BigInt& a, const BigInt& b) const {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

struct LaurentZRing {
  LaurentPolyZ one() const { return LaurentPolyZ::constant(1); }
  LaurentPolyZ zero() const { return {}; }
  bool is_zero(const LaurentPolyZ& a) const { return a.is_zero(); }
  LaurentPolyZ mul(const LaurentPolyZ& a, const LaurentPolyZ& b) const { return a * b; }
  LaurentPolyZ sub(const LaurentPolyZ& a, const LaurentPolyZ& b) const { return a - b; }
  LaurentPolyZ div(const LaurentPolyZ& a, const LaurentPolyZ& b) const {
    auto q = divide_exact(a, b);
    if (!q)
      fail(ErrorKind::InvariantBreach, "fraction-free elimination lost exactness");
    return *q;
  }
};

struct LaurentKRing {
  FieldPtr field;
  LaurentPolyK one() const { return LaurentPolyK::constant(field, field->one()); }
  LaurentPolyK zero() const { return LaurentPolyK(field); }
  bool is_zero(const LaurentPolyK& a) const { return a.is_zero(); }
  LaurentPolyK mul(const LaurentPolyK& a, const LaurentPolyK& b) const { return a * b; }
  LaurentPolyK sub(const LaurentPolyK& a, const LaurentPolyK& b) const { return a - b; }
  LaurentPolyK div(const LaurentPolyK& a, const LaurentPolyK& b) const {
    auto q = divide_exact(a, b);
    if (!q)
      fail(ErrorKind::InvariantBreach, "fraction-free elimination lost exactness");
    return *q;
  }
};

FieldPtr field_of(const LaurentMatrixK& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).field())
        return m(i, j).field();
  return nullptr;
}

} // namespace

std::size_t rank_int(const IntMatrix& m) {
  IntMatrix a = m;
  return bareiss(a, BigRing{});
}

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  if (p == 0)
    return rank_int(m);
  if (!is_prime(p))
    fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  BigInt r;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_fdiv_r_ui(r.get_mpz_t(), m(i, j).get_mpz_t(), static_cast<unsigned long>(p));
      a[i * cols + j] = r.get_si();
    }
  auto inv = [p](std::int64_t x) {
    std::int64_t res = 1, e = p - 2;
    __int128 b = x;
    while (e > 0) {
      if (e & 1)
        res = static_cast<std::int64_t>((res * b) % p);
      b = (b * b) % p;
      e >>= 1;
    }
    return res;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (a[i * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows)
      continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[piv * cols + j], a[rank * cols + j]);
    const std::int64_t iv = inv(a[rank * cols + c]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t f = static_cast<std::int64_t>((static_cast<__int128>(a[i * cols + c]) * iv) % p);
      if (f == 0)
        continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::int64_t v = a[i * cols + j] - static_cast<std::int64_t>((static_cast<__int128>(f) * a[rank * cols + j]) % p);
        a[i * cols + j] = v < 0 ? v + p : v;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_over_field(const FieldMatrix& m, const Field& F) {
  FieldMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (!F.is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv == rows)
      continue;
    a.swap_rows(piv, rank);
    const FieldElem iv = F.inv(a(rank, c));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (F.is_zero(a(i, c)))
        continue;
      const FieldElem f = F.mul(a(i, c), iv);
      for (std::size_t j = c; j < cols; ++j)
        a(i, j) = F.sub(a(i, j), F.mul(f, a(rank, j)));
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_over_fraction_field(const LaurentMatrixZ& m) {
  LaurentMatrixZ a = m;
  return bareiss(a, LaurentZRing{});
}

std::size_t rank_over_fraction_field(const LaurentMatrixK& m) {
  FieldPtr f = field_of(m);
  if (!f)
    return 0;
  LaurentMatrixK a = m;
  return bareiss(a, LaurentKRing{f});
}

// ---------------------------------------------------------------------------
// Fitting gcds

namespace {

LaurentPolyZ minor_det(const LaurentMatrixZ& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  const std::size_t r = rows.size();
  LaurentMatrixZ sub(r, r, LaurentPolyZ{});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      sub(i, j) = m(rows[i], cols[j]);
  LaurentPolyZ last;
  if (bareiss(sub, LaurentZRing{}, nullptr, nullptr, &last) < r)
    return {};
  return last;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j)
        c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace

MinorGcdZ minor_gcd_laurent(const LaurentMatrixZ& m) {
  MinorGcdZ out;
  if (is_zero(m))
    return out;
  LaurentMatrixZ work = m;
  std::vector<std::size_t> prow, pcol;
  const std::size_t r = bareiss(work, LaurentZRing{}, &prow, &pcol);
  out.rank = r;
  std::sort(prow.begin(), prow.end());

  LaurentPolyZ content;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      content = gcd(content, m(i, j));
  // every r x r minor is divisible by content^r
  const LaurentPolyZ floor = canonical_rep(pow(content, static_cast<unsigned>(r))).poly();

  LaurentPolyZ g = canonical_rep(minor_det(m, prow, pcol)).poly();
  if (g == floor) {
    out.delta = canonical_rep(g);
    return out;
  }
  std::vector<std::size_t> rows(r), cols(r);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  do {
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    do {
      const LaurentPolyZ d = minor_det(m, rows, cols);
      if (d.is_zero())
        continue;
      g = gcd(g, d);
      if (g == floor) {
        out.delta = canonical_rep(g);
        return out;
      }
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  out.delta = canonical_rep(g);
  return out;
}

namespace {

/// a = q b + r with span(r) < span(b) in K[t, t^-1].
std::pair<LaurentPolyK, LaurentPolyK> laurent_divmod(const LaurentPolyK& a, const LaurentPolyK& b) {
  auto [q, r] = poly_divmod(a, b);
  const FieldPtr& f = a.field();
  const FieldElem one = f->one();
  return {q * LaurentPolyK::monomial(f, one, a.min_exp() - b.min_exp()),
          r * LaurentPolyK::monomial(f, one, a.min_exp())};
}

} // namespace

MinorGcdK minor_gcd_over_field(const LaurentMatrixK& m, FieldPtr field) {
  MinorGcdK out{0, LaurentPolyK::constant(field, field->one())};
  LaurentMatrixK a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  LaurentPolyK prod = LaurentPolyK::constant(field, field->one());
  const std::size_t lim = std::min(rows, cols);
  auto span_less = [](const LaurentPolyK& x, const LaurentPolyK& y) { return x.span() < y.span(); };
  for (std::size_t t = 0; t < lim; ++t) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!a(i, j).is_zero() && (pi == rows || span_less(a(i, j), a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows)
      break;
    for (;;) {
      a.swap_rows(pi, t);
      a.swap_cols(pj, t);
      const LaurentPolyK piv = a(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero())
          continue;
        const LaurentPolyK q = laurent_divmod(a(i, t), piv).first;
        for (std::size_t j = t; j < cols; ++j)
          if (!a(t, j).is_zero())
            a(i, j) -= q * a(t, j);
        if (!a(i, t).is_zero())
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero())
          continue;
        const LaurentPolyK q = laurent_divmod(a(t, j), piv).first;
        for (std::size_t i = t; i < rows; ++i)
          if (!a(i, t).is_zero())
            a(i, j) -= q * a(i, t);
        if (!a(t, j).is_zero())
          clean = false;
      }
      if (clean)
        break;
      pi = t;
      pj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (!a(i, t).is_zero() && span_less(a(i, t), a(pi, pj))) {
          pi = i;
          pj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!a(t, j).is_zero() && span_less(a(t, j), a(pi, pj))) {
          pi = t;
          pj = j;
        }
    }
    prod = prod * a(t, t);
    ++out.rank;
  }
  out.delta = prod.monic();
  return out;
}

// ---------------------------------------------------------------------------

IntMatrix cyclic_substitute(const LaurentMatrixZ& m, std::int64_t n) {
  if (n < 1)
    fail(ErrorKind::InvalidInput, "cover order must be positive");
  const auto N = static_cast<std::size_t>(n);
  IntMatrix out(m.rows() * N, m.cols() * N, BigInt(0));
  std::vector<BigInt> folded(N);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LaurentPolyZ& h = m(i, j);
      if (h.is_zero())
        continue;
      std::fill(folded.begin(), folded.end(), BigInt(0));
      for (std::size_t k = 0; k < h.coeffs().size(); ++k) {
        std::int64_t e = (h.min_exp() + static_cast<std::int64_t>(k)) % n;
        if (e < 0)
          e += n;
        folded[static_cast<std::size_t>(e)] += h.coeffs()[k];
      }
      // J^e sends basis vector c to c + e
      for (std::size_t e = 0; e < N; ++e) {
        if (folded[e] == 0)
          continue;
        for (std::size_t c = 0; c < N; ++c)
          out(i * N + (c + e) % N, j * N + c) += folded[e];
      }
    }
  return out;
}

LaurentMatrixK to_field(const LaurentMatrixZ& m, FieldPtr field) {
  LaurentMatrixK out(m.rows(), m.cols(), LaurentPolyK(field));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        out(i, j) = LaurentPolyK::from_z(field, m(i, j));
  return out;
}

FieldMatrix specialize(const LaurentMatrixZ& m, const Field& F, const FieldElem& x) {
  FieldMatrix out(m.rows(), m.cols(), F.zero());
  const bool need_inv = !F.is_zero(x);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LaurentPolyZ& h = m(i, j);
      if (h.is_zero())
        continue;
      if (h.min_exp() < 0 && !need_inv)
        fail(ErrorKind::DivisionByZero, "negative power evaluated at zero");
      FieldElem acc = F.zero();
      for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it)
        acc = F.add(F.mul(acc, x), F.from_int(*it));
      if (h.min_exp() != 0)
        acc = F.mul(acc, F.pow(x, h.min_exp()));
      out(i, j) = acc;
    }
  return out;
}

LaurentMatrixZ elementary_ops_normalize(LaurentMatrixZ m, const std::vector<ElementaryOp>& ops) {
  using K = ElementaryOp::Kind;
  for (const auto& op : ops) {
    const bool on_rows = op.kind == K::SwapRows || op.kind == K::ScaleRow || op.kind == K::AddRow;
    const std::size_t lim = on_rows ? m.rows() : m.cols();
    const bool uses_b = op.kind == K::SwapRows || op.kind == K::SwapCols || op.kind == K::AddRow ||
                        op.kind == K::AddCol;
    if (op.a >= lim || (uses_b && op.b >= lim))
      fail(ErrorKind::IllegalOp, "elementary operation index out of range");
    switch (op.kind) {
    case K::SwapRows:
      m.swap_rows(op.a, op.b);
      break;
    case K::SwapCols:
      m.swap_cols(op.a, op.b);
      break;
    case K::ScaleRow:
    case K::ScaleCol:
      if (!op.factor.is_unit())
        fail(ErrorKind::IllegalOp, "scaling by " + op.factor.to_string() + " is not a unit");
      if (on_rows)
        for (std::size_t j = 0; j < m.cols(); ++j)
          m(op.a, j) = m(op.a, j) * op.factor;
      else
        for (std::size_t i = 0; i < m.rows(); ++i)
          m(i, op.a) = m(i, op.a) * op.factor;
      break;
    case K::AddRow:
    case K::AddCol:
      if (op.a == op.b)
        fail(ErrorKind::IllegalOp, "cannot add a line to itself");
      if (on_rows)
        for (std::size_t j = 0; j < m.cols(); ++j)
          m(op.a, j) += op.factor * m(op.b, j);
      else
        for (std::size_t i = 0; i < m.rows(); ++i)
          m(i, op.a) += op.factor * m(i, op.b);
      break;
    }
  }
  return m;
}

} // namespace infcov
