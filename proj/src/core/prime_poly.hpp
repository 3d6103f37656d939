#pragma once

// Univariate polynomials over a prime field (Q when p = 0, F_p otherwise),
// stored as ascending rational coefficient vectors. In characteristic p every
// coefficient is an integer in [0, p).

#include "infcov/common.hpp"

#include <utility>
#include <vector>

namespace infcov::primepoly {

using Poly = std::vector<BigRat>;

struct Ring {
  std::int64_t p = 0;

  void reduce(BigRat& c) const {
    if (p == 0)
      return;
    if (c.get_den() != 1) {
      BigInt den = c.get_den();
      BigInt num = c.get_num();
      BigInt mod(static_cast<long>(p));
      BigInt inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        fail(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
      num *= inv;
      c = num;
    }
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(p));
    c = r;
  }

  BigRat inv(const BigRat& c) const {
    if (c == 0)
      fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (p == 0)
      return 1 / c;
    BigInt r;
    BigInt mod(static_cast<long>(p));
    mpz_invert(r.get_mpz_t(), c.get_num_mpz_t(), mod.get_mpz_t());
    return BigRat(r);
  }

  void trim(Poly& a) const {
    while (!a.empty() && a.back() == 0)
      a.pop_back();
  }

  Poly normalize(Poly a) const {
    for (auto& c : a)
      reduce(c);
    trim(a);
    return a;
  }

  Poly add(const Poly& a, const Poly& b) const {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.size())
        out[i] += a[i];
      if (i < b.size())
        out[i] += b[i];
      reduce(out[i]);
    }
    trim(out);
    return out;
  }

  Poly sub(const Poly& a, const Poly& b) const {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.size())
        out[i] += a[i];
      if (i < b.size())
        out[i] -= b[i];
      reduce(out[i]);
    }
    trim(out);
    return out;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty())
      return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        out[i + j] += a[i] * b[j];
    }
    return normalize(std::move(out));
  }

  Poly scale(const Poly& a, const BigRat& c) const {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = a[i] * c;
      reduce(out[i]);
    }
    trim(out);
    return out;
  }

  /// (quotient, remainder) of a by nonzero b.
  std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const {
    if (b.empty())
      fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.size() < b.size())
      return {Poly{}, std::move(a)};
    const BigRat lead_inv = inv(b.back());
    Poly q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
      BigRat c = a[k + b.size() - 1] * lead_inv;
      reduce(c);
      if (c == 0)
        continue;
      q[k] = c;
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[k + j] -= c * b[j];
        reduce(a[k + j]);
      }
    }
    trim(a);
    trim(q);
    return {std::move(q), std::move(a)};
  }

  Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

  Poly monic(const Poly& a) const {
    if (a.empty())
      return a;
    return scale(a, inv(a.back()));
  }

  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// Returns (g, s) with g = s*a mod m, g = gcd(a, m) monic.
  std::pair<Poly, Poly> inverse_mod(const Poly& a, const Poly& m) const {
    Poly r0 = m, r1 = a, s0{}, s1{BigRat(1)};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      Poly s = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    const BigRat li = inv(r0.back());
    return {scale(r0, li), scale(s0, li)};
  }

  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return rem(mul(a, b), m); }

  /// x^(p^k) mod m by repeated p-th powering (finite p only).
  Poly frobenius_power(const Poly& m, std::int64_t k) const {
    Poly x{BigRat(0), BigRat(1)};
    Poly cur = rem(x, m);
    for (std::int64_t i = 0; i < k; ++i)
      cur = powmod(cur, static_cast<std::uint64_t>(p), m);
    return cur;
  }

  Poly powmod(Poly base, std::uint64_t e, const Poly& m) const {
    Poly r{BigRat(1)};
    r = rem(r, m);
    base = rem(base, m);
    while (e > 0) {
      if (e & 1u)
        r = mulmod(r, base, m);
      e >>= 1u;
      if (e > 0)
        base = mulmod(base, base, m);
    }
    return r;
  }
};

} // namespace infcov::primepoly
