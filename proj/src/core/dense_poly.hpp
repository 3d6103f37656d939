#pragma once

// Dense integer polynomial helpers on ascending coefficient vectors. Inputs
// are trimmed (no trailing zeros); the zero polynomial is the empty vector.

#include "infcov/common.hpp"

#include <optional>
#include <vector>

namespace infcov::dense {

using Poly = std::vector<BigInt>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(out);
  return out;
}

/// Quotient a / b over Z, or nullopt when b does not divide a exactly.
inline std::optional<Poly> divide_exact(Poly a, const Poly& b) {
  if (a.empty())
    return Poly{};
  if (a.size() < b.size())
    return std::nullopt;
  const BigInt& lb = b.back();
  Poly q(a.size() - b.size() + 1);
  BigInt c;
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = a[k + b.size() - 1];
    if (top == 0)
      continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      return std::nullopt;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_submul(a[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[k] = c;
  }
  for (const auto& x : a)
    if (x != 0)
      return std::nullopt;
  trim(q);
  return q;
}

inline BigInt content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline void make_primitive(Poly& p) {
  if (p.empty())
    return;
  BigInt g = content(p);
  if (p.back() < 0)
    g = -g;
  for (auto& c : p)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Pseudo-remainder of a by b up to a nonzero constant factor.
inline Poly pseudo_rem(Poly a, const Poly& b) {
  const BigInt& lb = b.back();
  BigInt lead;
  while (!a.empty() && a.size() >= b.size()) {
    lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a)
      x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_submul(a[shift + j].get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
    if (a.size() > 8)
      make_primitive(a);
  }
  return a;
}

/// gcd of two primitive polynomials, strip factors of t, positive leading
/// coefficient. Inputs must be nonzero.
inline Poly gcd_primitive(Poly a, Poly b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size())
    std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1)
      return Poly{1};
    Poly r = pseudo_rem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

inline Poly derivative(const Poly& p) {
  if (p.size() <= 1)
    return {};
  Poly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i)
    d[i - 1] = p[i] * static_cast<unsigned long>(i);
  trim(d);
  return d;
}

} // namespace infcov::dense
