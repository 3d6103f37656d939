// Mahler measure. Cyclotomic-type inputs are handled exactly; otherwise the
// non-cyclotomic squarefree parts are solved with Aberth iteration in long
// double and every root is enclosed in an inclusion disc whose radius bounds
// the error of its contribution.

#include "infcov/laurent.hpp"

#include "dense_poly.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace infcov {
namespace {

using cld = std::complex<long double>;

long double to_ld(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

double log_abs(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

struct Evaluation {
  cld value;
  cld deriv;
  long double abs_bound; ///< sum |a_j| |z|^j
};

Evaluation horner(const std::vector<long double>& a, cld z) {
  cld v = 0, d = 0;
  long double bound = 0;
  const long double r = std::abs(z);
  for (std::size_t i = a.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + a[i];
    bound = bound * r + std::fabs(a[i]);
  }
  return {v, d, bound};
}

/// Squarefree decomposition (Yun) of a primitive polynomial with nonzero
/// constant term: p = prod f_k^k. Returns (f_k, k) with deg f_k > 0.
std::vector<std::pair<dense::Poly, int>> squarefree(const dense::Poly& p) {
  std::vector<std::pair<dense::Poly, int>> out;
  dense::Poly dp = dense::derivative(p);
  dense::Poly a = dense::gcd_primitive(p, dp);
  dense::Poly b = *dense::divide_exact(p, a);
  if (a.size() == 1) {
    out.emplace_back(p, 1);
    return out;
  }
  dense::Poly c = *dense::divide_exact(dense::Poly(dp), a);
  dense::Poly db = dense::derivative(b);
  // d = c - b'
  dense::Poly d(std::max(c.size(), db.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = (i < c.size() ? c[i] : BigInt(0)) - (i < db.size() ? db[i] : BigInt(0));
  dense::trim(d);
  int k = 1;
  while (b.size() > 1) {
    dense::Poly g = d.empty() ? b : dense::gcd_primitive(b, d);
    // rescale so that g divides b over Z
    if (g.size() > 1)
      out.emplace_back(g, k);
    auto nb = dense::divide_exact(b, g);
    if (!nb) {
      // b and g are primitive, so g | b over Q implies g | b over Z.
      fail(ErrorKind::InvariantBreach, "squarefree decomposition lost exactness");
    }
    b = std::move(*nb);
    if (b.size() <= 1)
      break;
    auto nc = dense::divide_exact(d, g);
    c = nc ? std::move(*nc) : dense::Poly{};
    db = dense::derivative(b);
    d.assign(std::max(c.size(), db.size()), BigInt(0));
    for (std::size_t i = 0; i < d.size(); ++i)
      d[i] = (i < c.size() ? c[i] : BigInt(0)) - (i < db.size() ? db[i] : BigInt(0));
    dense::trim(d);
    ++k;
  }
  return out;
}

/// Contribution sum log max(1, |alpha|) over the roots of a squarefree
/// polynomial, with a certified error bound. Returns false when the
/// enclosures could not be separated.
bool root_contribution(const dense::Poly& f, double& value, double& err) {
  const std::size_t deg = f.size() - 1;
  std::vector<long double> a(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    a[i] = to_ld(f[i]);
  const long double lead = a.back();

  // Cauchy radius bound.
  long double radius = 0;
  for (std::size_t i = 0; i < deg; ++i)
    radius = std::max(radius, std::fabs(a[i] / lead));
  radius += 1;

  std::vector<cld> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    const long double ang = 2 * std::numbers::pi_v<long double> * (static_cast<long double>(i) + 0.25L) /
                            static_cast<long double>(deg);
    z[i] = std::polar(radius * 0.5L + 0.1L, ang);
  }

  const long double eps = std::numeric_limits<long double>::epsilon();
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      const Evaluation ev = horner(a, z[i]);
      if (ev.value == cld(0))
        continue;
      const cld ratio = ev.value / ev.deriv;
      cld sum = 0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i)
          sum += cld(1) / (z[i] - z[j]);
      const cld step = ratio / (cld(1) - ratio * sum);
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max<long double>(1, std::abs(z[i])));
    }
    if (worst < 16 * eps && iter > 4)
      break;
  }

  // Inclusion discs: radius deg * |f(z_i)| / |lead * prod (z_i - z_j)|.
  std::vector<long double> rad(deg);
  const long double ev_pad = 8 * static_cast<long double>(deg + 1) * eps;
  for (std::size_t i = 0; i < deg; ++i) {
    const Evaluation ev = horner(a, z[i]);
    cld denom = lead;
    for (std::size_t j = 0; j < deg; ++j)
      if (j != i)
        denom *= (z[i] - z[j]);
    const long double num = std::abs(ev.value) + ev_pad * ev.abs_bound;
    const long double dn = std::abs(denom);
    if (dn == 0 || !std::isfinite(dn))
      return false;
    rad[i] = static_cast<long double>(deg) * num / dn * (1 + 4 * static_cast<long double>(deg) * eps);
  }
  for (std::size_t i = 0; i < deg; ++i)
    for (std::size_t j = i + 1; j < deg; ++j)
      if (std::abs(z[i] - z[j]) <= rad[i] + rad[j])
        return false;

  long double sum = 0, bound = 0;
  for (std::size_t i = 0; i < deg; ++i) {
    const long double m = std::abs(z[i]);
    if (m > 1)
      sum += std::log(m);
    if (m + rad[i] > 1)
      bound += rad[i];
    bound += 4 * eps;
  }
  value = static_cast<double>(sum);
  err = static_cast<double>(bound);
  return true;
}

} // namespace

MahlerMeasure mahler_measure(const LaurentPolyZ& p, double tol) {
  if (p.is_zero())
    fail(ErrorKind::ZeroPolynomial, "Mahler measure of the zero polynomial");
  if (!(tol > 0))
    fail(ErrorKind::InvalidInput, "Mahler tolerance must be positive");
  const CyclotomicSplit split = split_cyclotomic(p);
  MahlerMeasure out;
  if (split.rest.span() == 0) {
    out.exact_exp = split.content;
    out.numeric = log_abs(split.content);
    return out;
  }
  // log |content| + M(rest); rest is primitive with positive leading term.
  double total = log_abs(split.content);
  double err = 0;
  for (const auto& [f, mult] : squarefree(split.rest.coeffs())) {
    double v = 0, e = 0;
    if (!root_contribution(f, v, e))
      fail(ErrorKind::ToleranceNotReached, "could not separate root enclosures for " +
                                               LaurentPolyZ(0, f).to_string());
    total += mult * (log_abs(f.back()) + v);
    err += mult * e;
  }
  if (err > tol)
    fail(ErrorKind::ToleranceNotReached,
         "certified Mahler error " + std::to_string(err) + " exceeds tolerance " + std::to_string(tol));
  out.numeric = total;
  out.error_bound = err;
  return out;
}

} // namespace infcov
