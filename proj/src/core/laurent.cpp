#include "infcov/laurent.hpp"

#include "dense_poly.hpp"

#include <algorithm>
#include <sstream>

namespace infcov {

LaurentPolyZ::LaurentPolyZ(std::int64_t min_exp, std::vector<BigInt> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentPolyZ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0)
    ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty())
    min_exp_ = 0;
}

LaurentPolyZ LaurentPolyZ::constant(const BigInt& c) { return LaurentPolyZ(0, {c}); }

LaurentPolyZ LaurentPolyZ::monomial(const BigInt& c, std::int64_t exp) {
  return LaurentPolyZ(exp, {c});
}

LaurentPolyZ LaurentPolyZ::t_pow_minus_one(std::int64_t e) {
  return monomial(1, e) - constant(1);
}

BigInt LaurentPolyZ::coeff(std::int64_t exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp())
    return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

bool LaurentPolyZ::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

BigInt LaurentPolyZ::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

LaurentPolyZ LaurentPolyZ::primitive_part() const {
  if (is_zero())
    return {};
  BigInt c = content();
  if (leading() < 0)
    c = -c;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  return LaurentPolyZ(min_exp_, std::move(out));
}

BigInt LaurentPolyZ::eval(const BigInt& x) const {
  if (is_zero())
    return 0;
  if (min_exp_ < 0 && x != 1 && x != -1)
    fail(ErrorKind::InvalidInput, "cannot evaluate negative powers at " + x.get_str());
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  if (min_exp_ != 0) {
    // x is +-1 when min_exp < 0
    const std::int64_t e = min_exp_ < 0 ? -min_exp_ : min_exp_;
    acc *= ipow(x, static_cast<unsigned long>(e));
  }
  return acc;
}

BigInt LaurentPolyZ::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_)
    s += c;
  return s;
}

LaurentPolyZ LaurentPolyZ::shifted(std::int64_t k) const {
  LaurentPolyZ r = *this;
  if (!r.is_zero())
    r.min_exp_ += k;
  return r;
}

LaurentPolyZ LaurentPolyZ::operator-() const {
  LaurentPolyZ r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

LaurentPolyZ& LaurentPolyZ::operator+=(const LaurentPolyZ& o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  const std::int64_t lo = std::min(min_exp_, o.min_exp_);
  const std::int64_t hi = std::max(max_exp(), o.max_exp());
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(min_exp_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.coeffs_[i];
  min_exp_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPolyZ& LaurentPolyZ::operator-=(const LaurentPolyZ& o) { return *this += -o; }

LaurentPolyZ operator*(const LaurentPolyZ& a, const LaurentPolyZ& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  return LaurentPolyZ(a.min_exp_ + b.min_exp_, dense::mul(a.coeffs_, b.coeffs_));
}

LaurentPolyZ& LaurentPolyZ::operator*=(const LaurentPolyZ& o) { return *this = *this * o; }

LaurentPolyZ& LaurentPolyZ::operator*=(const BigInt& c) {
  if (c == 0)
    return *this = LaurentPolyZ();
  for (auto& x : coeffs_)
    x *= c;
  return *this;
}

std::string LaurentPolyZ::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0)
      continue;
    const std::int64_t e = min_exp_ + static_cast<std::int64_t>(i);
    BigInt mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str() << "*";
    os << "t";
    if (e != 1)
      os << "^" << e;
  }
  return os.str();
}

LaurentPolyZ pow(const LaurentPolyZ& p, unsigned exp) {
  LaurentPolyZ r = LaurentPolyZ::constant(1);
  LaurentPolyZ b = p;
  while (exp > 0) {
    if (exp & 1u)
      r *= b;
    exp >>= 1u;
    if (exp > 0)
      b *= b;
  }
  return r;
}

std::optional<LaurentPolyZ> divide_exact(const LaurentPolyZ& a, const LaurentPolyZ& b) {
  if (b.is_zero())
    fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (a.is_zero())
    return LaurentPolyZ();
  auto q = dense::divide_exact(a.coeffs(), b.coeffs());
  if (!q)
    return std::nullopt;
  return LaurentPolyZ(a.min_exp() - b.min_exp(), std::move(*q));
}

bool divides(const LaurentPolyZ& b, const LaurentPolyZ& a) {
  if (b.is_zero())
    return a.is_zero();
  return divide_exact(a, b).has_value();
}

LaurentPolyZ gcd(const LaurentPolyZ& a, const LaurentPolyZ& b) {
  if (a.is_zero() && b.is_zero())
    return {};
  if (a.is_zero())
    return canonical_rep(b).poly();
  if (b.is_zero())
    return canonical_rep(a).poly();
  BigInt c;
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  auto g = dense::gcd_primitive(a.primitive_part().coeffs(), b.primitive_part().coeffs());
  for (auto& x : g)
    x *= c;
  return LaurentPolyZ(0, std::move(g));
}

CanonicalAlexanderRep CanonicalAlexanderRep::one() {
  return CanonicalAlexanderRep(LaurentPolyZ::constant(1));
}

CanonicalAlexanderRep canonical_rep(const LaurentPolyZ& p) {
  if (p.is_zero())
    fail(ErrorKind::ZeroPolynomial, "canonical representative of the zero polynomial");
  LaurentPolyZ q = p.shifted(-p.min_exp());
  if (q.leading() < 0)
    q = -q;
  return CanonicalAlexanderRep(std::move(q));
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

LaurentPolyZ cyclotomic_poly(std::int64_t k) {
  if (k < 1)
    fail(ErrorKind::InvalidInput, "cyclotomic index must be positive");
  LaurentPolyZ num = LaurentPolyZ::t_pow_minus_one(k);
  for (std::int64_t d = 1; d < k; ++d) {
    if (k % d != 0)
      continue;
    auto q = divide_exact(num, cyclotomic_poly(d));
    if (!q)
      fail(ErrorKind::InvariantBreach, "cyclotomic recursion failed");
    num = std::move(*q);
  }
  return num;
}

CyclotomicSplit split_cyclotomic(const LaurentPolyZ& p) {
  if (p.is_zero())
    fail(ErrorKind::ZeroPolynomial, "cyclotomic split of the zero polynomial");
  CyclotomicSplit out;
  out.content = p.content();
  LaurentPolyZ rest = canonical_rep(p.primitive_part()).poly();
  const std::int64_t deg = rest.span();
  // phi(k) >= sqrt(k/2), so phi(k) <= deg forces k <= 2 deg^2.
  const std::int64_t kmax = std::max<std::int64_t>(2, 2 * deg * deg);
  for (std::int64_t k = 1; k <= kmax && rest.span() > 0; ++k) {
    if (euler_phi(k) > rest.span())
      continue;
    const LaurentPolyZ phi = cyclotomic_poly(k);
    int e = 0;
    while (rest.span() >= phi.span()) {
      auto q = divide_exact(rest, phi);
      if (!q)
        break;
      rest = std::move(*q);
      ++e;
    }
    if (e > 0)
      out.factors.emplace_back(k, e);
  }
  out.rest = canonical_rep(rest).poly();
  return out;
}

bool is_cyclotomic_type(const LaurentPolyZ& p) {
  return split_cyclotomic(p).rest.span() == 0;
}

int multiplicity_at_one(const LaurentPolyZ& p) {
  if (p.is_zero())
    fail(ErrorKind::ZeroPolynomial, "root multiplicity in the zero polynomial");
  const LaurentPolyZ t1 = LaurentPolyZ::t_minus_one();
  int v = 0;
  LaurentPolyZ q = p;
  while (q.eval_at_one() == 0) {
    q = *divide_exact(q, t1);
    ++v;
  }
  return v;
}

LaurentPolyZ strip_unit_roots_at_one(const LaurentPolyZ& p) {
  if (p.is_zero())
    fail(ErrorKind::ZeroPolynomial, "strip_unit_roots_at_one of the zero polynomial");
  const LaurentPolyZ t1 = LaurentPolyZ::t_minus_one();
  LaurentPolyZ q = p;
  while (q.eval_at_one() == 0)
    q = *divide_exact(q, t1);
  return q;
}

} // namespace infcov
