#include "infcov/fields.hpp"

#include "infcov/laurent.hpp"
#include "prime_poly.hpp"

#include <numeric>
#include <sstream>

namespace infcov {
namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

bool rabin_irreducible(const primepoly::Ring& R, const primepoly::Poly& f) {
  const std::int64_t k = static_cast<std::int64_t>(f.size()) - 1;
  if (k == 1)
    return true;
  const primepoly::Poly x{BigRat(0), BigRat(1)};
  if (R.sub(R.frobenius_power(f, k), R.rem(x, f)) != primepoly::Poly{})
    return false;
  for (std::int64_t q : prime_factors(k)) {
    primepoly::Poly h = R.sub(R.frobenius_power(f, k / q), R.rem(x, f));
    if (R.gcd(h, f).size() != 1)
      return false;
  }
  return true;
}

primepoly::Poly to_prime_poly(const LaurentPolyZ& p, const primepoly::Ring& R) {
  primepoly::Poly out;
  for (const auto& c : p.coeffs())
    out.emplace_back(c);
  return R.normalize(std::move(out));
}

} // namespace

std::int64_t coprime_part(std::int64_t mu, std::int64_t p) {
  if (mu < 1)
    fail(ErrorKind::InvalidInput, "coprime_part expects mu >= 1");
  if (p == 0)
    return mu;
  while (mu % p == 0)
    mu /= p;
  return mu;
}

std::int64_t order_mod(std::int64_t p, std::int64_t n) {
  if (n <= 1)
    return 1;
  if (std::gcd(p, n) != 1)
    fail(ErrorKind::InvalidInput, "order_mod needs coprime arguments");
  std::int64_t k = 1;
  std::int64_t v = p % n;
  while (v != 1) {
    v = static_cast<std::int64_t>((static_cast<__int128>(v) * p) % n);
    ++k;
  }
  return k;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::int64_t p = spec_.characteristic;
  if (p != 0 && !is_prime(p))
    fail(ErrorKind::InvalidInput, "field characteristic " + std::to_string(p) + " is not prime");
  if (spec_.modulus.size() < 2)
    fail(ErrorKind::InvalidInput, "field modulus must have degree >= 1");
  if (spec_.unity_order < 1)
    fail(ErrorKind::InvalidInput, "unity_order must be positive");
  const primepoly::Ring R{p};
  primepoly::Poly m;
  for (const auto& c : spec_.modulus)
    m.emplace_back(c);
  m = R.normalize(std::move(m));
  if (m.size() != spec_.modulus.size() || m.back() != 1)
    fail(ErrorKind::InvalidInput, "field modulus must be monic over the prime field");
  for (std::size_t i = 0; i < m.size(); ++i)
    spec_.modulus[i] = m[i].get_num();
  modulus_ = m;

  const int deg = degree();
  if (p == 0) {
    // Only cyclotomic number fields are supported in characteristic 0.
    LaurentPolyZ mz(0, spec_.modulus);
    for (std::int64_t n = 1; n <= 2 * deg * deg + 2 && cyclo_index_ == 0; ++n)
      if (euler_phi(n) == deg && cyclotomic_poly(n) == mz)
        cyclo_index_ = n;
    if (deg > 1 && cyclo_index_ == 0)
      fail(ErrorKind::InvalidInput, "characteristic-0 modulus must be a cyclotomic polynomial");
  } else if (!rabin_irreducible(R, modulus_)) {
    fail(ErrorKind::InvalidInput, "field modulus is reducible over F_" + std::to_string(p));
  }

  const std::int64_t u = coprime_part(spec_.unity_order, p);
  if (p != 0) {
    const BigInt q = ipow(BigInt(static_cast<long>(p)), static_cast<unsigned long>(deg));
    BigInt rem = (q - 1) % BigInt(static_cast<long>(u));
    if (rem != 0)
      fail(ErrorKind::InvalidInput, "field of size " + q.get_str() + " has no primitive " +
                                        std::to_string(u) + "-th root of unity");
  } else {
    // Roots of unity in Q(zeta_k) have order dividing lcm(2, k).
    const std::int64_t n = std::lcm<std::int64_t>(2, std::max<std::int64_t>(cyclo_index_, 1));
    if (n % u != 0)
      fail(ErrorKind::InvalidInput, "field does not contain a primitive " + std::to_string(u) +
                                        "-th root of unity");
  }
}

BigInt Field::size() const {
  if (!is_finite())
    fail(ErrorKind::InvalidInput, "characteristic-0 fields are infinite");
  return ipow(BigInt(static_cast<long>(characteristic())), static_cast<unsigned long>(degree()));
}

void Field::reduce_scalar(BigRat& c) const { primepoly::Ring{characteristic()}.reduce(c); }

std::vector<BigRat> Field::reduce_poly(std::vector<BigRat> p) const {
  const primepoly::Ring R{characteristic()};
  p = R.normalize(std::move(p));
  if (p.size() >= modulus_.size())
    p = R.rem(p, modulus_);
  p.resize(static_cast<std::size_t>(degree()));
  return p;
}

FieldElem Field::zero() const { return FieldElem{std::vector<BigRat>(static_cast<std::size_t>(degree()))}; }

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(const BigInt& v) const { return from_rational(BigRat(v)); }

FieldElem Field::from_rational(const BigRat& v) const {
  FieldElem e = zero();
  e.rep[0] = v;
  reduce_scalar(e.rep[0]);
  return e;
}

FieldElem Field::gen() const { return from_coeffs({BigRat(0), BigRat(1)}); }

FieldElem Field::from_coeffs(std::vector<BigRat> coeffs) const {
  return FieldElem{reduce_poly(std::move(coeffs))};
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a;
  for (std::size_t i = 0; i < r.rep.size(); ++i) {
    r.rep[i] += b.rep[i];
    reduce_scalar(r.rep[i]);
  }
  return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a;
  for (std::size_t i = 0; i < r.rep.size(); ++i) {
    r.rep[i] -= b.rep[i];
    reduce_scalar(r.rep[i]);
  }
  return r;
}

FieldElem Field::neg(const FieldElem& a) const {
  FieldElem r = a;
  for (auto& c : r.rep) {
    c = -c;
    reduce_scalar(c);
  }
  return r;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  if (degree() == 1) {
    FieldElem r{{a.rep[0] * b.rep[0]}};
    reduce_scalar(r.rep[0]);
    return r;
  }
  const primepoly::Ring R{characteristic()};
  primepoly::Poly pa = a.rep, pb = b.rep;
  R.trim(pa);
  R.trim(pb);
  return FieldElem{reduce_poly(R.mul(pa, pb))};
}

FieldElem Field::inv(const FieldElem& a) const {
  if (is_zero(a))
    fail(ErrorKind::DivisionByZero, "inverse of zero field element");
  const primepoly::Ring R{characteristic()};
  if (degree() == 1)
    return FieldElem{{R.inv(a.rep[0])}};
  primepoly::Poly pa = a.rep;
  R.trim(pa);
  auto [g, s] = R.inverse_mod(pa, modulus_);
  if (g.size() != 1)
    fail(ErrorKind::InvariantBreach, "field modulus is not irreducible");
  return FieldElem{reduce_poly(std::move(s))};
}

FieldElem Field::pow(const FieldElem& a, std::int64_t e) const {
  FieldElem base = e < 0 ? inv(a) : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  FieldElem r = one();
  while (k > 0) {
    if (k & 1u)
      r = mul(r, base);
    k >>= 1u;
    if (k > 0)
      base = mul(base, base);
  }
  return r;
}

bool Field::is_zero(const FieldElem& a) const {
  for (const auto& c : a.rep)
    if (c != 0)
      return false;
  return true;
}

bool Field::is_one(const FieldElem& a) const {
  if (a.rep.empty() || a.rep[0] != 1)
    return false;
  for (std::size_t i = 1; i < a.rep.size(); ++i)
    if (a.rep[i] != 0)
      return false;
  return true;
}

std::optional<std::int64_t> Field::multiplicative_order(const FieldElem& a, std::int64_t bound) const {
  if (is_zero(a))
    return std::nullopt;
  FieldElem cur = a;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (is_one(cur))
      return k;
    cur = mul(cur, a);
  }
  return std::nullopt;
}

FieldElem Field::element_at(std::uint64_t index) const {
  if (!is_finite())
    fail(ErrorKind::InvalidInput, "element enumeration needs a finite field");
  FieldElem e = zero();
  const auto p = static_cast<std::uint64_t>(characteristic());
  for (std::size_t i = 0; i < e.rep.size() && index > 0; ++i) {
    e.rep[i] = BigRat(static_cast<unsigned long>(index % p));
    index /= p;
  }
  return e;
}

FieldElem Field::primitive_element() const {
  if (primitive_)
    return *primitive_;
  const BigInt q = size();
  if (!q.fits_slong_p())
    fail(ErrorKind::OrderUnavailable, "field too large for primitive element search");
  const std::int64_t order = q.get_si() - 1;
  const auto factors = prime_factors(order);
  for (std::int64_t idx = 1; idx <= order; ++idx) {
    FieldElem a = element_at(static_cast<std::uint64_t>(idx));
    bool generator = true;
    for (std::int64_t r : factors)
      if (is_one(pow(a, order / r))) {
        generator = false;
        break;
      }
    if (generator) {
      primitive_ = a;
      return a;
    }
  }
  fail(ErrorKind::InvariantBreach, "finite field without a primitive element");
}

FieldElem Field::random(std::mt19937_64& rng) const {
  if (is_finite()) {
    const BigInt q = size();
    if (q.fits_ulong_p()) {
      std::uniform_int_distribution<std::uint64_t> dist(0, q.get_ui() - 1);
      return element_at(dist(rng));
    }
    FieldElem e = zero();
    std::uniform_int_distribution<std::int64_t> dist(0, characteristic() - 1);
    for (auto& c : e.rep)
      c = BigRat(static_cast<long>(dist(rng)));
    return e;
  }
  FieldElem e = zero();
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (auto& c : e.rep)
    c = BigRat(dist(rng));
  return e;
}

FieldElem Field::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    FieldElem e = random(rng);
    if (!is_zero(e))
      return e;
  }
}

std::string Field::to_string(const FieldElem& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.rep.size(); i-- > 0;) {
    const BigRat& c = a.rep[i];
    if (c == 0)
      continue;
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    const BigRat mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str() << "*";
    os << "x";
    if (i > 1)
      os << "^" << i;
  }
  return first ? "0" : os.str();
}

FieldPtr rationals() {
  static const FieldPtr q = std::make_shared<const Field>(FieldSpec{});
  return q;
}

FieldPtr prime_field(std::int64_t p) {
  if (p == 0)
    return rationals();
  return make_splitting_field(p, 1);
}

FieldPtr make_splitting_field(std::int64_t characteristic, std::int64_t n) {
  if (n < 1)
    fail(ErrorKind::InvalidInput, "make_splitting_field expects n >= 1");
  if (characteristic == 0) {
    if (n <= 2)
      return std::make_shared<const Field>(FieldSpec{0, {BigInt(-1), BigInt(1)}, n});
    const LaurentPolyZ phi = cyclotomic_poly(n);
    return std::make_shared<const Field>(FieldSpec{0, phi.coeffs(), n});
  }
  if (!is_prime(characteristic))
    fail(ErrorKind::InvalidInput, std::to_string(characteristic) + " is not prime");
  const std::int64_t p = characteristic;
  const std::int64_t np = coprime_part(n, p);
  const std::int64_t k = order_mod(p, np);
  const primepoly::Ring R{p};
  const primepoly::Poly phi = to_prime_poly(cyclotomic_poly(np), R);
  if (k == 1) {
    // Phi_np splits into linear factors; take the root with smallest value.
    for (std::int64_t a = 0; a < p; ++a) {
      primepoly::Poly cand{BigRat(static_cast<long>((p - a) % p)), BigRat(1)};
      if (R.rem(phi, cand).empty())
        return std::make_shared<const Field>(
            FieldSpec{p, {cand[0].get_num(), BigInt(1)}, n});
    }
    fail(ErrorKind::InvariantBreach, "no linear factor of a split cyclotomic polynomial");
  }
  // Every monic divisor of degree k is irreducible; take the first one in
  // base-p order of its lower coefficients.
  const BigInt count = ipow(BigInt(static_cast<long>(p)), static_cast<unsigned long>(k));
  if (count > BigInt(1L << 22))
    fail(ErrorKind::OrderUnavailable, "extension of degree " + std::to_string(k) + " over F_" +
                                          std::to_string(p) + " is too large to search");
  const std::uint64_t total = count.get_ui();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    primepoly::Poly cand(static_cast<std::size_t>(k) + 1);
    std::uint64_t v = idx;
    for (std::int64_t i = 0; i < k; ++i) {
      cand[static_cast<std::size_t>(i)] = BigRat(static_cast<unsigned long>(v % static_cast<std::uint64_t>(p)));
      v /= static_cast<std::uint64_t>(p);
    }
    cand.back() = 1;
    if (cand[0] == 0)
      continue;
    if (R.rem(phi, cand).empty()) {
      std::vector<BigInt> mod;
      for (const auto& c : cand)
        mod.push_back(c.get_num());
      return std::make_shared<const Field>(FieldSpec{p, std::move(mod), n});
    }
  }
  fail(ErrorKind::InvariantBreach, "no irreducible factor of degree " + std::to_string(k) + " found");
}

FieldPtr make_field_with_min_size(std::int64_t characteristic, std::int64_t n,
                                  std::uint64_t min_nonzero) {
  if (characteristic == 0)
    return make_splitting_field(0, n);
  const std::int64_t p = characteristic;
  const std::int64_t base = order_mod(p, coprime_part(n, p));
  std::int64_t k = base;
  BigInt q = ipow(BigInt(static_cast<long>(p)), static_cast<unsigned long>(k));
  while (q - 1 < BigInt(static_cast<unsigned long>(min_nonzero))) {
    k += base;
    q = ipow(BigInt(static_cast<long>(p)), static_cast<unsigned long>(k));
  }
  if (k == base)
    return make_splitting_field(p, n);
  // Any irreducible of degree k works: it contains the degree-base subfield.
  const primepoly::Ring R{p};
  if (q > BigInt(1L << 40))
    fail(ErrorKind::FieldTooSmall, "requested field size out of range");
  const std::uint64_t total = q.get_ui();
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    primepoly::Poly cand(static_cast<std::size_t>(k) + 1);
    std::uint64_t v = idx;
    for (std::int64_t i = 0; i < k; ++i) {
      cand[static_cast<std::size_t>(i)] = BigRat(static_cast<unsigned long>(v % static_cast<std::uint64_t>(p)));
      v /= static_cast<std::uint64_t>(p);
    }
    cand.back() = 1;
    if (cand[0] == 0 || !rabin_irreducible(R, cand))
      continue;
    std::vector<BigInt> mod;
    for (const auto& c : cand)
      mod.push_back(c.get_num());
    return std::make_shared<const Field>(FieldSpec{p, std::move(mod), n});
  }
  fail(ErrorKind::InvariantBreach, "no irreducible polynomial of degree " + std::to_string(k) + " found");
}

FieldElem root_of_unity(const Field& field, std::int64_t n) {
  if (n < 1)
    fail(ErrorKind::InvalidInput, "root_of_unity expects n >= 1");
  const std::int64_t p = field.characteristic();
  const std::int64_t np = coprime_part(n, p);
  if (np == 1)
    return field.one();
  if (p == 0) {
    const std::int64_t k = std::max<std::int64_t>(field.cyclotomic_index(), 1);
    // x has order k; -x generates all roots of unity when k is odd.
    FieldElem x = field.degree() == 1 ? field.from_int(k == 2 ? -1 : 1) : field.gen();
    if (k % np == 0)
      return field.pow(x, k / np);
    if (k % 2 == 1 && (2 * k) % np == 0)
      return field.pow(field.neg(x), 2 * k / np);
    fail(ErrorKind::OrderUnavailable,
         "field has no primitive " + std::to_string(np) + "-th root of unity");
  }
  const BigInt q = field.size();
  if (((q - 1) % BigInt(static_cast<long>(np))) != 0)
    fail(ErrorKind::OrderUnavailable,
         "field of size " + q.get_str() + " has no primitive " + std::to_string(np) + "-th root of unity");
  const FieldElem g = field.primitive_element();
  const BigInt qm1 = q - 1;
  return field.pow(g, qm1.get_si() / np);
}

} // namespace infcov
