#include "infcov/laurent_field.hpp"

#include <sstream>

namespace infcov {

bool same_field(const Field& a, const Field& b) {
  return &a == &b || (a.characteristic() == b.characteristic() && a.spec().modulus == b.spec().modulus);
}

LaurentPolyK::LaurentPolyK(FieldPtr field, std::int64_t min_exp, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentPolyK::trim() {
  while (!coeffs_.empty() && field_->is_zero(coeffs_.back()))
    coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && field_->is_zero(coeffs_[lead]))
    ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty())
    min_exp_ = 0;
}

void LaurentPolyK::check_same_field(const LaurentPolyK& o) const {
  if (!same_field(*field_, *o.field_))
    fail(ErrorKind::FieldMismatch, "Laurent polynomials over different fields");
}

LaurentPolyK LaurentPolyK::constant(FieldPtr field, const FieldElem& c) { return monomial(std::move(field), c, 0); }

LaurentPolyK LaurentPolyK::monomial(FieldPtr field, const FieldElem& c, std::int64_t exp) {
  return LaurentPolyK(std::move(field), exp, {c});
}

LaurentPolyK LaurentPolyK::from_z(FieldPtr field, const LaurentPolyZ& p) {
  std::vector<FieldElem> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs())
    cs.push_back(field->from_int(c));
  return LaurentPolyK(std::move(field), p.min_exp(), std::move(cs));
}

FieldElem LaurentPolyK::coeff(std::int64_t exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp())
    return field_->zero();
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

LaurentPolyK LaurentPolyK::monic() const {
  if (is_zero())
    return *this;
  return LaurentPolyK(field_, 0, coeffs_).scaled(field_->inv(leading()));
}

FieldElem LaurentPolyK::eval(const FieldElem& x) const {
  FieldElem acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = field_->add(field_->mul(acc, x), *it);
  if (min_exp_ != 0 && !is_zero())
    acc = field_->mul(acc, field_->pow(x, min_exp_));
  return acc;
}

LaurentPolyK LaurentPolyK::operator-() const {
  LaurentPolyK r = *this;
  for (auto& c : r.coeffs_)
    c = field_->neg(c);
  return r;
}

LaurentPolyK& LaurentPolyK::operator+=(const LaurentPolyK& o) {
  check_same_field(o);
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  const std::int64_t lo = std::min(min_exp_, o.min_exp_);
  const std::int64_t hi = std::max(max_exp(), o.max_exp());
  std::vector<FieldElem> out(static_cast<std::size_t>(hi - lo + 1), field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<std::size_t>(min_exp_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    auto& slot = out[static_cast<std::size_t>(o.min_exp_ - lo) + i];
    slot = field_->add(slot, o.coeffs_[i]);
  }
  min_exp_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPolyK& LaurentPolyK::operator-=(const LaurentPolyK& o) { return *this += -o; }

LaurentPolyK operator*(const LaurentPolyK& a, const LaurentPolyK& b) {
  a.check_same_field(b);
  if (a.is_zero() || b.is_zero())
    return LaurentPolyK(a.field_);
  const Field& F = *a.field_;
  std::vector<FieldElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (F.is_zero(a.coeffs_[i]))
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return LaurentPolyK(a.field_, a.min_exp_ + b.min_exp_, std::move(out));
}

LaurentPolyK LaurentPolyK::scaled(const FieldElem& c) const {
  std::vector<FieldElem> out;
  out.reserve(coeffs_.size());
  for (const auto& x : coeffs_)
    out.push_back(field_->mul(x, c));
  return LaurentPolyK(field_, min_exp_, std::move(out));
}

bool operator==(const LaurentPolyK& a, const LaurentPolyK& b) {
  return same_field(*a.field_, *b.field_) && a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentPolyK::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (field_->is_zero(coeffs_[i]))
      continue;
    const std::int64_t e = min_exp_ + static_cast<std::int64_t>(i);
    std::string c = field_->to_string(coeffs_[i]);
    const bool compound = c.find_first_of("+x") != std::string::npos ||
                          c.find(" - ") != std::string::npos;
    if (compound)
      c = "(" + c + ")";
    if (!first)
      os << " + ";
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != "1")
      os << c << "*";
    os << "t";
    if (e != 1)
      os << "^" << e;
  }
  return os.str();
}

std::pair<LaurentPolyK, LaurentPolyK> poly_divmod(const LaurentPolyK& a, const LaurentPolyK& b) {
  if (b.is_zero())
    fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (!same_field(*a.field(), *b.field()))
    fail(ErrorKind::FieldMismatch, "Laurent polynomials over different fields");
  const Field& F = *a.field();
  std::vector<FieldElem> r = a.coeffs();
  const auto& bc = b.coeffs();
  if (r.size() < bc.size())
    return {LaurentPolyK(a.field()), LaurentPolyK(a.field(), 0, std::move(r))};
  const FieldElem li = F.inv(bc.back());
  std::vector<FieldElem> q(r.size() - bc.size() + 1, F.zero());
  for (std::size_t k = q.size(); k-- > 0;) {
    const FieldElem c = F.mul(r[k + bc.size() - 1], li);
    if (F.is_zero(c))
      continue;
    q[k] = c;
    for (std::size_t j = 0; j < bc.size(); ++j)
      r[k + j] = F.sub(r[k + j], F.mul(c, bc[j]));
  }
  return {LaurentPolyK(a.field(), 0, std::move(q)), LaurentPolyK(a.field(), 0, std::move(r))};
}

std::optional<LaurentPolyK> divide_exact(const LaurentPolyK& a, const LaurentPolyK& b) {
  if (a.is_zero())
    return a;
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero())
    return std::nullopt;
  // polynomial parts divide; restore the monomial shift
  return q * LaurentPolyK::monomial(a.field(), a.field()->one(), a.min_exp() - b.min_exp());
}

LaurentPolyK gcd_over_field(const LaurentPolyK& a, const LaurentPolyK& b) {
  if (!same_field(*a.field(), *b.field()))
    fail(ErrorKind::FieldMismatch, "gcd of Laurent polynomials over different fields");
  if (a.is_zero() && b.is_zero())
    fail(ErrorKind::BothZero, "gcd of two zero polynomials");
  LaurentPolyK x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    LaurentPolyK r = poly_divmod(x, y).second;
    x = std::move(y);
    // t is a unit, so dropping a power of t from the remainder is harmless
    y = r.monic();
  }
  return x.monic();
}

LaurentPolyK reduce_mod_p(const LaurentPolyZ& p, FieldPtr field) {
  if (!field->is_finite())
    fail(ErrorKind::InvalidInput, "reduce_mod_p needs a field of prime characteristic");
  return LaurentPolyK::from_z(std::move(field), p);
}

} // namespace infcov
