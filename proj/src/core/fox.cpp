#include "infcov/fox.hpp"

#include <numeric>

namespace infcov {

LaurentMatrixZ EquivariantComplex::boundary_into(std::size_t i) const {
  const auto rows = static_cast<std::size_t>(ranks.at(i));
  const std::size_t cols = i + 1 < ranks.size() ? static_cast<std::size_t>(ranks[i + 1]) : 0;
  if (i < boundaries.size())
    return boundaries[i];
  return LaurentMatrixZ(rows, cols, LaurentPolyZ{});
}

LaurentMatrixZ EquivariantComplex::boundary_from(std::size_t i) const {
  if (i == 0)
    return LaurentMatrixZ(0, static_cast<std::size_t>(ranks.at(0)), LaurentPolyZ{});
  return boundary_into(i - 1);
}

void EquivariantComplex::validate(ErrorKind kind) const {
  if (ranks.empty())
    fail(kind, "complex needs at least one degree");
  for (auto r : ranks)
    if (r < 0)
      fail(kind, "negative module rank");
  if (boundaries.size() >= ranks.size())
    fail(kind, "more boundary matrices than degrees allow");
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    const auto& b = boundaries[i];
    if (b.rows() != static_cast<std::size_t>(ranks[i]) || b.cols() != static_cast<std::size_t>(ranks[i + 1]))
      fail(kind, "boundary " + std::to_string(i) + " has shape " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + ", expected " + std::to_string(ranks[i]) + "x" +
                     std::to_string(ranks[i + 1]));
  }
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i)
    if (!is_zero(multiply(boundaries[i], boundaries[i + 1])))
      fail(kind, "boundaries " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not compose to zero");
}

// ---------------------------------------------------------------------------

Word reduce_word(Word w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out)
    l.exp = -l.exp;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce_word(std::move(out));
}

Word power(int gen, std::int64_t k) {
  Word out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
    out.push_back({gen, k < 0 ? -1 : 1});
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

void GroupPresentation::validate() const {
  if (num_generators < 0)
    fail(ErrorKind::InvalidInput, "negative generator count");
  for (std::size_t r = 0; r < relators.size(); ++r) {
    for (const auto& l : relators[r]) {
      if (l.gen < 0 || l.gen >= num_generators)
        fail(ErrorKind::InvalidInput, "relator " + std::to_string(r) + " uses unknown generator " +
                                          std::to_string(l.gen));
      if (l.exp != 1 && l.exp != -1)
        fail(ErrorKind::InvalidInput, "relator " + std::to_string(r) + " has exponent other than +-1");
    }
    if (reduce_word(relators[r]) != relators[r])
      fail(ErrorKind::InvalidInput, "relator " + std::to_string(r) + " is not freely reduced");
  }
}

GroupRingElem add(const GroupRingElem& a, const GroupRingElem& b) {
  GroupRingElem out = a;
  for (const auto& [w, c] : b) {
    BigInt& slot = out[w];
    slot += c;
    if (slot == 0)
      out.erase(w);
  }
  return out;
}

GroupRingElem left_multiply(const Word& u, const GroupRingElem& x) {
  GroupRingElem out;
  for (const auto& [w, c] : x)
    out = add(out, GroupRingElem{{concat(u, w), c}});
  return out;
}

GroupRingElem fox_derivative(const Word& w, int gen) {
  GroupRingElem out;
  Word prefix;
  for (const auto& l : w) {
    if (l.gen == gen) {
      if (l.exp == 1)
        out = add(out, GroupRingElem{{reduce_word(prefix), BigInt(1)}});
      else
        out = add(out, GroupRingElem{{concat(prefix, Word{l}), BigInt(-1)}});
    }
    prefix.push_back(l);
  }
  return out;
}

std::int64_t exponent_sum(const Word& w, const EpimorphismToZ& nu) {
  std::int64_t s = 0;
  for (const auto& l : w)
    s += l.exp * nu.images.at(static_cast<std::size_t>(l.gen));
  return s;
}

void validate_epimorphism(const GroupPresentation& pres, const EpimorphismToZ& nu) {
  if (nu.images.size() != static_cast<std::size_t>(pres.num_generators))
    fail(ErrorKind::InvalidEpimorphism, "epimorphism has " + std::to_string(nu.images.size()) +
                                            " images for " + std::to_string(pres.num_generators) + " generators");
  for (std::size_t r = 0; r < pres.relators.size(); ++r)
    if (exponent_sum(pres.relators[r], nu) != 0)
      fail(ErrorKind::InvalidEpimorphism, "relator " + std::to_string(r) + " does not map to 0");
  std::int64_t g = 0;
  for (auto v : nu.images)
    g = std::gcd(g, v);
  if (g != 1)
    fail(ErrorKind::InvalidEpimorphism, "not an epimorphism: image is " + std::to_string(g) + "Z");
}

LaurentPolyZ abelianize(const GroupRingElem& x, const EpimorphismToZ& nu) {
  LaurentPolyZ out;
  for (const auto& [w, c] : x)
    out += LaurentPolyZ::monomial(c, exponent_sum(w, nu));
  return out;
}

FieldElem evaluate(const Word& w, const Character& rho) {
  const Field& F = *rho.field;
  FieldElem acc = F.one();
  for (const auto& l : w) {
    const FieldElem& v = rho.values.at(static_cast<std::size_t>(l.gen));
    acc = F.mul(acc, l.exp == 1 ? v : F.inv(v));
  }
  return acc;
}

FieldElem evaluate(const GroupRingElem& x, const Character& rho) {
  const Field& F = *rho.field;
  FieldElem acc = F.zero();
  for (const auto& [w, c] : x)
    acc = F.add(acc, F.mul(F.from_int(c), evaluate(w, rho)));
  return acc;
}

void validate_character(const GroupPresentation& pres, const Character& rho) {
  if (!rho.field)
    fail(ErrorKind::CharacterInvalid, "character without a field");
  if (rho.values.size() != static_cast<std::size_t>(pres.num_generators))
    fail(ErrorKind::CharacterInvalid, "character has " + std::to_string(rho.values.size()) +
                                          " values for " + std::to_string(pres.num_generators) + " generators");
  for (const auto& v : rho.values)
    if (rho.field->is_zero(v))
      fail(ErrorKind::CharacterInvalid, "character value 0 is not a unit");
  for (std::size_t r = 0; r < pres.relators.size(); ++r)
    if (!rho.field->is_one(evaluate(pres.relators[r], rho)))
      fail(ErrorKind::CharacterInvalid, "relator " + std::to_string(r) + " does not map to 1");
}

bool is_trivial(const Character& rho) {
  for (const auto& v : rho.values)
    if (!rho.field->is_one(v))
      return false;
  return true;
}

EquivariantComplex equivariant_complex_from_presentation(const GroupPresentation& pres,
                                                         const EpimorphismToZ& nu) {
  pres.validate();
  validate_epimorphism(pres, nu);
  const auto n = static_cast<std::size_t>(pres.num_generators);
  const std::size_t m = pres.relators.size();
  EquivariantComplex cx;
  cx.ranks = {1, static_cast<std::int64_t>(n)};
  LaurentMatrixZ d1(1, n, LaurentPolyZ{});
  for (std::size_t g = 0; g < n; ++g)
    d1(0, g) = LaurentPolyZ::t_pow_minus_one(nu.images[g]);
  cx.boundaries.push_back(std::move(d1));
  if (m > 0) {
    cx.ranks.push_back(static_cast<std::int64_t>(m));
    LaurentMatrixZ d2(n, m, LaurentPolyZ{});
    for (std::size_t r = 0; r < m; ++r) {
      // one pass: the prefix exponent sum gives the abelianized Fox terms
      std::int64_t e = 0;
      for (const auto& l : pres.relators[r]) {
        const auto g = static_cast<std::size_t>(l.gen);
        if (l.exp == 1) {
          d2(g, r) += LaurentPolyZ::monomial(1, e);
          e += nu.images[g];
        } else {
          e -= nu.images[g];
          d2(g, r) -= LaurentPolyZ::monomial(1, e);
        }
      }
    }
    cx.boundaries.push_back(std::move(d2));
  }
  cx.validate(ErrorKind::InvariantBreach);
  return cx;
}

SpecializedPresentation specialize_character(const GroupPresentation& pres, const Character& rho) {
  validate_character(pres, rho);
  const Field& F = *rho.field;
  const auto n = static_cast<std::size_t>(pres.num_generators);
  const std::size_t m = pres.relators.size();
  SpecializedPresentation out{FieldMatrix(1, n, F.zero()), FieldMatrix(n, m, F.zero())};
  std::vector<FieldElem> inv(n, F.zero());
  for (std::size_t g = 0; g < n; ++g) {
    out.d1(0, g) = F.sub(rho.values[g], F.one());
    inv[g] = F.inv(rho.values[g]);
  }
  for (std::size_t r = 0; r < m; ++r) {
    FieldElem prefix = F.one();
    for (const auto& l : pres.relators[r]) {
      const auto g = static_cast<std::size_t>(l.gen);
      if (l.exp == 1) {
        out.d2(g, r) = F.add(out.d2(g, r), prefix);
        prefix = F.mul(prefix, rho.values[g]);
      } else {
        prefix = F.mul(prefix, inv[g]);
        out.d2(g, r) = F.sub(out.d2(g, r), prefix);
      }
    }
  }
  return out;
}

std::int64_t twisted_h1_dim(const GroupPresentation& pres, const Character& rho) {
  const SpecializedPresentation sp = specialize_character(pres, rho);
  const Field& F = *rho.field;
  return pres.num_generators - static_cast<std::int64_t>(rank_over_field(sp.d1, F)) -
         static_cast<std::int64_t>(rank_over_field(sp.d2, F));
}

// ---------------------------------------------------------------------------

void OrbifoldData::validate() const {
  if (g < 0 || r < 0)
    fail(ErrorKind::InvalidType, "orbifold genus and puncture count must be non-negative");
  if (g == 0 && r <= 1)
    fail(ErrorKind::InvalidType, "orbifold type (0," + std::to_string(r) + ") is excluded");
  for (auto m : mu)
    if (m < 2)
      fail(ErrorKind::InvalidType, "orbifold weights must be at least 2");
}

GroupPresentation orbifold_presentation(const OrbifoldData& d) {
  d.validate();
  const int nf = d.free_generators();
  const int s = static_cast<int>(d.s());
  GroupPresentation pres;
  pres.num_generators = nf + s;
  if (d.r == 0) {
    Word surface;
    for (int i = 0; i < d.g; ++i)
      surface = concat(surface, commutator(power(2 * i, 1), power(2 * i + 1, 1)));
    for (int j = 0; j < s; ++j)
      surface = concat(surface, power(nf + j, 1));
    pres.relators.push_back(surface);
  }
  for (int j = 0; j < s; ++j)
    pres.relators.push_back(power(nf + j, d.mu[static_cast<std::size_t>(j)]));
  return pres;
}

EpimorphismToZ orbifold_epimorphism(const OrbifoldData& d) {
  d.validate();
  EpimorphismToZ nu;
  nu.images.assign(static_cast<std::size_t>(d.free_generators()) + d.s(), 0);
  nu.images[0] = 1;
  return nu;
}

std::int64_t orbifold_h1_dim_formula(const OrbifoldData& d, bool rho_trivial, std::int64_t ell,
                                     std::int64_t characteristic) {
  d.validate();
  const auto s = static_cast<std::int64_t>(d.s());
  if (ell < 0 || ell > s)
    fail(ErrorKind::InvalidProfile, "ell must lie in [0, s]");
  if (rho_trivial) {
    std::int64_t expected = 0;
    for (auto m : d.mu)
      if (characteristic == 0 || m % characteristic != 0)
        ++expected;
    if (ell != expected)
      fail(ErrorKind::InvalidProfile, "the trivial character has ell = " + std::to_string(expected));
  }
  if (d.r > 0) {
    const std::int64_t n = 2 * d.g + d.r - 1;
    return rho_trivial ? n + s - ell : n + s - ell - 1;
  }
  if (!rho_trivial)
    return 2 * d.g + s - 2 - ell;
  return ell < s ? 2 * d.g + s - 1 - ell : 2 * d.g;
}

std::int64_t ell_count(const std::vector<FieldElem>& lambda, const Field& field,
                       const std::vector<std::int64_t>& mu, std::int64_t p) {
  if (lambda.size() != mu.size())
    fail(ErrorKind::InvalidInput, "ell_count needs one coordinate per weight");
  std::int64_t ell = 0;
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (field.is_one(lambda[j]) && (p == 0 || mu[j] % p != 0))
      ++ell;
  return ell;
}

} // namespace infcov
