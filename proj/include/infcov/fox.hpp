#pragma once

#include "infcov/complex.hpp"
#include "infcov/exactlin.hpp"
#include "infcov/fields.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace infcov {

struct Letter {
  int gen = 0;
  int exp = 1; ///< +1 or -1
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word reduce_word(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// g^k as a reduced word.
Word power(int gen, std::int64_t k);
/// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

struct GroupPresentation {
  int num_generators = 0;
  std::vector<Word> relators;

  /// Generator indices in range, exponents +-1, relators freely reduced.
  void validate() const;
};

/// Element of Z[G] written on (reduced) words; zero coefficients are dropped.
using GroupRingElem = std::map<Word, BigInt>;

GroupRingElem fox_derivative(const Word& w, int gen);
/// u * x for a group-ring element x.
GroupRingElem left_multiply(const Word& u, const GroupRingElem& x);
GroupRingElem add(const GroupRingElem& a, const GroupRingElem& b);

struct EpimorphismToZ {
  std::vector<std::int64_t> images;
};

std::int64_t exponent_sum(const Word& w, const EpimorphismToZ& nu);
/// Throws InvalidEpimorphism unless nu kills every relator and is onto Z.
void validate_epimorphism(const GroupPresentation& pres, const EpimorphismToZ& nu);
/// Image of a group-ring element under g -> t^nu(g).
LaurentPolyZ abelianize(const GroupRingElem& x, const EpimorphismToZ& nu);

struct Character {
  FieldPtr field;
  std::vector<FieldElem> values; ///< nonzero, one per generator
};

FieldElem evaluate(const Word& w, const Character& rho);
FieldElem evaluate(const GroupRingElem& x, const Character& rho);
/// Throws CharacterInvalid when a value is zero or a relator is not sent to 1.
void validate_character(const GroupPresentation& pres, const Character& rho);
bool is_trivial(const Character& rho);

/// Presentation 2-complex of the infinite cyclic cover: ranks
/// (1, #generators, #relators); the relator column is omitted when there are
/// no relators. Throws InvalidEpimorphism, or InvariantBreach if the
/// boundaries fail to compose to zero.
EquivariantComplex equivariant_complex_from_presentation(const GroupPresentation& pres,
                                                         const EpimorphismToZ& nu);

struct SpecializedPresentation {
  FieldMatrix d1; ///< 1 x #generators, entries rho(x_i) - 1
  FieldMatrix d2; ///< #generators x #relators Fox Jacobian at rho
};
SpecializedPresentation specialize_character(const GroupPresentation& pres, const Character& rho);
std::int64_t twisted_h1_dim(const GroupPresentation& pres, const Character& rho);

struct OrbifoldData {
  int g = 0;
  int r = 0;
  std::vector<std::int64_t> mu;

  std::size_t s() const { return mu.size(); }
  /// Number of non-torsion generators: 2g + r - 1 (r > 0) or 2g (r = 0).
  int free_generators() const { return r > 0 ? 2 * g + r - 1 : 2 * g; }
  /// Throws InvalidType for (g, r) in {(0, 0), (0, 1)} or bad weights.
  void validate() const;
};

GroupPresentation orbifold_presentation(const OrbifoldData& d);
/// nu = 1 on the first non-torsion generator, 0 elsewhere.
EpimorphismToZ orbifold_epimorphism(const OrbifoldData& d);

std::int64_t orbifold_h1_dim_formula(const OrbifoldData& d, bool rho_trivial, std::int64_t ell,
                                     std::int64_t characteristic);
std::int64_t ell_count(const std::vector<FieldElem>& lambda, const Field& field,
                       const std::vector<std::int64_t>& mu, std::int64_t p);

} // namespace infcov
