#pragma once

#include "crysref/prover.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crysref {

class HeckeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse Laurent polynomial with integer coefficients over a fixed list of parameters.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> universe);
  static LaurentPoly constant(std::vector<std::string> universe, const Integer& c);
  /// c * name^power.
  static LaurentPoly monomial(std::vector<std::string> universe, const std::string& name, int power = 1,
                              const Integer& c = 1);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// A single term with coefficient +-1.
  bool is_unit_monomial() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  bool operator==(const LaurentPoly& o) const { return universe_ == o.universe_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Inverse of a unit monomial.
  LaurentPoly inverse() const;
  /// Substitutes every parameter by its image (all images share one universe).
  /// Parameters missing from `images` map to themselves, which must then exist in the target universe.
  LaurentPoly compose(const std::map<std::string, LaurentPoly>& images, const std::vector<std::string>& target) const;

  /// `-t^-1`, `s1_1*s1_2 + 1`; "0" for the zero polynomial.
  std::string to_string() const;
  static LaurentPoly parse(std::vector<std::string> universe, const std::string& text);

 private:
  void check(const LaurentPoly& o) const;
  void add_term(const Exponents& e, const Integer& c);

  std::vector<std::string> universe_;
  std::map<Exponents, Integer> terms_;
};

/// Monic polynomial in one variable: coeffs[k] multiplies X^k, coeffs.back() == 1.
struct CharPoly {
  std::vector<LaurentPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// prod_j (X - roots[j]).
  static CharPoly from_roots(const std::vector<LaurentPoly>& roots, const std::vector<std::string>& universe);
  /// Monic polynomial of the inverse element: X^e p(1/X) / p(0).
  CharPoly reciprocal() const;
  /// Monic polynomial of q * element for a unit monomial q.
  CharPoly scaled(const LaurentPoly& q) const;
  CharPoly compose(const std::map<std::string, LaurentPoly>& images, const std::vector<std::string>& target) const;
  bool operator==(const CharPoly& o) const { return coeffs == o.coeffs; }
  bool operator!=(const CharPoly& o) const { return !(*this == o); }
  /// `c0, c1, ..., 1`.
  std::string to_string() const;
};

struct HeckeGenerator {
  std::string name;
  /// Parameter class: generators in one class share their parameters.
  int parameter_class = 0;
  CharPoly char_poly;
};

struct HeckePresentation {
  std::string name;
  /// Set for generic Hecke algebras.
  std::optional<Family> family;
  int rank = 0;
  /// Artin presentation; generator names are the Hecke letters.
  Presentation braid_part;
  std::vector<std::string> parameters;
  /// One per braid_part generator.
  std::vector<HeckeGenerator> generators;
  /// S_0, the extra relation base in Hecke letters.
  std::optional<Word> extra_generator_word;
  std::optional<HeckeGenerator> extra_generator;
  /// Number of distinct parameter classes (each a tuple s_{c,1..e}).
  int parameter_pairs = 0;

  /// Presentation text plus `charpoly: S<i> : c0, ..., 1` lines and `extra: S0 = word`.
  std::string to_text() const;
};

/// Families with a generic Hecke algebra: A_alpha, C_alpha, G311, G411, G611.
bool has_generic_hecke(Family f);
HeckePresentation build_generic_hecke(Family family, int n);

/// Star-shaped GDAHA with the given leg lengths (D4 [2,2,2,2], E6 [3,3,3], E7 [4,4,2], E8 [6,3,2]).
HeckePresentation build_gdaha(const std::vector<int>& legs, int n);
std::vector<int> gdaha_legs(const std::string& type);

using ParameterMap = std::map<std::string, LaurentPoly>;

struct CharPolyCheck {
  std::string generator;
  std::string image;
  bool pass = false;
  /// specialized source minus target, coefficientwise (empty when pass).
  std::string difference;
};

struct SpecializationReport {
  HomomorphismReport forward;
  std::optional<HomomorphismReport> backward;
  std::vector<CharPolyCheck> char_polys;
  /// S_0 image equals the inverse of the designated target generator.
  RelatorVerdict extra_word;
  std::optional<CharPolyCheck> extra_char_poly;
  bool braid_ok = false;
  bool char_ok = false;
  bool extra_ok = false;
  bool pass = false;
};

struct HeckeCorrespondence {
  GeneratorMap forward;
  std::optional<GeneratorMap> backward;
  HintBook forward_hints;
  HintBook backward_hints;
  /// Target generator whose inverse is the image of S_0.
  std::string inverse_generator;
};

/// Braid relators both ways through the prover, char polys of letters mapped to (conjugates of)
/// single letters, and the S_0 match.
SpecializationReport verify_specialization(const HeckePresentation& hp, const ParameterMap& pm,
                                           const HeckePresentation& target, const HeckeCorrespondence& c,
                                           Budget budget = {});

/// The specialization and maps of the GDAHA correspondence for C_alpha (D4) and G(d,1,n)_1 (E6/E7/E8).
struct GdahaMatch {
  HeckePresentation hecke;
  HeckePresentation gdaha;
  ParameterMap specialization;
  HeckeCorrespondence correspondence;
};
GdahaMatch gdaha_match(Family family, int n);

struct RankOneReport {
  std::vector<CharPolyCheck> checks;
  bool pass = false;
};
/// D4 rank one: S_0 -> q T_1^-1, S_i -> T_{i+1}. `flip_s01` uses s_01 -> +q t_11 instead.
RankOneReport rank_one_specialization_check(bool q_is_one = false, bool flip_s01 = false);

struct TripleDotReport {
  Word generator;
  std::string generator_text;
  std::vector<RelatorVerdict> relations;
  /// Each relation also holds for the matrices.
  std::vector<bool> matrix_ok;
  bool pass = false;
};
/// s_{n+2} = (s_n s_{n+1} s_{n-1} ... s_1 ... s_{n-1})^-1 in the Artin group of A_alpha.
Word triple_dot_word(int n);
TripleDotReport triple_dot_generator(int n, Budget budget = {}, std::optional<Word> override_word = std::nullopt);

struct DegenerationCheck {
  std::string generator;
  bool pass = false;
};
/// Specializes s_{c,j} -> zeta_e^j in the family's matrix ring and checks p(M) = 0 for every
/// generator matrix and for the S_0 word.
std::vector<DegenerationCheck> cyclotomic_degeneration(const HeckePresentation& hp);

}  // namespace crysref
