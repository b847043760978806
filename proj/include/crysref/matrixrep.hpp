#pragma once

#include "crysref/presentation.hpp"
#include "crysref/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crysref {

class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Matrix = std::vector<std::vector<RingElement>>;

/// (g | t): x -> g x + t.
class AffineElement {
 public:
  AffineElement(Matrix linear, std::vector<RingElement> translation);
  static AffineElement identity(RingSpec spec, int n);

  int dim() const { return static_cast<int>(translation_.size()); }
  const RingSpec& spec() const { return spec_; }
  const Matrix& linear() const { return linear_; }
  const std::vector<RingElement>& translation() const { return translation_; }

  AffineElement operator*(const AffineElement& o) const;
  AffineElement inverse() const;
  AffineElement pow(int k) const;

  bool is_identity() const;
  bool linear_is_identity() const;
  bool translation_is_zero() const;

  bool operator==(const AffineElement& o) const { return linear_ == o.linear_ && translation_ == o.translation_; }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }

  /// Augmented (n+1)x(n+1) matrix [[g, t], [0, 1]].
  Matrix augmented() const;
  /// Row-major `[g11 g12 | t1]; [g21 g22 | t2]`.
  std::string to_string() const;

 private:
  RingSpec spec_;
  Matrix linear_;
  std::vector<RingElement> translation_;
};

Matrix identity_matrix(RingSpec spec, int n);
Matrix matrix_mul(const Matrix& a, const Matrix& b);
Matrix matrix_inverse(const Matrix& a);

/// Whether matrix representations exist for the family.
bool has_matrices(Family f);
RingSpec default_ring(Family f);
std::vector<AffineElement> build_generator_matrices(Family family, int n, RingSpec spec);
inline std::vector<AffineElement> build_generator_matrices(Family family, int n) {
  return build_generator_matrices(family, n, default_ring(family));
}

AffineElement evaluate_word(const Word& w, const std::vector<AffineElement>& gens);

struct RelatorCheck {
  std::size_t relator_index = 0;
  std::string word_text;
  RelationKind kind = RelationKind::Other;
  bool pass = false;
  std::optional<std::string> witness_matrix;
};

struct PresentationReport {
  std::vector<RelatorCheck> checks;
  bool pass = false;
};

PresentationReport verify_presentation(const Presentation& p, const std::vector<AffineElement>& gens);

enum class ElementKind { Identity, Reflection, Translation, Other };
enum class LinearClass { Sign, Transposition, Other };
std::string to_string(ElementKind k);
std::string to_string(LinearClass c);

struct ReflectionData {
  LinearClass linear_class = LinearClass::Other;
  /// Translation coefficient reduced mod 2 componentwise (a, b in {0, 1}).
  RingElement residue;
  int order = 0;
};

struct ElementClass {
  ElementKind kind = ElementKind::Other;
  std::optional<ReflectionData> detail;
};

ElementClass classify_element(const AffineElement& e);
/// Rank of g - I (over Q, through the regular representation for cyclotomic rings).
int fixed_space_codimension(const AffineElement& e);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReflectionClass {
  AffineElement representative;
  std::size_t size = 0;
  std::string invariant;
};

struct ClassEnumeration {
  std::size_t count = 0;
  std::size_t candidates = 0;
  /// Every pair of classes is separated by the residue invariant, so the count is exact.
  bool certified = false;
  std::vector<ReflectionClass> classes;
};

/// Brute force over reflections with translation coefficients in [-bound, bound],
/// merged by conjugation with generator words of length <= depth.
ClassEnumeration enumerate_reflection_classes(Family family, int n, int translation_bound, int depth = 4);

}  // namespace crysref
