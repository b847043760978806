#pragma once

#include "crysref/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crysref {

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { A_alpha, C_alpha, G311, G411, G412, G421, G422, G611, G621, G631 };
enum class BraidSpace { PuncturedSphere4, TorusSpecial, FreeRank3 };

std::string to_string(Family f);
Family parse_family(const std::string& s);
std::string to_string(BraidSpace s);
BraidSpace parse_braid_space(const std::string& s);
bool is_genuine(Family f);
/// Whether build_group_presentation accepts (family, n).
bool family_rank_valid(Family f, int n);

enum class Lace { None, Simple, Double, Triple, X, Infinity };
std::string to_string(Lace l);

struct DiagramNode {
  std::string name;
  int order = 2;  // 0 for infinite order
};

struct DiagramEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  Lace lace = Lace::Simple;
  /// Braid length for laces drawn with an explicit label (e.g. 6).
  int label = 0;
};

struct CoxeterLikeDiagram {
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
};

enum class RelationKind { Order, Coxeter, Braid, XRelation, ExtraOrder, Closedness, Other };
std::string to_string(RelationKind k);

/// Braid data of a Coxeter-type relation between generators a and b.
struct BraidPair {
  int a = 0;
  int b = 0;
  int length = 2;
};

/// lhs = rhs; the relator is lhs * rhs^-1.
struct Relation {
  Word lhs;
  Word rhs;
  RelationKind kind = RelationKind::Other;
  std::optional<BraidPair> pair;

  Word relator() const { return lhs * rhs.inverse(); }
};

struct ExtraOrderRelation {
  Word base;
  int order = 2;
};

struct Presentation {
  std::string name;
  std::vector<std::string> generator_names;
  /// nullopt means infinite order.
  std::vector<std::optional<int>> generator_orders;
  std::vector<Relation> relations;
  std::optional<ExtraOrderRelation> extra_order_relation;
  CoxeterLikeDiagram diagram;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
  std::vector<Word> relators() const;
  int index_of(const std::string& name) const;
  Word word(const std::string& text) const { return Word::parse(text, generator_names); }
  std::string render(const Word& w) const { return w.to_string(generator_names); }
  /// "lhs = rhs" in generator names.
  std::string relation_text(const Relation& r) const;

  /// Line-oriented text format (gens/orders/rel lines).
  std::string to_text() const;
  static Presentation parse_text(const std::string& text);
};

/// Alternating product a b a ... of the given length.
Word alternating(int a, int b, int length);

Presentation build_group_presentation(Family family, int n);
Presentation build_braid_presentation(BraidSpace space, int n);
/// Drops order relations, rewrites Coxeter relators as positive braid relations.
Presentation artinize(const Presentation& p);

using Integer = boost::multiprecision::cpp_int;
/// Invariant factors != 1 in divisibility order, followed by one 0 per free factor.
std::vector<Integer> abelianize(const Presentation& p);
/// Diagonal of the Smith normal form (nonnegative, divisibility order, zeros last).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m);

std::string diagram_to_dot(const CoxeterLikeDiagram& d);

}  // namespace crysref
