#pragma once

#include "crysref/matrixrep.hpp"
#include "crysref/presentation.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace crysref {

class ProverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  /// 0 selects 4 * input length + 32.
  std::size_t max_word_length = 0;
  std::size_t max_depth = 96;
  std::size_t max_nodes = 60000;
  /// Moves must match at least half the relator minus this slack.
  std::size_t match_slack = 1;

  /// Multiplies depth and node budgets (CRYSREF_BUDGET_SCALE).
  Budget scaled(double factor) const;
};

/// Budget scale from the CRYSREF_BUDGET_SCALE environment variable (1 if unset).
double budget_scale_from_env();

/// A cyclic conjugate of a relator or of its inverse.
struct SymmetrizedRelator {
  std::vector<LetterCode> letters;
  std::size_t relator = 0;
  bool inverted = false;
  std::size_t shift = 0;
};

/// Relators of a presentation with their symmetrized closure.
class RewriteSystem {
 public:
  explicit RewriteSystem(const Presentation& p, Budget budget = {});

  const Presentation& presentation() const { return presentation_; }
  /// Cyclically reduced relators R0, R1, ...; certificates refer to these.
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<SymmetrizedRelator>& symmetrized() const { return sym_; }
  /// Indices of symmetrized relators starting with the given letter code.
  const std::vector<std::size_t>& starting_with(LetterCode c) const;
  const Budget& budget() const { return budget_; }
  void set_budget(Budget b) { budget_ = b; }

  /// Letters of R<i>@shift (or of the inverse relator).
  std::vector<LetterCode> conjugate(std::size_t relator, bool inverted, std::size_t shift) const;

 private:
  Presentation presentation_;
  std::vector<Word> relators_;
  std::vector<SymmetrizedRelator> sym_;
  std::vector<std::vector<std::size_t>> by_first_;
  Budget budget_;
  std::vector<std::size_t> empty_;
};

struct CertificateStep {
  enum class Move { Insert, Cancel };
  Move move = Move::Insert;
  std::size_t relator = 0;
  bool inverted = false;
  std::size_t shift = 0;
  std::size_t position = 0;
  Word snapshot;
};

/// Relator insertions and free cancellations taking `input` to the empty word.
/// `insert` puts R<i>@shift at a position and freely reduces; `cancel at len-1`
/// removes the last and first letters (a cyclic conjugation).
struct Certificate {
  Word input;
  std::vector<CertificateStep> steps;

  std::size_t insertions() const;
};

struct ReplayResult {
  bool ok = false;
  std::size_t failed_step = 0;
  std::string message;
};

ReplayResult replay(const Certificate& c, const std::vector<Word>& relators);
inline ReplayResult replay(const Certificate& c, const RewriteSystem& rs) { return replay(c, rs.relators()); }

/// Self-contained text: the presentation, the input word and one line per step.
std::string certificate_to_text(const Certificate& c, const Presentation& p);
std::string certificate_steps_text(const Certificate& c);
struct ParsedCertificate {
  Presentation presentation;
  Certificate certificate;
};
ParsedCertificate parse_certificate(const std::string& text);

enum class Verdict { Proved, Unknown, Failed };
std::string to_string(Verdict v);

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t max_length_seen = 0;
  bool budget_exhausted = false;
};

struct ProofResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Certificate> certificate;
  SearchStats stats;
};

/// Best-first search for a certificate that w is trivial.
ProofResult prove_trivial(const Word& w, const RewriteSystem& rs);

/// Replacement of the subword [position, position + length) by the inverse of the
/// rest of a symmetrized relator; equivalently inserting its inverse at position.
struct Move {
  std::size_t position = 0;
  std::vector<LetterCode> inserted;  // a symmetrized relator
  std::size_t relator = 0;
  bool inverted = false;
  std::size_t shift = 0;
};

/// Linear moves from lhs to rhs; each move is applied then freely reduced.
struct Derivation {
  Word from;
  Word to;
  std::vector<Move> moves;
};

Word apply_move(const Word& w, const Move& m);
/// Bidirectional breadth-first search for a short derivation between two words.
/// `slack` overrides the budget's match slack when set.
std::optional<Derivation> find_derivation(const Word& from, const Word& to, const RewriteSystem& rs,
                                          std::size_t max_moves = 6, std::size_t max_nodes = 100000,
                                          std::optional<std::size_t> slack = std::nullopt);
/// Certificate for reduce(from * to^-1) from a derivation (nullopt if the conversion stalls).
std::optional<Certificate> certificate_from_derivation(const Derivation& d);

/// Chain of intermediate words (target generator names) proving lhs = rhs.
struct HintScript {
  std::string relation;  // "lhs = rhs" in source generator names
  std::vector<std::string> chain;
};

struct HintBook {
  std::string name;
  std::vector<HintScript> scripts;
  const HintScript* find(const std::string& relation_text) const;
};

struct HintOutcome {
  bool ok = false;
  std::size_t failed_step = 0;  // index into the full chain (0 = image of lhs)
  std::string message;
  std::optional<Derivation> derivation;
};

/// Closes each consecutive pair of the chain [lhs, hints..., rhs] by a short derivation.
HintOutcome follow_hints(const Word& lhs, const Word& rhs, const std::vector<Word>& chain, const RewriteSystem& rs,
                         std::size_t max_moves = 6);

struct GeneratorMap {
  std::string source;
  std::string target;
  std::vector<Word> images;

  Word apply(const Word& w) const;
};

/// Builds a map from "generator -> word" assignments written in generator names.
GeneratorMap make_map(const Presentation& source, const Presentation& target,
                      const std::vector<std::pair<std::string, std::string>>& assignments);

struct RelatorVerdict {
  std::size_t index = 0;
  std::string relation;
  std::string image;
  Verdict verdict = Verdict::Unknown;
  std::string method;  // matrices, free, hint, search
  std::optional<Certificate> certificate;
  std::string note;
  std::size_t nodes = 0;
};

struct HomomorphismReport {
  std::vector<RelatorVerdict> relators;
  Verdict verdict = Verdict::Unknown;
};

struct MatrixEngine {
  std::vector<AffineElement> generators;
};

struct ProverEngine {
  const RewriteSystem* rs = nullptr;
  const HintBook* hints = nullptr;
  bool search = true;
};

using TargetEngine = std::variant<MatrixEngine, ProverEngine>;

/// Worst verdict: Failed > Unknown > Proved.
Verdict combine(Verdict a, Verdict b);

RelatorVerdict check_trivial(const Word& w, const ProverEngine& engine);
RelatorVerdict check_equal(const Word& lhs, const Word& rhs, const ProverEngine& engine, const HintScript* hint);

HomomorphismReport verify_homomorphism(const GeneratorMap& map, const Presentation& source, const TargetEngine& target);

struct IsomorphismReport {
  HomomorphismReport forward;
  HomomorphismReport backward;
  std::vector<RelatorVerdict> composites_source;
  std::vector<RelatorVerdict> composites_target;
  Verdict verdict = Verdict::Unknown;
};

/// fwd: A -> B checked in B, bwd: B -> A checked in A, then bwd(fwd(g)) g^-1 in A and
/// fwd(bwd(h)) h^-1 in B.
IsomorphismReport verify_isomorphism_pair(const GeneratorMap& fwd, const GeneratorMap& bwd, const Presentation& A,
                                          const Presentation& B, const ProverEngine& engine_a,
                                          const ProverEngine& engine_b);

}  // namespace crysref
