#include "crysref/prover.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace crysref {

namespace {

// Search words: one char per letter code.
using Str = std::string;

Str to_str(const std::vector<LetterCode>& v) {
  Str s;
  s.reserve(v.size());
  for (LetterCode c : v) s.push_back(static_cast<char>(c));
  return s;
}

Str to_str(const Word& w) { return to_str(w.codes()); }

Word to_word(const Str& s) {
  std::vector<LetterCode> v;
  v.reserve(s.size());
  for (char c : s) v.push_back(static_cast<LetterCode>(static_cast<signed char>(c)));
  return Word(v);
}

inline char neg(char c) { return static_cast<char>(-static_cast<signed char>(c)); }

Str reduce_str(const Str& s) {
  Str out;
  out.reserve(s.size());
  for (char c : s) {
    if (!out.empty() && out.back() == neg(c)) out.pop_back();
    else out.push_back(c);
  }
  return out;
}

Str inverse_str(const Str& s) {
  Str out(s.rbegin(), s.rend());
  for (char& c : out) c = neg(c);
  return out;
}

Str rotate_str(const Str& s, std::size_t k) {
  if (s.empty()) return s;
  k %= s.size();
  return s.substr(k) + s.substr(0, k);
}

Str insert_reduce(const Str& w, std::size_t pos, const Str& t) {
  Str u;
  u.reserve(w.size() + t.size());
  u.append(w, 0, pos);
  u += t;
  u.append(w, pos, Str::npos);
  return reduce_str(u);
}

// Booth's least rotation.
std::size_t least_rotation(const Str& s) {
  std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return static_cast<unsigned char>(s[i % n]); };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    long i = f[j - k - 1];
    while (i != -1 && at(j) != at(k + static_cast<std::size_t>(i) + 1)) {
      if (at(j) < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && at(j) != at(k + static_cast<std::size_t>(i) + 1)) {
      if (at(j) < at(k + static_cast<std::size_t>(i) + 1)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

Str canonical_cyclic(const Str& s) {
  Str a = rotate_str(s, least_rotation(s));
  Str inv = inverse_str(s);
  Str b = rotate_str(inv, least_rotation(inv));
  return std::min(a, b);
}

std::size_t min_match(std::size_t m, std::size_t slack) {
  std::size_t half = m / 2;
  return half > slack ? half - slack : 1;
}

struct Conj {
  std::size_t relator = 0;
  bool inverted = false;
  std::size_t shift = 0;
};

// Conjugate data of the inverse of a symmetrized relator, rotated by j.
Conj inverse_conj(const SymmetrizedRelator& s, std::size_t j) {
  std::size_t m = s.letters.size();
  return Conj{s.relator, !s.inverted, ((m - s.shift % m) % m + j) % m};
}

}  // namespace

Budget Budget::scaled(double factor) const {
  Budget b = *this;
  if (factor <= 0 || !std::isfinite(factor)) return b;
  b.max_depth = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(max_depth) * factor)));
  b.max_nodes = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(max_nodes) * factor)));
  return b;
}

double budget_scale_from_env() {
  const char* v = std::getenv("CRYSREF_BUDGET_SCALE");
  if (!v || !*v) return 1.0;
  char* end = nullptr;
  double d = std::strtod(v, &end);
  if (end == v || !std::isfinite(d) || d <= 0) return 1.0;
  return d;
}

RewriteSystem::RewriteSystem(const Presentation& p, Budget budget) : presentation_(p), budget_(budget) {
  int g = p.generator_count();
  by_first_.assign(static_cast<std::size_t>(2 * g + 1), {});
  std::unordered_set<Str> seen;
  for (const Word& r : p.relators()) relators_.push_back(cyclic_reduce(r));
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    Str base = to_str(relators_[i]);
    for (bool inv : {false, true}) {
      Str b = inv ? inverse_str(base) : base;
      for (std::size_t k = 0; k < b.size(); ++k) {
        Str r = rotate_str(b, k);
        if (!seen.insert(r).second) continue;
        SymmetrizedRelator s;
        s.letters.assign(r.begin(), r.end());
        for (auto& c : s.letters) c = static_cast<LetterCode>(static_cast<signed char>(c));
        s.relator = i;
        s.inverted = inv;
        s.shift = k;
        by_first_[static_cast<std::size_t>(s.letters[0] + g)].push_back(sym_.size());
        sym_.push_back(std::move(s));
      }
    }
  }
}

const std::vector<std::size_t>& RewriteSystem::starting_with(LetterCode c) const {
  int g = presentation_.generator_count();
  long idx = static_cast<long>(c) + g;
  if (idx < 0 || idx >= static_cast<long>(by_first_.size())) return empty_;
  return by_first_[static_cast<std::size_t>(idx)];
}

std::vector<LetterCode> RewriteSystem::conjugate(std::size_t relator, bool inverted, std::size_t shift) const {
  if (relator >= relators_.size()) throw ProverError("no relator R" + std::to_string(relator));
  Word b = inverted ? relators_[relator].inverse() : relators_[relator];
  if (b.empty()) return {};
  return b.rotate(shift % b.size()).codes();
}

std::size_t Certificate::insertions() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const CertificateStep& s) { return s.move == CertificateStep::Move::Insert; }));
}

ReplayResult replay(const Certificate& c, const std::vector<Word>& relators) {
  ReplayResult res;
  if (free_reduce(c.input) != c.input) {
    res.message = "input word is not freely reduced";
    return res;
  }
  Str cur = to_str(c.input);
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const auto& st = c.steps[k];
    res.failed_step = k + 1;
    if (st.move == CertificateStep::Move::Insert) {
      if (st.relator >= relators.size()) {
        res.message = "unknown relator R" + std::to_string(st.relator);
        return res;
      }
      if (st.position > cur.size()) {
        res.message = "insert position out of range";
        return res;
      }
      Word b = st.inverted ? relators[st.relator].inverse() : relators[st.relator];
      b = cyclic_reduce(b);
      Str t = b.empty() ? Str() : to_str(b.rotate(st.shift % b.size()));
      cur = insert_reduce(cur, st.position, t);
    } else {
      std::size_t p = st.position;
      if (cur.size() >= 2 && p == cur.size() - 1 && cur.front() == neg(cur.back())) {
        cur = cur.substr(1, cur.size() - 2);
      } else if (p + 1 < cur.size() && cur[p] == neg(cur[p + 1])) {
        cur.erase(p, 2);
      } else {
        res.message = "nothing to cancel at position " + std::to_string(p);
        return res;
      }
    }
    if (to_str(st.snapshot) != cur) {
      res.message = "snapshot mismatch";
      return res;
    }
  }
  if (!cur.empty()) {
    res.failed_step = c.steps.size();
    res.message = "replay ends at a nonempty word";
    return res;
  }
  res.ok = true;
  res.failed_step = 0;
  return res;
}

std::string certificate_steps_text(const Certificate& c) {
  std::ostringstream out;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const auto& s = c.steps[k];
    out << "step " << (k + 1) << ": ";
    if (s.move == CertificateStep::Move::Insert)
      out << "insert R" << s.relator << (s.inverted ? "^-1" : "") << '@' << s.shift << " at " << s.position;
    else
      out << "cancel at " << s.position;
    out << '\n';
  }
  return out.str();
}

std::string certificate_to_text(const Certificate& c, const Presentation& p) {
  std::ostringstream out;
  out << "certificate: 1\n" << p.to_text() << "word: " << p.render(c.input) << '\n' << certificate_steps_text(c);
  return out.str();
}

ParsedCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line, pres;
  std::vector<std::string> step_lines;
  std::optional<std::string> word_text;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::string t = line.substr(b);
    while (!t.empty() && (t.back() == '\r' || t.back() == ' ')) t.pop_back();
    if (t.rfind("certificate:", 0) == 0) continue;
    if (t.rfind("word:", 0) == 0) word_text = t.substr(5);
    else if (t.rfind("step", 0) == 0) step_lines.push_back(t);
    else pres += t + "\n";
  }
  if (!word_text) throw ProverError("certificate has no word: line");
  ParsedCertificate pc;
  pc.presentation = Presentation::parse_text(pres);
  std::vector<Word> rels;
  for (const Word& r : pc.presentation.relators()) rels.push_back(cyclic_reduce(r));
  std::string wt = *word_text;
  auto nb = wt.find_first_not_of(' ');
  wt = nb == std::string::npos ? std::string() : wt.substr(nb);
  pc.certificate.input = (wt.empty() || wt == "1") ? Word() : pc.presentation.word(wt);
  Str cur = to_str(pc.certificate.input);
  for (const auto& sl : step_lines) {
    auto colon = sl.find(':');
    if (colon == std::string::npos) throw ProverError("malformed step: " + sl);
    std::istringstream bs(sl.substr(colon + 1));
    std::string verb, rel, at;
    CertificateStep st;
    bs >> verb;
    if (verb == "insert") {
      std::size_t pos = 0;
      if (!(bs >> rel >> at >> pos) || at != "at" || rel.size() < 4 || rel[0] != 'R')
        throw ProverError("malformed step: " + sl);
      auto atpos = rel.find('@');
      if (atpos == std::string::npos) throw ProverError("malformed step: " + sl);
      std::string id = rel.substr(1, atpos - 1);
      if (id.size() > 3 && id.compare(id.size() - 3, 3, "^-1") == 0) {
        st.inverted = true;
        id.resize(id.size() - 3);
      }
      try {
        st.relator = static_cast<std::size_t>(std::stoul(id));
        st.shift = static_cast<std::size_t>(std::stoul(rel.substr(atpos + 1)));
      } catch (const std::exception&) {
        throw ProverError("malformed step: " + sl);
      }
      st.move = CertificateStep::Move::Insert;
      st.position = pos;
      if (st.relator < rels.size() && pos <= cur.size()) {
        Word b = st.inverted ? rels[st.relator].inverse() : rels[st.relator];
        Str t = b.empty() ? Str() : to_str(b.rotate(st.shift % b.size()));
        cur = insert_reduce(cur, pos, t);
      }
    } else if (verb == "cancel") {
      std::size_t pos = 0;
      if (!(bs >> at >> pos) || at != "at") throw ProverError("malformed step: " + sl);
      st.move = CertificateStep::Move::Cancel;
      st.position = pos;
      if (cur.size() >= 2 && pos == cur.size() - 1 && cur.front() == neg(cur.back())) cur = cur.substr(1, cur.size() - 2);
      else if (pos + 1 < cur.size() && cur[pos] == neg(cur[pos + 1])) cur.erase(pos, 2);
    } else {
      throw ProverError("malformed step: " + sl);
    }
    // Snapshots are recomputed; replay still checks each move applies.
    st.snapshot = to_word(cur);
    pc.certificate.steps.push_back(std::move(st));
  }
  return pc;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "Proved";
    case Verdict::Unknown: return "Unknown";
    case Verdict::Failed: return "Failed";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Failed || b == Verdict::Failed) return Verdict::Failed;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Proved;
}

namespace {

void validate(const Budget& b) {
  if (b.max_depth == 0 || b.max_nodes == 0) throw ProverError("search budgets must be positive");
}

struct SearchNode {
  Str word;
  long parent = -1;
  Conj conj;
  std::uint32_t position = 0;
  std::uint16_t cancels = 0;
  std::uint16_t depth = 0;
};

// Inserts t at pos, then cancels cyclically. Returns the number of cancels.
std::size_t cyclic_apply(Str& w, std::size_t pos, const Str& t) {
  w = insert_reduce(w, pos, t);
  std::size_t c = 0;
  while (w.size() >= 2 && w.front() == neg(w.back())) {
    w = w.substr(1, w.size() - 2);
    ++c;
  }
  return c;
}

void append_cancels(Str& cur, std::size_t count, std::vector<CertificateStep>& steps) {
  for (std::size_t k = 0; k < count; ++k) {
    CertificateStep st;
    st.move = CertificateStep::Move::Cancel;
    st.position = cur.size() - 1;
    cur = cur.substr(1, cur.size() - 2);
    st.snapshot = to_word(cur);
    steps.push_back(std::move(st));
  }
}

}  // namespace

ProofResult prove_trivial(const Word& w, const RewriteSystem& rs) {
  const Budget& budget = rs.budget();
  validate(budget);
  ProofResult result;
  Certificate cert;
  cert.input = free_reduce(w);
  Str start = to_str(cert.input);
  std::size_t initial = 0;
  {
    Str tmp = start;
    while (tmp.size() >= 2 && tmp.front() == neg(tmp.back())) {
      tmp = tmp.substr(1, tmp.size() - 2);
      ++initial;
    }
  }
  Str cur0 = start;
  append_cancels(cur0, initial, cert.steps);
  if (cur0.empty()) {
    result.verdict = Verdict::Proved;
    result.certificate = cert;
    return result;
  }
  std::size_t max_len = budget.max_word_length ? budget.max_word_length : 4 * start.size() + 32;
  const auto& sym = rs.symmetrized();

  std::vector<std::size_t> limits;
  for (std::size_t d = std::min<std::size_t>(12, budget.max_depth); d < budget.max_depth; d *= 2) limits.push_back(d);
  limits.push_back(budget.max_depth);
  // Exact matches first on a quarter of the node budget, then the configured slack.
  std::vector<std::pair<std::size_t, std::size_t>> rounds;
  if (budget.match_slack > 0)
    for (std::size_t limit : limits) rounds.emplace_back(0, limit);
  for (std::size_t limit : limits) rounds.emplace_back(budget.match_slack, limit);
  std::size_t exact_share = budget.match_slack > 0 ? budget.max_nodes / 4 : budget.max_nodes;
  std::size_t remaining = exact_share;
  bool widened = budget.match_slack == 0;
  long exhausted_slack = -1;

  for (auto [slack, limit] : rounds) {
    if (!widened && slack > 0) {
      widened = true;
      remaining = budget.max_nodes - std::min(budget.max_nodes, result.stats.nodes);
      result.stats.budget_exhausted = false;
    }
    if (remaining == 0 || exhausted_slack == static_cast<long>(slack)) continue;
    std::vector<SearchNode> nodes;
    std::unordered_set<Str> visited;
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue;
    nodes.push_back(SearchNode{cur0, -1, {}, 0, 0, 0});
    visited.insert(canonical_cyclic(cur0));
    queue.emplace(cur0.size(), 0, 0);
    bool truncated = false;
    long goal = -1;
    SearchNode goal_node;
    while (!queue.empty() && goal < 0) {
      auto [len, depth, idx] = queue.top();
      queue.pop();
      (void)len;
      if (depth >= limit) {
        truncated = true;
        continue;
      }
      if (remaining == 0) {
        result.stats.budget_exhausted = true;
        break;
      }
      --remaining;
      ++result.stats.nodes;
      const Str W = nodes[idx].word;
      std::size_t L = W.size();
      for (std::size_t p = 0; p < L && goal < 0; ++p) {
        for (std::size_t si : rs.starting_with(static_cast<LetterCode>(static_cast<signed char>(W[p])))) {
          const auto& s = sym[si].letters;
          std::size_t m = s.size();
          std::size_t k = 0;
          while (k < m && k < L && static_cast<LetterCode>(static_cast<signed char>(W[(p + k) % L])) == s[k]) ++k;
          std::size_t lo = min_match(m, slack);
          for (std::size_t l = k; l >= lo && l >= 1; --l) {
            std::size_t new_len_bound = L - l + (m - l);
            if (new_len_bound > max_len + m) continue;
            Str inv_s;
            inv_s.reserve(m);
            for (std::size_t q = m; q-- > 0;) inv_s.push_back(static_cast<char>(-s[q]));
            SearchNode child;
            if (p + l <= L) {
              child.conj = inverse_conj(sym[si], 0);
              child.position = static_cast<std::uint32_t>(p);
              child.word = W;
              child.cancels = static_cast<std::uint16_t>(cyclic_apply(child.word, p, inv_s));
            } else {
              std::size_t j = m - (L - p);
              child.conj = inverse_conj(sym[si], j);
              child.position = static_cast<std::uint32_t>(L);
              child.word = W;
              child.cancels = static_cast<std::uint16_t>(cyclic_apply(child.word, L, rotate_str(inv_s, j)));
            }
            child.parent = static_cast<long>(idx);
            child.depth = static_cast<std::uint16_t>(depth + 1);
            if (child.word.empty()) {
              goal = static_cast<long>(idx);
              goal_node = child;
              break;
            }
            if (child.word.size() > max_len) continue;
            result.stats.max_length_seen = std::max(result.stats.max_length_seen, child.word.size());
            if (!visited.insert(canonical_cyclic(child.word)).second) continue;
            std::size_t cl = child.word.size();
            nodes.push_back(std::move(child));
            queue.emplace(cl, depth + 1, nodes.size() - 1);
          }
          if (goal >= 0) break;
        }
      }
    }
    if (goal >= 0) {
      std::vector<const SearchNode*> chain{&goal_node};
      for (long i = goal; i > 0; i = nodes[static_cast<std::size_t>(i)].parent) chain.push_back(&nodes[static_cast<std::size_t>(i)]);
      std::reverse(chain.begin(), chain.end());
      Str cur = cur0;
      for (const SearchNode* nd : chain) {
        CertificateStep st;
        st.move = CertificateStep::Move::Insert;
        st.relator = nd->conj.relator;
        st.inverted = nd->conj.inverted;
        st.shift = nd->conj.shift;
        st.position = nd->position;
        Str t = to_str(rs.conjugate(st.relator, st.inverted, st.shift));
        cur = insert_reduce(cur, st.position, t);
        st.snapshot = to_word(cur);
        cert.steps.push_back(std::move(st));
        append_cancels(cur, nd->cancels, cert.steps);
      }
      ReplayResult rr = replay(cert, rs);
      if (!rr.ok) throw ProverError("internal: search produced an invalid certificate: " + rr.message);
      result.verdict = Verdict::Proved;
      result.certificate = std::move(cert);
      return result;
    }
    if (!truncated) exhausted_slack = static_cast<long>(slack);  // space exhausted below the depth limit
  }
  if (remaining == 0) result.stats.budget_exhausted = true;
  result.verdict = Verdict::Unknown;
  return result;
}

Word apply_move(const Word& w, const Move& m) {
  Str t = to_str(m.inserted);
  return to_word(insert_reduce(to_str(w), m.position, t));
}

namespace {

struct LMove {
  std::size_t position = 0;
  Str t;
  Conj conj;
};

Move to_move(const LMove& m) {
  Move out;
  out.position = m.position;
  out.inserted.reserve(m.t.size());
  for (char c : m.t) out.inserted.push_back(static_cast<LetterCode>(static_cast<signed char>(c)));
  out.relator = m.conj.relator;
  out.inverted = m.conj.inverted;
  out.shift = m.conj.shift;
  return out;
}

template <class F>
void linear_successors(const Str& W, const RewriteSystem& rs, std::size_t slack, F&& emit) {
  const auto& sym = rs.symmetrized();
  std::size_t L = W.size();
  for (std::size_t p = 0; p < L; ++p) {
    for (std::size_t si : rs.starting_with(static_cast<LetterCode>(static_cast<signed char>(W[p])))) {
      const auto& s = sym[si].letters;
      std::size_t m = s.size();
      std::size_t k = 0;
      while (k < m && p + k < L && static_cast<LetterCode>(static_cast<signed char>(W[p + k])) == s[k]) ++k;
      std::size_t lo = min_match(m, slack);
      if (k < lo) continue;
      Str inv_s;
      for (std::size_t q = m; q-- > 0;) inv_s.push_back(static_cast<char>(-s[q]));
      for (std::size_t l = k; l >= lo && l >= 1; --l) {
        LMove mv{p, inv_s, inverse_conj(sym[si], 0)};
        emit(mv, insert_reduce(W, p, inv_s));
      }
    }
  }
}

// Move taking apply(Y, m) back to Y, if it is a single rotation insertion.
std::optional<LMove> reverse_move(const Str& Y, const LMove& m, const Str& R, const RewriteSystem& rs) {
  const Str& t = m.t;
  std::size_t p = m.position;
  std::size_t c1 = 0;
  while (c1 < t.size() && c1 < p && Y[p - 1 - c1] == neg(t[c1])) ++c1;
  std::size_t c2 = 0;
  while (c1 + c2 < t.size() && p + c2 < Y.size() && Y[p + c2] == neg(t[t.size() - 1 - c2])) ++c2;
  std::size_t m_len = t.size();
  std::size_t q = p - c1 + (m_len - c1 - c2);
  Str tinv = inverse_str(t);
  Str z = rotate_str(tinv, c2);
  if (q > R.size()) return std::nullopt;
  if (insert_reduce(R, q, z) != Y) return std::nullopt;
  std::size_t rl = rs.relators()[m.conj.relator].size();
  Conj c{m.conj.relator, !m.conj.inverted, ((rl - m.conj.shift % rl) % rl + c2) % rl};
  return LMove{q, z, c};
}

struct Visit {
  Str parent;
  LMove move;  // forward side: parent -> word; backward side: word -> parent
  std::size_t depth = 0;
};

}  // namespace

std::optional<Derivation> find_derivation(const Word& from, const Word& to, const RewriteSystem& rs, std::size_t max_moves,
                                          std::size_t max_nodes, std::optional<std::size_t> slack) {
  std::size_t sl = slack.value_or(rs.budget().match_slack);
  Str a = to_str(free_reduce(from)), b = to_str(free_reduce(to));
  Derivation d{to_word(a), to_word(b), {}};
  if (a == b) return d;
  std::unordered_map<Str, Visit> fw, bw;
  fw.emplace(a, Visit{});
  bw.emplace(b, Visit{});
  std::vector<Str> ff{a}, bf{b};
  std::size_t df = 0, db = 0, nodes = 0;
  std::size_t max_len = 2 * std::max(a.size(), b.size()) + 24;
  std::optional<Str> meet;
  while (!meet && df + db < max_moves && nodes < max_nodes && (!ff.empty() || !bf.empty())) {
    bool forward = !ff.empty() && (bf.empty() || ff.size() <= bf.size());
    auto& frontier = forward ? ff : bf;
    auto& mine = forward ? fw : bw;
    auto& other = forward ? bw : fw;
    std::vector<Str> next;
    for (const Str& W : frontier) {
      if (meet || nodes >= max_nodes) break;
      ++nodes;
      linear_successors(W, rs, sl, [&](const LMove& mv, const Str& R) {
        if (meet || R.size() > max_len || mine.count(R)) return;
        if (forward) {
          mine.emplace(R, Visit{W, mv, df + 1});
        } else {
          auto rev = reverse_move(W, mv, R, rs);
          if (!rev) return;
          mine.emplace(R, Visit{W, *rev, db + 1});
        }
        if (other.count(R)) meet = R;
        else next.push_back(R);
      });
    }
    frontier = std::move(next);
    (forward ? df : db) += 1;
  }
  if (!meet) return std::nullopt;
  std::vector<LMove> head;
  for (Str cur = *meet; cur != a;) {
    const Visit& v = fw.at(cur);
    head.push_back(v.move);
    cur = v.parent;
  }
  std::reverse(head.begin(), head.end());
  for (Str cur = *meet; cur != b;) {
    const Visit& v = bw.at(cur);
    head.push_back(v.move);
    cur = v.parent;
  }
  Str cur = a;
  for (const auto& mv : head) {
    cur = insert_reduce(cur, mv.position, mv.t);
    d.moves.push_back(to_move(mv));
  }
  if (cur != b) throw ProverError("internal: derivation does not reach its target");
  return d;
}

namespace {

std::size_t common_suffix(const Str& x, const Str& y) {
  std::size_t k = 0;
  while (k < x.size() && k < y.size() && x[x.size() - 1 - k] == y[y.size() - 1 - k]) ++k;
  return k;
}

bool convert(const Str& from, const std::vector<Move>& moves, const Str& target, Str& C, std::vector<CertificateStep>& steps,
             int depth) {
  if (depth > 16) return false;
  Str X = from, T = target;
  std::vector<Move> deferred;
  for (const Move& m : moves) {
    Str t = to_str(m.inserted);
    Str Xn = insert_reduce(X, m.position, t);
    std::size_t s = common_suffix(X, T);
    std::size_t xl = X.size() - s;
    if (m.position <= xl) {
      C = insert_reduce(C, m.position, t);
      CertificateStep st;
      st.move = CertificateStep::Move::Insert;
      st.relator = m.relator;
      st.inverted = m.inverted;
      st.shift = m.shift;
      st.position = m.position;
      st.snapshot = to_word(C);
      steps.push_back(std::move(st));
      if (C != reduce_str(Xn + inverse_str(T))) return false;
    } else {
      Move mt = m;
      mt.position = m.position - xl + (T.size() - s);
      Str Tn = insert_reduce(T, mt.position, t);
      if (reduce_str(Xn + inverse_str(Tn)) != C) return false;
      deferred.push_back(mt);
      T = Tn;
    }
    X = Xn;
  }
  if (X != target) return false;
  if (T == target) return C.empty();
  return convert(target, deferred, T, C, steps, depth + 1);
}

}  // namespace

std::optional<Certificate> certificate_from_derivation(const Derivation& d) {
  Certificate c;
  Str from = to_str(d.from), to = to_str(d.to);
  Str C = reduce_str(from + inverse_str(to));
  c.input = to_word(C);
  if (!convert(from, d.moves, to, C, c.steps, 0)) return std::nullopt;
  return c;
}

const HintScript* HintBook::find(const std::string& relation_text) const {
  for (const auto& s : scripts)
    if (s.relation == relation_text) return &s;
  return nullptr;
}

HintOutcome follow_hints(const Word& lhs, const Word& rhs, const std::vector<Word>& chain, const RewriteSystem& rs,
                         std::size_t max_moves) {
  HintOutcome out;
  std::vector<Word> words{free_reduce(lhs)};
  for (const Word& w : chain) words.push_back(free_reduce(w));
  words.push_back(free_reduce(rhs));
  Derivation total{words.front(), words.back(), {}};
  for (std::size_t k = 0; k + 1 < words.size(); ++k) {
    auto d = find_derivation(words[k], words[k + 1], rs, max_moves, 20000, 0);
    if (!d) d = find_derivation(words[k], words[k + 1], rs, max_moves, 100000, 1);
    if (!d) {
      out.failed_step = k;
      out.message = "no short derivation between chain entries " + std::to_string(k) + " and " + std::to_string(k + 1);
      return out;
    }
    total.moves.insert(total.moves.end(), d->moves.begin(), d->moves.end());
  }
  out.ok = true;
  out.derivation = std::move(total);
  return out;
}

Word GeneratorMap::apply(const Word& w) const {
  std::vector<LetterCode> out;
  for (LetterCode c : w.codes()) {
    Letter l = Letter::from_code(c);
    if (l.generator >= static_cast<int>(images.size())) throw ProverError("map does not cover generator " + std::to_string(l.generator));
    const Word& img = images[static_cast<std::size_t>(l.generator)];
    if (l.sign > 0) out.insert(out.end(), img.codes().begin(), img.codes().end());
    else {
      Word inv = img.inverse();
      out.insert(out.end(), inv.codes().begin(), inv.codes().end());
    }
  }
  return Word(out);
}

GeneratorMap make_map(const Presentation& source, const Presentation& target,
                      const std::vector<std::pair<std::string, std::string>>& assignments) {
  GeneratorMap m;
  m.source = source.name;
  m.target = target.name;
  m.images.assign(static_cast<std::size_t>(source.generator_count()), Word());
  std::vector<bool> set(m.images.size(), false);
  for (const auto& [g, img] : assignments) {
    int i = source.index_of(g);
    if (i < 0) throw ProverError("unknown source generator '" + g + "'");
    m.images[static_cast<std::size_t>(i)] = target.word(img);
    set[static_cast<std::size_t>(i)] = true;
  }
  for (std::size_t i = 0; i < set.size(); ++i)
    if (!set[i]) throw ProverError("map does not cover generator " + source.generator_names[i]);
  return m;
}

RelatorVerdict check_trivial(const Word& w, const ProverEngine& engine) {
  if (!engine.rs) throw ProverError("prover engine without rewrite system");
  RelatorVerdict v;
  v.image = engine.rs->presentation().render(w);
  Word r = free_reduce(w);
  if (r.empty()) {
    v.verdict = Verdict::Proved;
    v.method = "free";
    v.certificate = Certificate{r, {}};
    return v;
  }
  if (!engine.search) {
    v.verdict = Verdict::Unknown;
    v.method = "none";
    v.note = "search disabled";
    return v;
  }
  ProofResult pr = prove_trivial(r, *engine.rs);
  v.nodes = pr.stats.nodes;
  v.verdict = pr.verdict;
  v.method = "search";
  if (pr.certificate) v.certificate = std::move(pr.certificate);
  else v.note = pr.stats.budget_exhausted ? "node budget exhausted" : "depth budget exhausted";
  return v;
}

RelatorVerdict check_equal(const Word& lhs, const Word& rhs, const ProverEngine& engine, const HintScript* hint) {
  if (!engine.rs) throw ProverError("prover engine without rewrite system");
  const Presentation& tp = engine.rs->presentation();
  Word w = lhs * rhs.inverse();
  std::string hint_note;
  if (hint && !w.empty()) {
    std::vector<Word> chain;
    for (const auto& c : hint->chain) chain.push_back(tp.word(c));
    HintOutcome ho = follow_hints(lhs, rhs, chain, *engine.rs);
    if (ho.ok) {
      auto cert = certificate_from_derivation(*ho.derivation);
      if (cert && replay(*cert, *engine.rs).ok) {
        RelatorVerdict v;
        v.image = tp.render(w);
        v.verdict = Verdict::Proved;
        v.method = "hint";
        v.certificate = std::move(cert);
        return v;
      }
      hint_note = "hint derivation found but certificate conversion failed";
    } else {
      hint_note = "hint step " + std::to_string(ho.failed_step + 1) + " failed: " + ho.message;
    }
  }
  if (!hint && !w.empty()) {
    // Images of short relations are usually one or two relator moves apart.
    if (auto d = find_derivation(lhs, rhs, *engine.rs, 2, 5000, 0)) {
      auto cert = certificate_from_derivation(*d);
      if (cert && replay(*cert, *engine.rs).ok) {
        RelatorVerdict v;
        v.image = tp.render(w);
        v.verdict = Verdict::Proved;
        v.method = "direct";
        v.certificate = std::move(cert);
        return v;
      }
    }
  }
  RelatorVerdict v = check_trivial(w, engine);
  if (!hint_note.empty()) v.note = v.note.empty() ? hint_note : hint_note + "; " + v.note;
  return v;
}

namespace {

const HintScript* find_hint(const HintBook* book, const Presentation& source, const Relation& r, bool& reversed) {
  reversed = false;
  if (!book) return nullptr;
  for (const auto& s : book->scripts) {
    auto eq = s.relation.find('=');
    if (eq == std::string::npos) continue;
    auto side = [&](const std::string& t) {
      auto b = t.find_first_not_of(' ');
      auto e = t.find_last_not_of(' ');
      std::string x = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
      return (x.empty() || x == "1") ? Word() : source.word(x);
    };
    Word l, rr;
    try {
      l = side(s.relation.substr(0, eq));
      rr = side(s.relation.substr(eq + 1));
    } catch (const std::exception&) {
      continue;
    }
    if (l == r.lhs && rr == r.rhs) return &s;
    if (l == r.rhs && rr == r.lhs) {
      reversed = true;
      return &s;
    }
  }
  return nullptr;
}

}  // namespace

HomomorphismReport verify_homomorphism(const GeneratorMap& map, const Presentation& source, const TargetEngine& target) {
  HomomorphismReport rep;
  rep.verdict = Verdict::Proved;
  if (map.images.size() != static_cast<std::size_t>(source.generator_count()))
    throw ProverError("map does not cover all source generators");
  for (std::size_t i = 0; i < source.relations.size(); ++i) {
    const Relation& r = source.relations[i];
    Word l = map.apply(r.lhs), rr = map.apply(r.rhs);
    RelatorVerdict v;
    if (const auto* me = std::get_if<MatrixEngine>(&target)) {
      Word w = l * rr.inverse();
      v.verdict = evaluate_word(w, me->generators).is_identity() ? Verdict::Proved : Verdict::Failed;
      v.method = "matrices";
      std::vector<std::string> names;
      for (std::size_t g = 0; g < me->generators.size(); ++g) names.push_back("g" + std::to_string(g + 1));
      v.image = w.to_string(names);
    } else {
      const auto& pe = std::get<ProverEngine>(target);
      bool reversed = false;
      const HintScript* h = find_hint(pe.hints, source, r, reversed);
      if (h && reversed) {
        HintScript rev = *h;
        std::reverse(rev.chain.begin(), rev.chain.end());
        v = check_equal(l, rr, pe, &rev);
      } else {
        v = check_equal(l, rr, pe, h);
      }
    }
    v.index = i;
    v.relation = source.relation_text(r);
    rep.verdict = combine(rep.verdict, v.verdict);
    rep.relators.push_back(std::move(v));
  }
  return rep;
}

IsomorphismReport verify_isomorphism_pair(const GeneratorMap& fwd, const GeneratorMap& bwd, const Presentation& A,
                                          const Presentation& B, const ProverEngine& engine_a, const ProverEngine& engine_b) {
  IsomorphismReport rep;
  rep.forward = verify_homomorphism(fwd, A, engine_b);
  rep.backward = verify_homomorphism(bwd, B, engine_a);
  rep.verdict = combine(rep.forward.verdict, rep.backward.verdict);
  ProverEngine plain_a = engine_a, plain_b = engine_b;
  plain_a.hints = plain_b.hints = nullptr;
  for (int g = 0; g < A.generator_count(); ++g) {
    Word x = Word::generator(g);
    RelatorVerdict v = check_trivial(bwd.apply(fwd.apply(x)) * x.inverse(), plain_a);
    v.index = static_cast<std::size_t>(g);
    v.relation = A.generator_names[static_cast<std::size_t>(g)];
    rep.verdict = combine(rep.verdict, v.verdict);
    rep.composites_source.push_back(std::move(v));
  }
  for (int g = 0; g < B.generator_count(); ++g) {
    Word x = Word::generator(g);
    RelatorVerdict v = check_trivial(fwd.apply(bwd.apply(x)) * x.inverse(), plain_b);
    v.index = static_cast<std::size_t>(g);
    v.relation = B.generator_names[static_cast<std::size_t>(g)];
    rep.verdict = combine(rep.verdict, v.verdict);
    rep.composites_target.push_back(std::move(v));
  }
  return rep;
}

}  // namespace crysref
