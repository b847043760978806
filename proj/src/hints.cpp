#include "hints.hpp"

#include <algorithm>
#include <sstream>

namespace crysref::hints {

namespace {

// Four-punctured sphere, n = 3, images in Ar(C_alpha 3).
const char* kBraidCForward3 = R"(
rel: u1 t2 = t2 u1
s2^-1 s3^-1 s5^-1 s4^-1 s3^-1 s2^-1 s3 s1^-1
s2^-1 s3^-1 s2 s5^-1 s4^-1 s3^-1 s2^-1 s1^-1

rel: u2 t2 = t2 u2
s3 s1

rel: u3 t2 = t2 u3
s2 s3 s4 s3^-1 s2^-1 s3
s2 s3 s2 s4 s3^-1 s2^-1

rel: u4 t2 = t2 u4
s2 s3 s5 s3^-1 s2^-1 s3
s2 s3 s2 s5 s3^-1 s2^-1

rel: u1 t1 u1 t1 = t1 u1 t1 u1
s2^-1 s3^-1 s5^-1 s4^-1 s3^-1 s2^-1 s3^-1 s5^-1 s4^-1 s3^-1 s1^-1 s2^-1 s1^-1 s2
s2^-1 s3^-1 s2^-1 s5^-1 s4^-1 s3^-1 s5^-1 s4^-1 s2^-1 s3^-1 s2 s1^-1 s2^-1 s1^-1
s3^-1 s2^-1 s3^-1 s5^-1 s4^-1 s3^-1 s5^-1 s3 s3^-1 s4^-1 s3 s2^-1 s1^-1 s3^-1 s2^-1 s1^-1
s3^-1 s2^-1 s3^-1 s5^-1 s3^-1 s5^-1 s3 s4^-1 s3^-1 s4^-1 s3 s2^-1 s1^-1 s3^-1 s2^-1 s1^-1
s3^-1 s2^-1 s5^-1 s3^-1 s5^-1 s3 s3^-1 s4^-1 s3^-1 s4^-1 s3 s2^-1 s1^-1 s3^-1 s2^-1 s1^-1
s3^-1 s2^-1 s5^-1 s3^-1 s5^-1 s3 s4^-1 s3^-1 s4^-1 s2^-1 s1^-1 s3^-1 s2^-1 s1^-1
# added midpoint
s3^-1 s2^-1 s5^-1 s4^-1 s3^-1 s5^-1 s2^-1 s5 s1^-1 s5^-1 s4^-1 s3^-1 s2^-1 s1^-1
s3^-1 s5^-1 s4^-1 s2^-1 s3^-1 s2^-1 s1^-1 s5^-1 s4^-1 s3^-1 s2^-1 s1^-1

rel: u2 t1 u2 t1 = t1 u2 t1 u2
s1 s2 s1 s2
s2 s1 s2 s1

rel: u3 t1 u3 t1 = t1 u3 t1 u3
s2 s3 s4 s3^-1 s2 s3 s4 s3^-1
s2 s3 s4 s2 s3 s2^-1 s4 s3^-1
s2 s3 s2 s3 s4 s3 s4 s3^-1 s2^-1 s3^-1
s2 s2 s3 s2 s4 s3 s4 s2^-1 s3^-1 s2^-1
s2 s2 s3 s4 s3^-1 s2 s3 s4 s3^-1 s2^-1

rel: u4 t1 u4 t1 = t1 u4 t1 u4
s2 s3 s5 s3^-1 s2 s3 s5 s3^-1
s2 s3 s5 s2 s3 s2^-1 s5 s3^-1
s2 s3 s2 s3 s5 s3 s5 s3^-1 s2^-1 s3^-1
s2 s2 s3 s2 s5 s3 s5 s2^-1 s3^-1 s2^-1
s2 s2 s3 s5 s3^-1 s2 s3 s5 s3^-1 s2^-1

rel: u1 t1^-1 u2 t1 = t1^-1 u2 t1 u1
s2^-1 s3^-1 s5^-1 s4^-1 s3^-1 s2^-1 s1^-1 s2^-1 s1 s2
s2^-1 s1 s3^-1 s5^-1 s4^-1 s3^-1 s2^-1 s1^-1

rel: u1 t1^-1 u3 t1 = t1^-1 u3 t1 u1
s2^-1 s3^-1 s5^-1 s4^-1 s3^-1 s2^-1 s3 s4 s3^-1 s1^-1
s2^-1 s3^-1 s2 s5^-1 s4^-1 s3^-1 s4 s3 s3^-1 s2^-1 s3^-1 s1^-1
s3 s2^-1 s3^-1 s5^-1 s3 s4 s3^-1 s4^-1 s3^-1 s2^-1 s3^-1 s1^-1
s3 s4 s2^-1 s3^-1 s2^-1 s5^-1 s4^-1 s3^-1 s2^-1 s1^-1

rel: u1 t1^-1 u4 t1 = t1^-1 u4 t1 u1
s2^-1 s3^-1 s5^-1 s4^-1 s3^-1 s2^-1 s3 s5 s3^-1 s1^-1
s2^-1 s3^-1 s2 s5^-1 s4^-1 s3^-1 s5 s3 s3^-1 s2^-1 s3^-1 s1^-1
s3 s2^-1 s3^-1 s5^-1 s3^-1 s5 s3 s4^-1 s3^-1 s2^-1 s3^-1 s1^-1
s3 s5 s2^-1 s3^-1 s2^-1 s5^-1 s4^-1 s3^-1 s2^-1 s1^-1

rel: u2 t1^-1 u3 t1 = t1^-1 u3 t1 u2
s3 s4 s3^-1 s1

rel: u2 t1^-1 u4 t1 = t1^-1 u4 t1 u2
s3 s5 s3^-1 s1

rel: u3 t1^-1 u4 t1 = t1^-1 u4 t1 u3
s2 s3 s4 s3^-1 s2^-1 s3 s5 s3^-1
s2 s3 s2 s4 s3^-1 s5 s2^-1 s3^-1
s3 s2 s3 s4 s3^-1 s5 s2^-1 s3^-1
s3 s5 s2 s3 s4 s3^-1 s2^-1 s3^-1
s3 s5 s2 s3 s2^-1 s4 s3^-1 s2^-1
)";

// Ar(C_alpha 3), images in the four-punctured sphere group.
const char* kBraidCBackward3 = R"(
rel: s1 s2 s1 s2 = s2 s1 s2 s1
u2 t1 u2 t1
t1 u2 t1 u2

rel: s1 s3 = s3 s1
t2 u2

rel: s1 s4 = s4 s1
t2^-1 u2 t1^-1 u3 t1 t2

rel: s1 s5 = s5 s1
t2^-1 u2 t1^-1 u4 t1 t2

rel: s2 s3 s2 = s3 s2 s3
t1 t2 t1
t2 t1 t2

rel: s2 s4 = s4 s2
t1 t2^-1 t1^-1 u3 t1 t2
t2^-1 t1^-1 u3 t2 t1 t2

rel: s2 s5 = s5 s2
t1 t2^-1 t1^-1 u4 t1 t2
t2^-1 t1^-1 u4 t2 t1 t2

rel: s3 s4 s3 s4 = s4 s3 s4 s3
t1^-1 u3 t2^-1 t1 t2 u3 t1 t2
t1^-1 t2^-1 t1^-1 u3 t1 u3 t1 t2 t1 t2
t2^-1 t1^-1 t2^-1 u3 t1 u3 t2 t1 t2 t2
t2^-1 t1^-1 u3 t1 t2 t1^-1 u3 t1 t2 t2

rel: s3 s5 s3 s5 = s5 s3 s5 s3
t1^-1 u4 t2^-1 t1 t2 u4 t1 t2
t1^-1 t2^-1 t1^-1 u4 t1 u4 t1 t2 t1 t2
t2^-1 t1^-1 t2^-1 u4 t1 u4 t2 t1 t2 t2
t2^-1 t1^-1 u4 t1 t2 t1^-1 u4 t1 t2 t2

rel: s3 s4 s3^-1 s5 = s5 s3 s4 s3^-1
t1^-1 u3 t1 t2^-1 t1^-1 u4 t1 t2
t1^-1 t2^-1 u3 t1^-1 u4 t2 t1 t2
t1^-1 t2^-1 u3 t1^-1 u4 t1 t2 t1
t1^-1 t2^-1 t1^-1 u4 t1 t2 u3 t1
t2^-1 t1^-1 u4 t2^-1 t1 t2 u3 t1
)";

// Special torus configurations, n = 4, images in Ar(A_alpha 4).
const char* kBraidAForward4 = R"(
rel: t1 t2 = t2 t1
s2^-1 s3^-1 s5 s3 s2 s3^-1 s5 s1 s3 s2
s2^-1 s3^-1 s2^-1 s3 s5 s3 s2 s3 s1 s2
s3^-1 s5 s3 s2 s1 s2
s3^-1 s5 s1 s5^-1 s3 s3^-1 s5 s3 s2 s1
s3^-1 s1^-1 s5 s1 s3 s2 s2^-1 s3^-1 s5 s3 s2 s1

rel: t1 t3 = t3 t1
s2^-1 s3^-1 s5 s3 s2 s1 s2^-1 s1^-1 s5 s1 s2 s3
s2^-1 s3^-1 s5 s3 s1^-1 s5 s2 s1 s2 s3
s2^-1 s5 s3 s5^-1 s1^-1 s5 s2 s1 s2 s3
s2^-1 s5 s1 s3 s5^-1 s1^-1 s2 s1 s2 s3
s2^-1 s5 s1 s3 s5^-1 s2 s3 s2^-1 s2 s1
s2^-1 s5 s1 s3 s5^-1 s3^-1 s2 s3 s2 s1
s2^-1 s5 s1 s5^-1 s3^-1 s2 s5 s3 s2 s1
s2^-1 s1^-1 s5 s1 s3^-1 s2 s3 s3^-1 s5 s3 s2 s1

rel: t2 t3 = t3 t2
s1^-1 s3^-1 s5 s3 s5 s1 s2 s3
s1^-1 s5 s1 s3 s2 s3
s1^-1 s5 s1 s2 s1^-1 s1 s3 s2
s1^-1 s2^-1 s1^-1 s1 s5 s1 s2 s3 s1 s2
s2^-1 s1^-1 s5 s2^-1 s1 s2 s5 s3 s1 s2

rel: r1 t2 r1 = t1 t2
s3^-1 s5 s3 s1 s2 s1

rel: r2 t1 r2 = t1 t2
s3^-1 s5 s3 s1 s2 s1

rel: r2 t3 r2 = t2 t3
s1^-1 s5 s1 s2 s3 s2

rel: r3 t2 r3 = t2 t3
s1^-1 s5 s1 s2 s3 s2

rel: r0 t1 r0 = t1 t3^-1 t2^-1 t1^-1
s4 s2^-1 s3^-1 s5 s3 s2 s1 s4
s2^-1 s3^-1 s2^-1 s1^-1 s5^-1 s1

rel: r0 t3 r0 = t2^-1 t1^-1
s4 s2^-1 s1^-1 s5 s1 s2 s3 s4
s2^-1 s1^-1 s2^-1 s3^-1 s5^-1 s3

rel: r1 t3 = t3 r1
s1 s2^-1 s1^-1 s5 s1 s2 s3
s2^-1 s1^-1 s5 s2 s1 s2 s3
s2^-1 s1^-1 s5 s1 s2 s3 s1

rel: r3 t1 = t1 r3
s3 s2^-1 s3^-1 s5 s3 s2 s1
s2^-1 s3^-1 s5 s2 s3 s2 s1
s2^-1 s3^-1 s5 s3 s2 s1 s3

rel: r0 t2 = t2 r0
s4 s1^-1 s3^-1 s5 s3 s1 s2
s4 s1^-1 s5 s3 s5^-1 s1 s2
s1^-1 s2^-1 s3^-1 s5^-1 s3 s4^-1 s3^-1 s2^-1 s3 s1^-1 s5^-1 s1 s2
s1^-1 s2^-1 s3^-1 s5^-1 s3 s2 s4^-1 s3^-1 s2^-1 s1^-1 s5^-1 s1 s2
s1^-1 s2^-1 s3^-1 s5^-1 s3 s2 s3^-1 s5 s3 s2 s1 s4 s2
s1^-1 s2^-1 s3^-1 s2^-1 s5^-1 s3 s5 s2 s3 s2 s1 s2 s4
s1^-1 s3^-1 s5 s2^-1 s3^-1 s2 s3 s2 s1 s2 s4
)";

// Ar(A_alpha 4), images in the special torus configuration group.
const char* kBraidABackward4 = R"(
chain: s5 forms
r1 r2 t3 r3^-1 r2^-1 r1^-1
r1 t2 t3 r2^-1 r3^-1 r2^-1 r1^-1
r1 t2 t3 r3^-1 r2^-1 r3^-1 r1^-1
r1 r3 t2 r2^-1 r3^-1 r1^-1
r3 r1 t2 r2^-1 r1^-1 r3^-1
r3 t1 t2 r1^-1 r2^-1 r1^-1 r3^-1
r3 t1 t2 r2^-1 r1^-1 r2^-1 r3^-1
r3 r2 t1 r1^-1 r2^-1 r3^-1

rel: s1 s5 s1 = s5 s1 s5
r1 r1 r3 t2 r2^-1 r3^-1
r1 r3 r1 t2 r2^-1 r3^-1
r3 r1 t2 t1 r1^-1 r2^-1 r3^-1
r3 r2 t1 r2 r1^-1 t1 r1^-1 r2^-1 r3^-1
r3 r2 t1 r1^-1 r2^-1 r1 r2 t1 r1^-1 r2^-1 r3^-1

rel: s2 s5 = s5 s2
r2 r3 r2 t1 r1^-1 r2^-1 r3^-1
r3 r2 t1 r1^-1 r3 r2^-1 r3^-1
r3 r2 t1 r1^-1 r2^-1 r3^-1 r2

rel: s3 s5 s3 = s5 s3 s5
r3 r1 r2 t3 r3^-1 r2^-1 r1^-1 r3
r3 r1 r2 t3 r2 r3^-1 r2^-1 r1^-1
r3 r1 t2 t3 r3^-1 r2^-1 r1^-1
r1 r2 t3 r2 r3^-1 t3 r3^-1 r2^-1 r1^-1
r1 r2 t3 r3^-1 r2^-1 r3 r2 t3 r3^-1 r2^-1 r1^-1
r1 r2 t3 r3^-1 r2^-1 r1^-1 r3 r1 r2 t3 r3^-1 r2^-1 r1^-1

rel: s5 s3 s2 s1 s4 s1^-1 = s3 s4^-1 s3^-1 s2^-1 s1^-1 s5^-1
r3 r2 t1 r1^-1 r2^-1 r3^-1 r3 r2 r1 r0 r1^-1
r3 r2 r0^-1 t2^-1 t3^-1 r1^-1
r3 r2 r0^-1 r1 t1^-1 t2^-1 t3^-1
r3 r2 r0^-1 r1 t1^-1 r3^-1 t2^-1 r3^-1
r3 r0^-1 r2 r3^-1 r1 r2^-1 t1^-1 r2^-1 r3^-1
r3 r0^-1 r2 r3^-1 r2^-1 r1^-1 r2 r1 t1^-1 r2^-1 r3^-1
r3 r0^-1 r3^-1 r2^-1 r3 r1^-1 r2 r1 t1^-1 r2^-1 r3^-1
)";

HintScript* script(HintBook& b, const std::string& relation) {
  for (auto& s : b.scripts)
    if (s.relation == relation) return &s;
  throw ProverError("hint book " + b.name + " has no script for " + relation);
}

std::vector<Word> words(const std::vector<std::string>& chain, const Presentation& p) {
  std::vector<Word> out;
  for (const auto& c : chain) out.push_back(p.word(c));
  return out;
}

std::vector<std::string> texts(const std::vector<Word>& chain, const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& w : chain) out.push_back(w.empty() ? std::string() : p.render(w));
  return out;
}

/// Chain of a relation script including the images of both sides.
std::vector<Word> full_chain(const HintBook& b, const std::string& relation, const Context& cx) {
  const HintScript* s = b.find(relation);
  if (!s) throw ProverError("hint book " + b.name + " has no script for " + relation);
  auto eq = relation.find('=');
  std::vector<Word> out{cx.map.apply(cx.source.word(relation.substr(0, eq)))};
  for (const auto& w : words(s->chain, cx.target)) out.push_back(w);
  out.push_back(cx.map.apply(cx.source.word(relation.substr(eq + 1))));
  return out;
}

std::vector<Word> inverted(std::vector<Word> chain) {
  for (auto& w : chain) w = w.inverse();
  return chain;
}

std::vector<Word> reversed(std::vector<Word> chain) {
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<Word> in_context(const Word& prefix, const std::vector<Word>& chain, const Word& suffix) {
  std::vector<Word> out;
  for (const auto& w : chain) out.push_back(prefix * w * suffix);
  return out;
}

void append(HintScript& s, const std::vector<Word>& chain, const Presentation& p) {
  for (const auto& t : texts(chain, p)) s.chain.push_back(t);
}

void prepend(HintScript& s, const std::vector<Word>& chain, const Presentation& p) {
  auto t = texts(chain, p);
  s.chain.insert(s.chain.begin(), t.begin(), t.end());
}

}  // namespace

HintBook parse_book(const std::string& name, const std::string& text) {
  HintBook book;
  book.name = name;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    std::string t = line.substr(b);
    if (t.rfind("rel:", 0) == 0 || t.rfind("chain:", 0) == 0) {
      auto colon = t.find(':');
      auto start = t.find_first_not_of(' ', colon + 1);
      book.scripts.push_back({t.substr(start), {}});
    } else if (!book.scripts.empty()) {
      book.scripts.back().chain.push_back(t);
    }
  }
  return book;
}

HintBook braid_c_forward(int n, const Context&) {
  if (n != 3) return {};
  return parse_book("four-punctured sphere to Ar(C_alpha 3)", kBraidCForward3);
}

HintBook braid_c_backward(int n, const Context&) {
  if (n != 3) return {};
  return parse_book("Ar(C_alpha 3) to four-punctured sphere", kBraidCBackward3);
}

HintBook braid_a_forward(int n, const Context& cx) {
  if (n != 4) return {};
  HintBook b = parse_book("special torus configurations to Ar(A_alpha 4)", kBraidAForward4);
  // (t2 t3)^-1 = t1 (t1 t2 t3)^-1 through the t1 t3 and t1 t2 commutations.
  const auto& T = cx.source;
  auto img = [&](const std::string& w) { return cx.map.apply(T.word(w)); };
  HintScript* s = script(b, "r0 t1 r0 = t1 t3^-1 t2^-1 t1^-1");
  append(*s, in_context(img("t1"), reversed(inverted(full_chain(b, "t1 t3 = t3 t1", cx))), img("t2^-1")), cx.target);
  append(*s, in_context(img("t1 t3^-1"), reversed(inverted(full_chain(b, "t1 t2 = t2 t1", cx))), Word()), cx.target);
  // The remaining middles are the third form of t1 t2.
  auto head = full_chain(b, "t1 t2 = t2 t1", cx);
  head.resize(4);
  for (const char* rel : {"r1 t2 r1 = t1 t2", "r2 t1 r2 = t1 t2"}) append(*script(b, rel), reversed(head), cx.target);
  append(*script(b, "r0 t3 r0 = t2^-1 t1^-1"), inverted(reversed(head)), cx.target);
  return b;
}

HintBook braid_a_backward(int n, const Context& cx) {
  if (n != 4) return {};
  HintBook b = parse_book("Ar(A_alpha 4) to special torus configurations", kBraidABackward4);
  const auto& P = cx.target;
  const HintScript* forms = b.find("s5 forms");
  std::vector<Word> e = words(forms->chain, P);  // t3 form ... t1 form
  Word r3 = P.word("r3");
  // s5 s3 s5 = s3 s5 s3 is written with s5 in its t3 form.
  HintScript* s = script(b, "s3 s5 s3 = s5 s3 s5");
  prepend(*s, in_context(r3, reversed(e), r3), P);
  append(*s, in_context(Word(), e, r3 * e.front()), P);
  append(*s, in_context(e.back() * r3, e, Word()), P);
  // s1 s5 s1 passes through the middle form r1 r3 t2 r2^-1 r3^-1 r1^-1.
  HintScript* t = script(b, "s1 s5 s1 = s5 s1 s5");
  Word r1 = P.word("r1");
  std::vector<Word> tail(e.begin() + 3, e.end());
  prepend(*t, in_context(r1, reversed(tail), r1), P);
  return b;
}

}  // namespace crysref::hints
