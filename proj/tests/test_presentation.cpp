#include "crysref/presentation.hpp"
#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <numeric>

using namespace crysref;

namespace {

std::vector<Integer> ints(std::initializer_list<int> v) { return std::vector<Integer>(v.begin(), v.end()); }

bool has_relator(const Presentation& p, const std::string& text) {
  Word w = p.word(text);
  for (const auto& r : p.relators())
    if (r == w) return true;
  return false;
}

/// gcd of all k x k minors, by cofactor expansion (test oracle, tiny matrices only).
Integer det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      sub.push_back(row);
    }
    Integer term = m[0][c] * det(sub);
    d += (c % 2 == 0) ? term : Integer(-term);
  }
  return d;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Integer> invariant_factors_by_minors(const std::vector<std::vector<Integer>>& m) {
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<Integer> dk{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> sub;
        for (auto i : r) {
          std::vector<Integer> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        g = gcd(g, abs(det(sub)));
      }
    if (g.is_zero()) break;
    dk.push_back(g);
  }
  std::vector<Integer> f;
  for (std::size_t k = 1; k < dk.size(); ++k) f.push_back(dk[k] / dk[k - 1]);
  while (f.size() < std::min(rows, cols)) f.push_back(0);
  return f;
}

}  // namespace

TEST_CASE("A1 presentation") {
  auto p = build_group_presentation(Family::C_alpha, 1);
  CHECK(p.generator_count() == 3);
  CHECK(p.relations.size() == 4);
  for (auto t : {"s1 s1", "s2 s2", "s3 s3", "s1 s2 s3 s1 s2 s3"}) CHECK(has_relator(p, t));
  auto q = build_group_presentation(Family::A_alpha, 2);
  CHECK(q.relators() == p.relators());
  CHECK(p.diagram.edges.size() == 3);
  for (const auto& e : p.diagram.edges) CHECK(e.lace == Lace::Infinity);
}

TEST_CASE("C presentation at n = 2") {
  auto p = build_group_presentation(Family::C_alpha, 2);
  CHECK(p.generator_count() == 4);
  CHECK(has_relator(p, "s2 s3 s2^-1 s4 s2 s3^-1 s2^-1 s4^-1"));
  CHECK(has_relator(p, "s1 s2 s3 s4 s2 s1 s2 s3 s4 s2"));
  int doubles = 0, xs = 0;
  for (const auto& e : p.diagram.edges) {
    doubles += e.lace == Lace::Double;
    xs += e.lace == Lace::X;
  }
  CHECK(doubles == 3);
  CHECK(xs == 1);
}

TEST_CASE("A presentation at n = 3") {
  auto p = build_group_presentation(Family::A_alpha, 3);
  CHECK(p.generator_count() == 4);
  REQUIRE(p.extra_order_relation);
  CHECK(p.render(p.extra_order_relation->base) == "s1 s2 s3 s4 s2");
  CHECK(has_relator(p, "s1 s2 s3 s4 s2 s1 s2 s3 s4 s2"));
  // x-relation s4 s2 s1 s3 s1^-1 = s2 s3^-1 s2^-1 s1^-1 s4^-1
  CHECK(has_relator(p, "s4 s2 s1 s3 s1^-1 s4 s1 s2 s3 s2^-1"));
}

TEST_CASE("node counts match the minimal generator bound") {
  for (int n = 2; n <= 6; ++n) CHECK(build_group_presentation(Family::C_alpha, n).generator_count() == n + 2);
  for (int n = 3; n <= 6; ++n) CHECK(build_group_presentation(Family::A_alpha, n).generator_count() == n + 1);
}

TEST_CASE("rank ranges") {
  CHECK_THROWS_AS(build_group_presentation(Family::C_alpha, 0), PresentationError);
  CHECK_THROWS_AS(build_group_presentation(Family::A_alpha, 1), PresentationError);
  CHECK_THROWS_AS(build_group_presentation(Family::G422, 3), PresentationError);
  CHECK_THROWS_AS(build_braid_presentation(BraidSpace::PuncturedSphere4, 1), PresentationError);
  CHECK_THROWS_AS(build_braid_presentation(BraidSpace::FreeRank3, 2), PresentationError);
}

TEST_CASE("braid presentations") {
  auto s = build_braid_presentation(BraidSpace::PuncturedSphere4, 2);
  CHECK(s.generator_count() == 5);
  CHECK(has_relator(s, "u1 u2 u3 u4 t1 t1"));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      std::string ui = "u" + std::to_string(i), uj = "u" + std::to_string(j);
      CHECK(has_relator(s, ui + " t1^-1 " + uj + " t1 " + ui + "^-1 t1^-1 " + uj + "^-1 t1"));
    }
  auto t = build_braid_presentation(BraidSpace::TorusSpecial, 3);
  CHECK(t.generator_count() == 5);
  // r0 t_i r0 = t_i (t1 t2)^-1 for i = 1, 2
  CHECK(has_relator(t, "r0 t1 r0 t1 t2 t1^-1"));
  CHECK(has_relator(t, "r0 t2 r0 t1"));
  auto f = build_braid_presentation(BraidSpace::FreeRank3, 1);
  CHECK(f.generator_count() == 3);
  CHECK(f.relations.empty());
  for (const auto& o : t.generator_orders) CHECK_FALSE(o.has_value());
}

TEST_CASE("artinize") {
  auto a1 = artinize(build_group_presentation(Family::C_alpha, 1));
  CHECK(a1.relations.empty());
  auto c2 = artinize(build_group_presentation(Family::C_alpha, 2));
  int quartic = 0;
  for (const auto& r : c2.relations) {
    CHECK(r.kind != RelationKind::Order);
    CHECK(r.kind != RelationKind::ExtraOrder);
    if (r.lhs.size() == 4 && r.kind == RelationKind::Braid) ++quartic;
  }
  CHECK(quartic == 3);
  CHECK(has_relator(c2, "s2 s3 s2^-1 s4 s2 s3^-1 s2^-1 s4^-1"));
  for (const auto& o : c2.generator_orders) CHECK_FALSE(o.has_value());
  auto c3 = artinize(build_group_presentation(Family::C_alpha, 3));
  CHECK(has_relator(c3, "s2 s3 s2 s3^-1 s2^-1 s3^-1"));
  for (auto f : {Family::C_alpha, Family::A_alpha, Family::G411})
    for (int n : {2, 3, 4}) {
      auto a = artinize(build_group_presentation(f, n));
      CHECK(artinize(a).to_text() == a.to_text());
    }
  auto free3 = build_braid_presentation(BraidSpace::FreeRank3, 1);
  CHECK(artinize(free3).to_text() == free3.to_text());
}

TEST_CASE("text format round trip") {
  for (auto f : {Family::C_alpha, Family::A_alpha, Family::G311, Family::G611})
    for (int n : {2, 3, 4}) {
      auto p = build_group_presentation(f, n);
      std::string t = p.to_text();
      auto q = Presentation::parse_text(t);
      CHECK(q.to_text() == t);
      CHECK(q.relators() == p.relators());
      CHECK(q.generator_orders == p.generator_orders);
    }
  auto p = build_group_presentation(Family::C_alpha, 1);
  CHECK(p.to_text() ==
        "gens: s1 s2 s3\norders: 2 2 2\nrel: s1 s1\nrel: s2 s2\nrel: s3 s3\nrel: s1 s2 s3 s1 s2 s3\n");
  CHECK_THROWS_AS(Presentation::parse_text("gens: a\norders: 2 2\n"), PresentationError);
  CHECK_THROWS(Presentation::parse_text("gens: a\norders: 2\nrel: b\n"));
}

TEST_CASE("abelianization table") {
  CHECK(abelianize(build_group_presentation(Family::C_alpha, 1)) == ints({2, 2, 2}));
  CHECK(abelianize(build_group_presentation(Family::A_alpha, 2)) == ints({2, 2, 2}));
  for (int n = 2; n <= 5; ++n) CHECK(abelianize(build_group_presentation(Family::C_alpha, n)) == ints({2, 2, 2, 2}));
  for (int n = 3; n <= 5; ++n) CHECK(abelianize(build_group_presentation(Family::A_alpha, n)) == ints({2}));
  CHECK(abelianize(build_braid_presentation(BraidSpace::FreeRank3, 1)) == ints({0, 0, 0}));
  CHECK(abelianize(artinize(build_group_presentation(Family::C_alpha, 1))) == ints({0, 0, 0}));
}

TEST_CASE("abelianization goldens for the G(d,1,n) families") {
  auto ab = [](Family f, int n) { return abelianize(build_group_presentation(f, n)); };
  CHECK(ab(Family::G311, 1) == ints({3, 3}));
  CHECK(ab(Family::G411, 1) == ints({2, 4}));
  CHECK(ab(Family::G611, 1) == ints({6}));
  for (int n = 2; n <= 5; ++n) {
    CHECK(ab(Family::G311, n) == ints({3, 6}));
    CHECK(ab(Family::G411, n) == ints({2, 2, 4}));
    CHECK(ab(Family::G611, n) == ints({2, 6}));
  }
}

TEST_CASE("Smith form agrees with the determinant-divisor oracle") {
  auto rng = testsupport::rng(2);
  std::uniform_int_distribution<int> dim(1, 4), coef(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int r = dim(rng), c = dim(rng);
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(r), std::vector<Integer>(static_cast<std::size_t>(c)));
    for (auto& row : m)
      for (auto& x : row) x = coef(rng);
    CHECK(smith_diagonal(m) == invariant_factors_by_minors(m));
  }
}

TEST_CASE("abelianization is invariant under relator conjugation and inversion") {
  auto rng = testsupport::rng(3);
  for (auto f : {Family::C_alpha, Family::A_alpha})
    for (int n : {2, 3, 4}) {
      auto p = build_group_presentation(f, n);
      auto base = abelianize(p);
      for (int trial = 0; trial < 20; ++trial) {
        auto q = p;
        std::uniform_int_distribution<int> gen(0, p.generator_count() - 1), coin(0, 1), len(0, 5);
        for (auto& r : q.relations) {
          Word c;
          for (int k = len(rng); k > 0; --k) c = c * Word::generator(gen(rng), coin(rng) ? 1 : -1);
          Word w = c * r.relator() * c.inverse();
          if (coin(rng)) w = w.inverse();
          r = Relation{w, Word(), r.kind, std::nullopt};
        }
        CHECK(abelianize(q) == base);
      }
    }
}

TEST_CASE("free reduction is confluent") {
  auto rng = testsupport::rng(4);
  std::uniform_int_distribution<int> gen(1, 3), coin(0, 1), len(0, 30);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<LetterCode> codes;
    for (int k = len(rng); k > 0; --k) codes.push_back(coin(rng) ? gen(rng) : -gen(rng));
    Word stack(codes);
    // reduce by repeatedly cancelling a random adjacent pair
    std::vector<LetterCode> w = codes;
    for (;;) {
      std::vector<std::size_t> pairs;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == -w[i + 1]) pairs.push_back(i);
      if (pairs.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
      std::size_t i = pairs[pick(rng)];
      w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
    }
    CHECK(stack.codes() == w);
    CHECK(free_reduce(stack) == stack);
  }
}

TEST_CASE("free_reduce examples") {
  std::vector<std::string> names{"s1", "s2", "s3"};
  CHECK(free_reduce(std::vector<Letter>{{0, 1}, {1, 1}, {1, -1}, {2, 1}}).to_string(names) == "s1 s3");
  CHECK(free_reduce(std::vector<Letter>{{0, 1}, {0, -1}}).empty());
  CHECK(Word::parse("s1 s2^-1 s3^2", names).to_string(names) == "s1 s2^-1 s3 s3");
  CHECK(cyclic_reduce(Word::parse("s1 s2 s3 s1^-1", names)).to_string(names) == "s2 s3");
}

TEST_CASE("diagram_to_dot") {
  auto a1 = build_group_presentation(Family::C_alpha, 1);
  std::string dot = diagram_to_dot(a1.diagram);
  CHECK(dot.find("n2 [label=\"s3\"]") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 6);
  CHECK(dot.find("∞") != std::string::npos);
  CoxeterLikeDiagram single{{{"s1", 2}}, {}};
  CHECK(diagram_to_dot(single) == "graph D {\n  node [shape=circle];\n  n0 [label=\"s1\"];\n}\n");
  std::string a3 = diagram_to_dot(build_group_presentation(Family::A_alpha, 3).diagram);
  CHECK(a3.find("style=dashed") != std::string::npos);
  CHECK(diagram_to_dot(a1.diagram) == dot);
}
