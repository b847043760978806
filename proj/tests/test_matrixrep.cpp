#include "crysref/matrixrep.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crysref;

namespace {

RingSpec FA = RingSpec::formal_alpha();
RingElement r(int a, int b = 0) { return RingElement(FA, a, b); }

AffineElement rank1(int g, const RingElement& t) { return AffineElement({{r(g)}}, {t}); }

Word random_word(std::mt19937_64& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> gen(1, gens), coin(0, 1), len(0, max_len);
  std::vector<LetterCode> c;
  for (int k = len(rng); k > 0; --k) c.push_back(coin(rng) ? gen(rng) : -gen(rng));
  return Word(c);
}

}  // namespace

TEST_CASE("C_alpha generator matrices") {
  auto g1 = build_generator_matrices(Family::C_alpha, 1, FA);
  REQUIRE(g1.size() == 3);
  CHECK(g1[0] == rank1(-1, r(0)));
  CHECK(g1[1] == rank1(-1, r(1)));
  CHECK(g1[2] == rank1(-1, r(0, 1)));
  auto g3 = build_generator_matrices(Family::C_alpha, 3, FA);
  REQUIRE(g3.size() == 5);
  CHECK(g3[3].linear() == Matrix{{r(1), r(0), r(0)}, {r(0), r(1), r(0)}, {r(0), r(0), r(-1)}});
  CHECK(g3[3].translation() == std::vector<RingElement>{r(0), r(0), r(1)});
  CHECK_THROWS_AS(build_generator_matrices(Family::C_alpha, 2, RingSpec::cyclotomic(4)), MatrixError);
  CHECK_THROWS_AS(build_generator_matrices(Family::G412, 2, FA), MatrixError);
}

TEST_CASE("A_alpha generator matrices follow the lattice e1 - e_n") {
  auto g = build_generator_matrices(Family::A_alpha, 3, FA);
  REQUIRE(g.size() == 4);
  Matrix swap13{{r(0), r(0), r(1)}, {r(0), r(1), r(0)}, {r(1), r(0), r(0)}};
  CHECK(g[2].linear() == swap13);
  CHECK(g[2].translation() == std::vector<RingElement>{r(1), r(0), r(-1)});
  CHECK(g[3].linear() == swap13);
  CHECK(g[3].translation() == std::vector<RingElement>{r(0, 1), r(0), r(0, -1)});
}

TEST_CASE("evaluate_word examples") {
  auto g1 = build_generator_matrices(Family::C_alpha, 1, FA);
  CHECK(evaluate_word(Word(), g1).is_identity());
  CHECK(evaluate_word(Word{1, 2}, g1) == rank1(1, r(-1)));
  auto p3 = build_group_presentation(Family::C_alpha, 3);
  auto g3 = build_generator_matrices(Family::C_alpha, 3, FA);
  CHECK(evaluate_word(p3.extra_order_relation->base.pow(2), g3).is_identity());
  // s1 ... s_{n+2} s_n ... s_2 = (diag(-1, 1, ..) | (alpha - 1) e_1)
  AffineElement base = evaluate_word(p3.extra_order_relation->base, g3);
  CHECK(base.translation()[0] == r(-1, 1));
  CHECK(base.linear()[0][0] == r(-1));
}

TEST_CASE("every presentation relator holds in the matrices") {
  for (int n = 1; n <= 5; ++n) {
    auto rep = verify_presentation(build_group_presentation(Family::C_alpha, n), build_generator_matrices(Family::C_alpha, n, FA));
    CHECK_MESSAGE(rep.pass, "C_alpha ", n);
  }
  for (int n = 2; n <= 6; ++n) {
    auto rep = verify_presentation(build_group_presentation(Family::A_alpha, n), build_generator_matrices(Family::A_alpha, n, FA));
    CHECK_MESSAGE(rep.pass, "A_alpha ", n);
  }
  for (auto f : {Family::G311, Family::G411, Family::G611})
    for (int n = 1; n <= 4; ++n) {
      auto p = build_group_presentation(f, n);
      auto rep = verify_presentation(p, build_generator_matrices(f, n));
      CHECK_MESSAGE(rep.pass, to_string(f), " ", n);
    }
}

TEST_CASE("relators are not satisfied for wrong orders") {
  // the extra relation fails at a smaller exponent
  for (auto f : {Family::G311, Family::G411, Family::G611})
    for (int n = 1; n <= 3; ++n) {
      auto p = build_group_presentation(f, n);
      auto g = build_generator_matrices(f, n);
      const auto& e = *p.extra_order_relation;
      for (int k = 1; k < e.order; ++k) CHECK_FALSE(evaluate_word(e.base.pow(k), g).is_identity());
    }
}

TEST_CASE("swapping the two lattice generators is a symmetry of the presentation") {
  auto p = build_group_presentation(Family::C_alpha, 2);
  auto g = build_generator_matrices(Family::C_alpha, 2, FA);
  std::swap(g[2], g[3]);
  CHECK(verify_presentation(p, g).pass);
}

TEST_CASE("a corrupted generator is detected") {
  auto p = build_group_presentation(Family::C_alpha, 2);
  auto g = build_generator_matrices(Family::C_alpha, 2, FA);
  // move the translation of s3 onto the first coordinate
  g[2] = AffineElement(g[2].linear(), {r(1), r(0)});
  auto rep = verify_presentation(p, g);
  CHECK_FALSE(rep.pass);
  int failed = 0;
  for (const auto& c : rep.checks) failed += !c.pass;
  CHECK(failed >= 1);
  for (const auto& c : rep.checks)
    if (!c.pass) CHECK(c.witness_matrix.has_value());
}

TEST_CASE("lattice generator pairs") {
  for (int n = 2; n <= 4; ++n) {
    auto g = build_generator_matrices(Family::C_alpha, n, FA);
    auto sn = g[static_cast<std::size_t>(n - 1)], a = g[static_cast<std::size_t>(n)], b = g[static_cast<std::size_t>(n + 1)];
    CHECK((sn * a).pow(4).is_identity());
    CHECK((sn * b).pow(4).is_identity());
    CHECK(classify_element(a * b).kind == ElementKind::Translation);
  }
  for (int n = 1; n <= 4; ++n)
    for (const auto& x : build_generator_matrices(Family::C_alpha, n, FA)) CHECK((x * x).is_identity());
}

TEST_CASE("classify_element") {
  auto g1 = build_generator_matrices(Family::C_alpha, 1, FA);
  CHECK(classify_element(AffineElement::identity(FA, 2)).kind == ElementKind::Identity);
  CHECK(classify_element(g1[0] * g1[1]).kind == ElementKind::Translation);
  auto c = classify_element(rank1(-1, r(1, 1)));
  CHECK(c.kind == ElementKind::Reflection);
  REQUIRE(c.detail);
  CHECK(c.detail->residue == r(1, 1));
  std::set<std::string> residues;
  for (const auto& t : {r(0), r(1), r(0, 1), r(1, 1)}) {
    auto k = classify_element(rank1(-1, t));
    residues.insert(k.detail->residue.to_string());
  }
  CHECK(residues.size() == 4);
  CHECK(classify_element(rank1(-1, r(3, -2))).detail->residue == r(1, 0));
  // a rotation is not a reflection
  auto g2 = build_generator_matrices(Family::C_alpha, 2, FA);
  CHECK(classify_element(g2[0] * g2[1]).kind == ElementKind::Other);
  CHECK(classify_element(g2[1]).detail->linear_class == LinearClass::Transposition);
  CHECK(classify_element(g2[2]).detail->linear_class == LinearClass::Sign);
  // genuine generators
  auto g6 = build_generator_matrices(Family::G611, 2);
  auto k6 = classify_element(g6[0]);
  CHECK(k6.kind == ElementKind::Reflection);
  CHECK(k6.detail->order == 3);
  CHECK(classify_element(g6[2]).detail->order == 2);
  auto p6 = build_group_presentation(Family::G611, 2);
  auto s0 = classify_element(evaluate_word(p6.extra_order_relation->base, g6));
  CHECK(s0.kind == ElementKind::Reflection);
  CHECK(s0.detail->order == 6);
}

TEST_CASE("evaluate_word is a monoid homomorphism") {
  auto rng = testsupport::rng(5);
  struct Case {
    Family f;
    int n;
  };
  int checked = 0;
  for (auto c : {Case{Family::C_alpha, 3}, Case{Family::A_alpha, 4}, Case{Family::G611, 2}, Case{Family::G311, 3}, Case{Family::G411, 2}}) {
    auto g = build_generator_matrices(c.f, c.n);
    int k = static_cast<int>(g.size());
    for (int trial = 0; trial < 100; ++trial) {
      Word a = random_word(rng, k, 12), b = random_word(rng, k, 12);
      CHECK(evaluate_word(a * b, g) == evaluate_word(a, g) * evaluate_word(b, g));
      CHECK(evaluate_word(a.inverse(), g) == evaluate_word(a, g).inverse());
      ++checked;
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("reflection class enumeration") {
  CHECK(enumerate_reflection_classes(Family::C_alpha, 1, 2).count == 4);
  auto c2 = enumerate_reflection_classes(Family::C_alpha, 2, 2);
  CHECK(c2.count == 5);
  CHECK(c2.certified);
  CHECK(enumerate_reflection_classes(Family::A_alpha, 3, 2).count == 1);
  CHECK(enumerate_reflection_classes(Family::A_alpha, 2, 2).count == 4);
  CHECK_THROWS_AS(enumerate_reflection_classes(Family::C_alpha, 5, 2), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_reflection_classes(Family::C_alpha, 2, 4), BudgetExceeded);
}
