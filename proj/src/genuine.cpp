#include "builder.hpp"

namespace crysref {

namespace {

using detail::Builder;
using detail::ws;

std::vector<int> up(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

std::vector<int> down(int from, int to) {
  std::vector<int> out;
  for (int i = from; i >= to; --i) out.push_back(i);
  return out;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string label(Family f, int n) { return to_string(f) + " " + std::to_string(n); }

/// [G(4,1,n)]_2 and [G(6,2,n)]: s_1 diagonal, s_2..s_n transpositions, s_{n+1} the fork.
Presentation sub_d1(Family f, int n) {
  const bool four = f == Family::G412;
  Builder b(label(f, n), n + 1, "s", 2);
  b.set_order(0, four ? 4 : 3);
  b.order_relations();
  auto len = [n](int i, int j) {
    if (i == 1 && j == 2) return 4;
    if (j == i + 1 && i >= 2 && j <= n) return 3;
    if (j == n + 1) {
      if (n == 2 && i == 1) return 4;
      if (n >= 3 && i == n - 1) return 3;
    }
    return 2;
  };
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) b.coxeter(i - 1, j - 1, len(i, j));
  std::vector<int> base = n == 2 ? std::vector<int>{1, 2, 3} : cat(up(1, n + 1), down(n - 1, 2));
  b.extra(ws(base), four ? 4 : 6);
  return b.p;
}

int bmr_len(Family f, int n, int i, int j) {
  const int top = n + 2;
  if (n == 2) {
    if (f == Family::G421) {
      if (i == 2 && j == 5) return 0;
      if ((i == 1 && (j == 4 || j == 5)) || (i == 2 && j == 4) || (j == 5 && (i == 3 || i == 4))) return 4;
      return 2;
    }
    return j == 4 && (i == 2 || i == 3) ? 4 : 2;
  }
  if (j == 4 && (i == 2 || i == 3)) return 3;
  if (j == i + 1 && i >= 4 && j <= n + 1) return 3;
  if (j == top) {
    if (f == Family::G421) {
      if (n == 3) return i == 2 || i == 3 ? 3 : 2;
      return i == n ? 3 : 2;
    }
    return i == n + 1 ? 4 : 2;
  }
  return 2;
}

/// [G(4,2,n)]_{1,2} and [G(6,3,n)]: z, t', t, the remaining transpositions and the affine node.
Presentation sub_bmr(Family f, int n) {
  const int e = f == Family::G631 ? 3 : 2;
  const int k = f == Family::G421 && n == 2 ? 5 : n + 2;
  Builder b(label(f, n), k, "s", 2);
  b.order_relations();

  b.relation(ws({1, 2, 3}), ws({2, 3, 1}), RelationKind::Other);
  if (e == 2)
    b.relation(ws({3, 1, 2}), ws({1, 2, 3}), RelationKind::Other);
  else
    b.relation(ws({3, 1, 2, 3}), ws({1, 2, 3, 2}), RelationKind::Other);
  b.p.diagram.edges.push_back({0, 1, Lace::Double, 4});
  b.p.diagram.edges.push_back({0, 2, Lace::Double, 4});
  b.p.diagram.edges.push_back({1, 2, e == 2 ? Lace::Double : Lace::Triple, 2 * e});

  for (int i = 1; i <= k; ++i)
    for (int j = std::max(i + 1, 4); j <= k; ++j) {
      int m = bmr_len(f, n, i, j);
      if (m == 0)
        b.infinity_edge(i - 1, j - 1);
      else
        b.coxeter(i - 1, j - 1, m);
    }
  for (int c = 4; c <= k; ++c)
    if (bmr_len(f, n, 2, c) == 3 && bmr_len(f, n, 3, c) == 3)
      b.relation(ws({c, 2, 3, c, 2, 3}), ws({2, 3, c, 2, 3, c}), RelationKind::Other);

  if (f == Family::G421 && n == 2) {
    b.relation(ws({5, 4, 2, 5, 3, 5}), ws({5, 3, 5, 2, 4, 5}), RelationKind::Other);
    b.relation(ws({5, 4, 2, 5, 2, 1}), ws({5, 4, 1, 4, 5, 4}), RelationKind::Other);
    b.relation(ws({5, 4, 2, 1, 5, 3}), ws({5, 4, 1, 5, 3, 2}), RelationKind::Other);
  }
  if (f == Family::G631) {
    // a = s_4 ... s_{n+1} s_{n+2} s_{n+1} ... s_4, the affine node moved next to t
    std::vector<int> a = cat(cat(up(4, n + 1), {n + 2}), down(n + 1, 4));
    std::vector<int> lhs = cat(cat(cat(a, {3, 2}), a), {3, 2});
    b.relation(ws(lhs), ws(cat({1, 2, 3}, a)), RelationKind::Other);
  }

  std::vector<int> base;
  int power = 4;
  switch (f) {
    case Family::G421:
      if (n == 2)
        base = {2, 1, 3, 4, 5}, power = 2;
      else if (n == 3)
        base = {1, 2, 3, 4, 5};
      else
        base = cat(up(1, n + 2), down(n, 4));
      break;
    case Family::G422: base = n == 2 ? std::vector<int>{1, 2, 3, 4} : cat(up(1, n + 2), down(n + 1, 4)); break;
    default: base = cat(up(2, n + 2), down(n + 1, 4)), power = 6; break;
  }
  b.extra(ws(base), power);
  return b.p;
}

}  // namespace

Presentation build_genuine_sub_presentation(Family f, int n) {
  switch (f) {
    case Family::G412:
    case Family::G621: return sub_d1(f, n);
    case Family::G421:
    case Family::G422:
    case Family::G631: return sub_bmr(f, n);
    default: throw PresentationError("not a genuine subgroup family: " + to_string(f));
  }
}

}  // namespace crysref
