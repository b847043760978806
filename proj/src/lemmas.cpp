#include "crysref/lemmas.hpp"

#include "hints.hpp"

namespace crysref {

namespace {

std::string gen(const std::string& p, int i) { return p + std::to_string(i); }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::string inv(const std::string& w, const Presentation& p) { return p.render(p.word(w).inverse()); }

std::string range(const std::string& p, int from, int to) {
  std::vector<std::string> out;
  if (from <= to)
    for (int i = from; i <= to; ++i) out.push_back(gen(p, i));
  else
    for (int i = from; i >= to; --i) out.push_back(gen(p, i));
  return join(out);
}

}  // namespace

LemmaPair braid_pair_c(int n) {
  if (n < 2) throw ProverError("type C braid pair needs n >= 2");
  LemmaPair lp;
  lp.source = build_braid_presentation(BraidSpace::PuncturedSphere4, n);
  lp.target = artinize(build_group_presentation(Family::C_alpha, n));
  const auto& A = lp.source;
  const auto& B = lp.target;
  std::string s = n >= 2 ? range("s", 2, n) : "";
  std::string sT = n >= 2 ? range("s", n, 2) : "";
  std::string s_inv = s.empty() ? "" : inv(s, B);
  std::vector<std::pair<std::string, std::string>> f{
      {"u1", inv(join({range("s", 1, n + 2), sT}), B)},
      {"u2", "s1"},
      {"u3", join({s, gen("s", n + 1), s_inv})},
      {"u4", join({s, gen("s", n + 2), s_inv})},
  };
  for (int i = 1; i < n; ++i) f.push_back({gen("t", i), gen("s", i + 1)});
  lp.forward = make_map(A, B, f);

  std::string t = range("t", 1, n - 1);
  std::string t_inv = inv(t, A);
  std::vector<std::pair<std::string, std::string>> b{{"s1", "u2"}};
  for (int i = 2; i <= n; ++i) b.push_back({gen("s", i), gen("t", i - 1)});
  b.push_back({gen("s", n + 1), join({t_inv, "u3", t})});
  b.push_back({gen("s", n + 2), join({t_inv, "u4", t})});
  lp.backward = make_map(B, A, b);

  lp.forward_hints = hints::braid_c_forward(n, {A, B, lp.forward});
  lp.backward_hints = hints::braid_c_backward(n, {B, A, lp.backward});
  return lp;
}

LemmaPair braid_pair_a(int n) {
  if (n < 3) throw ProverError("type A braid pair needs n >= 3");
  LemmaPair lp;
  lp.source = build_braid_presentation(BraidSpace::TorusSpecial, n);
  lp.target = artinize(build_group_presentation(Family::A_alpha, n));
  const auto& A = lp.source;
  const auto& B = lp.target;
  std::vector<std::pair<std::string, std::string>> f{{"r0", gen("s", n)}};
  for (int i = 1; i < n; ++i) f.push_back({gen("r", i), gen("s", i)});
  std::string top = gen("s", n + 1);
  // t_1
  f.push_back({"t1", join({inv(range("s", n - 1, 2), B), top, range("s", n - 1, 1)})});
  for (int i = 2; i <= n - 2; ++i) {
    std::string c = join({range("s", 1, i - 1), range("s", n - 1, i + 1)});
    f.push_back({gen("t", i), join({inv(c, B), top, range("s", 1, i - 1), range("s", n - 1, i)})});
  }
  f.push_back({gen("t", n - 1), join({inv(range("s", 1, n - 2), B), top, range("s", 1, n - 1)})});
  lp.forward = make_map(A, B, f);

  std::vector<std::pair<std::string, std::string>> b;
  for (int i = 1; i < n; ++i) b.push_back({gen("s", i), gen("r", i)});
  b.push_back({gen("s", n), "r0"});
  b.push_back({gen("s", n + 1), join({range("r", n - 1, 2), "t1", inv(range("r", n - 1, 1), A)})});
  lp.backward = make_map(B, A, b);

  lp.forward_hints = hints::braid_a_forward(n, {A, B, lp.forward});
  lp.backward_hints = hints::braid_a_backward(n, {B, A, lp.backward});
  return lp;
}

}  // namespace crysref
