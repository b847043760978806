// Acceptance run: one line per criterion with timing against its limit.
#include "crysref/hecke.hpp"
#include "crysref/lemmas.hpp"
#include "crysref/matrixrep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace crysref;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<Integer> ints(std::initializer_list<int> v) { return std::vector<Integer>(v.begin(), v.end()); }

std::string show(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

/// Certificates gathered from criteria 4, 5 and 8 for the replay suite.
struct Harvest {
  struct Item {
    Certificate cert;
    std::vector<Word> relators;
    std::string label;
  };
  std::vector<Item> items;
  std::size_t proved_without_certificate = 0;

  void take(const std::vector<RelatorVerdict>& vs, const RewriteSystem& rs, const std::string& label) {
    for (const auto& v : vs) {
      if (v.verdict != Verdict::Proved) continue;
      if (v.certificate)
        items.push_back({*v.certificate, rs.relators(), label + ": " + v.relation});
      else
        ++proved_without_certificate;
    }
  }
};

Harvest harvest;

std::size_t count_not_proved(const std::vector<RelatorVerdict>& vs) {
  std::size_t k = 0;
  for (const auto& v : vs) k += v.verdict != Verdict::Proved;
  return k;
}

// ---------------------------------------------------------------- criteria

Outcome presentations() {
  Outcome o;
  std::size_t total = 0, x = 0, extra = 0;
  auto run = [&](Family f, int n) {
    auto rep = verify_presentation(build_group_presentation(f, n), build_generator_matrices(f, n, RingSpec::formal_alpha()));
    for (const auto& c : rep.checks) {
      ++total;
      x += c.kind == RelationKind::XRelation;
      extra += c.kind == RelationKind::ExtraOrder;
      if (!c.pass) o.fail(to_string(f) + " " + std::to_string(n) + " " + c.word_text);
    }
  };
  for (int n = 3; n <= 5; ++n) run(Family::A_alpha, n);
  for (int n = 1; n <= 4; ++n) run(Family::C_alpha, n);
  if (x == 0 || extra == 0) o.fail("x-relators or extra order relators missing");
  if (o.pass) o.detail = std::to_string(total) + " relators exact (" + std::to_string(x) + " x, " + std::to_string(extra) + " extra order)";
  return o;
}

Outcome abelianizations() {
  Outcome o;
  std::size_t checked = 0;
  auto expect = [&](Family f, int n, const std::vector<Integer>& want) {
    auto got = abelianize(build_group_presentation(f, n));
    ++checked;
    if (got != want) o.fail(to_string(f) + " " + std::to_string(n) + " gave " + show(got));
  };
  expect(Family::C_alpha, 1, ints({2, 2, 2}));
  expect(Family::A_alpha, 2, ints({2, 2, 2}));
  for (int n = 3; n <= 5; ++n) expect(Family::A_alpha, n, ints({2}));
  for (int n = 2; n <= 5; ++n) expect(Family::C_alpha, n, ints({2, 2, 2, 2}));
  // oracle goldens (independent Smith form)
  expect(Family::G311, 1, ints({3, 3}));
  expect(Family::G411, 1, ints({2, 4}));
  expect(Family::G611, 1, ints({6}));
  for (int n = 2; n <= 5; ++n) {
    expect(Family::G311, n, ints({3, 6}));
    expect(Family::G411, n, ints({2, 2, 4}));
    expect(Family::G611, n, ints({2, 6}));
    expect(Family::G412, n, n == 2 ? ints({2, 2, 4}) : ints({2, 4}));
    expect(Family::G621, n, n == 2 ? ints({2, 6}) : ints({6}));
    expect(Family::G421, n, n == 2 ? ints({2, 2, 2, 2, 2}) : ints({2, 2}));
    expect(Family::G631, n, ints({2, 2}));
    if (n != 3) expect(Family::G422, n, n == 2 ? ints({2, 2, 2, 2}) : ints({2, 2, 2}));
  }
  if (o.pass) o.detail = std::to_string(checked) + " presentations match";
  return o;
}

Outcome classes() {
  Outcome o;
  std::string counts;
  auto expect = [&](Family f, int n, std::size_t want) {
    auto e = enumerate_reflection_classes(f, n, 2, 4);
    counts += (counts.empty() ? "" : ", ") + to_string(f) + " " + std::to_string(n) + ": " + std::to_string(e.count);
    if (e.count != want) o.fail(to_string(f) + " " + std::to_string(n) + " has " + std::to_string(e.count));
  };
  expect(Family::C_alpha, 1, 4);
  expect(Family::C_alpha, 2, 5);
  expect(Family::C_alpha, 3, 5);
  expect(Family::A_alpha, 3, 1);
  expect(Family::A_alpha, 4, 1);
  if (o.pass) o.detail = counts;
  return o;
}

/// Search-mode isomorphism pairs, then hint-only replay of the hint chains.
Outcome braid_theorem(char type, std::vector<int> ranks, int replay_rank, double& replay_time) {
  Outcome o;
  std::size_t relators = 0;
  for (int n : ranks) {
    auto lp = type == 'c' ? braid_pair_c(n) : braid_pair_a(n);
    RewriteSystem ra(lp.source), rb(lp.target);
    ProverEngine ea{&ra, &lp.backward_hints, true}, eb{&rb, &lp.forward_hints, true};
    auto rep = verify_isomorphism_pair(lp.forward, lp.backward, lp.source, lp.target, ea, eb);
    const std::string tag = std::string(type == 'c' ? "C" : "A") + std::to_string(n);
    harvest.take(rep.forward.relators, rb, tag + " fwd");
    harvest.take(rep.backward.relators, ra, tag + " bwd");
    harvest.take(rep.composites_source, ra, tag + " bwd*fwd");
    harvest.take(rep.composites_target, rb, tag + " fwd*bwd");
    relators += rep.forward.relators.size() + rep.backward.relators.size();
    if (rep.verdict != Verdict::Proved)
      o.fail(tag + ": " +
             std::to_string(count_not_proved(rep.forward.relators) + count_not_proved(rep.backward.relators) +
                            count_not_proved(rep.composites_source) + count_not_proved(rep.composites_target)) +
             " not proved");
    if (type == 'a') {
      std::size_t push = 0;
      for (const auto& r : lp.source.relations) push += lp.source.relation_text(r).rfind("r0 t", 0) == 0;
      if (push != static_cast<std::size_t>(n - 1)) o.fail(tag + ": expected " + std::to_string(n - 1) + " pushrelations");
    }
  }

  auto t0 = Clock::now();
  auto lp = type == 'c' ? braid_pair_c(replay_rank) : braid_pair_a(replay_rank);
  RewriteSystem ra(lp.source), rb(lp.target);
  ProverEngine ea{&ra, &lp.backward_hints, false}, eb{&rb, &lp.forward_hints, false};
  auto fwd = verify_homomorphism(lp.forward, lp.source, eb);
  auto bwd = verify_homomorphism(lp.backward, lp.target, ea);
  replay_time = since(t0);
  std::size_t hinted = 0;
  for (const auto* h : {&fwd, &bwd})
    for (const auto& v : h->relators) hinted += v.method == "hint";
  if (fwd.verdict != Verdict::Proved || bwd.verdict != Verdict::Proved) o.fail("replay mode left relators unproved");
  if (hinted == 0) o.fail("no hint scripts used in replay mode");
  if (replay_time >= 1.0) o.fail("replay mode took " + std::to_string(replay_time) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << relators << " relators both ways, " << hinted << " hint chains replayed in " << replay_time << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome hecke() {
  Outcome o;
  std::size_t cases = 0;
  const std::vector<std::pair<Family, int>> all = {{Family::C_alpha, 2}, {Family::C_alpha, 3}, {Family::G311, 1},
                                                   {Family::G311, 2},    {Family::G411, 1},    {Family::G411, 2},
                                                   {Family::G611, 1},    {Family::G611, 2}};
  for (auto [f, n] : all) {
    auto m = gdaha_match(f, n);
    auto r = verify_specialization(m.hecke, m.specialization, m.gdaha, m.correspondence);
    ++cases;
    std::string tag = to_string(f) + " " + std::to_string(n) + " -> " + m.gdaha.name;
    if (!r.braid_ok) o.fail(tag + " braid");
    if (!r.char_ok) o.fail(tag + " charpoly");
    if (!r.extra_ok) o.fail(tag + " S0");
  }
  if (o.pass) o.detail = std::to_string(cases) + " correspondences: braid relators, char polys and S0 match";
  return o;
}

Outcome rank_one() {
  Outcome o;
  auto r = rank_one_specialization_check();
  for (const auto& c : r.checks)
    if (!c.pass) o.fail(c.generator + ": " + c.difference);
  if (o.pass) o.detail = std::to_string(r.checks.size()) + " char polys identical";
  return o;
}

Outcome triple_dot() {
  Outcome o;
  std::size_t proved = 0;
  for (int n = 3; n <= 4; ++n) {
    auto r = triple_dot_generator(n);
    RewriteSystem rs(artinize(build_group_presentation(Family::A_alpha, n)));
    harvest.take(r.relations, rs, "triple dot " + std::to_string(n));
    for (std::size_t i = 0; i < r.relations.size(); ++i) {
      if (r.relations[i].verdict == Verdict::Proved && r.matrix_ok[i])
        ++proved;
      else
        o.fail("n=" + std::to_string(n) + " " + r.relations[i].relation);
    }
  }
  if (o.pass) o.detail = std::to_string(proved) + " relations proved";
  return o;
}

Word random_word(std::mt19937_64& g, int gens, int max_len) {
  std::uniform_int_distribution<int> gen(1, gens), coin(0, 1), len(0, max_len);
  std::vector<LetterCode> c;
  for (int k = len(g); k > 0; --k) c.push_back(coin(g) ? gen(g) : -gen(g));
  return Word(c);
}

Outcome properties(std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 g(seed);
  std::ostringstream summary;

  // ring axioms
  std::size_t ring_fail = 0;
  std::uniform_int_distribution<int> coef(-50, 50);
  for (auto s : {RingSpec::cyclotomic(3), RingSpec::cyclotomic(4), RingSpec::cyclotomic(6), RingSpec::formal_alpha()}) {
    const bool formal = s.mode() == RingSpec::Mode::FormalAlpha;
    for (int t = 0; t < 1000; ++t) {
      RingElement x(s, coef(g), coef(g)), y(s, coef(g), coef(g)), z(s, coef(g), coef(g));
      if (formal) {
        // products stay in Z + alpha Z when one factor is an integer
        y = RingElement(s, coef(g));
        z = RingElement(s, coef(g));
      }
      bool ok = (x + y) + z == x + (y + z) && x + y == y + x && (x * y) * z == x * (y * z) && x * y == y * x &&
                x * (y + z) == x * y + x * z && x + (-x) == RingElement::zero(s) && x * RingElement::one(s) == x;
      ring_fail += !ok;
    }
  }
  if (ring_fail) o.fail(std::to_string(ring_fail) + " ring axiom failures");
  summary << "ring 4000";

  // evaluate_word is a homomorphism
  std::size_t hom_fail = 0;
  const std::vector<std::pair<Family, int>> groups = {
      {Family::C_alpha, 3}, {Family::A_alpha, 4}, {Family::G311, 3}, {Family::G411, 2}, {Family::G611, 2}};
  for (auto [f, n] : groups) {
    auto gens = build_generator_matrices(f, n);
    const int k = static_cast<int>(gens.size());
    for (int t = 0; t < 100; ++t) {
      Word a = random_word(g, k, 12), b = random_word(g, k, 12);
      if (evaluate_word(a * b, gens) != evaluate_word(a, gens) * evaluate_word(b, gens)) ++hom_fail;
    }
  }
  if (hom_fail) o.fail(std::to_string(hom_fail) + " homomorphism failures");
  summary << ", hom 500";

  // certificate replay
  std::size_t replay_fail = 0;
  for (const auto& item : harvest.items)
    if (!replay(item.cert, item.relators).ok) {
      ++replay_fail;
      o.fail("replay " + item.label);
    }
  if (harvest.items.empty()) o.fail("no certificates harvested (run criteria 4, 5 and 8)");
  if (harvest.proved_without_certificate) o.fail(std::to_string(harvest.proved_without_certificate) + " proofs without certificate");
  summary << ", replay " << harvest.items.size();

  // cyclotomic degeneration
  std::size_t degen = 0;
  for (Family f : {Family::A_alpha, Family::C_alpha, Family::G311, Family::G411, Family::G611})
    for (int n = 1; n <= 4; ++n) {
      if (!family_rank_valid(f, n)) continue;
      for (const auto& c : cyclotomic_degeneration(build_generic_hecke(f, n))) {
        ++degen;
        if (!c.pass) o.fail("degeneration " + to_string(f) + " " + std::to_string(n) + " " + c.generator);
      }
    }
  summary << ", degeneration " << degen;

  // free reduction confluence: random cancellation order gives the same word
  std::size_t conf_fail = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<LetterCode> c = random_word(g, 3, 30).codes();
    std::vector<LetterCode> raw;
    // Word construction already reduces; rebuild an unreduced sequence by inserting cancelling pairs
    std::uniform_int_distribution<int> gen(1, 3), coin(0, 1);
    for (auto x : c) {
      raw.push_back(x);
      if (coin(g)) {
        int y = coin(g) ? gen(g) : -gen(g);
        raw.push_back(y);
        raw.push_back(-y);
      }
    }
    std::vector<LetterCode> w = raw;
    for (;;) {
      std::vector<std::size_t> pairs;
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == -w[i + 1]) pairs.push_back(i);
      if (pairs.empty()) break;
      std::size_t i = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(g)];
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    }
    if (w != free_reduce_codes(raw)) ++conf_fail;
  }
  if (conf_fail) o.fail(std::to_string(conf_fail) + " confluence failures");
  summary << ", confluence 1000";

  if (o.pass) o.detail = summary.str() + " (seed " + std::to_string(seed) + ")";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = 20240601;
  std::vector<int> only;
  app.add_option("--seed", seed, "seed for the property suites");
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  auto want = [&](int k) { return only.empty() || std::find(only.begin(), only.end(), k) != only.end(); };
  bool all = true;
  auto run = [&](int k, const std::string& title, double limit, const std::function<Outcome()>& fn) {
    if (!want(k)) return;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double t = since(t0);
    if (t >= limit) o.fail("took " + std::to_string(t) + " s");
    all = all && o.pass;
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  (" << t << " s, limit "
              << limit << " s)  " << o.detail << std::endl;
  };

  double replay_c = 0, replay_a = 0;
  run(1, "presentation relators exact over Z + alpha Z", 1, presentations);
  run(2, "abelianization table and goldens", 1, abelianizations);
  run(3, "reflection class counts (bound 2, depth 4)", 30, classes);
  run(4, "braid theorem type C, n = 2, 3", 120, [&] { return braid_theorem('c', {2, 3}, 3, replay_c); });
  run(5, "braid theorem type A, n = 3, 4", 120, [&] { return braid_theorem('a', {3, 4}, 4, replay_a); });
  run(6, "Hecke to GDAHA specializations", 120, hecke);
  run(7, "rank one identification", 1, rank_one);
  run(8, "triple dot generator, n = 3, 4", 60, triple_dot);
  run(9, "property suites", 120, [&] {
    // certificates come from criteria 4, 5 and 8; produce them when those were skipped
    double ignored = 0;
    if (!want(4)) braid_theorem('c', {2, 3}, 3, ignored);
    if (!want(5)) braid_theorem('a', {3, 4}, 4, ignored);
    if (!want(8)) triple_dot();
    return properties(seed);
  });
  std::cout << "acceptance: " << (all ? "PASS" : "FAIL") << std::endl;
  return all ? 0 : 1;
}
