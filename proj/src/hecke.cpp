#include "crysref/hecke.hpp"

#include "crysref/lemmas.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace crysref {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(std::vector<std::string> universe) : universe_(std::move(universe)) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> universe, const Integer& c) {
  LaurentPoly p(std::move(universe));
  p.add_term(Exponents(p.universe_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> universe, const std::string& name, int power,
                                  const Integer& c) {
  LaurentPoly p(std::move(universe));
  auto it = std::find(p.universe_.begin(), p.universe_.end(), name);
  if (it == p.universe_.end()) throw HeckeError("unknown parameter '" + name + "'");
  Exponents e(p.universe_.size(), 0);
  e[static_cast<std::size_t>(it - p.universe_.begin())] = power;
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::check(const LaurentPoly& o) const {
  if (universe_ != o.universe_) throw HeckeError("parameter universe mismatch");
}

bool LaurentPoly::is_unit_monomial() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(universe_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  check(o);
  LaurentPoly r(universe_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  terms_ = std::move(r.terms_);
  return *this;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit_monomial()) throw HeckeError("not a unit monomial: " + to_string());
  LaurentPoly r(universe_);
  Exponents e = terms_.begin()->first;
  for (auto& x : e) x = -x;
  r.add_term(e, terms_.begin()->second);
  return r;
}

LaurentPoly LaurentPoly::compose(const std::map<std::string, LaurentPoly>& images,
                                 const std::vector<std::string>& target) const {
  std::vector<LaurentPoly> img;
  for (const auto& name : universe_) {
    auto it = images.find(name);
    if (it != images.end()) {
      if (it->second.universe() != target) throw HeckeError("image of " + name + " lives in another universe");
      img.push_back(it->second);
    } else {
      img.push_back(monomial(target, name));
    }
  }
  LaurentPoly out(target);
  for (const auto& [e, c] : terms_) {
    LaurentPoly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      LaurentPoly base = e[i] > 0 ? img[i] : img[i].inverse();
      for (int k = 0; k < std::abs(e[i]); ++k) t *= base;
    }
    out += t;
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // highest total degree first, then lexicographically largest exponents
  std::vector<std::pair<Exponents, Integer>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0), db = std::accumulate(b.first.begin(), b.first.end(), 0);
    return da != db ? da > db : a.first > b.first;
  });
  for (const auto& [e, c] : ts) {
    Integer mag = c < 0 ? Integer(-c) : c;
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += universe_[i];
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (factors.empty())
      term = mag.str();
    else if (mag == 1)
      term = factors;
    else
      term = mag.str() + "*" + factors;
    if (first)
      out += (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::vector<std::string> universe, const std::string& text) {
  LaurentPoly out(universe);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw HeckeError("empty polynomial");
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw HeckeError("cannot parse '" + text + "': " + why); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected + or -");
    }
    LaurentPoly term = constant(universe, sign);
    bool any = false;
    while (i < s.size() && s[i] != '+' && !(s[i] == '-' && any && s[i - 1] != '^')) {
      if (s[i] == '*') {
        if (!any) fail("dangling *");
        ++i;
        continue;
      }
      if (any && s[i - 1] != '*') fail("missing *");
      std::size_t j = i;
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        term *= constant(universe, Integer(s.substr(i, j - i)));
      } else {
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        if (j == i) fail("unexpected '" + std::string(1, s[i]) + "'");
        std::string name = s.substr(i, j - i);
        int power = 1;
        if (j < s.size() && s[j] == '^') {
          std::size_t k = j + 1;
          if (k < s.size() && s[k] == '-') ++k;
          std::size_t d = k;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == d) fail("bad exponent");
          power = std::stoi(s.substr(j + 1, k - j - 1));
          j = k;
        }
        term *= monomial(universe, name, power);
      }
      any = true;
      i = j;
    }
    if (!any) fail("empty term");
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------- CharPoly

CharPoly CharPoly::from_roots(const std::vector<LaurentPoly>& roots, const std::vector<std::string>& universe) {
  CharPoly p;
  p.coeffs.push_back(LaurentPoly::constant(universe, 1));
  for (const auto& r : roots) {
    std::vector<LaurentPoly> next(p.coeffs.size() + 1, LaurentPoly(universe));
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      next[k + 1] += p.coeffs[k];
      next[k] -= p.coeffs[k] * r;
    }
    p.coeffs = std::move(next);
  }
  return p;
}

CharPoly CharPoly::reciprocal() const {
  const int e = degree();
  LaurentPoly c0inv = coeffs.front().inverse();
  CharPoly r;
  for (int m = 0; m <= e; ++m) r.coeffs.push_back(coeffs[static_cast<std::size_t>(e - m)] * c0inv);
  return r;
}

CharPoly CharPoly::scaled(const LaurentPoly& q) const {
  const int e = degree();
  CharPoly r;
  for (int k = 0; k <= e; ++k) {
    LaurentPoly c = coeffs[static_cast<std::size_t>(k)];
    for (int j = 0; j < e - k; ++j) c *= q;
    r.coeffs.push_back(c);
  }
  return r;
}

CharPoly CharPoly::compose(const std::map<std::string, LaurentPoly>& images,
                           const std::vector<std::string>& target) const {
  CharPoly r;
  for (const auto& c : coeffs) r.coeffs.push_back(c.compose(images, target));
  return r;
}

std::string CharPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) out += ", ";
    out += coeffs[k].to_string();
  }
  return out;
}

// ---------------------------------------------------------------- presentations

namespace {

std::string param(int cls, int j) { return "s" + std::to_string(cls) + "_" + std::to_string(j); }

std::vector<std::string> capital_names(const std::vector<std::string>& names) {
  std::vector<std::string> out = names;
  for (auto& s : out)
    if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return out;
}

Presentation capitalized(Presentation p) {
  p.generator_names = capital_names(p.generator_names);
  for (std::size_t i = 0; i < p.diagram.nodes.size() && i < p.generator_names.size(); ++i)
    p.diagram.nodes[i].name = p.generator_names[i];
  return p;
}

std::string capitalize_text(const std::string& s) {
  static const std::regex token("\\b([a-z])([0-9]+)\\b");
  std::string out;
  auto begin = std::sregex_iterator(s.begin(), s.end(), token);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    out += s.substr(last, static_cast<std::size_t>(it->position()) - last);
    out += static_cast<char>(std::toupper(static_cast<unsigned char>((*it)[1].str()[0])));
    out += (*it)[2].str();
    last = static_cast<std::size_t>(it->position() + it->length());
  }
  return out + s.substr(last);
}

HintBook capitalized(const HintBook& b) {
  HintBook out;
  out.name = b.name;
  for (const auto& sc : b.scripts) {
    HintScript c;
    c.relation = capitalize_text(sc.relation);
    for (const auto& w : sc.chain) c.chain.push_back(capitalize_text(w));
    out.scripts.push_back(std::move(c));
  }
  return out;
}

/// Class key of a reflection matrix in the non-genuine families.
std::string reflection_key(Family f, const AffineElement& m) {
  if (f == Family::A_alpha) return "A";
  auto c = classify_element(m);
  if (c.kind != ElementKind::Reflection || !c.detail) throw HeckeError("expected a reflection");
  if (c.detail->linear_class == LinearClass::Transposition) return "T";
  return "S" + c.detail->residue.to_string();
}

}  // namespace

bool has_generic_hecke(Family f) {
  switch (f) {
    case Family::A_alpha:
    case Family::C_alpha:
    case Family::G311:
    case Family::G411:
    case Family::G611: return true;
    default: return false;
  }
}

HeckePresentation build_generic_hecke(Family family, int n) {
  if (!has_generic_hecke(family)) throw HeckeError("no generic Hecke algebra for " + to_string(family));
  Presentation gp = build_group_presentation(family, n);
  if (!gp.extra_order_relation) throw HeckeError("missing extra order relation");
  HeckePresentation hp;
  hp.name = "Hecke " + gp.name;
  hp.family = family;
  hp.rank = n;
  hp.braid_part = capitalized(artinize(gp));
  const int k = gp.generator_count();
  const Word& base = gp.extra_order_relation->base;

  // class of each node (index k is S_0)
  std::vector<int> cls(static_cast<std::size_t>(k + 1), -1);
  if (family == Family::A_alpha || family == Family::C_alpha) {
    auto mats = build_generator_matrices(family, n);
    std::vector<std::string> keys;
    for (int i = 0; i < k; ++i) keys.push_back(reflection_key(family, mats[static_cast<std::size_t>(i)]));
    keys.push_back(reflection_key(family, evaluate_word(base, mats)));
    std::map<std::string, int> rep;
    for (int i = 0; i < k; ++i) rep.emplace(keys[static_cast<std::size_t>(i)], i + 1);
    for (int i = 0; i <= k; ++i) {
      auto it = rep.find(keys[static_cast<std::size_t>(i)]);
      cls[static_cast<std::size_t>(i)] = it == rep.end() ? 0 : it->second;
    }
  } else {
    // s_1, the transpositions s_2..s_n, s_{n+1}, and S_0 on its own
    for (int i = 1; i <= k; ++i) cls[static_cast<std::size_t>(i - 1)] = (i >= 2 && i <= n) ? 2 : i;
    cls[static_cast<std::size_t>(k)] = 0;
  }

  std::vector<int> degree(static_cast<std::size_t>(k + 1));
  for (int i = 0; i < k; ++i) degree[static_cast<std::size_t>(i)] = gp.generator_orders[static_cast<std::size_t>(i)].value_or(0);
  degree[static_cast<std::size_t>(k)] = gp.extra_order_relation->order;

  std::map<int, int> class_degree;
  for (int i = 0; i <= k; ++i) {
    auto [it, fresh] = class_degree.emplace(cls[static_cast<std::size_t>(i)], degree[static_cast<std::size_t>(i)]);
    if (!fresh && it->second != degree[static_cast<std::size_t>(i)]) throw HeckeError("class with mixed orders");
  }
  for (const auto& [c, e] : class_degree)
    for (int j = 1; j <= e; ++j) hp.parameters.push_back(param(c, j));
  hp.parameter_pairs = static_cast<int>(class_degree.size());

  auto make = [&](const std::string& name, int c) {
    HeckeGenerator g;
    g.name = name;
    g.parameter_class = c;
    std::vector<LaurentPoly> roots;
    for (int j = 1; j <= class_degree[c]; ++j) roots.push_back(LaurentPoly::monomial(hp.parameters, param(c, j)));
    g.char_poly = CharPoly::from_roots(roots, hp.parameters);
    return g;
  };
  for (int i = 0; i < k; ++i)
    hp.generators.push_back(make(hp.braid_part.generator_names[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(i)]));
  hp.extra_generator = make("S0", cls[static_cast<std::size_t>(k)]);
  hp.extra_generator_word = base;
  return hp;
}

std::vector<int> gdaha_legs(const std::string& type) {
  if (type == "D4") return {2, 2, 2, 2};
  if (type == "E6") return {3, 3, 3};
  if (type == "E7") return {4, 4, 2};
  if (type == "E8") return {6, 3, 2};
  throw HeckeError("unknown GDAHA type '" + type + "'");
}

HeckePresentation build_gdaha(const std::vector<int>& legs, int n) {
  if (n < 1) throw HeckeError("GDAHA rank must be positive");
  const int m = static_cast<int>(legs.size());
  // affine star: sum of 1/d_k equals m - 2
  int lcm = 1;
  for (int d : legs) {
    if (d < 2) throw HeckeError("non-star diagram: leg length below 2");
    lcm = std::lcm(lcm, d);
  }
  int sum = 0;
  for (int d : legs) sum += lcm / d;
  if (m < 3 || sum != (m - 2) * lcm) throw HeckeError("non-star diagram: legs are not of affine type");

  HeckePresentation hp;
  std::string legs_text;
  for (int d : legs) legs_text += (legs_text.empty() ? "" : ",") + std::to_string(d);
  hp.name = "GDAHA [" + legs_text + "] " + std::to_string(n);
  hp.rank = n;
  Presentation& p = hp.braid_part;
  p.name = hp.name;
  for (int k = 1; k <= m; ++k) p.generator_names.push_back("U" + std::to_string(k));
  for (int i = 1; i < n; ++i) p.generator_names.push_back("T" + std::to_string(i));
  for (const auto& g : p.generator_names) {
    p.generator_orders.push_back(std::nullopt);
    p.diagram.nodes.push_back({g, 0});
  }
  auto w = [](std::initializer_list<int> v) { return Word(std::vector<LetterCode>(v.begin(), v.end())); };
  auto t = [m](int i) { return m + i; };
  auto rel = [&](Word l, Word r, RelationKind kind) { p.relations.push_back({std::move(l), std::move(r), kind, std::nullopt}); };

  std::vector<LetterCode> closed;
  for (int k = 1; k <= m; ++k) closed.push_back(k);
  for (int i = 1; i < n; ++i) closed.push_back(t(i));
  for (int i = n - 1; i >= 1; --i) closed.push_back(t(i));
  rel(Word(closed), Word(), RelationKind::Closedness);
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) rel(w({t(i), t(j)}), w({t(j), t(i)}), RelationKind::Braid);
  for (int i = 1; i + 1 < n; ++i) rel(w({t(i), t(i + 1), t(i)}), w({t(i + 1), t(i), t(i + 1)}), RelationKind::Braid);
  for (int u = 1; u <= m; ++u)
    for (int j = 2; j < n; ++j) rel(w({u, t(j)}), w({t(j), u}), RelationKind::Braid);
  if (n >= 2) {
    for (int u = 1; u <= m; ++u) rel(w({u, t(1), u, t(1)}), w({t(1), u, t(1), u}), RelationKind::Braid);
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) rel(w({i, -t(1), j, t(1)}), w({-t(1), j, t(1), i}), RelationKind::Braid);
  }

  for (int k = 1; k <= m; ++k)
    for (int j = 1; j <= legs[static_cast<std::size_t>(k - 1)]; ++j)
      hp.parameters.push_back("u" + std::to_string(k) + "_" + std::to_string(j));
  if (n >= 2) hp.parameters.push_back("t");
  hp.parameter_pairs = m + (n >= 2 ? 1 : 0);
  for (int k = 1; k <= m; ++k) {
    HeckeGenerator g;
    g.name = p.generator_names[static_cast<std::size_t>(k - 1)];
    g.parameter_class = k;
    std::vector<LaurentPoly> roots;
    for (int j = 1; j <= legs[static_cast<std::size_t>(k - 1)]; ++j)
      roots.push_back(LaurentPoly::monomial(hp.parameters, "u" + std::to_string(k) + "_" + std::to_string(j)));
    g.char_poly = CharPoly::from_roots(roots, hp.parameters);
    hp.generators.push_back(std::move(g));
  }
  for (int i = 1; i < n; ++i) {
    HeckeGenerator g;
    g.name = p.generator_names[static_cast<std::size_t>(t(i) - 1)];
    g.parameter_class = m + 1;
    g.char_poly = CharPoly::from_roots(
        {LaurentPoly::monomial(hp.parameters, "t"), LaurentPoly::monomial(hp.parameters, "t", -1, -1)}, hp.parameters);
    hp.generators.push_back(std::move(g));
  }
  return hp;
}

std::string HeckePresentation::to_text() const {
  std::ostringstream out;
  out << braid_part.to_text();
  std::string text = out.str();
  if (!text.empty() && text.back() != '\n') out << '\n';
  out << "params:";
  for (const auto& s : parameters) out << ' ' << s;
  out << '\n';
  if (extra_generator_word) out << "extra: S0 = " << braid_part.render(*extra_generator_word) << '\n';
  for (const auto& g : generators) out << "charpoly: " << g.name << " : " << g.char_poly.to_string() << '\n';
  if (extra_generator) out << "charpoly: " << extra_generator->name << " : " << extra_generator->char_poly.to_string() << '\n';
  return out.str();
}

// ---------------------------------------------------------------- specialization

namespace {

/// x when w = v x v^-1 for a positive letter x, else nullopt.
std::optional<LetterCode> conjugated_letter(const Word& w) {
  const auto& c = w.codes();
  if (c.size() % 2 == 0) return std::nullopt;
  std::size_t mid = c.size() / 2;
  for (std::size_t i = 0; i < mid; ++i)
    if (c[i] != -c[c.size() - 1 - i]) return std::nullopt;
  if (c[mid] < 0) return std::nullopt;
  return c[mid];
}

std::vector<std::string> common_universe(const HeckePresentation& a, const HeckePresentation& b, const ParameterMap& pm) {
  std::set<std::string> names(a.parameters.begin(), a.parameters.end());
  names.insert(b.parameters.begin(), b.parameters.end());
  for (const auto& [k, v] : pm) {
    names.erase(k);
    names.insert(v.universe().begin(), v.universe().end());
  }
  for (const auto& [k, v] : pm) names.erase(k);
  return {names.begin(), names.end()};
}

/// Re-expresses the images of pm over `u`.
ParameterMap rebase(const ParameterMap& pm, const std::vector<std::string>& u) {
  ParameterMap out;
  for (const auto& [k, v] : pm) out.emplace(k, v.compose({}, u));
  return out;
}

CharPoly lift(const CharPoly& p, const ParameterMap& pm, const std::vector<std::string>& u) {
  // parameters of p that are neither mapped nor in u are a caller error and throw in compose
  return p.compose(pm, u);
}

CharPolyCheck compare(const std::string& name, const std::string& image, const CharPoly& a, const CharPoly& b) {
  CharPolyCheck c;
  c.generator = name;
  c.image = image;
  c.pass = a == b;
  if (!c.pass) {
    if (a.degree() != b.degree()) {
      c.difference = "degree " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree());
    } else {
      std::string d;
      for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        LaurentPoly diff = a.coeffs[k] - b.coeffs[k];
        if (diff.is_zero()) continue;
        if (!d.empty()) d += "; ";
        d += "X^" + std::to_string(k) + ": " + diff.to_string();
      }
      c.difference = d;
    }
  }
  return c;
}

void char_checks(const HeckePresentation& from, const HeckePresentation& to, const GeneratorMap& map, const ParameterMap& pm,
                 const std::vector<std::string>& u, std::vector<CharPolyCheck>& out) {
  for (std::size_t i = 0; i < map.images.size() && i < from.generators.size(); ++i) {
    auto x = conjugated_letter(map.images[i]);
    if (!x) continue;
    const auto& tg = to.generators[static_cast<std::size_t>(*x - 1)];
    out.push_back(compare(from.generators[i].name, to.braid_part.render(map.images[i]),
                          lift(from.generators[i].char_poly, pm, u), lift(tg.char_poly, pm, u)));
  }
}

}  // namespace

SpecializationReport verify_specialization(const HeckePresentation& hp, const ParameterMap& pm,
                                           const HeckePresentation& target, const HeckeCorrespondence& c,
                                           Budget budget) {
  SpecializationReport rep;
  RewriteSystem rs_target(target.braid_part, budget);
  RewriteSystem rs_source(hp.braid_part, budget);
  rep.forward = verify_homomorphism(c.forward, hp.braid_part, ProverEngine{&rs_target, &c.forward_hints, true});
  rep.braid_ok = rep.forward.verdict == Verdict::Proved;
  if (c.backward) {
    rep.backward = verify_homomorphism(*c.backward, target.braid_part, ProverEngine{&rs_source, &c.backward_hints, true});
    rep.braid_ok = rep.braid_ok && rep.backward->verdict == Verdict::Proved;
  }

  const auto u = common_universe(hp, target, pm);
  const auto map = rebase(pm, u);
  char_checks(hp, target, c.forward, map, u, rep.char_polys);
  if (c.backward) char_checks(target, hp, *c.backward, map, u, rep.char_polys);
  rep.char_ok = std::all_of(rep.char_polys.begin(), rep.char_polys.end(), [](const auto& x) { return x.pass; });

  // S_0 against the designated generator of the side without an extra word
  const HeckePresentation* with = hp.extra_generator ? &hp : target.extra_generator ? &target : nullptr;
  if (with) {
    const HeckePresentation& other = with == &hp ? target : hp;
    int gi = other.braid_part.index_of(c.inverse_generator);
    if (gi < 0) throw HeckeError("unknown generator " + c.inverse_generator);
    const HeckeGenerator& g = other.generators[static_cast<std::size_t>(gi)];
    Word inv = Word::generator(gi).inverse();
    ProverEngine eng{&rs_target, &c.forward_hints, true};
    if (with == &hp) {
      Word image = c.forward.apply(*hp.extra_generator_word);
      rep.extra_word = check_equal(image, inv, eng, nullptr);
      rep.extra_word.relation = "S0 = " + c.inverse_generator + "^-1";
      rep.extra_word.image = target.braid_part.render(image);
    } else {
      Word image = c.forward.apply(Word::generator(gi));
      Word s0inv = target.extra_generator_word->inverse();
      rep.extra_word = check_equal(image, s0inv, eng, nullptr);
      rep.extra_word.relation = c.inverse_generator + " = S0^-1";
      rep.extra_word.image = target.braid_part.render(image);
    }
    rep.extra_char_poly = compare(with->extra_generator->name, c.inverse_generator + "^-1",
                                  lift(with->extra_generator->char_poly, map, u), lift(g.char_poly, map, u).reciprocal());
    rep.extra_ok = rep.extra_word.verdict == Verdict::Proved && rep.extra_char_poly->pass;
  }
  rep.pass = rep.braid_ok && rep.char_ok && rep.extra_ok;
  return rep;
}

GdahaMatch gdaha_match(Family family, int n) {
  GdahaMatch gm;
  gm.hecke = build_generic_hecke(family, n);
  const bool d4 = family == Family::C_alpha;
  if (!d4 && family != Family::G311 && family != Family::G411 && family != Family::G611)
    throw HeckeError("no GDAHA correspondence for " + to_string(family));
  std::string type = d4 ? "D4" : family == Family::G311 ? "E6" : family == Family::G411 ? "E7" : "E8";
  gm.gdaha = build_gdaha(gdaha_legs(type), n);
  const auto& H = gm.hecke.braid_part;
  const auto& G = gm.gdaha.braid_part;
  auto name = [](const std::string& p, int i) { return p + std::to_string(i); };
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v)
      if (!x.empty()) s += (s.empty() ? "" : " ") + x;
    return s;
  };
  auto inv = [](const Presentation& p, const std::string& w) { return w.empty() ? w : p.render(p.word(w).inverse()); };

  auto& cor = gm.correspondence;
  cor.inverse_generator = "U1";
  if (d4 && n >= 2) {
    LemmaPair lp = braid_pair_c(n);
    cor.forward = lp.backward;
    cor.backward = lp.forward;
    cor.forward_hints = capitalized(lp.backward_hints);
    cor.backward_hints = capitalized(lp.forward_hints);
  } else if (d4) {
    cor.forward = make_map(H, G, {{"S1", "U2"}, {"S2", "U3"}, {"S3", "U4"}});
    cor.backward = make_map(G, H, {{"U1", inv(H, "S1 S2 S3")}, {"U2", "S1"}, {"U3", "S2"}, {"U4", "S3"}});
  } else {
    std::vector<std::string> T, S;
    for (int i = 1; i < n; ++i) T.push_back(name("T", i));
    for (int i = 2; i <= n; ++i) S.push_back(name("S", i));
    std::string t = join(T), s = join(S);
    std::vector<std::pair<std::string, std::string>> f{{"S1", "U2"}};
    for (int i = 2; i <= n; ++i) f.push_back({name("S", i), name("T", i - 1)});
    f.push_back({name("S", n + 1), join({inv(G, t), "U3", t})});
    cor.forward = make_map(H, G, f);
    std::vector<std::string> base;
    for (int i = 1; i <= n + 1; ++i) base.push_back(name("S", i));
    for (int i = n; i >= 2; --i) base.push_back(name("S", i));
    std::vector<std::pair<std::string, std::string>> b{
        {"U1", inv(H, join(base))}, {"U2", "S1"}, {"U3", join({s, name("S", n + 1), inv(H, s)})}};
    for (int i = 1; i < n; ++i) b.push_back({name("T", i), name("S", i + 1)});
    cor.backward = make_map(G, H, b);
  }

  const auto& U = gm.gdaha.parameters;
  auto mono = [&U](const std::string& p, int power = 1, int c = 1) { return LaurentPoly::monomial(U, p, power, c); };
  auto legs = gdaha_legs(type);
  auto assign = [&](int cls, int leg, bool inverse) {
    for (int j = 1; j <= legs[static_cast<std::size_t>(leg - 1)]; ++j)
      gm.specialization.emplace(param(cls, j), mono("u" + std::to_string(leg) + "_" + std::to_string(j), inverse ? -1 : 1));
  };
  assign(0, 1, true);
  assign(1, 2, false);
  assign(n + 1, 3, false);
  if (d4) assign(n + 2, 4, false);
  if (n >= 2) {
    gm.specialization.emplace(param(2, 1), mono("t"));
    gm.specialization.emplace(param(2, 2), mono("t", -1, -1));
  }
  return gm;
}

RankOneReport rank_one_specialization_check(bool q_is_one, bool flip_s01) {
  HeckePresentation hp = build_generic_hecke(Family::C_alpha, 1);
  std::vector<std::string> u{"t11", "t21", "t31", "t41"};
  if (!q_is_one) u.insert(u.begin(), "q");
  auto mono = [&u](const std::string& p, int power = 1, int c = 1) { return LaurentPoly::monomial(u, p, power, c); };
  LaurentPoly q = q_is_one ? LaurentPoly::constant(u, 1) : mono("q");
  ParameterMap pm;
  pm.emplace(param(0, 1), q * mono("t11", 1, flip_s01 ? 1 : -1));
  pm.emplace(param(0, 2), q * mono("t11", -1));
  for (int i = 1; i <= 3; ++i) {
    std::string t = "t" + std::to_string(i + 1) + "1";
    pm.emplace(param(i, 1), mono(t));
    pm.emplace(param(i, 2), mono(t, -1, -1));
  }
  auto quad = [&](const std::string& t) { return CharPoly::from_roots({mono(t), mono(t, -1, -1)}, u); };

  RankOneReport rep;
  rep.checks.push_back(compare("S0", q_is_one ? "T1^-1" : "q T1^-1", hp.extra_generator->char_poly.compose(pm, u),
                               quad("t11").reciprocal().scaled(q)));
  for (int i = 1; i <= 3; ++i)
    rep.checks.push_back(compare(hp.generators[static_cast<std::size_t>(i - 1)].name, "T" + std::to_string(i + 1),
                                 hp.generators[static_cast<std::size_t>(i - 1)].char_poly.compose(pm, u),
                                 quad("t" + std::to_string(i + 1) + "1")));
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.pass; });
  return rep;
}

// ---------------------------------------------------------------- triple dot

Word triple_dot_word(int n) {
  if (n < 3) throw HeckeError("triple dot generator needs n >= 3");
  std::vector<LetterCode> c{n, n + 1};
  for (int i = n - 1; i >= 1; --i) c.push_back(i);
  for (int i = 2; i <= n - 1; ++i) c.push_back(i);
  return Word(c).inverse();
}

TripleDotReport triple_dot_generator(int n, Budget budget, std::optional<Word> override_word) {
  TripleDotReport rep;
  rep.generator = override_word ? *override_word : triple_dot_word(n);
  Presentation art = artinize(build_group_presentation(Family::A_alpha, n));
  rep.generator_text = art.render(rep.generator);
  RewriteSystem rs(art, budget);
  ProverEngine eng{&rs, nullptr, true};
  auto mats = build_generator_matrices(Family::A_alpha, n);
  const Word& x = rep.generator;
  auto g = [](int i) { return Word::generator(i - 1); };
  std::vector<std::pair<Word, Word>> rels{{g(1) * x * g(1), x * g(1) * x},
                                          {x * g(n - 1) * x, g(n - 1) * x * g(n - 1)}};
  std::vector<std::string> names{"s1 s" + std::to_string(n + 2) + " s1 = s" + std::to_string(n + 2) + " s1 s" +
                                     std::to_string(n + 2),
                                 "s" + std::to_string(n + 2) + " s" + std::to_string(n - 1) + " s" +
                                     std::to_string(n + 2) + " = s" + std::to_string(n - 1) + " s" +
                                     std::to_string(n + 2) + " s" + std::to_string(n - 1)};
  for (int j = 2; j <= n - 2; ++j) {
    rels.push_back({g(j) * x, x * g(j)});
    names.push_back("s" + std::to_string(j) + " s" + std::to_string(n + 2) + " = s" + std::to_string(n + 2) + " s" +
                    std::to_string(j));
  }
  rep.pass = true;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    auto v = check_equal(rels[i].first, rels[i].second, eng, nullptr);
    v.index = i;
    v.relation = names[i];
    bool m = evaluate_word(rels[i].first, mats) == evaluate_word(rels[i].second, mats);
    rep.matrix_ok.push_back(m);
    if (!m) v.verdict = Verdict::Failed;
    rep.pass = rep.pass && m && v.verdict == Verdict::Proved;
    rep.relations.push_back(std::move(v));
  }
  return rep;
}

// ---------------------------------------------------------------- degeneration

std::vector<DegenerationCheck> cyclotomic_degeneration(const HeckePresentation& hp) {
  if (!hp.family || !has_matrices(*hp.family)) throw HeckeError("no matrices for " + hp.name);
  const Family f = *hp.family;
  const RingSpec spec = default_ring(f);
  auto mats = build_generator_matrices(f, hp.rank, spec);
  const RingElement one = RingElement::one(spec);

  auto root = [&](int e, int j) {
    if (spec.mode() == RingSpec::Mode::FormalAlpha) {
      if (e == 1) return one;
      if (e == 2) return j % 2 ? -one : one;
      throw HeckeError("formal ring has no root of order " + std::to_string(e));
    }
    // Z[zeta_3] = Z[zeta_6]: -zeta_3 generates the units
    const int d = spec.order() == 3 ? 6 : spec.order();
    const RingElement gen = spec.order() == 3 ? -RingElement::unit_root(spec) : RingElement::unit_root(spec);
    if (d % e != 0) throw HeckeError("ring lacks roots of order " + std::to_string(e));
    return gen.pow(static_cast<unsigned>((d / e) * j % d));
  };
  // s<c>_<j> -> zeta_e^j with e the class degree
  std::map<std::string, RingElement> value;
  std::map<int, int> degree;
  for (const auto& g : hp.generators) degree[g.parameter_class] = g.char_poly.degree();
  if (hp.extra_generator) degree[hp.extra_generator->parameter_class] = hp.extra_generator->char_poly.degree();
  for (const auto& [c, e] : degree)
    for (int j = 1; j <= e; ++j) value.emplace(param(c, j), root(e, j));

  auto eval = [&](const LaurentPoly& p) {
    RingElement acc = RingElement::zero(spec);
    for (const auto& [e, c] : p.terms()) {
      RingElement t = RingElement(spec, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        RingElement v = value.at(p.universe()[i]);
        if (e[i] < 0) v = v.inverse_unit();
        t *= v.pow(static_cast<unsigned>(std::abs(e[i])));
      }
      acc += t;
    }
    return acc;
  };
  auto annihilates = [&](const CharPoly& p, const AffineElement& m) {
    const Matrix aug = m.augmented();
    const std::size_t dim = aug.size();
    Matrix sum(dim, std::vector<RingElement>(dim, RingElement::zero(spec)));
    Matrix power = identity_matrix(spec, static_cast<int>(dim));
    for (const auto& c : p.coeffs) {
      RingElement s = eval(c);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t q = 0; q < dim; ++q) sum[r][q] += s * power[r][q];
      power = matrix_mul(power, aug);
    }
    for (const auto& row : sum)
      for (const auto& x : row)
        if (!x.is_zero()) return false;
    return true;
  };

  std::vector<DegenerationCheck> out;
  for (std::size_t i = 0; i < hp.generators.size(); ++i)
    out.push_back({hp.generators[i].name, annihilates(hp.generators[i].char_poly, mats[i])});
  if (hp.extra_generator)
    out.push_back({hp.extra_generator->name, annihilates(hp.extra_generator->char_poly, evaluate_word(*hp.extra_generator_word, mats))});
  return out;
}

}  // namespace crysref
