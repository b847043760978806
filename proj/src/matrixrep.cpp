#include "crysref/matrixrep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace crysref {

Matrix identity_matrix(RingSpec spec, int n) {
  Matrix m(static_cast<std::size_t>(n), std::vector<RingElement>(static_cast<std::size_t>(n), RingElement::zero(spec)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = RingElement::one(spec);
  return m;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  if (n == 0) return {};
  RingSpec spec = a[0][0].spec();
  Matrix c(n, std::vector<RingElement>(m, RingElement::zero(spec)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Matrix matrix_inverse(const Matrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  RingSpec spec = a[0][0].spec();
  Matrix m = a;
  Matrix inv = identity_matrix(spec, static_cast<int>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (m[r][col].is_unit()) {
        piv = r;
        break;
      }
    if (piv == n) throw MatrixError("matrix has no unit pivot; not invertible over the ring");
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    RingElement u = m[col][col].inverse_unit();
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= u;
      inv[col][j] *= u;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      RingElement f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

AffineElement::AffineElement(Matrix linear, std::vector<RingElement> translation)
    : spec_(translation.empty() ? RingSpec::formal_alpha() : translation[0].spec()),
      linear_(std::move(linear)),
      translation_(std::move(translation)) {
  if (linear_.size() != translation_.size()) throw MatrixError("dimension mismatch");
  for (const auto& row : linear_)
    if (row.size() != translation_.size()) throw MatrixError("linear part is not square");
}

AffineElement AffineElement::identity(RingSpec spec, int n) {
  return AffineElement(identity_matrix(spec, n), std::vector<RingElement>(static_cast<std::size_t>(n), RingElement::zero(spec)));
}

AffineElement AffineElement::operator*(const AffineElement& o) const {
  if (dim() != o.dim()) throw MatrixError("dimension mismatch");
  const std::size_t n = translation_.size();
  Matrix g = matrix_mul(linear_, o.linear_);
  std::vector<RingElement> t = translation_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!linear_[i][j].is_zero() && !o.translation_[j].is_zero()) t[i] += linear_[i][j] * o.translation_[j];
  return AffineElement(std::move(g), std::move(t));
}

AffineElement AffineElement::inverse() const {
  Matrix gi = matrix_inverse(linear_);
  const std::size_t n = translation_.size();
  std::vector<RingElement> t(n, RingElement::zero(spec_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!gi[i][j].is_zero() && !translation_[j].is_zero()) t[i] -= gi[i][j] * translation_[j];
  return AffineElement(std::move(gi), std::move(t));
}

AffineElement AffineElement::pow(int k) const {
  AffineElement base = k >= 0 ? *this : inverse();
  AffineElement r = identity(spec_, dim());
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

bool AffineElement::linear_is_identity() const {
  for (std::size_t i = 0; i < linear_.size(); ++i)
    for (std::size_t j = 0; j < linear_.size(); ++j) {
      const auto& x = linear_[i][j];
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool AffineElement::translation_is_zero() const {
  return std::all_of(translation_.begin(), translation_.end(), [](const RingElement& x) { return x.is_zero(); });
}

bool AffineElement::is_identity() const { return linear_is_identity() && translation_is_zero(); }

Matrix AffineElement::augmented() const {
  const std::size_t n = translation_.size();
  Matrix m(n + 1, std::vector<RingElement>(n + 1, RingElement::zero(spec_)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = linear_[i][j];
    m[i][n] = translation_[i];
  }
  m[n][n] = RingElement::one(spec_);
  return m;
}

std::string AffineElement::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < linear_.size(); ++i) {
    if (i) out << "; ";
    out << '[';
    for (std::size_t j = 0; j < linear_.size(); ++j) out << (j ? " " : "") << linear_[i][j].to_string();
    out << " | " << translation_[i].to_string() << ']';
  }
  return out.str();
}

bool has_matrices(Family f) {
  return f == Family::A_alpha || f == Family::C_alpha || f == Family::G311 || f == Family::G411 || f == Family::G611;
}

RingSpec default_ring(Family f) {
  switch (f) {
    case Family::G311: return RingSpec::cyclotomic(3);
    case Family::G411: return RingSpec::cyclotomic(4);
    case Family::G611: return RingSpec::cyclotomic(6);
    default: return RingSpec::formal_alpha();
  }
}

namespace {

struct MatBuilder {
  RingSpec spec;
  int n;

  AffineElement diag(int k, const RingElement& value, const std::vector<RingElement>& t) const {
    Matrix g = identity_matrix(spec, n);
    g[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = value;
    return AffineElement(g, t);
  }
  AffineElement swap(int i, int j, const std::vector<RingElement>& t) const {
    Matrix g = identity_matrix(spec, n);
    auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
    g[a][a] = g[b][b] = RingElement::zero(spec);
    g[a][b] = g[b][a] = RingElement::one(spec);
    return AffineElement(g, t);
  }
  std::vector<RingElement> zero() const { return std::vector<RingElement>(static_cast<std::size_t>(n), RingElement::zero(spec)); }
  std::vector<RingElement> unit(int k, const RingElement& c) const {
    auto t = zero();
    t[static_cast<std::size_t>(k)] = c;
    return t;
  }
  std::vector<RingElement> root(int i, int j, const RingElement& c) const {
    auto t = zero();
    t[static_cast<std::size_t>(i)] = c;
    t[static_cast<std::size_t>(j)] = -c;
    return t;
  }
};

}  // namespace

std::vector<AffineElement> build_generator_matrices(Family family, int n, RingSpec spec) {
  if (!has_matrices(family)) throw MatrixError("no matrix representation for " + to_string(family));
  if (!family_rank_valid(family, n)) throw MatrixError("rank out of range");
  if (spec != default_ring(family)) throw MatrixError("ring " + spec.name() + " does not fit " + to_string(family));
  const RingElement one = RingElement::one(spec), minus = -one, u = RingElement::unit_root(spec);
  std::vector<AffineElement> gens;
  if (family == Family::C_alpha) {
    MatBuilder b{spec, n};
    gens.push_back(b.diag(0, minus, b.zero()));
    if (n == 1) {
      gens.push_back(b.diag(0, minus, b.unit(0, one)));
      gens.push_back(b.diag(0, minus, b.unit(0, u)));
      return gens;
    }
    for (int i = 2; i <= n; ++i) gens.push_back(b.swap(i - 2, i - 1, b.zero()));
    gens.push_back(b.diag(n - 1, minus, b.unit(n - 1, one)));
    gens.push_back(b.diag(n - 1, minus, b.unit(n - 1, u)));
    return gens;
  }
  if (family == Family::A_alpha) {
    MatBuilder b{spec, n};
    if (n == 2) {
      gens.push_back(b.swap(0, 1, b.zero()));
      gens.push_back(b.swap(0, 1, b.root(0, 1, one)));
      gens.push_back(b.swap(0, 1, b.root(0, 1, u)));
      return gens;
    }
    for (int i = 1; i <= n - 1; ++i) gens.push_back(b.swap(i - 1, i, b.zero()));
    gens.push_back(b.swap(0, n - 1, b.root(0, n - 1, one)));
    gens.push_back(b.swap(0, n - 1, b.root(0, n - 1, u)));
    return gens;
  }
  // [G(d,1,n)]_1: s1 = diag(zeta_a), s_{n+1} = (diag(.., eta) | e_n)
  RingElement zeta_a = u, eta = u;
  if (family == Family::G411) eta = minus;
  if (family == Family::G611) {
    zeta_a = u * u;  // zeta_6^2 = zeta_3
    eta = minus;
  }
  MatBuilder b{spec, n};
  gens.push_back(b.diag(0, zeta_a, b.zero()));
  for (int i = 2; i <= n; ++i) gens.push_back(b.swap(i - 2, i - 1, b.zero()));
  gens.push_back(b.diag(n - 1, eta, b.unit(n - 1, one)));
  return gens;
}

AffineElement evaluate_word(const Word& w, const std::vector<AffineElement>& gens) {
  if (gens.empty()) throw MatrixError("no generators");
  AffineElement r = AffineElement::identity(gens[0].spec(), gens[0].dim());
  std::vector<std::optional<AffineElement>> inverses(gens.size());
  for (LetterCode c : w.codes()) {
    auto g = static_cast<std::size_t>(std::abs(c) - 1);
    if (g >= gens.size()) throw MatrixError("letter outside generator list");
    if (c > 0) r = r * gens[g];
    else {
      if (!inverses[g]) inverses[g] = gens[g].inverse();
      r = r * *inverses[g];
    }
  }
  return r;
}

PresentationReport verify_presentation(const Presentation& p, const std::vector<AffineElement>& gens) {
  if (static_cast<int>(gens.size()) != p.generator_count()) throw MatrixError("arity mismatch");
  PresentationReport rep;
  rep.pass = true;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    Word w = p.relations[i].relator();
    AffineElement e = evaluate_word(w, gens);
    RelatorCheck c;
    c.relator_index = i;
    c.word_text = p.render(w);
    c.kind = p.relations[i].kind;
    c.pass = e.is_identity();
    if (!c.pass) {
      c.witness_matrix = e.to_string();
      rep.pass = false;
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Identity: return "identity";
    case ElementKind::Reflection: return "reflection";
    case ElementKind::Translation: return "translation";
    case ElementKind::Other: return "other";
  }
  return "?";
}

std::string to_string(LinearClass c) {
  switch (c) {
    case LinearClass::Sign: return "sign";
    case LinearClass::Transposition: return "transposition";
    case LinearClass::Other: return "other";
  }
  return "?";
}

int fixed_space_codimension(const AffineElement& e) {
  const std::size_t n = static_cast<std::size_t>(e.dim());
  const RingSpec spec = e.spec();
  std::vector<std::vector<Integer>> m;
  if (spec.mode() == RingSpec::Mode::FormalAlpha) {
    m.assign(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& x = e.linear()[i][j];
        if (!x.b().is_zero()) throw MatrixError("alpha in a linear part");
        m[i][j] = x.a() - (i == j ? 1 : 0);
      }
  } else {
    const auto mp = *spec.minimal_polynomial();
    m.assign(2 * n, std::vector<Integer>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        RingElement x = e.linear()[i][j];
        if (i == j) x -= RingElement::one(spec);
        m[2 * i][2 * j] = x.a();
        m[2 * i][2 * j + 1] = -mp[0] * x.b();
        m[2 * i + 1][2 * j] = x.b();
        m[2 * i + 1][2 * j + 1] = x.a() - mp[1] * x.b();
      }
  }
  auto diag = smith_diagonal(m);
  int rank = 0;
  for (const auto& d : diag)
    if (!d.is_zero()) ++rank;
  return spec.mode() == RingSpec::Mode::FormalAlpha ? rank : rank / 2;
}

namespace {

Integer mod2(const Integer& x) {
  Integer r = x % 2;
  if (r < 0) r += 2;
  return r;
}

RingElement residue_of(const RingElement& x) { return RingElement(x.spec(), mod2(x.a()), mod2(x.b())); }

/// Linear order up to 12, 0 if none.
int linear_order(const AffineElement& e) {
  Matrix id = identity_matrix(e.spec(), e.dim());
  Matrix p = e.linear();
  for (int k = 1; k <= 12; ++k) {
    if (p == id) return k;
    p = matrix_mul(p, e.linear());
  }
  return 0;
}

}  // namespace

ElementClass classify_element(const AffineElement& e) {
  ElementClass c;
  if (e.linear_is_identity()) {
    c.kind = e.translation_is_zero() ? ElementKind::Identity : ElementKind::Translation;
    return c;
  }
  int k = linear_order(e);
  if (k == 0 || fixed_space_codimension(e) != 1 || !e.pow(k).is_identity()) {
    c.kind = ElementKind::Other;
    return c;
  }
  c.kind = ElementKind::Reflection;
  ReflectionData d{LinearClass::Other, RingElement::zero(e.spec()), k};
  const auto& g = e.linear();
  const std::size_t n = g.size();
  bool diagonal = true;
  std::vector<std::size_t> moved;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !g[i][j].is_zero()) diagonal = false;
  for (std::size_t i = 0; i < n; ++i)
    if (!(g[i][i].is_one())) moved.push_back(i);
  if (diagonal && moved.size() == 1) {
    d.linear_class = LinearClass::Sign;
    d.residue = residue_of(e.translation()[moved[0]]);
  } else if (!diagonal && moved.size() == 2) {
    d.linear_class = LinearClass::Transposition;
    d.residue = residue_of(e.translation()[moved[0]]);
  }
  c.detail = d;
  return c;
}

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<Integer> key_of(const AffineElement& e) {
  std::vector<Integer> k;
  for (const auto& row : e.linear())
    for (const auto& x : row) {
      k.push_back(x.a());
      k.push_back(x.b());
    }
  for (const auto& x : e.translation()) {
    k.push_back(x.a());
    k.push_back(x.b());
  }
  return k;
}

/// Separator used alongside the conjugation search: residues are conjugation invariants
/// for sign reflections in type C and for the rank-one lattice of A_alpha at n = 2.
std::string invariant_of(Family f, int n, const AffineElement& e) {
  ElementClass c = classify_element(e);
  if (c.kind != ElementKind::Reflection || !c.detail) throw MatrixError("candidate is not a reflection");
  const auto& d = *c.detail;
  std::string lin = to_string(d.linear_class);
  bool keep_residue = (f == Family::C_alpha && d.linear_class == LinearClass::Sign) || (f == Family::A_alpha && n == 2);
  if (!keep_residue) return lin;
  return lin + ":" + d.residue.a().str() + "+" + d.residue.b().str() + "α";
}

}  // namespace

ClassEnumeration enumerate_reflection_classes(Family family, int n, int translation_bound, int depth) {
  if (family != Family::A_alpha && family != Family::C_alpha)
    throw MatrixError("class enumeration supports A_alpha and C_alpha only");
  if (!family_rank_valid(family, n)) throw MatrixError("rank out of range");
  if (n > 4 || translation_bound > 3 || translation_bound < 0 || depth > 4 || depth < 0)
    throw BudgetExceeded("enumeration budget exceeded (need n <= 4, bound <= 3, depth <= 4)");
  const RingSpec spec = RingSpec::formal_alpha();
  const int dim = n;
  const RingElement one = RingElement::one(spec), zero = RingElement::zero(spec);
  const int B = translation_bound;

  // Linear reflections of Lin(W).
  std::vector<Matrix> linear;
  if (family == Family::C_alpha) {
    for (int k = 0; k < dim; ++k) {
      Matrix g = identity_matrix(spec, dim);
      g[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = -one;
      linear.push_back(g);
    }
  }
  if (dim >= 2) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int s : {1, -1}) {
          if (family == Family::A_alpha && s < 0) continue;
          Matrix g = identity_matrix(spec, dim);
          auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
          g[a][a] = g[b][b] = zero;
          g[a][b] = g[b][a] = s > 0 ? one : -one;
          linear.push_back(g);
        }
  }

  // Translation grid: coefficients of 1 and alpha in [-B, B] per coordinate.
  std::vector<std::vector<RingElement>> grid;
  {
    const int side = 2 * B + 1;
    std::size_t total = 1;
    for (int i = 0; i < 2 * dim; ++i) total *= static_cast<std::size_t>(side);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      std::vector<RingElement> t;
      Integer sa = 0, sb = 0;
      for (int i = 0; i < dim; ++i) {
        int a = static_cast<int>(c % static_cast<std::size_t>(side)) - B;
        c /= static_cast<std::size_t>(side);
        int b = static_cast<int>(c % static_cast<std::size_t>(side)) - B;
        c /= static_cast<std::size_t>(side);
        t.emplace_back(spec, a, b);
        sa += a;
        sb += b;
      }
      if (family == Family::A_alpha && (!sa.is_zero() || !sb.is_zero())) continue;
      grid.push_back(std::move(t));
    }
  }

  std::vector<AffineElement> cands;
  std::map<std::vector<Integer>, std::size_t> index;
  for (const auto& g : linear)
    for (const auto& t : grid) {
      AffineElement e(g, t);
      // (g|t) is a reflection iff g t = -t here (g an involution)
      bool ok = true;
      for (std::size_t i = 0; i < t.size() && ok; ++i) {
        RingElement s = t[i];
        for (std::size_t j = 0; j < t.size(); ++j)
          if (!g[i][j].is_zero()) s += g[i][j] * t[j];
        ok = s.is_zero();
      }
      if (!ok) continue;
      index.emplace(key_of(e), cands.size());
      cands.push_back(std::move(e));
    }

  // Conjugators: distinct elements given by words of length <= depth.
  auto gens = build_generator_matrices(family, n, spec);
  std::vector<AffineElement> conj{AffineElement::identity(spec, dim)};
  std::set<std::vector<Integer>> seen{key_of(conj[0])};
  std::vector<AffineElement> frontier = conj;
  for (int d = 0; d < depth; ++d) {
    std::vector<AffineElement> next;
    for (const auto& h : frontier)
      for (const auto& g : gens) {
        AffineElement x = h * g;
        if (seen.insert(key_of(x)).second) {
          next.push_back(x);
          conj.push_back(x);
        }
      }
    frontier = std::move(next);
  }
  std::vector<AffineElement> conj_inv;
  conj_inv.reserve(conj.size());
  for (const auto& h : conj) conj_inv.push_back(h.inverse());

  Dsu dsu(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t h = 0; h < conj.size(); ++h) {
      AffineElement x = conj[h] * cands[i] * conj_inv[h];
      auto it = index.find(key_of(x));
      if (it != index.end()) dsu.unite(i, it->second);
    }

  ClassEnumeration out;
  out.candidates = cands.size();
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::size_t r = dsu.find(i);
    std::string inv = invariant_of(family, n, cands[i]);
    auto it = root_to_class.find(r);
    if (it == root_to_class.end()) {
      root_to_class.emplace(r, out.classes.size());
      out.classes.push_back({cands[i], 1, inv});
    } else {
      auto& cls = out.classes[it->second];
      if (cls.invariant != inv) throw MatrixError("conjugation merged reflections with different residues");
      ++cls.size;
    }
  }
  std::set<std::string> invariants;
  for (const auto& c : out.classes) invariants.insert(c.invariant);
  out.certified = invariants.size() == out.classes.size();
  out.count = out.classes.size();
  return out;
}

}  // namespace crysref
