#include "crysref/presentation.hpp"

#include "builder.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace crysref {

std::string to_string(Family f) {
  switch (f) {
    case Family::A_alpha: return "A_alpha";
    case Family::C_alpha: return "C_alpha";
    case Family::G311: return "G311";
    case Family::G411: return "G411";
    case Family::G412: return "G412";
    case Family::G421: return "G421";
    case Family::G422: return "G422";
    case Family::G611: return "G611";
    case Family::G621: return "G621";
    case Family::G631: return "G631";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  static const std::map<std::string, Family> table = {
      {"A_alpha", Family::A_alpha}, {"C_alpha", Family::C_alpha}, {"G311", Family::G311},
      {"G411", Family::G411},       {"G412", Family::G412},       {"G421", Family::G421},
      {"G422", Family::G422},       {"G611", Family::G611},       {"G621", Family::G621},
      {"G631", Family::G631}};
  auto it = table.find(s);
  if (it == table.end()) throw PresentationError("unknown family '" + s + "'");
  return it->second;
}

std::string to_string(BraidSpace s) {
  switch (s) {
    case BraidSpace::PuncturedSphere4: return "PuncturedSphere4";
    case BraidSpace::TorusSpecial: return "TorusSpecial";
    case BraidSpace::FreeRank3: return "FreeRank3";
  }
  return "?";
}

BraidSpace parse_braid_space(const std::string& s) {
  if (s == "PuncturedSphere4") return BraidSpace::PuncturedSphere4;
  if (s == "TorusSpecial") return BraidSpace::TorusSpecial;
  if (s == "FreeRank3") return BraidSpace::FreeRank3;
  throw PresentationError("unknown braid space '" + s + "'");
}

bool is_genuine(Family f) { return f != Family::A_alpha && f != Family::C_alpha; }

bool family_rank_valid(Family f, int n) {
  switch (f) {
    case Family::A_alpha: return n >= 2;
    case Family::C_alpha:
    case Family::G311:
    case Family::G411:
    case Family::G611: return n >= 1;
    case Family::G412:
    case Family::G421:
    case Family::G621:
    case Family::G631: return n >= 2;
    case Family::G422: return n == 2 || n >= 4;
  }
  return false;
}

std::string to_string(Lace l) {
  switch (l) {
    case Lace::None: return "none";
    case Lace::Simple: return "simple";
    case Lace::Double: return "double";
    case Lace::Triple: return "triple";
    case Lace::X: return "x";
    case Lace::Infinity: return "infinity";
  }
  return "?";
}

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Order: return "order";
    case RelationKind::Coxeter: return "coxeter";
    case RelationKind::Braid: return "braid";
    case RelationKind::XRelation: return "x-relation";
    case RelationKind::ExtraOrder: return "extra-order";
    case RelationKind::Closedness: return "closedness";
    case RelationKind::Other: return "other";
  }
  return "?";
}

std::vector<Word> Presentation::relators() const {
  std::vector<Word> out;
  out.reserve(relations.size());
  for (const auto& r : relations) out.push_back(r.relator());
  return out;
}

int Presentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generator_names.size(); ++i)
    if (generator_names[i] == name) return static_cast<int>(i);
  return -1;
}

std::string Presentation::relation_text(const Relation& r) const {
  std::string l = r.lhs.empty() ? "1" : render(r.lhs);
  std::string rr = r.rhs.empty() ? "1" : render(r.rhs);
  return l + " = " + rr;
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : generator_names) out << ' ' << g;
  out << "\norders:";
  for (const auto& o : generator_orders) out << ' ' << (o ? std::to_string(*o) : std::string("inf"));
  out << '\n';
  for (const auto& r : relations) {
    out << "rel:";
    Word w = r.relator();
    if (!w.empty()) out << ' ' << render(w);
    out << '\n';
  }
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Presentation Presentation::parse_text(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  bool have_gens = false, have_orders = false;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) throw PresentationError("malformed line: " + t);
    std::string key = t.substr(0, colon);
    std::string body = t.substr(colon + 1);
    std::istringstream bs(body);
    if (key == "gens") {
      std::string g;
      while (bs >> g) p.generator_names.push_back(g);
      have_gens = true;
    } else if (key == "orders") {
      if (!have_gens) throw PresentationError("orders before gens");
      std::string o;
      while (bs >> o) {
        if (o == "inf") p.generator_orders.push_back(std::nullopt);
        else {
          int v = 0;
          try {
            v = std::stoi(o);
          } catch (const std::exception&) {
            throw PresentationError("bad order '" + o + "'");
          }
          if (v < 1) throw PresentationError("bad order '" + o + "'");
          p.generator_orders.push_back(v);
        }
      }
      if (p.generator_orders.size() != p.generator_names.size())
        throw PresentationError("orders/gens length mismatch");
      have_orders = true;
    } else if (key == "rel") {
      if (!have_orders) throw PresentationError("rel before orders");
      Relation r;
      r.lhs = Word::parse(body, p.generator_names);
      r.kind = RelationKind::Other;
      if (!r.lhs.empty()) {
        Letter first = r.lhs.letter(0);
        bool power = std::all_of(r.lhs.codes().begin(), r.lhs.codes().end(),
                                 [&](LetterCode c) { return c == first.code(); });
        auto ord = p.generator_orders[static_cast<std::size_t>(first.generator)];
        if (power && ord && static_cast<int>(r.lhs.size()) == *ord) r.kind = RelationKind::Order;
      }
      p.relations.push_back(std::move(r));
    } else if (key == "charpoly") {
      continue;  // handled by the Hecke layer
    } else {
      throw PresentationError("unknown key '" + key + "'");
    }
  }
  if (!have_gens || !have_orders) throw PresentationError("missing gens/orders line");
  for (std::size_t i = 0; i < p.generator_names.size(); ++i)
    p.diagram.nodes.push_back({p.generator_names[i], p.generator_orders[i] ? *p.generator_orders[i] : 0});
  return p;
}

Word alternating(int a, int b, int length) {
  std::vector<LetterCode> c;
  for (int k = 0; k < length; ++k) c.push_back((k % 2 == 0 ? a : b) + 1);
  return Word(c);
}

namespace {

using detail::Builder;
using detail::ws;

Presentation a1_presentation(const std::string& name) {
  Builder b(name, 3, "s", 2);
  b.order_relations();
  b.infinity_edge(0, 1);
  b.infinity_edge(0, 2);
  b.infinity_edge(1, 2);
  b.extra(ws({1, 2, 3}), 2);
  return b.p;
}

Presentation c_presentation(int n) {
  Builder b("C_alpha " + std::to_string(n), n + 2, "s", 2);
  b.order_relations();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) b.coxeter(i - 1, j - 1, 2);
  for (int i = n + 1; i <= n + 2; ++i)
    for (int j = 1; j <= n - 1; ++j) b.coxeter(j - 1, i - 1, 2);
  for (int i = 2; i < n; ++i) b.coxeter(i - 1, i, 3);
  b.coxeter(0, 1, 4);
  b.coxeter(n - 1, n, 4);
  b.coxeter(n - 1, n + 1, 4);
  // s_n s_{n+1} s_n^-1 s_{n+2} = s_{n+2} s_n s_{n+1} s_n^-1
  b.relation(ws({n, n + 1, -n, n + 2}), ws({n + 2, n, n + 1, -n}), RelationKind::XRelation);
  b.p.diagram.edges.push_back({static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1), Lace::X, 0});
  std::vector<int> base;
  for (int i = 1; i <= n + 2; ++i) base.push_back(i);
  for (int i = n; i >= 2; --i) base.push_back(i);
  b.extra(ws(base), 2);
  return b.p;
}

Presentation a_presentation(int n) {
  Builder b("A_alpha " + std::to_string(n), n + 1, "s", 2);
  b.order_relations();
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) b.coxeter(i - 1, j - 1, 2);
  for (int i = n; i <= n + 1; ++i)
    for (int j = 2; j <= n - 2; ++j) b.coxeter(j - 1, i - 1, 2);
  for (int i = 1; i < n - 1; ++i) b.coxeter(i - 1, i, 3);
  for (int i = n; i <= n + 1; ++i) {
    b.coxeter(0, i - 1, 3);
    b.coxeter(n - 2, i - 1, 3);
  }
  // s_{n+1} s_{n-1} ... s_1 s_n s_1^-1 = s_{n-1} s_n^-1 s_{n-1}^-1 ... s_1^-1 s_{n+1}^-1
  std::vector<int> lhs{n + 1}, rhs{n - 1, -n};
  for (int i = n - 1; i >= 1; --i) lhs.push_back(i);
  lhs.push_back(n);
  lhs.push_back(-1);
  for (int i = n - 1; i >= 1; --i) rhs.push_back(-i);
  rhs.push_back(-(n + 1));
  b.relation(ws(lhs), ws(rhs), RelationKind::XRelation);
  b.p.diagram.edges.push_back({static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n), Lace::X, 0});
  std::vector<int> base;
  for (int i = 1; i <= n + 1; ++i) base.push_back(i);
  for (int i = n - 1; i >= 2; --i) base.push_back(i);
  b.extra(ws(base), 2);
  return b.p;
}

/// [G(d,1,n)]_1 with node orders (a, b) for s_1 and s_{n+1}.
Presentation gd1n_presentation(Family f, int n) {
  int d = 0, a = 0, bo = 0;
  switch (f) {
    case Family::G311: d = 3, a = 3, bo = 3; break;
    case Family::G411: d = 4, a = 4, bo = 2; break;
    case Family::G611: d = 6, a = 3, bo = 2; break;
    default: throw PresentationError("not a G(d,1,n) family");
  }
  Builder b(to_string(f) + " " + std::to_string(n), n + 1, "s", 2);
  b.set_order(0, a);
  b.set_order(n, bo);
  b.order_relations();
  if (n == 1) {
    b.infinity_edge(0, 1);
    b.extra(ws({1, 2}), d);
    return b.p;
  }
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 2; j <= n + 1; ++j) b.coxeter(i - 1, j - 1, 2);
  b.coxeter(0, 1, 4);
  for (int i = 2; i < n; ++i) b.coxeter(i - 1, i, 3);
  b.coxeter(n - 1, n, 4);
  std::vector<int> base;
  for (int i = 1; i <= n + 1; ++i) base.push_back(i);
  for (int i = n; i >= 2; --i) base.push_back(i);
  b.extra(ws(base), d);
  return b.p;
}

}  // namespace

Presentation build_genuine_sub_presentation(Family f, int n);

Presentation build_group_presentation(Family family, int n) {
  if (!family_rank_valid(family, n))
    throw PresentationError("rank " + std::to_string(n) + " out of range for " + to_string(family));
  switch (family) {
    case Family::C_alpha:
      return n == 1 ? a1_presentation("C_alpha 1") : c_presentation(n);
    case Family::A_alpha:
      return n == 2 ? a1_presentation("A_alpha 2") : a_presentation(n);
    case Family::G311:
    case Family::G411:
    case Family::G611: return gd1n_presentation(family, n);
    default: return build_genuine_sub_presentation(family, n);
  }
}

Presentation build_braid_presentation(BraidSpace space, int n) {
  if (space == BraidSpace::FreeRank3) {
    if (n != 1) throw PresentationError("FreeRank3 needs n = 1");
    Builder b("FreeRank3", 3, "u", std::nullopt);
    return b.p;
  }
  if (n < 2) throw PresentationError("configuration spaces need n >= 2");
  if (space == BraidSpace::PuncturedSphere4) {
    // u1..u4 = 1..4, t_i = 4 + i
    Builder b("PuncturedSphere4 " + std::to_string(n), 4, "u", std::nullopt);
    for (int i = 1; i < n; ++i) {
      b.p.generator_names.push_back("t" + std::to_string(i));
      b.p.generator_orders.push_back(std::nullopt);
      b.p.diagram.nodes.push_back({b.p.generator_names.back(), 0});
    }
    auto t = [](int i) { return 4 + i; };
    std::vector<int> closed{1, 2, 3, 4};
    for (int i = 1; i < n; ++i) closed.push_back(t(i));
    for (int i = n - 1; i >= 1; --i) closed.push_back(t(i));
    b.relation(ws(closed), Word(), RelationKind::Closedness);
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) b.relation(ws({t(i), t(j)}), ws({t(j), t(i)}), RelationKind::Braid);
    for (int i = 1; i + 1 < n; ++i)
      b.relation(ws({t(i), t(i + 1), t(i)}), ws({t(i + 1), t(i), t(i + 1)}), RelationKind::Braid);
    for (int u = 1; u <= 4; ++u)
      for (int j = 2; j < n; ++j) b.relation(ws({u, t(j)}), ws({t(j), u}), RelationKind::Braid);
    for (int u = 1; u <= 4; ++u)
      b.relation(ws({u, t(1), u, t(1)}), ws({t(1), u, t(1), u}), RelationKind::Braid);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        b.relation(ws({i, -t(1), j, t(1)}), ws({-t(1), j, t(1), i}), RelationKind::Braid);
    return b.p;
  }
  // TorusSpecial: r_0..r_{n-1} = 1..n, t_i = n + i
  Builder b("TorusSpecial " + std::to_string(n), n, "r", std::nullopt, 0);
  for (int i = 1; i < n; ++i) {
    b.p.generator_names.push_back("t" + std::to_string(i));
    b.p.generator_orders.push_back(std::nullopt);
    b.p.diagram.nodes.push_back({b.p.generator_names.back(), 0});
  }
  auto r = [](int i) { return i + 1; };
  auto t = [n](int i) { return n + i; };
  auto adjacent = [n](int i, int j) { return ((i - j) % n + n) % n == 1 || ((j - i) % n + n) % n == 1; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (adjacent(i, j)) b.relation(ws({r(i), r(j), r(i)}), ws({r(j), r(i), r(j)}), RelationKind::Braid);
      else b.relation(ws({r(i), r(j)}), ws({r(j), r(i)}), RelationKind::Braid);
    }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.relation(ws({t(i), t(j)}), ws({t(j), t(i)}), RelationKind::Braid);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i != j && !adjacent(i, j)) b.relation(ws({r(i), t(j)}), ws({t(j), r(i)}), RelationKind::Braid);
  for (int i = 1; i + 1 < n; ++i) {
    b.relation(ws({r(i), t(i + 1), r(i)}), ws({t(i), t(i + 1)}), RelationKind::Braid);
    b.relation(ws({r(i + 1), t(i), r(i + 1)}), ws({t(i), t(i + 1)}), RelationKind::Braid);
  }
  std::vector<int> all_t_inv;
  for (int i = n - 1; i >= 1; --i) all_t_inv.push_back(-t(i));
  for (int i : {1, n - 1}) {
    std::vector<int> rhs{t(i)};
    rhs.insert(rhs.end(), all_t_inv.begin(), all_t_inv.end());
    b.relation(ws({r(0), t(i), r(0)}), ws(rhs), RelationKind::Braid);
    if (n == 2) break;
  }
  return b.p;
}

Presentation artinize(const Presentation& p) {
  Presentation q;
  q.name = p.name.empty() ? p.name : "Ar(" + p.name + ")";
  if (p.name.rfind("Ar(", 0) == 0) q.name = p.name;
  q.generator_names = p.generator_names;
  q.generator_orders.assign(p.generator_names.size(), std::nullopt);
  q.diagram = p.diagram;
  for (const auto& r : p.relations) {
    if (r.kind == RelationKind::Order || r.kind == RelationKind::ExtraOrder) continue;
    if (r.kind == RelationKind::Coxeter && r.pair) {
      Relation nr = r;
      nr.lhs = alternating(r.pair->a, r.pair->b, r.pair->length);
      nr.rhs = alternating(r.pair->b, r.pair->a, r.pair->length);
      nr.kind = RelationKind::Braid;
      q.relations.push_back(std::move(nr));
      continue;
    }
    q.relations.push_back(r);
  }
  return q;
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: least nonzero absolute value in the remaining block
    bool found = false;
    std::size_t pr = 0, pc = 0;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!m[i][j].is_zero()) {
          Integer v = abs(m[i][j]);
          if (!found || v < best) {
            best = v;
            pr = i;
            pc = j;
            found = true;
          }
        }
    if (!found) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t].is_zero()) continue;
      Integer q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (!m[i][t].is_zero()) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j].is_zero()) continue;
      Integer q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (!m[t][j].is_zero()) clean = false;
    }
    if (!clean) continue;
    // divisibility of the remaining block
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!Integer(m[i][j] % m[t][t]).is_zero()) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  const std::size_t full = std::min(rows, cols);
  while (diag.size() < full) diag.push_back(0);
  return diag;
}

std::vector<Integer> abelianize(const Presentation& p) {
  const int k = p.generator_count();
  std::vector<std::vector<Integer>> m;
  for (const auto& w : p.relators()) {
    auto e = exponent_sums(w, k);
    std::vector<Integer> row(e.begin(), e.end());
    bool zero = std::all_of(row.begin(), row.end(), [](const Integer& x) { return x.is_zero(); });
    if (!zero) m.push_back(std::move(row));
  }
  std::vector<Integer> diag = m.empty() ? std::vector<Integer>() : smith_diagonal(m);
  std::vector<Integer> out;
  std::size_t nonzero = 0;
  for (const auto& d : diag) {
    if (d.is_zero()) continue;
    ++nonzero;
    if (d != 1) out.push_back(d);
  }
  for (std::size_t i = nonzero; i < static_cast<std::size_t>(k); ++i) out.push_back(0);
  return out;
}

std::string diagram_to_dot(const CoxeterLikeDiagram& d) {
  std::ostringstream out;
  out << "graph D {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const auto& nd = d.nodes[i];
    out << "  n" << i << " [label=\"" << nd.name;
    if (nd.order != 2) out << "\\n" << (nd.order == 0 ? std::string("∞") : std::to_string(nd.order));
    out << "\"];\n";
  }
  for (const auto& e : d.edges) {
    out << "  n" << e.i << " -- n" << e.j;
    switch (e.lace) {
      case Lace::None: out << " [style=invis]"; break;
      case Lace::Simple: break;
      case Lace::Double: out << " [label=\"4\", penwidth=2]"; break;
      case Lace::Triple: out << " [label=\"6\", penwidth=3]"; break;
      case Lace::Infinity: out << " [label=\"∞\"]"; break;
      case Lace::X: out << " [label=\"x\", style=dashed, color=red]"; break;
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace crysref
