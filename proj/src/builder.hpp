#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crysref/presentation.hpp"

namespace crysref::detail {

struct Builder {
  Presentation p;

  Builder(std::string name, int count, const std::string& prefix, std::optional<int> order, int first = 1) {
    p.name = std::move(name);
    for (int i = 0; i < count; ++i) {
      p.generator_names.push_back(prefix + std::to_string(i + first));
      p.generator_orders.push_back(order);
      p.diagram.nodes.push_back({p.generator_names.back(), order ? *order : 0});
    }
  }

  Word g(int i) const { return Word::generator(i); }

  void set_order(int i, int order) {
    p.generator_orders[static_cast<std::size_t>(i)] = order;
    p.diagram.nodes[static_cast<std::size_t>(i)].order = order;
  }

  void order_relations() {
    for (int i = 0; i < p.generator_count(); ++i)
      if (auto o = p.generator_orders[static_cast<std::size_t>(i)])
        p.relations.push_back({Word::generator(i, *o), Word(), RelationKind::Order, std::nullopt});
  }

  bool involution(int i) const {
    auto o = p.generator_orders[static_cast<std::size_t>(i)];
    return o && *o == 2;
  }

  /// Coxeter-type relation of braid length m between a and b (0-based).
  void coxeter(int a, int b, int m, bool draw = true) {
    Relation r;
    r.kind = RelationKind::Coxeter;
    r.pair = BraidPair{a, b, m};
    if (involution(a) && involution(b)) {
      r.lhs = (Word::generator(a) * Word::generator(b)).pow(m);
    } else {
      r.lhs = alternating(a, b, m);
      r.rhs = alternating(b, a, m);
    }
    p.relations.push_back(std::move(r));
    if (!draw || m == 2) return;
    Lace l = m == 3 ? Lace::Simple : m == 4 ? Lace::Double : m == 6 ? Lace::Triple : Lace::Simple;
    p.diagram.edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), l, m});
  }

  void infinity_edge(int a, int b) {
    p.diagram.edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), Lace::Infinity, 0});
  }

  void relation(Word lhs, Word rhs, RelationKind kind) {
    p.relations.push_back({std::move(lhs), std::move(rhs), kind, std::nullopt});
  }

  void extra(Word base, int order) {
    p.extra_order_relation = ExtraOrderRelation{base, order};
    p.relations.push_back({base.pow(order), Word(), RelationKind::ExtraOrder, std::nullopt});
  }
};

/// Word from 1-based signed generator indices.
inline Word ws(std::initializer_list<int> idx) {
  std::vector<LetterCode> c(idx.begin(), idx.end());
  return Word(c);
}

inline Word ws(const std::vector<int>& idx) {
  std::vector<LetterCode> c(idx.begin(), idx.end());
  return Word(c);
}

}  // namespace crysref::detail
