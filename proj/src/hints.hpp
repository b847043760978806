#pragma once

#include "crysref/prover.hpp"

namespace crysref::hints {

struct Context {
  const Presentation& source;
  const Presentation& target;
  const GeneratorMap& map;
};

HintBook braid_c_forward(int n, const Context& cx);
HintBook braid_c_backward(int n, const Context& cx);
HintBook braid_a_forward(int n, const Context& cx);
HintBook braid_a_backward(int n, const Context& cx);

/// Blocks "rel: lhs = rhs" followed by one chain word per line; "chain: name" starts a
/// named chain that is not attached to a relation.
HintBook parse_book(const std::string& name, const std::string& text);

}  // namespace crysref::hints
