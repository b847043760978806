#pragma once

#include "crysref/prover.hpp"

namespace crysref {

/// Fundamental group of configurations on the four-punctured sphere vs Ar(C_alpha n).
struct LemmaPair {
  Presentation source;  // braid presentation
  Presentation target;  // Artin group of the crystallographic group
  GeneratorMap forward;
  GeneratorMap backward;
  HintBook forward_hints;
  HintBook backward_hints;
};

LemmaPair braid_pair_c(int n);
/// Special configurations on the torus vs Ar(A_alpha n).
LemmaPair braid_pair_a(int n);

}  // namespace crysref
