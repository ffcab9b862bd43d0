#pragma once

#include "heckerep/exactnum/polynomial.hpp"

namespace heckerep {

// d_r(g), the dimension of the level-r TQFT space of a closed genus-g surface, by the
// Verlinde sine sum evaluated exactly in Q(zeta_{r+2}). Throws NotInteger if the exact
// value is not an integer.
Integer verlinde_dim(int r, int g);

}  // namespace heckerep
