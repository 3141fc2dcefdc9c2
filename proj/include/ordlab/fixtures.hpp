#pragma once

#include "ordlab/pl_homeo.hpp"

namespace ordlab {
namespace fixtures {

// Crossed pair on [0,1]: f fixes 0, 1/2, 1 with f > x on (0,1/2) and (1/2,1);
// g fixes only 0 and 1 with g < x inside and sends 1/2 to 3/8.
PLHomeo crossed_f();
PLHomeo crossed_g();

// Search generators alpha = f o g, beta = g o f; both have derivative 1/2
// at 0.
PLHomeo search_alpha();
PLHomeo search_beta();

// Variant of g whose interior fixed point 1/3 is not fixed by crossed_f():
// the direct pair (crossed_f, direct_g) is crossed without conjugation.
PLHomeo direct_g();

// Pair needing the conjugation branch: every fixed point of conj_g (only 0
// and 1) is fixed by conj_f, whose interior fixed set is {1/4, 5/8}; the
// bracketing point 1/4 needs three pushes by conj_g to clear 5/8.
PLHomeo conj_f();
PLHomeo conj_g();

// Steep variant of alpha used by the contraction audit: slope 2^-43 * 8 on
// the last piece, so any word ending in alpha shrinks [1-delta, 1] hard.
PLHomeo steep_alpha();

} // namespace fixtures
} // namespace ordlab
