#pragma once

#include <array>

#include "ghznl/bounds.hpp"
#include "ghznl/certifier.hpp"

namespace ghznl::fixtures {

// Reference state sets. Names follow the published data they reproduce:
// sN is the N-state set, l16 the product of one four-value square.
StateSet ghz_basis();  // all eight basis vectors, one level
StateSet s5();         // indices 1..5, one level
StateSet s8();         // the minimal two-level set inside s10
StateSet s10();        // s5 extended by the {0,7} pair
StateSet s16();        // s8 extended by the {0,7} pair
StateSet quad_square(const std::array<int, 4>& q);  // q x q, two levels
StateSet l16();        // quad_square({0,7,3,4})

// 26 pairwise-orthogonal weight-2 states with local dimension 3; beats the
// 27/2 counting bound at 14 states.
GhzLikeSet n26();

// Reference certificates: values 4/5, 4/5, 3/5 for s5 and s10 (the latter
// lifted level-wise), and 7/8, 7/8, 3/4 for s8.
Certificate s5_certificate(Bipartition cut);
Certificate s8_certificate(Bipartition cut);
Certificate s10_certificate(Bipartition cut);

}  // namespace ghznl::fixtures
