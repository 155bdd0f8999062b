#pragma once

#include "tkkforge/lie.hpp"

namespace tkkforge {

// Matrix of the Chevalley-Eilenberg boundary d_n : wedge^{n+1} L -> wedge^n L,
// d_n(x_1^...^x_{n+1}) = sum_{i<j} (-1)^{i+j} [x_i,x_j]^x_1^...^x^i...^x^j...
// If graded, both sides are restricted to their degree-0 slices.
Matrix boundary_matrix(const GradedLieAlgebra& l, unsigned n, bool graded,
                       kernels::Mode mode = kernels::default_mode());

struct H2Result {
    Index dim;
    std::vector<Vec> witnesses;  // cycle representatives of nonzero classes,
                                 // in (wedge^2 L)_0 coordinates
};

// dim ker d_1|_0 - rank d_2|_0
H2Result h2_graded(const GradedLieAlgebra& l);

// Degree-0 2-cocycles modulo coboundaries with trivial coefficients k^m,
// computed from the transposed boundary matrices.
Index h2_cohomology_graded(const GradedLieAlgebra& l, Index m);

// Ungraded H_2 on the full wedge spaces; capped at total dim 24.
Index h2_ungraded(const GradedLieAlgebra& l);

}  // namespace tkkforge
