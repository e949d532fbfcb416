#pragma once

#include <utility>
#include <vector>

#include "etcs/algebraic.hpp"
#include "etcs/matrix.hpp"

namespace etcs {

// Evaluation mode for the angle pipeline: exact rational arithmetic by
// default; optionally a certified floating-point fallback for inertia
// computations with the given decision tolerance.
struct EvalMode {
    bool exact = true;
    double tolerance = 1e-9;
};

// Throws unless gram is symmetric with even diagonal, non-degenerate, and of
// signature (1, rank-1).
void validate_polarising(const RatMat& gram);

// Orthogonal projection of the lattice span onto the sublattice spanned by
// the given coordinate block, with respect to the bilinear form gram.
// The block must be non-degenerate.
RatMat projection_onto_block(const RatMat& gram, const std::vector<size_t>& block);

// Reflection fixing the block and negating its orthogonal complement:
// 2 * projection - identity.
RatMat reflection_in_block(const RatMat& gram, const std::vector<size_t>& block);

// Primitive integer characteristic polynomial (content 1, positive lead).
RatPoly char_poly(const RatMat& m);

// Cosine spectrum of a polynomial whose roots must lie on the unit circle:
// entries (cos, multiplicity), where cos = +-1 carries the algebraic
// multiplicity of the eigenvalue +-1 and interior cosines carry the
// multiplicity of the conjugate eigenvalue pair. Sorted by descending cosine.
struct CosineSpectrum {
    std::vector<std::pair<RealAlgebraic, unsigned>> entries;
};

CosineSpectrum unit_circle_angles(const RatPoly& p);

// Floating-point congruence inertia with pivot certification: errors when a
// pivot decision falls within tolerance of zero.
Inertia numeric_inertia(const RatMat& gram, double tolerance);

// Inertia dispatcher used by the angle pipeline.
Inertia inertia_in_mode(const RatMat& gram, const EvalMode& mode);

} // namespace etcs
