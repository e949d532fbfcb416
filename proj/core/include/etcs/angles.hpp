#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etcs/angle.hpp"
#include "etcs/lattice.hpp"

namespace etcs {

// Lattice data of one extra-twisted gluing: the polarising sublattices N+ and
// N- sit as the leading and trailing coordinate blocks of a common even
// lattice W, k+/k- are the orders of the circle quotients on the two sides,
// and theta is the gluing angle as a fraction of pi.
struct Configuration {
    std::string name;
    unsigned k_plus = 1;
    unsigned k_minus = 1;
    Rat theta = make_rat(Int(1), Int(2));
    size_t rank_plus = 0;
    size_t rank_minus = 0;
    RatMat gram;
    // nu_bar invariants of the two halves; required when the matching k
    // exceeds 2, provably zero otherwise
    std::optional<Rat> nu_bar_plus;
    std::optional<Rat> nu_bar_minus;
};

std::vector<size_t> plus_block(const Configuration& cfg);
std::vector<size_t> minus_block(const Configuration& cfg);

// Rejects anything that is not a legal configuration: gram must be an
// integer symmetric even-diagonal matrix of size rank_plus + rank_minus, each
// block non-degenerate of signature (1, rank-1), the whole form of positive
// index at most 3 and negative index at most 19, theta strictly between 0 and
// pi, and theta one of pi/6, pi/4, pi/3, pi/2, 2pi/3, 3pi/4, 5pi/6 whenever
// both quotient orders are at most 2.
void validate_configuration(const Configuration& cfg);

// M = A+ A- where A is the reflection fixing the block and negating its
// orthogonal complement. Requires the blocks and the whole span to be
// non-degenerate; does not enforce the remaining configuration invariants.
RatMat composite_isometry(const Configuration& cfg);

// 3 angles on the positive side, 19 on the negative side.
struct AngleSpectrum {
    std::vector<ExactAngle> alpha_plus;
    std::vector<ExactAngle> alpha_minus;
};

// The eigenvalue lists of M split across the inertia of W: rotation by +-phi
// on a plane contributes the conjugate pair to alpha+ when the plane is
// positive definite for W and to alpha- when negative definite, eigenvalue +1
// contributes zeros and -1 contributes pi, split the same way. Unused
// positive slots (3 - p_W) and negative slots (19 - n_W) are padded with
// zeros.
AngleSpectrum configuration_angles(const Configuration& cfg, const EvalMode& mode = {});

// Exact eigenvalue multisets of the composed projections: on N+ the operator
// is G+^-1 C G-^-1 C^T and on N- it is G-^-1 C^T G+^-1 C, where C is the
// cross-pairing block. Every eigenvalue is (1 + cos phi)/2 for an angle phi
// between the sublattices, so the values land in [0, 1].
struct ProjectionSpectra {
    std::vector<std::pair<RealAlgebraic, unsigned>> on_plus;
    std::vector<std::pair<RealAlgebraic, unsigned>> on_minus;
};

ProjectionSpectra angles_via_projections(const Configuration& cfg);

// Cross-checks the two routes to the angle data: strips one eigenvalue
// (1 + cos phi)/2 from each side's projection spectrum per conjugate angle
// pair, one 0 per pi, and requires the remaining eigenvalues to be exactly 1
// in the count matching the honest zeros of the spectrum (padding excluded).
// Throws on any mismatch.
void check_route_equivalence(const Configuration& cfg, const EvalMode& mode = {});

// Result of testing alpha+ against the multiset {0, 2 theta, -2 theta}
// demanded by the declared gluing angle.
struct MatchingCheck {
    bool pass = false;
    AngleSpectrum spectrum;
    std::vector<ExactAngle> expected;
    std::string message;
};

MatchingCheck check_matching_compatibility(const Configuration& cfg, const EvalMode& mode = {});

// Same check, but throws the incompatibility as an error and hands back the
// computed spectrum on success.
AngleSpectrum require_matching_compatibility(const Configuration& cfg, const EvalMode& mode = {});

} // namespace etcs
