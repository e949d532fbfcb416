#pragma once

#include <string>
#include <vector>

#include "etcs/angles.hpp"
#include "etcs/classify.hpp"
#include "etcs/lattice.hpp"

namespace etcs {

// One worked example shipped with the library: configuration data, the
// expected outputs of the angle and nu_bar pipelines, and the topological
// invariants of the resulting manifold. Expected values satisfy
// nu mod 48 == (nu_bar + 24) mod 48 with b1 = 0.
struct CatalogEntry {
    std::string id;
    Configuration config;
    AngleSpectrum expected_angles;
    Int expected_nu_bar;
    int expected_nu_mod_48 = 0;
    ManifoldInvariants manifold;
    std::string citation;
};

const std::vector<CatalogEntry>& entries();

// nullptr when no entry has that id.
const CatalogEntry* find_entry(const std::string& id);

struct VerifyReport {
    std::string id;
    bool pass = false;
    std::string message; // computed-vs-expected diff on failure, "ok" otherwise
};

// Recomputes the angle spectra, the gluing-angle compatibility check, nu_bar,
// and nu mod 48 for one entry and compares against the stored values exactly.
VerifyReport verify_entry(const CatalogEntry& entry, const EvalMode& mode = {});

// Every entry, in declaration order.
std::vector<VerifyReport> verify_all(const EvalMode& mode = {});

// Only entries whose id appears in the filter; an empty filter selects
// nothing.
std::vector<VerifyReport> verify_all(const std::vector<std::string>& filter,
                                     const EvalMode& mode = {});

// 24 * 12923/281250 - 3 * 4817/140625 evaluated exactly; equals 1. Kept as a
// closed-form reference value for a homogeneous metric whose invariant is
// known independently.
Rat berger_identity();

} // namespace etcs
