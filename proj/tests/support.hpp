#pragma once

// Deterministic random data for the test suite: rebased copies of known
// configurations, rejection-sampled fresh ones, and Lagrangian graph pairs.

#include <optional>
#include <random>
#include <vector>

#include "etcs/angles.hpp"
#include "etcs/error.hpp"
#include "etcs/maslov.hpp"

namespace etcs::testsupport {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Product of elementary column operations: det +-1, small entries.
inline RatMat random_unimodular(size_t n, Rng& rng) {
    RatMat u = RatMat::identity(n);
    if (rand_int(rng, 0, 1) == 0)
        for (size_t i = 0; i < n; ++i) u(i, 0) = -u(i, 0);
    if (n == 1) return u;
    const int steps = static_cast<int>(rand_int(rng, 1, 5));
    for (int s = 0; s < steps; ++s) {
        const size_t i = static_cast<size_t>(rand_int(rng, 0, static_cast<long>(n) - 1));
        size_t j = static_cast<size_t>(rand_int(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const Rat t{Int(rand_int(rng, -2, 2))};
        for (size_t r = 0; r < n; ++r) u(r, j) = u(r, j) + t * u(r, i);
    }
    return u;
}

// The same configuration in a different lattice basis: congruence by a
// block-diagonal unimodular matrix. Every pipeline output must be unchanged.
inline Configuration rebased_copy(const Configuration& base, Rng& rng) {
    Configuration cfg = base;
    const size_t n = base.gram.n;
    RatMat u(n, n);
    const RatMat up = random_unimodular(base.rank_plus, rng);
    const RatMat um = random_unimodular(base.rank_minus, rng);
    for (size_t i = 0; i < base.rank_plus; ++i)
        for (size_t j = 0; j < base.rank_plus; ++j) u(i, j) = up(i, j);
    for (size_t i = 0; i < base.rank_minus; ++i)
        for (size_t j = 0; j < base.rank_minus; ++j)
            u(base.rank_plus + i, base.rank_plus + j) = um(i, j);
    cfg.gram = u.transpose() * base.gram * u;
    cfg.name = base.name + "-rebased";
    return cfg;
}

// Orthogonal blocks, both quotients trivial, gluing angle pi/2: the composite
// isometry is -identity, so the nonzero angles are all pi and the invariant
// must vanish. Half of the draws use rank 1+1, half rank 2+2.
inline Configuration random_orthogonal_config(Rng& rng) {
    Configuration cfg;
    cfg.name = "random-orthogonal";
    cfg.theta = make_rat(1, 2);
    if (rand_int(rng, 0, 1) == 0) {
        cfg.rank_plus = cfg.rank_minus = 1;
        RatMat g(2, 2);
        g(0, 0) = Rat(Int(2 * rand_int(rng, 1, 4)));
        g(1, 1) = Rat(Int(2 * rand_int(rng, 1, 4)));
        cfg.gram = g;
    } else {
        cfg.rank_plus = cfg.rank_minus = 2;
        RatMat g(4, 4);
        g(0, 0) = Rat(Int(2 * rand_int(rng, 1, 4)));
        g(1, 1) = Rat(Int(-2 * rand_int(rng, 1, 4)));
        g(2, 2) = Rat(Int(2 * rand_int(rng, 1, 4)));
        g(3, 3) = Rat(Int(-2 * rand_int(rng, 1, 4)));
        cfg.gram = g;
    }
    return cfg;
}

// One attempt at a fresh rank-2+2 configuration with small entries; nullopt
// when validation or the angle pipeline rejects the draw.
inline std::optional<Configuration> try_random_2p2(Rng& rng) {
    Configuration cfg;
    cfg.name = "random-2p2";
    cfg.theta = make_rat(1, 2);
    cfg.rank_plus = cfg.rank_minus = 2;
    RatMat g(4, 4);
    auto fill_block = [&](size_t off) {
        g(off, off) = Rat(Int(2 * rand_int(rng, -2, 2)));
        g(off + 1, off + 1) = Rat(Int(2 * rand_int(rng, -2, 2)));
        g(off, off + 1) = Rat(Int(rand_int(rng, -3, 3)));
        g(off + 1, off) = g(off, off + 1);
    };
    fill_block(0);
    fill_block(2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 2; j < 4; ++j) {
            g(i, j) = Rat(Int(rand_int(rng, -2, 2)));
            g(j, i) = g(i, j);
        }
    cfg.gram = g;
    try {
        validate_configuration(cfg);
        configuration_angles(cfg);
    } catch (const Error&) {
        return std::nullopt;
    }
    return cfg;
}

// Collects up to `want` valid draws within `max_attempts`.
inline std::vector<Configuration> random_valid_2p2(size_t want, size_t max_attempts, Rng& rng) {
    std::vector<Configuration> out;
    for (size_t attempt = 0; attempt < max_attempts && out.size() < want; ++attempt)
        if (auto cfg = try_random_2p2(rng)) out.push_back(std::move(*cfg));
    return out;
}

// Standard complex structure on R^(2m): e_j -> e_(m+j) -> -e_j.
inline SurdMat standard_gamma(size_t m) {
    SurdMat gamma(2 * m, 2 * m);
    for (size_t j = 0; j < m; ++j) {
        gamma(m + j, j) = Surd(1);
        gamma(j, m + j) = Surd(-1);
    }
    return gamma;
}

// Basis of the graph Lagrangian {(x, Sx)} for symmetric S.
inline SurdMat graph_basis(const RatMat& s) {
    const size_t m = s.n;
    SurdMat b(2 * m, m);
    for (size_t j = 0; j < m; ++j) {
        b(j, j) = Surd(1);
        for (size_t i = 0; i < m; ++i) b(m + i, j) = Surd(s(i, j));
    }
    return b;
}

inline RatMat random_symmetric(size_t m, Rng& rng) {
    RatMat s(m, m);
    for (size_t i = 0; i < m; ++i) {
        s(i, i) = Rat(Int(rand_int(rng, -3, 3)));
        for (size_t j = i + 1; j < m; ++j) {
            s(i, j) = Rat(Int(rand_int(rng, -3, 3)));
            s(j, i) = s(i, j);
        }
    }
    return s;
}

// Transverse pair of graph Lagrangians in R^(2m) with the standard metric
// and complex structure.
inline LagrangianPair random_graph_pair(size_t m, Rng& rng) {
    for (;;) {
        const RatMat s = random_symmetric(m, rng);
        const RatMat t = random_symmetric(m, rng);
        RatMat diff(m, m);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) diff(i, j) = s(i, j) - t(i, j);
        if (rank(diff) != m) continue;
        LagrangianPair pair;
        pair.metric = SurdMat::identity(2 * m);
        pair.gamma = standard_gamma(m);
        pair.basis_plus = graph_basis(s);
        pair.basis_minus = graph_basis(t);
        return pair;
    }
}

inline LagrangianPair swapped(const LagrangianPair& pair) {
    LagrangianPair out = pair;
    std::swap(out.basis_plus, out.basis_minus);
    return out;
}

} // namespace etcs::testsupport
