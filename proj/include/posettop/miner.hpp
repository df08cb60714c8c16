#pragma once

#include <cstdint>
#include <vector>

#include "posettop/cubical.hpp"
#include "posettop/poset.hpp"
#include "posettop/snf.hpp"

namespace posettop {

/// Per-degree cube vs simplicial Betti/torsion comparison.
struct HomologyComparison {
    std::vector<HomologyGroup> cube;
    std::vector<HomologyGroup> simpl;
    std::vector<int> mismatch_degrees;

    bool mismatch() const { return !mismatch_degrees.empty(); }
};

HomologyComparison compare_homologies(const Poset& P, int max_dim,
                                      const EnumerationCaps& caps = {});

struct MineConfig {
    int trials = 100;
    int size = 6;
    double density = 0.35;
    std::uint64_t seed = 0;
    int max_dim = 2;
    EnumerationCaps caps{};
    int threads = 1;
    int shrink_budget = 200;  // mismatch re-checks allowed during shrinking
};

struct MineFinding {
    int trial = 0;
    Poset original;
    Poset shrunk;
    HomologyComparison comparison;  // of the shrunk poset
};

struct MineReport {
    std::vector<MineFinding> findings;  // ordered by trial index
    int trials = 0;
    int skipped_cap = 0;  // trials abandoned on CapExceeded
};

/// Random-poset discrepancy miner. Trial t draws random_poset(size, density,
/// mix64(seed ^ t)); mismatches are shrunk by beat-point removal then greedy
/// element deletion, re-checking the mismatch after every step. Output is
/// deterministic in (config, seed) and independent of the thread count.
MineReport mine(const MineConfig& config);

}  // namespace posettop
