#pragma once

#include <cstdint>
#include <optional>

#include "vra/core.hpp"

namespace vra {

struct OracleOptions {
    // Decision grid the oracle enumerates; defaults to the instance's space.
    std::optional<ActionSpace> grid;
    // Refusal cap on the effective joint search space (product over slots of
    // the deduplicated joint action counts).
    double cap = 1e7;
    // Sound branch-and-bound pruning; disable to force the plain exhaustive
    // walk (used to cross-check the pruned search in tests).
    bool prune = true;
};

struct OracleResult {
    int best_objective = 0;
    Assignment best;
    Plan best_plan;
    uint64_t nodes = 0;
    double joint_space = 0.0;
};

// Exhaustive maximization of delivered pairs over per-slot joint discrete
// decisions. Exact within the grid. Throws std::runtime_error when the
// search space exceeds the cap.
OracleResult brute_force_oracle(const VraInstance& inst, const OracleOptions& opt = {});

}  // namespace vra
