#pragma once

#include <optional>
#include <vector>

#include "permeq/rewrite.hpp"

namespace permeq {

struct EngineOptions {
    int threads = 0;                     // 0 = hardware concurrency
    uint64_t slot_budget = 400'000'000;  // refuse union-find tables above this
    int max_n_general = 10;
    int max_n_adjacent = 12;  // applies to AdjPositions / AdjBoth / AdjValues

    int max_n(Mode mode) const {
        return mode == Mode::General ? max_n_general : max_n_adjacent;
    }
};

struct ClassesSummary {
    int n = 0;
    uint64_t class_count = 0;
    // Aligned: class_sizes[i] is the size of the class whose minimum-rank
    // element is representative_ranks[i]; representatives ascending.
    std::vector<uint64_t> class_sizes;
    std::vector<uint64_t> representative_ranks;

    std::vector<uint64_t> sorted_sizes() const;  // the multiset, ascending
    std::string to_json() const;
};

// Exact partition of S_n into connected components of the move graph.
// Deterministic in (n, P, mode) regardless of thread count.
ClassesSummary classes(int n, const ReplacementPartition& P, Mode mode,
                       const EngineOptions& opts = {});

// BFS closure of p, sorted by rank.
std::vector<Permutation> eq_class(const Permutation& p, const ReplacementPartition& P,
                                  Mode mode, const EngineOptions& opts = {});

uint64_t class_size(const Permutation& p, const ReplacementPartition& P, Mode mode,
                    const EngineOptions& opts = {});

uint64_t identity_class_size(int n, const ReplacementPartition& P, Mode mode,
                             const EngineOptions& opts = {});

struct WitnessStep {
    Permutation perm;  // state before the move
    Move move;
};

struct WitnessPath {
    std::vector<WitnessStep> steps;
    Permutation target;
};

// Shortest move sequence from `from` to `to`, if connected.  Ties broken
// by lexicographic (position tuple, target pattern) order.
std::optional<WitnessPath> reachable(const Permutation& from, const Permutation& to,
                                     const ReplacementPartition& P, Mode mode,
                                     const EngineOptions& opts = {});

}  // namespace permeq
