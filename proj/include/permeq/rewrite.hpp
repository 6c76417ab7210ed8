#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permeq/permutation.hpp"

namespace permeq {

// Which adjacency regime constrains a replacement.
//   General:      positions free, values free          (Eq**)
//   AdjPositions: positions consecutive                (Eq||)
//   AdjBoth:      positions and values consecutive     (Eq[])
//   AdjValues:    values consecutive; the inverse-conjugate of AdjPositions
enum class Mode { General, AdjPositions, AdjBoth, AdjValues };

std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view name);  // general|adjacent|doubly|values

// A set partition of S_k; patterns in the same block may replace one
// another.  Singleton blocks are never stored.
class ReplacementPartition {
public:
    // Preset name (P1..P7, PK) or explicit blocks: "123,321|213,231".
    static ReplacementPartition parse(std::string_view spec);
    static const ReplacementPartition& preset(std::string_view name);
    static const std::vector<std::string>& preset_names();

    int k() const { return k_; }
    const std::vector<std::vector<Pattern>>& blocks() const { return blocks_; }
    // -1 when pat sits in a singleton block
    int block_index(const Pattern& pat) const;
    const std::string& name() const { return name_; }
    // Canonical explicit form, blocks and patterns sorted.
    std::string spec() const;

private:
    int k_ = 0;
    std::vector<std::vector<Pattern>> blocks_;
    std::vector<int16_t> block_of_;  // indexed by pattern rank
    std::string name_;
};

struct Move {
    std::vector<int> positions;  // increasing, 1-based
    Pattern from_pattern;
    Pattern to_pattern;
};

// All increasing index tuples where pat occurs under the mode's
// constraints, in lexicographic order.  For AdjValues the tuple is the
// (sorted) position set of a run of consecutive values.
std::vector<std::vector<int>> occurrences(const Permutation& p, const Pattern& pat,
                                          Mode mode);

// Rearranges the values at m.positions so their standardization becomes
// m.to_pattern.  Throws IllegalMove unless the values there currently
// standardize to m.from_pattern.
Permutation apply_move(const Permutation& p, const Move& m);

// Full legality check for a move under (P, mode), including the block
// membership of both patterns.
bool is_legal_move(const Permutation& p, const Move& m, const ReplacementPartition& P,
                   Mode mode);

// Enumerates every legal move from p in lexicographic (positions,
// to-pattern rank) order.
void for_each_move(const Permutation& p, const ReplacementPartition& P, Mode mode,
                   const std::function<void(const Move&, const Permutation&)>& fn);

// All q != p reachable by one legal move, sorted.
std::vector<Permutation> neighbors(const Permutation& p, const ReplacementPartition& P,
                                   Mode mode);

}  // namespace permeq
