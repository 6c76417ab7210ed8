#pragma once

#include <set>
#include <string>
#include <vector>

#include "permeq/engine.hpp"

namespace permeq {

bool avoids(const Permutation& p, const Pattern& pat);

// Normal form for the general 123<->213 relation: right-to-left maxima
// stay put, everything else is sorted decreasing into the remaining
// positions.  The image is 123-avoiding.
Permutation p2_general_normal_form(const Permutation& p);

// Direct sum of decreasing permutations.
bool is_layered(const Permutation& p);

// Positional parity constraints on the values 1 and 2 (1-based indices):
// 1 sits at an odd index, and 2 never at an odd index left of 1.
bool p5_adjacent_admissible(const Permutation& p);

// The (n-1)!! isolated permutations built by the alternating filling
// rule (positions n-1, n, n-3, n-2, ..., 1, 2; odd slots take the
// smallest available element).  Even n only.
std::set<Permutation> p5_exceptional_set(int n);

// Membership in the identity class under (P5, adjacent positions):
// admissible, minus the exceptional set when n is even.
bool p5_adjacent_identity_member(const Permutation& p);

// Membership in the identity class under (P4, adjacent positions):
// direct sum of singletons and odd blocks whose block-even positions are
// fixed points and whose block-odd entries avoid 321.
bool p4_adjacent_identity_member(const Permutation& p);

// Canonical representative L(p) for (P3, adjacent positions): greedily
// push each remaining maximum as far left as the moves permit, fixing a
// 1- or 2-factor each round.  The image is the involution-word set D_n.
Permutation p3_adjacent_canonical(const Permutation& p);

// Block grammar for the doubly adjacent identity classes; preset one of
// P1, P3, P4, P5, P7 (P2/P6 follow by reverse-complement symmetry).
bool doubly_adjacent_identity_member(const Permutation& p, std::string_view preset);

struct CharacterizationReport {
    int n = 0;
    std::string preset;
    Mode mode = Mode::General;
    uint64_t predicted_set_size = 0;
    uint64_t engine_set_size = 0;
    std::vector<Permutation> mismatch_examples;

    bool success() const {
        return mismatch_examples.empty() && predicted_set_size == engine_set_size;
    }
};

// (preset, mode) pairs with a registered characterization check.
std::vector<std::pair<std::string, Mode>> characterization_registry();

// Compares the predicate- or canonical-form-defined structure against
// the brute-force engine.  Throws Unsupported for unregistered pairs.
CharacterizationReport check_characterization(int n, std::string_view preset, Mode mode,
                                              const EngineOptions& opts = {});

}  // namespace permeq
