#include "permeq/characterizations.hpp"

#include <algorithm>
#include <map>

namespace permeq {

bool avoids(const Permutation& p, const Pattern& pat) {
    return occurrences(p, pat, Mode::General).empty();
}

Permutation p2_general_normal_form(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> is_max(static_cast<size_t>(n) + 1, false);
    for (int v : right_to_left_maxima(p)) is_max[static_cast<size_t>(v)] = true;

    std::vector<int> rest;
    for (int v = n; v >= 1; --v)
        if (!is_max[static_cast<size_t>(v)]) rest.push_back(v);

    Permutation q = p;
    size_t next = 0;
    for (int i = 1; i <= n; ++i)
        if (!is_max[static_cast<size_t>(p.at(i))]) q.set(i, rest[next++]);
    return q;
}

bool is_layered(const Permutation& p) {
    int start = 0;
    for (int len : block_decomposition(p)) {
        for (int j = 1; j <= len; ++j)
            if (p.at(start + j) != start + len - j + 1) return false;
        start += len;
    }
    return true;
}

bool p5_adjacent_admissible(const Permutation& p) {
    int pos1 = 0, pos2 = 0;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.at(i) == 1) pos1 = i;
        if (p.at(i) == 2) pos2 = i;
    }
    if (pos1 % 2 == 0) return false;
    if (p.size() >= 2 && pos2 < pos1 && pos2 % 2 == 1) return false;
    return true;
}

namespace {

void fill_exceptional(std::vector<int>& slots, std::vector<int>& avail, int pair,
                      std::set<Permutation>& out) {
    if (pair < 0) {
        out.insert(Permutation(std::span<const int>(slots)));
        return;
    }
    const int odd_pos = 2 * pair + 1, even_pos = 2 * pair + 2;
    const int smallest = avail.front();  // odd slots must take the minimum
    slots[static_cast<size_t>(odd_pos) - 1] = smallest;
    avail.erase(avail.begin());
    for (size_t i = 0; i < avail.size(); ++i) {
        const int choice = avail[i];
        slots[static_cast<size_t>(even_pos) - 1] = choice;
        avail.erase(avail.begin() + static_cast<long>(i));
        fill_exceptional(slots, avail, pair - 1, out);
        avail.insert(avail.begin() + static_cast<long>(i), choice);
    }
    avail.insert(avail.begin(), smallest);
}

}  // namespace

std::set<Permutation> p5_exceptional_set(int n) {
    if (n < 4 || n % 2 != 0)
        throw InvalidArgument("p5_exceptional_set requires even n >= 4");
    std::vector<int> slots(static_cast<size_t>(n), 0);
    std::vector<int> avail(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) avail[static_cast<size_t>(i)] = i + 1;
    std::set<Permutation> out;
    // pairs of positions (n-1, n), (n-3, n-2), ..., (1, 2), filled in
    // that order
    fill_exceptional(slots, avail, n / 2 - 1, out);
    return out;
}

bool p5_adjacent_identity_member(const Permutation& p) {
    if (!p5_adjacent_admissible(p)) return false;
    if (p.size() % 2 == 1 || p.size() < 4) return true;
    static std::map<int, std::set<Permutation>> cache;
    auto it = cache.find(p.size());
    if (it == cache.end()) it = cache.emplace(p.size(), p5_exceptional_set(p.size())).first;
    return !it->second.contains(p);
}

bool p4_adjacent_identity_member(const Permutation& p) {
    int start = 0;
    for (int len : block_decomposition(p)) {
        if (len == 1) {
            start += 1;
            continue;
        }
        if (len % 2 == 0) return false;
        std::vector<int> odd_entries;
        for (int j = 1; j <= len; ++j) {
            if (j % 2 == 0) {
                if (p.at(start + j) != start + j) return false;  // evens on diagonal
            } else {
                odd_entries.push_back(p.at(start + j));
            }
        }
        if (!avoids(standardize(odd_entries), Pattern::from_string("321"))) return false;
        start += len;
    }
    return true;
}

Permutation p3_adjacent_canonical(const Permutation& p) {
    Permutation cur = p;
    const int n = p.size();
    int start = 1;
    while (start <= n) {
        int pos = start, maxv = 0;
        for (int i = start; i <= n; ++i) {
            if (cur.at(i) > maxv) {
                maxv = cur.at(i);
                pos = i;
            }
        }
        if (pos == start) {  // the maximum is immobile: fix it as a 1-factor
            start += 1;
            continue;
        }
        // push the maximum left to position start+1 via 123->132 / 213->132,
        // each step ordering the two bypassed elements as (min, max, ...)
        while (pos > start + 1) {
            const int a = cur.at(pos - 2), b = cur.at(pos - 1);
            cur.set(pos - 2, std::min(a, b));
            cur.set(pos - 1, maxv);
            cur.set(pos, std::max(a, b));
            pos -= 1;
        }
        start += 2;  // fix the 2-factor (minimum, maximum)
    }
    return cur;
}

bool doubly_adjacent_identity_member(const Permutation& p, std::string_view preset) {
    if (!is_layered(p)) return false;
    const std::vector<int> blocks = block_decomposition(p);
    auto all_in = [&](int lo, int hi) {
        return std::all_of(blocks.begin(), blocks.end(),
                           [&](int b) { return b >= lo && b <= hi; });
    };
    if (preset == "P1") return all_in(1, 2) && blocks.front() == 1;
    if (preset == "P3")
        return all_in(1, 2) && std::find(blocks.begin(), blocks.end(), 1) != blocks.end();
    if (preset == "P4")
        return std::all_of(blocks.begin(), blocks.end(),
                           [](int b) { return b == 1 || b == 3; });
    if (preset == "P5") return all_in(1, 3) && blocks.front() != 2;
    if (preset == "P7")
        return all_in(1, 3) &&
               std::any_of(blocks.begin(), blocks.end(), [](int b) { return b % 2 == 1; });
    throw InvalidArgument("no doubly-adjacent grammar for preset '" +
                          std::string(preset) + "'");
}

namespace {

constexpr size_t kMaxMismatchExamples = 10;

using Predicate = bool (*)(const Permutation&);

// Compare eq_class(base) against a predicate sweep over S_n.
CharacterizationReport identity_class_check(int n, std::string_view preset, Mode mode,
                                            const ReplacementPartition& P,
                                            const Permutation& base, Predicate pred,
                                            const EngineOptions& opts) {
    CharacterizationReport rep;
    rep.n = n;
    rep.preset = preset;
    rep.mode = mode;

    const std::vector<Permutation> cls = eq_class(base, P, mode, opts);
    rep.engine_set_size = cls.size();
    std::set<Permutation> in_class(cls.begin(), cls.end());

    const uint64_t nf = factorial(n);
    for (uint64_t r = 0; r < nf; ++r) {
        const Permutation p = unrank(n, r);
        const bool predicted = pred(p);
        if (predicted) ++rep.predicted_set_size;
        if (predicted != in_class.contains(p) &&
            rep.mismatch_examples.size() < kMaxMismatchExamples)
            rep.mismatch_examples.push_back(p);
    }
    return rep;
}

// Compare a canonical-form map against the engine: the map must be
// constant along every edge, and its image must equal `expected_image`.
CharacterizationReport canonical_map_check(int n, std::string_view preset, Mode mode,
                                           const ReplacementPartition& P,
                                           Permutation (*canon)(const Permutation&),
                                           const std::set<Permutation>& expected_image,
                                           const EngineOptions& opts) {
    CharacterizationReport rep;
    rep.n = n;
    rep.preset = preset;
    rep.mode = mode;
    rep.engine_set_size = classes(n, P, mode, opts).class_count;
    rep.predicted_set_size = expected_image.size();

    std::set<Permutation> image;
    const uint64_t nf = factorial(n);
    for (uint64_t r = 0; r < nf; ++r) {
        const Permutation p = unrank(n, r);
        const Permutation c = canon(p);
        image.insert(c);
        for (const Permutation& q : neighbors(p, P, mode)) {
            if (canon(q) != c && rep.mismatch_examples.size() < kMaxMismatchExamples) {
                rep.mismatch_examples.push_back(p);
                break;
            }
        }
    }
    if (image != expected_image) {
        for (const Permutation& p : image)
            if (!expected_image.contains(p) &&
                rep.mismatch_examples.size() < kMaxMismatchExamples)
                rep.mismatch_examples.push_back(p);
        for (const Permutation& p : expected_image)
            if (!image.contains(p) && rep.mismatch_examples.size() < kMaxMismatchExamples)
                rep.mismatch_examples.push_back(p);
        if (rep.mismatch_examples.empty())
            rep.mismatch_examples.push_back(Permutation::identity(n));
    }
    if (image.size() != rep.engine_set_size && rep.mismatch_examples.empty())
        rep.mismatch_examples.push_back(Permutation::identity(n));
    return rep;
}

std::set<Permutation> all_123_avoiders(int n) {
    std::set<Permutation> out;
    const Pattern pat = Pattern::from_string("123");
    for (uint64_t r = 0; r < factorial(n); ++r) {
        const Permutation p = unrank(n, r);
        if (avoids(p, pat)) out.insert(p);
    }
    return out;
}

std::set<Permutation> involution_words(int n) {
    std::set<Permutation> out;
    for (uint64_t r = 0; r < factorial(n); ++r) {
        const Permutation p = unrank(n, r);
        if (is_involution(p)) out.insert(involution_word(p));
    }
    return out;
}

// Classes of {231,312,321} each hold exactly one layered permutation
// (the P3 statement transported by reversal).
CharacterizationReport layered_per_class_check(int n, std::string_view preset,
                                               const ReplacementPartition& P,
                                               const EngineOptions& opts) {
    CharacterizationReport rep;
    rep.n = n;
    rep.preset = preset;
    rep.mode = Mode::General;
    rep.engine_set_size = classes(n, P, Mode::General, opts).class_count;

    uint64_t covered = 0;
    std::set<Permutation> reps_seen;
    for (uint64_t r = 0; r < factorial(n); ++r) {
        const Permutation p = unrank(n, r);
        if (!is_layered(reverse(p))) continue;
        ++rep.predicted_set_size;
        const std::vector<Permutation> cls = eq_class(p, P, Mode::General, opts);
        if (!reps_seen.insert(cls.front()).second) {
            // a second reverse-layered permutation in an already-seen class
            if (rep.mismatch_examples.size() < kMaxMismatchExamples)
                rep.mismatch_examples.push_back(p);
            continue;
        }
        covered += cls.size();
        uint64_t layered_in_class = 0;
        for (const Permutation& q : cls)
            if (is_layered(reverse(q))) ++layered_in_class;
        if (layered_in_class != 1 && rep.mismatch_examples.size() < kMaxMismatchExamples)
            rep.mismatch_examples.push_back(p);
    }
    if (covered != factorial(n) && rep.mismatch_examples.empty())
        rep.mismatch_examples.push_back(Permutation::identity(n));
    return rep;
}

std::string canonical_key(std::string_view preset) {
    const auto& names = ReplacementPartition::preset_names();
    if (std::find(names.begin(), names.end(), preset) != names.end())
        return std::string(preset);
    return ReplacementPartition::parse(preset).spec();
}

const std::string kRhoPartition = "231,312,321";

}  // namespace

std::vector<std::pair<std::string, Mode>> characterization_registry() {
    return {
        {"P2", Mode::General},        // 123-avoiding normal forms, Catalan classes
        {"P3", Mode::General},        // one reverse-layered permutation per class
        {kRhoPartition, Mode::General},  // rho-class = indecomposables
        {"P4", Mode::AdjPositions},   // odd-block direct sums
        {"P5", Mode::AdjPositions},   // admissible minus exceptional
        {"P3", Mode::AdjPositions},   // involution words D_n
        {"P1", Mode::AdjBoth},        {"P3", Mode::AdjBoth},
        {"P4", Mode::AdjBoth},        {"P5", Mode::AdjBoth},
        {"P7", Mode::AdjBoth},
    };
}

CharacterizationReport check_characterization(int n, std::string_view preset, Mode mode,
                                              const EngineOptions& opts) {
    const std::string key = canonical_key(preset);

    if (mode == Mode::General) {
        if (key == "P2") {
            return canonical_map_check(n, key, mode, ReplacementPartition::preset("P2"),
                                       &p2_general_normal_form, all_123_avoiders(n), opts);
        }
        if (key == "P3") {
            CharacterizationReport rep = layered_per_class_check(
                n, key, ReplacementPartition::preset("P3"), opts);
            return rep;
        }
        if (key == kRhoPartition) {
            return identity_class_check(n, key, mode,
                                        ReplacementPartition::parse(kRhoPartition),
                                        Permutation::reverse_word(n),
                                        &is_indecomposable, opts);
        }
    }
    if (mode == Mode::AdjPositions) {
        if (key == "P4")
            return identity_class_check(n, key, mode, ReplacementPartition::preset("P4"),
                                        Permutation::identity(n),
                                        &p4_adjacent_identity_member, opts);
        if (key == "P5")
            return identity_class_check(n, key, mode, ReplacementPartition::preset("P5"),
                                        Permutation::identity(n),
                                        &p5_adjacent_identity_member, opts);
        if (key == "P3")
            return canonical_map_check(n, key, mode, ReplacementPartition::preset("P3"),
                                       &p3_adjacent_canonical, involution_words(n), opts);
    }
    if (mode == Mode::AdjBoth &&
        (key == "P1" || key == "P3" || key == "P4" || key == "P5" || key == "P7")) {
        static const std::map<std::string, Predicate> grammar = {
            {"P1", [](const Permutation& p) { return doubly_adjacent_identity_member(p, "P1"); }},
            {"P3", [](const Permutation& p) { return doubly_adjacent_identity_member(p, "P3"); }},
            {"P4", [](const Permutation& p) { return doubly_adjacent_identity_member(p, "P4"); }},
            {"P5", [](const Permutation& p) { return doubly_adjacent_identity_member(p, "P5"); }},
            {"P7", [](const Permutation& p) { return doubly_adjacent_identity_member(p, "P7"); }},
        };
        return identity_class_check(n, key, mode, ReplacementPartition::preset(key),
                                    Permutation::identity(n), grammar.at(key), opts);
    }
    throw Unsupported("no characterization registered for (" + key + ", " +
                      std::string(mode_name(mode)) + ")");
}

}  // namespace permeq
