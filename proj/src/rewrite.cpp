#include "permeq/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace permeq {

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::General: return "general";
        case Mode::AdjPositions: return "adjacent";
        case Mode::AdjBoth: return "doubly";
        case Mode::AdjValues: return "values";
    }
    return "?";
}

Mode parse_mode(std::string_view name) {
    if (name == "general") return Mode::General;
    if (name == "adjacent") return Mode::AdjPositions;
    if (name == "doubly") return Mode::AdjBoth;
    if (name == "values") return Mode::AdjValues;
    throw InvalidArgument("unknown mode: '" + std::string(name) + "'");
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                   : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

const std::map<std::string, std::string, std::less<>> kPresetSpecs = {
    {"P1", "123,132"},
    {"P2", "123,213"},
    {"P3", "123,132,213"},
    {"P4", "123,321"},
    {"P5", "123,132,321"},
    {"P6", "123,213,321"},
    {"P7", "123,132,213,321"},
    {"PK", "213,231|132,312"},
};

}  // namespace

ReplacementPartition ReplacementPartition::parse(std::string_view spec) {
    if (auto it = kPresetSpecs.find(spec); it != kPresetSpecs.end()) {
        ReplacementPartition P = parse(it->second);
        P.name_ = it->first;
        return P;
    }

    ReplacementPartition P;
    P.name_ = std::string(spec);
    std::set<Pattern> seen;
    for (std::string_view block_text : split(spec, '|')) {
        std::vector<Pattern> block;
        for (std::string_view tok : split(block_text, ',')) {
            Pattern pat;
            try {
                pat = Pattern::from_string(tok);
            } catch (const InvalidWord& e) {
                throw PartitionSpecError("bad pattern '" + std::string(tok) +
                                         "': " + e.what());
            }
            if (pat.size() < 2)
                throw PartitionSpecError("patterns must have length >= 2");
            if (P.k_ == 0) P.k_ = pat.size();
            if (pat.size() != P.k_)
                throw PartitionSpecError("mixed pattern lengths in partition spec");
            if (!seen.insert(pat).second)
                throw PartitionSpecError("pattern " + pat.str() +
                                         " appears in more than one block");
            block.push_back(pat);
        }
        if (block.size() < 2)
            throw PartitionSpecError("each block needs at least 2 patterns");
        std::sort(block.begin(), block.end());
        P.blocks_.push_back(std::move(block));
    }
    if (P.blocks_.empty()) throw PartitionSpecError("empty partition spec");
    std::sort(P.blocks_.begin(), P.blocks_.end());

    P.block_of_.assign(factorial(P.k_), -1);
    for (size_t b = 0; b < P.blocks_.size(); ++b)
        for (const Pattern& pat : P.blocks_[b])
            P.block_of_[rank(pat).index] = static_cast<int16_t>(b);
    return P;
}

const ReplacementPartition& ReplacementPartition::preset(std::string_view name) {
    static std::map<std::string, ReplacementPartition, std::less<>> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        if (!kPresetSpecs.contains(name))
            throw PartitionSpecError("unknown preset: '" + std::string(name) + "'");
        it = cache.emplace(std::string(name), parse(name)).first;
    }
    return it->second;
}

const std::vector<std::string>& ReplacementPartition::preset_names() {
    static const std::vector<std::string> names = {"P1", "P2", "P3", "P4",
                                                   "P5", "P6", "P7", "PK"};
    return names;
}

int ReplacementPartition::block_index(const Pattern& pat) const {
    if (pat.size() != k_) return -1;
    return block_of_[rank(pat).index];
}

std::string ReplacementPartition::spec() const {
    std::string out;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += '|';
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out += ',';
            out += blocks_[b][i].str();
        }
    }
    return out;
}

namespace {

Pattern pattern_at(const Permutation& p, std::span<const int> positions) {
    std::vector<int> vals(positions.size());
    for (size_t i = 0; i < positions.size(); ++i) vals[i] = p.at(positions[i]);
    return standardize(vals);
}

bool values_consecutive(const Permutation& p, std::span<const int> positions) {
    int lo = p.size() + 1, hi = 0;
    for (int i : positions) {
        lo = std::min(lo, p.at(i));
        hi = std::max(hi, p.at(i));
    }
    return hi - lo == static_cast<int>(positions.size()) - 1;
}

// Increasing k-tuples from {1..n} in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = i + 1;
    if (k > n) return;
    while (true) {
        fn(std::span<const int>(t));
        int i = k - 1;
        while (i >= 0 && t[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
}

// Position tuples to scan for a mode (AdjValues excluded; it is windowed
// over values instead).
template <typename Fn>
void for_each_tuple(const Permutation& p, int k, Mode mode, Fn&& fn) {
    const int n = p.size();
    if (k > n) return;
    if (mode == Mode::General) {
        for_each_combination(n, k, fn);
    } else {
        std::vector<int> t(k);
        for (int start = 1; start + k - 1 <= n; ++start) {
            for (int i = 0; i < k; ++i) t[i] = start + i;
            if (mode == Mode::AdjBoth && !values_consecutive(p, t)) continue;
            fn(std::span<const int>(t));
        }
    }
}

std::vector<int> value_run_positions(const Permutation& p, int v, int k) {
    std::vector<int> t;
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) >= v && p.at(i) < v + k) t.push_back(i);
    return t;
}

}  // namespace

std::vector<std::vector<int>> occurrences(const Permutation& p, const Pattern& pat,
                                          Mode mode) {
    std::vector<std::vector<int>> out;
    const int k = pat.size();
    if (k > p.size()) return out;
    if (mode == Mode::AdjValues) {
        for (int v = 1; v + k - 1 <= p.size(); ++v) {
            std::vector<int> t = value_run_positions(p, v, k);
            if (pattern_at(p, t) == pat) out.push_back(std::move(t));
        }
        std::sort(out.begin(), out.end());
    } else {
        for_each_tuple(p, k, mode, [&](std::span<const int> t) {
            if (pattern_at(p, t) == pat) out.emplace_back(t.begin(), t.end());
        });
    }
    return out;
}

Permutation apply_move(const Permutation& p, const Move& m) {
    const size_t k = m.positions.size();
    if (static_cast<int>(k) != m.from_pattern.size() ||
        static_cast<int>(k) != m.to_pattern.size())
        throw IllegalMove("move arity mismatch");
    for (size_t i = 0; i < k; ++i) {
        if (m.positions[i] < 1 || m.positions[i] > p.size())
            throw IllegalMove("move position out of range");
        if (i && m.positions[i] <= m.positions[i - 1])
            throw IllegalMove("move positions not increasing");
    }
    if (pattern_at(p, m.positions) != m.from_pattern)
        throw IllegalMove("values at move positions do not match from_pattern");

    std::vector<int> vals(k);
    for (size_t i = 0; i < k; ++i) vals[i] = p.at(m.positions[i]);
    std::sort(vals.begin(), vals.end());
    Permutation q = p;
    for (size_t i = 0; i < k; ++i)
        q.set(m.positions[i], vals[static_cast<size_t>(m.to_pattern.at(static_cast<int>(i) + 1)) - 1]);
    return q;
}

bool is_legal_move(const Permutation& p, const Move& m, const ReplacementPartition& P,
                   Mode mode) {
    if (m.from_pattern == m.to_pattern) return false;
    // AdjValues moves act on the inverse, so block membership is checked
    // on the inverted patterns.
    const Pattern from = mode == Mode::AdjValues ? inverse(m.from_pattern) : m.from_pattern;
    const Pattern to = mode == Mode::AdjValues ? inverse(m.to_pattern) : m.to_pattern;
    const int b = P.block_index(from);
    if (b < 0 || P.block_index(to) != b) return false;
    const auto occs = occurrences(p, m.from_pattern, mode);
    return std::find(occs.begin(), occs.end(), m.positions) != occs.end();
}

void for_each_move(const Permutation& p, const ReplacementPartition& P, Mode mode,
                   const std::function<void(const Move&, const Permutation&)>& fn) {
    const int k = P.k();
    if (k > p.size()) return;

    if (mode == Mode::AdjValues) {
        std::vector<Move> moves;
        for (int v = 1; v + k - 1 <= p.size(); ++v) {
            std::vector<int> t = value_run_positions(p, v, k);
            const Pattern seen = pattern_at(p, t);
            const Pattern sigma = inverse(seen);
            const int b = P.block_index(sigma);
            if (b < 0) continue;
            for (const Pattern& tau : P.blocks()[b]) {
                if (tau == sigma) continue;
                moves.push_back(Move{t, seen, inverse(tau)});
            }
        }
        std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
            if (a.positions != b.positions) return a.positions < b.positions;
            return a.to_pattern < b.to_pattern;
        });
        for (const Move& m : moves) fn(m, apply_move(p, m));
        return;
    }

    for_each_tuple(p, k, mode, [&](std::span<const int> t) {
        const Pattern seen = pattern_at(p, t);
        const int b = P.block_index(seen);
        if (b < 0) return;
        for (const Pattern& tau : P.blocks()[b]) {
            if (tau == seen) continue;
            Move m{{t.begin(), t.end()}, seen, tau};
            fn(m, apply_move(p, m));
        }
    });
}

std::vector<Permutation> neighbors(const Permutation& p, const ReplacementPartition& P,
                                   Mode mode) {
    std::vector<Permutation> out;
    for_each_move(p, P, mode, [&](const Move&, const Permutation& q) {
        if (q != p) out.push_back(q);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace permeq
