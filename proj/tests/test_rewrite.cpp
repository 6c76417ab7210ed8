#include <doctest.h>

#include <algorithm>
#include <map>
#include <tuple>

#include "permeq/rewrite.hpp"

using namespace permeq;

namespace {

Permutation P(const char* s) { return Permutation::from_string(s); }

const std::vector<Mode> kAllModes = {Mode::General, Mode::AdjPositions, Mode::AdjBoth,
                                     Mode::AdjValues};

// Exhaustive oracle: scan every increasing k-tuple and keep the ones the
// mode admits.  AdjValues keeps tuples whose values form a consecutive
// run covering all of it.
std::vector<std::vector<int>> occurrences_oracle(const Permutation& p, const Pattern& pat,
                                                 Mode mode) {
    const int n = p.size();
    const int k = pat.size();
    std::vector<std::vector<int>> out;
    std::vector<int> t;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(t.size()) == k) {
            std::vector<int> vals;
            for (int i : t) vals.push_back(p.at(i));
            if (standardize(vals) != pat) return;
            const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
            const bool pos_adj = t.back() - t.front() == k - 1;
            const bool val_adj = *hi - *lo == k - 1;
            bool keep = true;
            if (mode == Mode::AdjPositions) keep = pos_adj;
            if (mode == Mode::AdjBoth) keep = pos_adj && val_adj;
            if (mode == Mode::AdjValues) keep = val_adj;
            if (keep) out.push_back(t);
            return;
        }
        for (int i = next; i <= n; ++i) {
            t.push_back(i);
            self(self, i + 1);
            t.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("mode names") {
    CHECK(mode_name(Mode::AdjBoth) == "doubly");
    CHECK(parse_mode("values") == Mode::AdjValues);
    CHECK_THROWS_AS(parse_mode("bogus"), InvalidArgument);
}

TEST_CASE("partition parsing") {
    const auto& P3 = ReplacementPartition::preset("P3");
    CHECK(P3.k() == 3);
    CHECK(P3.spec() == "123,132,213");
    CHECK(P3.block_index(P("123")) == P3.block_index(P("213")));
    CHECK(P3.block_index(P("321")) == -1);
    CHECK(P3.block_index(P("12")) == -1);

    const auto PK = ReplacementPartition::parse("213,231|132,312");
    CHECK(PK.blocks().size() == 2);
    CHECK(PK.spec() == "132,312|213,231");
    CHECK(PK.spec() == ReplacementPartition::preset("PK").spec());
    CHECK(PK.block_index(P("213")) == PK.block_index(P("231")));
    CHECK(PK.block_index(P("213")) != PK.block_index(P("132")));
    CHECK(PK.block_index(P("123")) == -1);

    CHECK(ReplacementPartition::preset_names().size() == 8);
    CHECK_THROWS_AS(ReplacementPartition::preset("P9"), PartitionSpecError);
    CHECK_THROWS_AS(ReplacementPartition::parse("123,321|123,132"), PartitionSpecError);
    CHECK_THROWS_AS(ReplacementPartition::parse("12,123"), PartitionSpecError);
    CHECK_THROWS_AS(ReplacementPartition::parse("123"), PartitionSpecError);
    CHECK_THROWS_AS(ReplacementPartition::parse("1,21"), PartitionSpecError);
    CHECK_THROWS_AS(ReplacementPartition::parse("abc,123"), PartitionSpecError);
    CHECK_THROWS_AS(ReplacementPartition::parse(""), PartitionSpecError);
}

TEST_CASE("occurrences examples") {
    CHECK(occurrences(P("7214563"), P("123"), Mode::AdjPositions) ==
          std::vector<std::vector<int>>{{3, 4, 5}, {4, 5, 6}});
    CHECK(occurrences(P("1234"), P("123"), Mode::AdjBoth) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 4}});
    CHECK(occurrences(P("2413"), P("213"), Mode::AdjValues) ==
          std::vector<std::vector<int>>{{1, 3, 4}});
    CHECK(occurrences(P("2413"), P("132"), Mode::AdjValues) ==
          std::vector<std::vector<int>>{{1, 2, 4}});
    CHECK(occurrences(P("321"), P("123"), Mode::General).empty());
    CHECK(occurrences(P("12"), P("123"), Mode::General).empty());
    CHECK(occurrences(P("1234"), P("123"), Mode::General).size() == 4);
}

TEST_CASE("occurrences against exhaustive oracle") {
    const std::vector<Pattern> pats = {P("123"), P("132"), P("213"), P("231"),
                                       P("312"), P("321")};
    for (int n = 3; n <= 6; ++n) {
        bool ok = true;
        for (uint64_t r = 0; r < factorial(n); ++r) {
            const Permutation p = unrank(n, r);
            for (const Pattern& pat : pats)
                for (Mode mode : kAllModes)
                    if (occurrences(p, pat, mode) != occurrences_oracle(p, pat, mode))
                        ok = false;
        }
        CHECK(ok);
    }
}

TEST_CASE("apply_move") {
    CHECK(apply_move(P("1234"), Move{{1, 2, 3}, P("123"), P("321")}) == P("3214"));
    CHECK(apply_move(P("1274563"), Move{{2, 4, 6}, P("123"), P("321")}) == P("1674523"));
    // to == from leaves the input unchanged
    CHECK(apply_move(P("2413"), Move{{1, 2, 4}, P("132"), P("132")}) == P("2413"));
    // the moved window always keeps its value multiset
    CHECK(apply_move(P("52341"), Move{{2, 3, 4}, P("123"), P("213")}) == P("53241"));

    CHECK_THROWS_AS(apply_move(P("1234"), Move{{1, 2, 3}, P("321"), P("123")}),
                    IllegalMove);
    CHECK_THROWS_AS(apply_move(P("1234"), Move{{3, 2, 1}, P("123"), P("321")}),
                    IllegalMove);
    CHECK_THROWS_AS(apply_move(P("1234"), Move{{2, 3, 5}, P("123"), P("321")}),
                    IllegalMove);
    CHECK_THROWS_AS(apply_move(P("1234"), Move{{1, 2}, P("123"), P("321")}), IllegalMove);
}

TEST_CASE("is_legal_move") {
    const auto& P4 = ReplacementPartition::preset("P4");
    CHECK(is_legal_move(P("1234"), Move{{1, 2, 3}, P("123"), P("321")}, P4,
                        Mode::General));
    CHECK(is_legal_move(P("1234"), Move{{1, 2, 4}, P("123"), P("321")}, P4,
                        Mode::General));
    // positions must be consecutive in the adjacent regime
    CHECK_FALSE(is_legal_move(P("1234"), Move{{1, 2, 4}, P("123"), P("321")}, P4,
                              Mode::AdjPositions));
    // 132 sits in a singleton block of P4
    CHECK_FALSE(is_legal_move(P("1234"), Move{{1, 2, 3}, P("123"), P("132")}, P4,
                              Mode::General));
    // no-op replacements are not moves
    CHECK_FALSE(is_legal_move(P("1234"), Move{{1, 2, 3}, P("123"), P("123")}, P4,
                              Mode::General));
    // from_pattern must match what is actually there
    CHECK_FALSE(is_legal_move(P("4321"), Move{{1, 2, 3}, P("123"), P("321")}, P4,
                              Mode::General));
}

TEST_CASE("neighbors examples") {
    const auto& P4 = ReplacementPartition::preset("P4");
    const auto& P5 = ReplacementPartition::preset("P5");
    const auto& PK = ReplacementPartition::preset("PK");

    CHECK(neighbors(P("123"), P4, Mode::General) == std::vector<Permutation>{P("321")});
    CHECK(neighbors(P("3412"), P5, Mode::General).empty());
    CHECK(neighbors(Permutation::identity(5), PK, Mode::AdjPositions).empty());
    CHECK(neighbors(P("12"), P4, Mode::General).empty());  // k > n

    // identity under P1, doubly: every length-3 window is a 123 -> 132 move
    const auto ns = neighbors(Permutation::identity(4),
                              ReplacementPartition::preset("P1"), Mode::AdjBoth);
    CHECK(ns == std::vector<Permutation>{P("1243"), P("1324")});
}

TEST_CASE("neighbor relation properties") {
    for (const std::string preset : {"P1", "P3", "P4", "P5", "P7", "PK"}) {
        const auto& Pp = ReplacementPartition::preset(preset);
        for (int n = 3; n <= 5; ++n) {
            std::map<Mode, std::vector<std::vector<Permutation>>> nbrs;
            for (Mode mode : kAllModes) {
                auto& per_rank = nbrs[mode];
                per_rank.resize(factorial(n));
                for (uint64_t r = 0; r < factorial(n); ++r)
                    per_rank[r] = neighbors(unrank(n, r), Pp, mode);
            }
            bool symmetric = true, monotone = true, conjugate = true;
            for (uint64_t r = 0; r < factorial(n); ++r) {
                const Permutation p = unrank(n, r);
                for (Mode mode : kAllModes) {
                    for (const Permutation& q : nbrs[mode][r]) {
                        const auto& back = nbrs[mode][rank(q).index];
                        if (!std::binary_search(back.begin(), back.end(), p))
                            symmetric = false;
                    }
                }
                // doubly <= adjacent <= general
                for (auto [sub, super] :
                     {std::pair{Mode::AdjBoth, Mode::AdjPositions},
                      std::pair{Mode::AdjPositions, Mode::General}}) {
                    const auto& small = nbrs[sub][r];
                    const auto& big = nbrs[super][r];
                    if (!std::includes(big.begin(), big.end(), small.begin(),
                                       small.end()))
                        monotone = false;
                }
                // values regime is the inverse image of the adjacent regime
                std::vector<Permutation> via_inverse;
                for (const Permutation& q :
                     nbrs[Mode::AdjPositions][rank(inverse(p)).index])
                    via_inverse.push_back(inverse(q));
                std::sort(via_inverse.begin(), via_inverse.end());
                if (via_inverse != nbrs[Mode::AdjValues][r]) conjugate = false;
            }
            CHECK(symmetric);
            CHECK(monotone);
            CHECK(conjugate);
        }
    }
}

TEST_CASE("for_each_move is ordered and consistent") {
    const auto& P7 = ReplacementPartition::preset("P7");
    for (uint64_t r = 0; r < factorial(5); ++r) {
        const Permutation p = unrank(5, r);
        std::vector<Move> moves;
        for_each_move(p, P7, Mode::General, [&](const Move& m, const Permutation& q) {
            CHECK(apply_move(p, m) == q);
            CHECK(is_legal_move(p, m, P7, Mode::General));
            moves.push_back(m);
        });
        const bool ordered = std::is_sorted(
            moves.begin(), moves.end(), [](const Move& a, const Move& b) {
                return std::tie(a.positions, a.to_pattern) <
                       std::tie(b.positions, b.to_pattern);
            });
        CHECK(ordered);
    }
}
