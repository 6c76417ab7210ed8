#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "permeq/engine.hpp"

using namespace permeq;

namespace {

Permutation P(const char* s) { return Permutation::from_string(s); }

// Independent partition: repeated BFS from the lowest unvisited rank.
std::vector<uint64_t> bfs_sorted_sizes(int n, const ReplacementPartition& Pp, Mode mode) {
    std::vector<char> seen(factorial(n), 0);
    std::vector<uint64_t> sizes;
    for (uint64_t r = 0; r < factorial(n); ++r) {
        if (seen[r]) continue;
        const auto members = eq_class(unrank(n, r), Pp, mode);
        for (const Permutation& q : members) seen[rank(q).index] = 1;
        sizes.push_back(members.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("classes: known small counts") {
    CHECK(classes(4, ReplacementPartition::preset("P4"), Mode::General).class_count == 10);
    CHECK(classes(5, ReplacementPartition::preset("P2"), Mode::General).class_count == 42);
    CHECK(classes(6, ReplacementPartition::preset("P3"), Mode::General).class_count == 32);

    const auto s = classes(3, ReplacementPartition::preset("P3"), Mode::AdjPositions);
    CHECK(s.class_count == 4);
    CHECK(s.sorted_sizes() == std::vector<uint64_t>{1, 1, 1, 3});
    CHECK(s.representative_ranks.front() == 0);
    CHECK(std::is_sorted(s.representative_ranks.begin(), s.representative_ranks.end()));
}

TEST_CASE("classes: sizes partition n!") {
    for (const std::string preset : {"P1", "P4", "P7", "PK"}) {
        const auto& Pp = ReplacementPartition::preset(preset);
        for (Mode mode : {Mode::General, Mode::AdjPositions, Mode::AdjBoth}) {
            const auto s = classes(6, Pp, mode);
            CHECK(s.class_sizes.size() == s.class_count);
            CHECK(s.representative_ranks.size() == s.class_count);
            CHECK(std::accumulate(s.class_sizes.begin(), s.class_sizes.end(),
                                  uint64_t{0}) == factorial(6));
        }
    }
}

TEST_CASE("classes agrees with BFS closure") {
    for (const std::string preset : {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "PK"}) {
        const auto& Pp = ReplacementPartition::preset(preset);
        for (Mode mode :
             {Mode::General, Mode::AdjPositions, Mode::AdjBoth, Mode::AdjValues}) {
            CHECK(classes(5, Pp, mode).sorted_sizes() == bfs_sorted_sizes(5, Pp, mode));
        }
    }
}

TEST_CASE("eq_class and class_size") {
    const auto& P4 = ReplacementPartition::preset("P4");
    const auto& P5 = ReplacementPartition::preset("P5");

    const auto cls = eq_class(Permutation::identity(5), P4, Mode::General);
    CHECK(cls.size() == 24);
    CHECK(std::is_sorted(cls.begin(), cls.end()));
    CHECK(std::find(cls.begin(), cls.end(), P("54321")) != cls.end());
    CHECK(class_size(Permutation::identity(5), P4, Mode::General) == 24);

    CHECK(eq_class(P("3412"), P5, Mode::General) == std::vector<Permutation>{P("3412")});
    // at n = 5 everything under P5 collapses to a single general class
    CHECK(class_size(P("25314"), P5, Mode::General) == factorial(5));

    CHECK(identity_class_size(5, ReplacementPartition::preset("P1"), Mode::AdjBoth) == 5);
    CHECK(identity_class_size(5, ReplacementPartition::preset("P3"), Mode::AdjPositions)
          == 35);
    CHECK(identity_class_size(7, P4, Mode::General) == 5040);
}

TEST_CASE("reachable") {
    const auto& P4 = ReplacementPartition::preset("P4");

    const auto self = reachable(P("2413"), P("2413"), P4, Mode::General);
    REQUIRE(self.has_value());
    CHECK(self->steps.empty());

    const auto path = reachable(Permutation::identity(7), P("7216543"), P4,
                                Mode::General);
    REQUIRE(path.has_value());
    CHECK(path->steps.size() == 3);
    Permutation cur = Permutation::identity(7);
    for (const WitnessStep& step : path->steps) {
        CHECK(step.perm == cur);
        CHECK(is_legal_move(cur, step.move, P4, Mode::General));
        cur = apply_move(cur, step.move);
    }
    CHECK(cur == P("7216543"));

    // 132 admits no P4 move at all
    CHECK_FALSE(reachable(P("123"), P("132"), P4, Mode::General).has_value());

    // shortest: one direct 123 -> 321 move suffices
    const auto one = reachable(P("123"), P("321"), P4, Mode::General);
    REQUIRE(one.has_value());
    CHECK(one->steps.size() == 1);
}

TEST_CASE("determinism across thread counts") {
    const auto& P5 = ReplacementPartition::preset("P5");
    EngineOptions one, two, four;
    one.threads = 1;
    two.threads = 2;
    four.threads = 4;
    const std::string a = classes(6, P5, Mode::General, one).to_json();
    const std::string b = classes(6, P5, Mode::General, two).to_json();
    const std::string c = classes(6, P5, Mode::General, four).to_json();
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("resource guards") {
    EngineOptions tiny;
    tiny.slot_budget = 10;
    CHECK_THROWS_AS(classes(5, ReplacementPartition::preset("P1"), Mode::General, tiny),
                    TooLarge);
    EngineOptions opts;
    CHECK_THROWS_AS(
        classes(opts.max_n_general + 1, ReplacementPartition::preset("P1"),
                Mode::General, opts),
        TooLarge);
}
