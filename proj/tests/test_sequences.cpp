#include <doctest.h>

#include "permeq/permutation.hpp"
#include "permeq/sequences.hpp"

using namespace permeq;

namespace {

BigInt E(SequenceId id, long n) { return eval(id, n); }

uint64_t count_involutions(int n) {
    uint64_t c = 0;
    for (uint64_t r = 0; r < factorial(n); ++r)
        c += is_involution(unrank(n, r)) ? 1 : 0;
    return c;
}

}  // namespace

TEST_CASE("closed-form values") {
    CHECK(E(SequenceId::Catalan, 0) == 1);
    CHECK(E(SequenceId::Catalan, 4) == 14);
    CHECK(E(SequenceId::Catalan, 10) == 16796);
    CHECK(E(SequenceId::Pow2, 8) == 128);
    CHECK(E(SequenceId::FactorialShift, 6) == 120);
    CHECK(E(SequenceId::HalfFactorials, 7) == 144);
    CHECK(E(SequenceId::HalfFactorials, 10) == 14400);
    CHECK(E(SequenceId::CentralBinomialShift, 8) == 35);
    CHECK(E(SequenceId::CentralBinomialShift, 10) == 126);
    CHECK(E(SequenceId::DoubleFactorialOdd, -1) == 1);
    CHECK(E(SequenceId::DoubleFactorialOdd, 7) == 105);
}

TEST_CASE("recurrence values") {
    CHECK(E(SequenceId::Involutions, 6) == 76);
    CHECK(E(SequenceId::Involutions, 10) == 9496);
    CHECK(E(SequenceId::Fib, 10) == 55);
    CHECK(E(SequenceId::A000930, 10) == 28);
    CHECK(E(SequenceId::TribA000213, 7) == 31);
    CHECK(E(SequenceId::TribA000213, 10) == 193);
    CHECK(E(SequenceId::FibIverson, 10) == 88);
    CHECK(E(SequenceId::TribA000073Iverson, 10) == 273);
}

TEST_CASE("split-parity formula") {
    CHECK(E(SequenceId::P5bAdj, 3) == 3);
    CHECK(E(SequenceId::P5bAdj, 4) == 9);
    CHECK(E(SequenceId::P5bAdj, 5) == 54);
    CHECK(E(SequenceId::P5bAdj, 6) == 285);
    CHECK(E(SequenceId::P5bAdj, 7) == 2160);
    CHECK(E(SequenceId::P5bAdj, 8) == 15825);
}

TEST_CASE("involution count matches brute force") {
    for (int n = 1; n <= 8; ++n)
        CHECK(E(SequenceId::Involutions, n) == count_involutions(n));
}

TEST_CASE("catalan and central binomial identities") {
    for (long n = 1; n <= 15; ++n) {
        // (n+1) C(n) = binom(2n, n) = A(2n+1) with A(m) = C(m-1, floor((m-1)/2))
        CHECK(E(SequenceId::Catalan, n) * (n + 1) ==
              E(SequenceId::CentralBinomialShift, 2 * n + 1));
        CHECK(E(SequenceId::Fib, n) + E(SequenceId::Fib, n + 1) ==
              E(SequenceId::Fib, n + 2));
    }
    CHECK(gf_convolution_check(30));
    int bad = 0;
    CHECK(gf_convolution_check(4, &bad));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(E(SequenceId::Catalan, -1), InvalidArgument);
    CHECK_THROWS_AS(E(SequenceId::Pow2, 0), InvalidArgument);
    CHECK_THROWS_AS(E(SequenceId::P5bAdj, 2), InvalidArgument);
    CHECK_THROWS_AS(E(SequenceId::DoubleFactorialOdd, 4), InvalidArgument);
    CHECK_THROWS_AS(gf_convolution_check(3), InvalidArgument);
}

TEST_CASE("published table access") {
    const auto& p7_adj = figure1_expected("P7", "adjacent", TableKind::Classes);
    CHECK(p7_adj.size() == 8);  // n = 3..10
    CHECK(p7_adj.front() == 3);
    CHECK(p7_adj.back() == 57);

    const auto& p3_id = figure1_expected("P3", "adjacent", TableKind::Identity);
    CHECK(p3_id == std::vector<BigInt>{3, 7, 35, 135, 945, 5193});

    CHECK(figure1_expected("P4", "general", TableKind::Classes) ==
          std::vector<BigInt>{5, 10, 3, 1, 1, 1});
    CHECK_THROWS_AS(figure1_expected("PK", "general", TableKind::Classes),
                    NoPublishedData);
}

TEST_CASE("formula comparands cover the gray cells") {
    CHECK(formula_value("P1", "general", TableKind::Classes, 6) ==
          E(SequenceId::Catalan, 6));
    CHECK(formula_value("P2", "adjacent", TableKind::Identity, 9) ==
          E(SequenceId::HalfFactorials, 9));
    CHECK(formula_value("P6", "doubly", TableKind::Identity, 8) ==
          E(SequenceId::TribA000213, 8));
    CHECK_FALSE(formula_value("P7", "adjacent", TableKind::Classes, 6).has_value());
    CHECK_FALSE(formula_value("P4", "general", TableKind::Classes, 6).has_value());
}

TEST_CASE("published literals agree with their closed forms") {
    for (const std::string preset : {"P1", "P2", "P3", "P4", "P5", "P6", "P7"}) {
        for (const std::string mode : {"general", "adjacent", "doubly"}) {
            for (TableKind kind : {TableKind::Classes, TableKind::Identity}) {
                const auto& published = figure1_expected(preset, mode, kind);
                for (size_t i = 0; i < published.size(); ++i) {
                    const int n = static_cast<int>(i) + 3;
                    const auto f = formula_value(preset, mode, kind, n);
                    if (!f) continue;
                    // known defective published cell (flagged elsewhere)
                    if (preset == "P4" && mode == "adjacent" &&
                        kind == TableKind::Classes && n == 8)
                        continue;
                    CHECK(*f == published[i]);
                }
            }
        }
    }
}
