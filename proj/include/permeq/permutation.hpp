#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permeq/errors.hpp"

namespace permeq {

// One-line notation, values 1..n.  Fixed inline storage keeps the type
// trivially copyable; engines never need n > 16.
class Permutation {
public:
    static constexpr int kMaxN = 16;

    Permutation() = default;

    explicit Permutation(std::span<const int> values);

    static Permutation identity(int n);
    // rho_n = n, n-1, ..., 1
    static Permutation reverse_word(int n);
    // "2413" or "10,2,4,..." (comma form required for n > 9)
    static Permutation from_string(std::string_view text);

    int size() const { return n_; }
    // 1-based: value at position i
    int at(int i) const { return v_[i - 1]; }
    void set(int i, int value) { v_[i - 1] = static_cast<uint8_t>(value); }

    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        for (int i = 0; i < a.n_; ++i)
            if (a.v_[i] != b.v_[i]) return a.v_[i] <=> b.v_[i];
        return std::strong_ordering::equal;
    }

private:
    uint8_t n_ = 0;
    std::array<uint8_t, kMaxN> v_{};
};

using Pattern = Permutation;

struct Rank {
    uint64_t index = 0;
    int n = 0;
    friend bool operator==(const Rank&, const Rank&) = default;
};

uint64_t factorial(int n);

// Unique permutation of {1..k} order-isomorphic to the word.
Pattern standardize(std::span<const int> word);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

int inversions(const Permutation& p);

// Lexicographic (Lehmer-code) order; rank(identity) == 0.
Rank rank(const Permutation& p);
Permutation unrank(int n, uint64_t index);

// Maximal direct-sum splitting along the main diagonal; each reported
// block is indecomposable.
std::vector<int> block_decomposition(const Permutation& p);

bool is_indecomposable(const Permutation& p);

// Values of the right-to-left maxima, left to right (a decreasing
// subsequence; always contains n).
std::vector<int> right_to_left_maxima(const Permutation& p);

bool is_involution(const Permutation& p);

// Canonical word D(t): cycles with elements increasing inside 2-cycles,
// cycles ordered by decreasing largest element, concatenated.
Permutation involution_word(const Permutation& t);

// Inverse of involution_word: pair up the ascents of w as 2-cycles.
Permutation word_to_involution(const Permutation& w);

}  // namespace permeq

template <>
struct std::hash<permeq::Permutation> {
    size_t operator()(const permeq::Permutation& p) const noexcept {
        uint64_t h = 0xcbf29ce484222325ull;
        for (int i = 1; i <= p.size(); ++i) {
            h ^= static_cast<uint64_t>(p.at(i));
            h *= 0x100000001b3ull;
        }
        return static_cast<size_t>(h ^ p.size());
    }
};
