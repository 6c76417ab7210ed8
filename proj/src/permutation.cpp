#include "permeq/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace permeq {

Permutation::Permutation(std::span<const int> values) {
    const size_t n = values.size();
    if (n < 1 || n > kMaxN)
        throw InvalidWord("permutation length must be in 1.." + std::to_string(kMaxN));
    std::array<bool, kMaxN + 1> seen{};
    for (int x : values) {
        if (x < 1 || x > static_cast<int>(n) || seen[x])
            throw InvalidWord("not a permutation of {1.." + std::to_string(n) + "}");
        seen[x] = true;
    }
    n_ = static_cast<uint8_t>(n);
    for (size_t i = 0; i < n; ++i) v_[i] = static_cast<uint8_t>(values[i]);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(v);
}

Permutation Permutation::reverse_word(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(v);
}

Permutation Permutation::from_string(std::string_view text) {
    std::vector<int> v;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string_view tok = text.substr(pos, next == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : next - pos);
            int x = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw InvalidWord("bad permutation token: '" + std::string(tok) + "'");
            v.push_back(x);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw InvalidWord("bad permutation digit: '" + std::string(1, c) + "'");
            v.push_back(c - '0');
        }
    }
    return Permutation(v);
}

std::string Permutation::str() const {
    std::string out;
    if (n_ <= 9) {
        for (int i = 0; i < n_; ++i) out += static_cast<char>('0' + v_[i]);
    } else {
        for (int i = 0; i < n_; ++i) {
            if (i) out += ',';
            out += std::to_string(v_[i]);
        }
    }
    return out;
}

uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

Pattern standardize(std::span<const int> word) {
    const size_t k = word.size();
    if (k < 1 || k > Permutation::kMaxN) throw InvalidWord("word length out of range");
    std::vector<int> out(k);
    for (size_t i = 0; i < k; ++i) {
        int r = 1;
        for (size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            if (word[j] == word[i]) throw InvalidWord("duplicate entries in word");
            if (word[j] < word[i]) ++r;
        }
        out[i] = r;
    }
    return Pattern(std::span<const int>(out));
}

Permutation inverse(const Permutation& p) {
    Permutation q = p;
    for (int i = 1; i <= p.size(); ++i) q.set(p.at(i), i);
    return q;
}

Permutation reverse(const Permutation& p) {
    Permutation q = p;
    const int n = p.size();
    for (int i = 1; i <= n; ++i) q.set(i, p.at(n + 1 - i));
    return q;
}

Permutation complement(const Permutation& p) {
    Permutation q = p;
    const int n = p.size();
    for (int i = 1; i <= n; ++i) q.set(i, n + 1 - p.at(i));
    return q;
}

int inversions(const Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (p.at(i) > p.at(j)) ++count;
    return count;
}

Rank rank(const Permutation& p) {
    const int n = p.size();
    uint64_t idx = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j <= n; ++j)
            if (p.at(j) < p.at(i)) ++smaller;
        idx += static_cast<uint64_t>(smaller) * factorial(n - i);
    }
    return Rank{idx, n};
}

Permutation unrank(int n, uint64_t index) {
    if (n < 1 || n > Permutation::kMaxN)
        throw RankOutOfRange("n out of range");
    if (index >= factorial(n))
        throw RankOutOfRange("rank index " + std::to_string(index) + " >= n!");
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> out;
    out.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        const uint64_t f = factorial(i);
        const auto d = static_cast<size_t>(index / f);
        index %= f;
        out.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<long>(d));
    }
    return Permutation(out);
}

std::vector<int> block_decomposition(const Permutation& p) {
    std::vector<int> lengths;
    int prefix_max = 0, start = 0;
    for (int i = 1; i <= p.size(); ++i) {
        prefix_max = std::max(prefix_max, p.at(i));
        if (prefix_max == i) {  // {1..i} occupies positions 1..i: split here
            lengths.push_back(i - start);
            start = i;
        }
    }
    return lengths;
}

bool is_indecomposable(const Permutation& p) {
    return block_decomposition(p).size() == 1;
}

std::vector<int> right_to_left_maxima(const Permutation& p) {
    std::vector<int> out;
    int suffix_max = 0;
    for (int i = p.size(); i >= 1; --i) {
        if (p.at(i) > suffix_max) {
            suffix_max = p.at(i);
            out.push_back(p.at(i));
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

bool is_involution(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(p.at(i)) != i) return false;
    return true;
}

Permutation involution_word(const Permutation& t) {
    if (!is_involution(t)) throw NotAnInvolution("involution_word: t*t != identity");
    std::vector<int> word;
    // cycles ordered by decreasing largest element; 2-cycles written increasing
    for (int top = t.size(); top >= 1; --top) {
        const int partner = t.at(top);
        if (partner == top)
            word.push_back(top);
        else if (partner < top) {
            word.push_back(partner);
            word.push_back(top);
        }
        // partner > top: already emitted as part of the larger element's cycle
    }
    return Permutation(word);
}

Permutation word_to_involution(const Permutation& w) {
    std::vector<int> map(static_cast<size_t>(w.size()) + 1, 0);
    int i = 1;
    while (i <= w.size()) {
        if (i < w.size() && w.at(i) < w.at(i + 1)) {
            map[static_cast<size_t>(w.at(i))] = w.at(i + 1);
            map[static_cast<size_t>(w.at(i + 1))] = w.at(i);
            i += 2;
        } else {
            map[static_cast<size_t>(w.at(i))] = w.at(i);
            i += 1;
        }
    }
    return Permutation(std::span<const int>(map.data() + 1, static_cast<size_t>(w.size())));
}

}  // namespace permeq
