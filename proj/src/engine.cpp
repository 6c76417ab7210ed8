#include "permeq/engine.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace permeq {

std::vector<uint64_t> ClassesSummary::sorted_sizes() const {
    std::vector<uint64_t> s = class_sizes;
    std::sort(s.begin(), s.end());
    return s;
}

std::string ClassesSummary::to_json() const {
    std::string out = "{\"n\":" + std::to_string(n) +
                      ",\"class_count\":" + std::to_string(class_count) + ",\"classes\":[";
    for (uint64_t i = 0; i < class_count; ++i) {
        if (i) out += ',';
        out += "{\"representative_rank\":" + std::to_string(representative_ranks[i]) +
               ",\"size\":" + std::to_string(class_sizes[i]) + "}";
    }
    out += "]}";
    return out;
}

namespace {

void check_budget(int n, Mode mode, const EngineOptions& opts) {
    if (n > opts.max_n(mode))
        throw TooLarge("n=" + std::to_string(n) + " exceeds the cap for mode '" +
                       std::string(mode_name(mode)) + "'");
    if (factorial(n) > opts.slot_budget)
        throw TooLarge("n! exceeds the configured slot budget");
}

// Union-find over ranks: parent-or-negated-size, union by size, path halving.
struct DenseUnionFind {
    std::vector<int64_t> slot;

    explicit DenseUnionFind(uint64_t n) : slot(n, -1) {}

    uint64_t find(uint64_t x) {
        while (slot[x] >= 0) {
            if (slot[slot[x]] >= 0) slot[x] = slot[slot[x]];
            x = static_cast<uint64_t>(slot[x]);
        }
        return x;
    }

    void unite(uint64_t a, uint64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (slot[a] > slot[b]) std::swap(a, b);  // a keeps the larger set
        slot[a] += slot[b];
        slot[b] = static_cast<int64_t>(a);
    }
};

}  // namespace

ClassesSummary classes(int n, const ReplacementPartition& P, Mode mode,
                       const EngineOptions& opts) {
    check_budget(n, mode, opts);
    const uint64_t nf = factorial(n);

    unsigned hw = std::thread::hardware_concurrency();
    const unsigned requested = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                                : (hw ? hw : 1u);
    const unsigned T = static_cast<unsigned>(
        std::min<uint64_t>(requested, std::max<uint64_t>(1, nf / 1024 + 1)));

    // Workers emit (r, s) edges with s > r into per-shard buffers; the
    // merge into the union-find runs single-threaded in shard order, so
    // the result is independent of scheduling.
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> buffers(T);
    auto worker = [&](unsigned shard) {
        const uint64_t lo = nf * shard / T;
        const uint64_t hi = nf * (shard + 1) / T;
        auto& buf = buffers[shard];
        for (uint64_t r = lo; r < hi; ++r) {
            const Permutation p = unrank(n, r);
            for_each_move(p, P, mode, [&](const Move&, const Permutation& q) {
                const uint64_t s = rank(q).index;
                if (s > r) buf.emplace_back(static_cast<uint32_t>(r),
                                            static_cast<uint32_t>(s));
            });
        }
    };

    if (T == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(T);
        for (unsigned t = 0; t < T; ++t) threads.emplace_back(worker, t);
        for (auto& th : threads) th.join();
    }

    DenseUnionFind uf(nf);
    for (auto& buf : buffers) {
        for (auto [r, s] : buf) uf.unite(r, s);
        buf.clear();
        buf.shrink_to_fit();
    }

    ClassesSummary out;
    out.n = n;
    std::unordered_map<uint64_t, uint64_t> root_to_slot;
    for (uint64_t r = 0; r < nf; ++r) {
        const uint64_t root = uf.find(r);
        auto [it, fresh] = root_to_slot.try_emplace(root, out.representative_ranks.size());
        if (fresh) {
            // first visit in rank order: r is the minimum rank of its class
            out.representative_ranks.push_back(r);
            out.class_sizes.push_back(static_cast<uint64_t>(-uf.slot[root]));
        }
    }
    out.class_count = out.representative_ranks.size();

    uint64_t total = 0;
    for (uint64_t s : out.class_sizes) total += s;
    if (total != nf) throw Error("internal: class sizes do not sum to n!");
    return out;
}

namespace {

template <typename Visit>
void bfs(const Permutation& start, const ReplacementPartition& P, Mode mode,
         uint64_t cap, Visit&& visit) {
    std::unordered_set<Permutation> seen{start};
    std::deque<Permutation> queue{start};
    visit(start);
    while (!queue.empty()) {
        const Permutation p = queue.front();
        queue.pop_front();
        for_each_move(p, P, mode, [&](const Move&, const Permutation& q) {
            if (seen.insert(q).second) {
                if (seen.size() > cap) throw TooLarge("class exceeds the slot budget");
                visit(q);
                queue.push_back(q);
            }
        });
    }
}

}  // namespace

std::vector<Permutation> eq_class(const Permutation& p, const ReplacementPartition& P,
                                  Mode mode, const EngineOptions& opts) {
    if (p.size() > opts.max_n(mode)) throw TooLarge("n exceeds the cap for this mode");
    std::vector<Permutation> out;
    bfs(p, P, mode, opts.slot_budget, [&](const Permutation& q) { out.push_back(q); });
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t class_size(const Permutation& p, const ReplacementPartition& P, Mode mode,
                    const EngineOptions& opts) {
    if (p.size() > opts.max_n(mode)) throw TooLarge("n exceeds the cap for this mode");
    uint64_t count = 0;
    bfs(p, P, mode, opts.slot_budget, [&](const Permutation&) { ++count; });
    return count;
}

uint64_t identity_class_size(int n, const ReplacementPartition& P, Mode mode,
                             const EngineOptions& opts) {
    return class_size(Permutation::identity(n), P, mode, opts);
}

std::optional<WitnessPath> reachable(const Permutation& from, const Permutation& to,
                                     const ReplacementPartition& P, Mode mode,
                                     const EngineOptions& opts) {
    if (from.size() != to.size())
        throw InvalidArgument("reachable: permutations have different sizes");
    if (from.size() > opts.max_n(mode)) throw TooLarge("n exceeds the cap for this mode");

    WitnessPath path;
    path.target = to;
    if (from == to) return path;

    struct Parent {
        Permutation prev;
        Move move;
    };
    std::unordered_map<Permutation, Parent> parents;
    parents.emplace(from, Parent{});
    std::deque<Permutation> queue{from};
    bool found = false;
    while (!queue.empty() && !found) {
        const Permutation p = queue.front();
        queue.pop_front();
        // for_each_move's lexicographic order fixes the tie-break
        for_each_move(p, P, mode, [&](const Move& m, const Permutation& q) {
            if (found || parents.contains(q)) return;
            if (parents.size() + 1 > opts.slot_budget)
                throw TooLarge("search exceeds the slot budget");
            parents.emplace(q, Parent{p, m});
            if (q == to) {
                found = true;
                return;
            }
            queue.push_back(q);
        });
    }
    if (!found) return std::nullopt;

    Permutation cur = to;
    std::vector<WitnessStep> rev;
    while (cur != from) {
        const Parent& par = parents.at(cur);
        rev.push_back(WitnessStep{par.prev, par.move});
        cur = par.prev;
    }
    path.steps.assign(rev.rbegin(), rev.rend());
    return path;
}

}  // namespace permeq
