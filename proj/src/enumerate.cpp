#include "gat/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace gat {

namespace {

constexpr int kMaxN = 7;

// Edge bitmask layout: pair index k runs over the upper triangle
// column-major, (0,1), (0,2), (1,2), (0,3), ...; pair k occupies bit
// (nbits-1-k) so that unsigned comparison of masks equals lexicographic
// comparison of the adjacency bit-string (and of the graph6 encoding).
struct PairTable {
    int n = 0;
    int nbits = 0;
    std::array<std::pair<int, int>, 21> pairs{};

    explicit PairTable(int n_) : n(n_), nbits(n_ * (n_ - 1) / 2) {
        int k = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) pairs[static_cast<size_t>(k++)] = {u, v};
    }

    uint32_t bit(int k) const { return 1u << (nbits - 1 - k); }
};

std::array<uint8_t, 7> adjacency_masks(uint32_t mask, const PairTable& t) {
    std::array<uint8_t, 7> adj{};
    for (int k = 0; k < t.nbits; ++k) {
        if (mask & t.bit(k)) {
            const auto [u, v] = t.pairs[static_cast<size_t>(k)];
            adj[static_cast<size_t>(u)] |= static_cast<uint8_t>(1 << v);
            adj[static_cast<size_t>(v)] |= static_cast<uint8_t>(1 << u);
        }
    }
    return adj;
}

bool mask_connected(const std::array<uint8_t, 7>& adj, int n) {
    uint8_t reached = 1;
    uint8_t frontier = 1;
    while (frontier) {
        uint8_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1 << v)) next |= adj[static_cast<size_t>(v)];
        frontier = static_cast<uint8_t>(next & ~reached);
        reached |= frontier;
    }
    return reached == (1u << n) - 1;
}

uint32_t remap(uint32_t mask, const std::array<int, 7>& perm, const PairTable& t) {
    uint32_t out = 0;
    for (int k = 0; k < t.nbits; ++k) {
        if (mask & t.bit(k)) {
            const auto [u, v] = t.pairs[static_cast<size_t>(k)];
            int a = perm[static_cast<size_t>(u)];
            int b = perm[static_cast<size_t>(v)];
            if (a > b) std::swap(a, b);
            out |= t.bit(b * (b - 1) / 2 + a);
        }
    }
    return out;
}

// True iff no relabeling (over the given permutation stream) produces a
// lexicographically smaller bit-string than the graph's own.
template <typename NextPerm>
bool is_canonical(uint32_t mask, const PairTable& t, std::array<int, 7> perm, NextPerm next) {
    do {
        if (remap(mask, perm, t) < mask) return false;
    } while (next(perm));
    return true;
}

Graph mask_to_graph(uint32_t mask, const PairTable& t) {
    std::vector<Edge> edges;
    for (int k = 0; k < t.nbits; ++k)
        if (mask & t.bit(k)) edges.push_back(t.pairs[static_cast<size_t>(k)]);
    return Graph(t.n, std::move(edges));
}

}  // namespace

void enumerate_connected(int n, const std::function<void(const Graph&)>& yield) {
    if (n < 1 || n > kMaxN) {
        throw std::invalid_argument("enumerate_connected supports 1 <= n <= 7, got n = " +
                                    std::to_string(n));
    }
    if (n == 1) {
        yield(Graph(1, {}));
        return;
    }

    const PairTable t(n);
    std::array<int, 7> identity{};
    std::iota(identity.begin(), identity.begin() + n, 0);

    for (uint32_t mask = 0; mask < (1u << t.nbits); ++mask) {
        const auto adj = adjacency_masks(mask, t);
        if (!mask_connected(adj, n)) continue;

        if (n < kMaxN) {
            // Full permutation dedup: keep a graph only when it is the
            // lexicographic minimum over all n! relabelings.
            auto next = [n](std::array<int, 7>& p) {
                return std::next_permutation(p.begin(), p.begin() + n);
            };
            if (is_canonical(mask, t, identity, next)) yield(mask_to_graph(mask, t));
            continue;
        }

        // n = 7: prune by degree sequence before permutation dedup. Only
        // labelings with non-increasing degrees are candidates, and any two
        // such labelings of isomorphic graphs differ by a permutation within
        // equal-degree blocks, so scanning block permutations suffices.
        std::array<int, 7> deg{};
        bool sorted = true;
        for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = std::popcount(adj[static_cast<size_t>(v)]);
        for (int v = 1; v < n; ++v)
            if (deg[static_cast<size_t>(v - 1)] < deg[static_cast<size_t>(v)]) {
                sorted = false;
                break;
            }
        if (!sorted) continue;

        std::vector<std::pair<int, int>> blocks;  // [start, end) runs of equal degree
        for (int v = 0; v < n;) {
            int w = v;
            while (w < n && deg[static_cast<size_t>(w)] == deg[static_cast<size_t>(v)]) ++w;
            if (w - v > 1) blocks.push_back({v, w});
            v = w;
        }
        auto next_block = [&blocks](std::array<int, 7>& p) {
            for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
                if (std::next_permutation(p.begin() + it->first, p.begin() + it->second))
                    return true;
            }
            return false;
        };
        if (is_canonical(mask, t, identity, next_block)) yield(mask_to_graph(mask, t));
    }
}

std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    enumerate_connected(n, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace gat
