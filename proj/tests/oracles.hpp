#pragma once

// Test-only oracles and generators. Nothing here reuses library algorithms
// beyond the poset's raw blocks.

#include <cstddef>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/fsequence.hpp"
#include "cobweb/poset.hpp"

namespace oracle {

using cobweb::BinaryMatrix;
using cobweb::FSequence;
using cobweb::GradedPoset;

struct Node {
    std::size_t level;  // 1-based
    std::size_t pos;    // 0-based
};

inline std::vector<Node> nodes_of(const GradedPoset& P) {
    std::vector<Node> v;
    for (std::size_t k = 1; k <= P.level_count(); ++k)
        for (std::size_t i = 0; i < P.level_size(k); ++i) v.push_back({k, i});
    return v;
}

/// reach[x][y] = 1 iff y is reachable from x by cover steps (reflexive), by BFS.
inline std::vector<std::vector<int>> bfs_reach(const GradedPoset& P) {
    auto nodes = nodes_of(P);
    const std::size_t N = nodes.size();
    std::vector<std::size_t> start(P.level_count() + 2, 0);
    for (std::size_t k = 1; k <= P.level_count(); ++k) start[k + 1] = start[k] + P.level_size(k);
    std::vector<std::vector<int>> reach(N, std::vector<int>(N, 0));
    for (std::size_t s = 0; s < N; ++s) {
        std::queue<std::size_t> q;
        q.push(s);
        reach[s][s] = 1;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            Node a = nodes[u];
            if (a.level == P.level_count()) continue;
            const BinaryMatrix& B = P.block(a.level);
            for (std::size_t j = 0; j < B.cols(); ++j) {
                std::size_t v = start[a.level + 1] + j;
                if (B.at(a.pos, j) && !reach[s][v]) {
                    reach[s][v] = 1;
                    q.push(v);
                }
            }
        }
    }
    return reach;
}

/// Number of cover paths from (level a, pos i) to (level b, pos j), by explicit recursion.
inline unsigned long long count_paths(const GradedPoset& P, std::size_t a, std::size_t i, std::size_t b,
                                      std::size_t j) {
    if (a == b) return i == j ? 1 : 0;
    if (a > b) return 0;
    unsigned long long total = 0;
    const BinaryMatrix& B = P.block(a);
    for (std::size_t t = 0; t < B.cols(); ++t)
        if (B.at(i, t)) total += count_paths(P, a + 1, t, b, j);
    return total;
}

/// Random graded poset with no mute node and at least one zero arc.
inline GradedPoset random_no_mute(std::mt19937& rng, std::size_t levels, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size_d(1, max_size);
    std::bernoulli_distribution arc(0.5);
    if (levels < 2) throw cobweb::DomainError("random_no_mute needs at least two levels");
    while (true) {
        std::vector<std::size_t> sizes;
        for (std::size_t k = 0; k < levels; ++k) sizes.push_back(size_d(rng));
        std::vector<BinaryMatrix> blocks;
        for (std::size_t k = 0; k + 1 < levels; ++k) {
            BinaryMatrix B(sizes[k], sizes[k + 1]);
            for (std::size_t i = 0; i < B.rows(); ++i)
                for (std::size_t j = 0; j < B.cols(); ++j) B.set(i, j, arc(rng));
            // Patch zero rows and columns with a single arc each.
            for (std::size_t i = 0; i < B.rows(); ++i)
                if (B.row_is_zero(i)) B.set(i, std::uniform_int_distribution<std::size_t>(0, B.cols() - 1)(rng), true);
            for (std::size_t j = 0; j < B.cols(); ++j)
                if (B.col_is_zero(j)) B.set(std::uniform_int_distribution<std::size_t>(0, B.rows() - 1)(rng), j, true);
            blocks.push_back(std::move(B));
        }
        GradedPoset P = GradedPoset::from_blocks(sizes, blocks);
        if (!P.is_cobweb() && P.has_no_mute()) return P;
    }
}

/// Random arcs (mute nodes allowed) over the given level sizes.
inline GradedPoset random_with_sizes(std::mt19937& rng, const std::vector<std::size_t>& sizes) {
    std::bernoulli_distribution arc(0.4);
    std::vector<BinaryMatrix> blocks;
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
        BinaryMatrix B(sizes[k], sizes[k + 1]);
        for (std::size_t i = 0; i < B.rows(); ++i)
            for (std::size_t j = 0; j < B.cols(); ++j) B.set(i, j, arc(rng));
        blocks.push_back(std::move(B));
    }
    return GradedPoset::from_blocks(sizes, blocks);
}

/// Random graded poset with arbitrary arcs (mute nodes allowed).
inline GradedPoset random_any(std::mt19937& rng, std::size_t levels, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size_d(1, max_size);
    std::vector<std::size_t> sizes;
    for (std::size_t k = 0; k < levels; ++k) sizes.push_back(size_d(rng));
    return random_with_sizes(rng, sizes);
}

struct NamedSequence {
    std::string label;
    FSequence F;
};

/// The sequences exercised throughout: presets plus two custom ones whose
/// tail is constant 3, defined through index 8.
inline std::vector<NamedSequence> sequences() {
    return {
        {"nat", FSequence::natural()},
        {"fib", FSequence::fibonacci()},
        {"gauss2", FSequence::gauss(2)},
        {"const3", FSequence::constant(3)},
        {"one_one_threes", FSequence::custom(std::vector<std::size_t>{1, 1, 3, 3, 3, 3, 3, 3})},
        {"one_threes", FSequence::custom(std::vector<std::size_t>{1, 3, 3, 3, 3, 3, 3, 3})},
    };
}

}  // namespace oracle
