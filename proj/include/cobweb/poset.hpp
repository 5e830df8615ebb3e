#pragma once

// F-graded posets stored as a chain of 0/1 biadjacency blocks between
// consecutive levels (the Hasse digraph, or KoDAG for cobwebs), with the
// natural join, ordinal sum, layers, natural labeling and mute nodes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/exact.hpp"
#include "cobweb/fsequence.hpp"

namespace cobweb {

/// Dense row-major 0/1 matrix.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols, std::uint8_t fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill ? 1 : 0) {}

    static BinaryMatrix ones(std::size_t rows, std::size_t cols) { return BinaryMatrix(rows, cols, 1); }

    /// Rows of 0/1 entries; throws on ragged rows or non-binary values.
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.front().size() : 0;
        BinaryMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw ConstructionError("ragged block: row " + std::to_string(i) + " has wrong length");
            for (std::size_t j = 0; j < c; ++j) {
                int v = rows[i][j];
                if (v != 0 && v != 1) {
                    throw ConstructionError("non-binary block entry " + std::to_string(v) + " at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
                }
                m.set(i, j, v != 0);
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { data_[i * cols_ + j] = v ? 1 : 0; }

    bool all_ones() const {
        return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v != 0; });
    }
    bool row_is_zero(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j)) return false;
        return true;
    }
    bool col_is_zero(std::size_t j) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (at(i, j)) return false;
        return true;
    }
    std::size_t count_ones() const {
        return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
    }

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

/// A node by level (1-based), position within the level (1-based) and
/// natural-labeling global index (1-based).
struct NodeLabel {
    std::size_t level = 0;
    std::size_t position = 0;
    std::size_t global = 0;

    friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// Natural labeling: left to right along level 1, then level 2, and so on.
/// global(k, i) = S(k-1) + i with S(m) = |Φ_1| + ... + |Φ_m|.
class NaturalLabeling {
public:
    explicit NaturalLabeling(std::vector<std::size_t> level_sizes) : sizes_(std::move(level_sizes)) {
        prefix_.assign(sizes_.size() + 1, 0);
        for (std::size_t k = 0; k < sizes_.size(); ++k) prefix_[k + 1] = prefix_[k] + sizes_[k];
    }

    std::size_t level_count() const { return sizes_.size(); }
    std::size_t node_count() const { return prefix_.back(); }

    /// S(m); S(0) = 0.
    std::size_t cumulative(std::size_t m) const {
        if (m > sizes_.size()) throw DomainError("S(" + std::to_string(m) + ") past the top level");
        return prefix_[m];
    }

    std::size_t global(std::size_t level, std::size_t position) const {
        if (level < 1 || level > sizes_.size() || position < 1 || position > sizes_[level - 1]) {
            throw DomainError("node (" + std::to_string(level) + "," + std::to_string(position) +
                              ") is not in the poset");
        }
        return prefix_[level - 1] + position;
    }

    NodeLabel node(std::size_t level, std::size_t position) const {
        return {level, position, global(level, position)};
    }

    NodeLabel locate(std::size_t global_label) const {
        if (global_label < 1 || global_label > node_count()) {
            throw DomainError("global label " + std::to_string(global_label) + " out of range [1," +
                              std::to_string(node_count()) + "]");
        }
        auto it = std::lower_bound(prefix_.begin() + 1, prefix_.end(), global_label);
        std::size_t level = static_cast<std::size_t>(it - prefix_.begin());
        return {level, global_label - prefix_[level - 1], global_label};
    }

    /// r(x) = k for x ∈ Φ_k.
    std::size_t rank_of(std::size_t global_label) const { return locate(global_label).level; }

private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> prefix_;
};

class GradedPoset {
public:
    /// Validates shapes; flags are derived from the blocks.
    static GradedPoset from_blocks(std::vector<std::size_t> level_sizes, std::vector<BinaryMatrix> blocks,
                                   std::optional<std::string> sequence = std::nullopt) {
        if (level_sizes.empty()) throw ConstructionError("a graded poset needs at least one level");
        for (std::size_t k = 0; k < level_sizes.size(); ++k) {
            if (level_sizes[k] == 0) throw ConstructionError("level " + std::to_string(k + 1) + " is empty");
        }
        if (blocks.size() + 1 != level_sizes.size()) {
            throw ConstructionError("expected " + std::to_string(level_sizes.size() - 1) + " blocks for " +
                                    std::to_string(level_sizes.size()) + " levels, got " +
                                    std::to_string(blocks.size()));
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            if (blocks[k].rows() != level_sizes[k] || blocks[k].cols() != level_sizes[k + 1]) {
                throw ConstructionError("block " + std::to_string(k + 1) + " has shape " +
                                        std::to_string(blocks[k].rows()) + "x" + std::to_string(blocks[k].cols()) +
                                        ", expected " + std::to_string(level_sizes[k]) + "x" +
                                        std::to_string(level_sizes[k + 1]));
            }
        }
        return GradedPoset(std::move(level_sizes), std::move(blocks), std::move(sequence));
    }

    std::size_t level_count() const { return sizes_.size(); }
    const std::vector<std::size_t>& level_sizes() const { return sizes_; }
    std::size_t level_size(std::size_t k) const { return sizes_.at(k - 1); }
    std::size_t node_count() const { return labeling_.node_count(); }

    /// Cover block from level k to level k+1, 1 <= k < level_count().
    const BinaryMatrix& block(std::size_t k) const { return blocks_.at(k - 1); }
    const std::vector<BinaryMatrix>& blocks() const { return blocks_; }

    bool is_cobweb() const { return cobweb_; }
    bool has_no_mute() const { return no_mute_; }
    const std::optional<std::string>& sequence() const { return sequence_; }
    const NaturalLabeling& labeling() const { return labeling_; }

    /// x ≺· y on global labels.
    bool covers(std::size_t x, std::size_t y) const {
        NodeLabel a = labeling_.locate(x), b = labeling_.locate(y);
        return b.level == a.level + 1 && block(a.level).at(a.position - 1, b.position - 1);
    }

    /// Upper covers of a node, as global labels in increasing order.
    std::vector<std::size_t> upper_covers(std::size_t x) const {
        NodeLabel a = labeling_.locate(x);
        std::vector<std::size_t> out;
        if (a.level == level_count()) return out;
        const BinaryMatrix& B = block(a.level);
        for (std::size_t j = 0; j < B.cols(); ++j)
            if (B.at(a.position - 1, j)) out.push_back(labeling_.global(a.level + 1, j + 1));
        return out;
    }

    /// Rename the denomination tag (structure unchanged).
    GradedPoset with_sequence(std::optional<std::string> name) const {
        GradedPoset p = *this;
        p.sequence_ = std::move(name);
        return p;
    }

    /// Structural equality: level sizes and blocks. The sequence tag is ignored.
    friend bool operator==(const GradedPoset& a, const GradedPoset& b) {
        return a.sizes_ == b.sizes_ && a.blocks_ == b.blocks_;
    }

private:
    GradedPoset(std::vector<std::size_t> sizes, std::vector<BinaryMatrix> blocks, std::optional<std::string> seq)
        : sizes_(std::move(sizes)), blocks_(std::move(blocks)), sequence_(std::move(seq)), labeling_(sizes_) {
        cobweb_ = std::all_of(blocks_.begin(), blocks_.end(), [](const BinaryMatrix& b) { return b.all_ones(); });
        no_mute_ = true;
        for (const auto& b : blocks_) {
            for (std::size_t i = 0; i < b.rows() && no_mute_; ++i) no_mute_ = !b.row_is_zero(i);
            for (std::size_t j = 0; j < b.cols() && no_mute_; ++j) no_mute_ = !b.col_is_zero(j);
        }
    }

    std::vector<std::size_t> sizes_;
    std::vector<BinaryMatrix> blocks_;
    std::optional<std::string> sequence_;
    NaturalLabeling labeling_;
    bool cobweb_ = false;
    bool no_mute_ = false;
};

namespace detail {
// Guards dense per-node structures against accidental blowups.
inline constexpr std::size_t max_poset_nodes = 1u << 20;

inline std::vector<std::size_t> level_sizes_of(const FSequence& F, std::size_t n) {
    std::vector<std::size_t> sizes;
    sizes.reserve(n);
    std::size_t total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (!F.defined_at(k)) throw ConstructionError("sequence is undefined at index " + std::to_string(k));
        std::size_t s = to_size(F.at(k), "level size");
        total += s;
        if (total > max_poset_nodes) throw ConstructionError("poset would exceed " + std::to_string(max_poset_nodes) + " nodes");
        sizes.push_back(s);
    }
    return sizes;
}
}  // namespace detail

/// Sizes ⟨1_F, ..., n_F⟩ with every block all-ones.
inline GradedPoset cobweb_poset(const FSequence& F, std::size_t n) {
    if (n < 1) throw DomainError("a cobweb poset needs at least one level");
    auto sizes = detail::level_sizes_of(F, n);
    std::vector<BinaryMatrix> blocks;
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) blocks.push_back(BinaryMatrix::ones(sizes[k], sizes[k + 1]));
    return GradedPoset::from_blocks(std::move(sizes), std::move(blocks), F.name());
}

/// Cobweb over explicit level sizes.
inline GradedPoset cobweb_poset(const std::vector<std::size_t>& sizes) {
    std::vector<BinaryMatrix> blocks;
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k) blocks.push_back(BinaryMatrix::ones(sizes[k], sizes[k + 1]));
    return GradedPoset::from_blocks(sizes, std::move(blocks));
}

/// One level, no blocks.
inline GradedPoset antichain(std::size_t size) { return GradedPoset::from_blocks({size}, {}); }

/// P ⊕→ Q: the top level of P is identified positionally with the bottom level of Q.
inline GradedPoset natural_join(const GradedPoset& P, const GradedPoset& Q) {
    if (P.level_sizes().back() != Q.level_sizes().front()) {
        throw JoinError("natural join needs equal glue levels: top of P has " +
                        std::to_string(P.level_sizes().back()) + " nodes, bottom of Q has " +
                        std::to_string(Q.level_sizes().front()));
    }
    std::vector<std::size_t> sizes = P.level_sizes();
    sizes.insert(sizes.end(), Q.level_sizes().begin() + 1, Q.level_sizes().end());
    std::vector<BinaryMatrix> blocks = P.blocks();
    blocks.insert(blocks.end(), Q.blocks().begin(), Q.blocks().end());
    std::optional<std::string> seq = (P.sequence() == Q.sequence()) ? P.sequence() : std::nullopt;
    return GradedPoset::from_blocks(std::move(sizes), std::move(blocks), std::move(seq));
}

/// P ⊕ Q: every maximal element of P is covered by every minimal element of Q.
inline GradedPoset ordinal_sum(const GradedPoset& P, const GradedPoset& Q) {
    std::vector<std::size_t> sizes = P.level_sizes();
    sizes.insert(sizes.end(), Q.level_sizes().begin(), Q.level_sizes().end());
    std::vector<BinaryMatrix> blocks = P.blocks();
    blocks.push_back(BinaryMatrix::ones(P.level_sizes().back(), Q.level_sizes().front()));
    blocks.insert(blocks.end(), Q.blocks().begin(), Q.blocks().end());
    return GradedPoset::from_blocks(std::move(sizes), std::move(blocks));
}

/// ⟨Φ_k → Φ_n⟩: the sub-poset on levels k..n.
inline GradedPoset layer(const GradedPoset& P, std::size_t k, std::size_t n) {
    if (k < 1 || k > n || n > P.level_count()) {
        throw DomainError("layer (" + std::to_string(k) + "," + std::to_string(n) + ") outside levels 1.." +
                          std::to_string(P.level_count()));
    }
    std::vector<std::size_t> sizes(P.level_sizes().begin() + static_cast<std::ptrdiff_t>(k - 1),
                                   P.level_sizes().begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<BinaryMatrix> blocks(P.blocks().begin() + static_cast<std::ptrdiff_t>(k - 1),
                                     P.blocks().begin() + static_cast<std::ptrdiff_t>(n - 1));
    return GradedPoset::from_blocks(std::move(sizes), std::move(blocks), P.sequence());
}

/// Nodes with no lower cover (above level 1) or no upper cover (below the top).
inline std::vector<NodeLabel> mute_nodes(const GradedPoset& P) {
    std::vector<NodeLabel> out;
    const auto& L = P.labeling();
    for (std::size_t k = 1; k <= P.level_count(); ++k) {
        for (std::size_t i = 1; i <= P.level_size(k); ++i) {
            bool no_in = k > 1 && P.block(k - 1).col_is_zero(i - 1);
            bool no_out = k < P.level_count() && P.block(k).row_is_zero(i - 1);
            if (no_in || no_out) out.push_back(L.node(k, i));
        }
    }
    return out;
}

/// Reflexive reachability rows computed straight from the blocks by DFS,
/// without any matrix algebra. reach[x-1][y-1] is x <= y.
inline std::vector<std::vector<std::uint8_t>> reachability(const GradedPoset& P) {
    const std::size_t N = P.node_count();
    std::vector<std::vector<std::uint8_t>> reach(N, std::vector<std::uint8_t>(N, 0));
    // Process top-down so each node's upper set is the union of its covers' sets.
    for (std::size_t x = N; x >= 1; --x) {
        auto& row = reach[x - 1];
        row[x - 1] = 1;
        for (std::size_t y : P.upper_covers(x)) {
            const auto& up = reach[y - 1];
            for (std::size_t z = 0; z < N; ++z) row[z] |= up[z];
        }
    }
    return reach;
}

}  // namespace cobweb
