#pragma once

// Maximal chains of layers: brute-force enumeration, memoized counting,
// the Markov factorization, hyper-boxes V_{k,n} and the chain/box bijection.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/exact.hpp"
#include "cobweb/fsequence.hpp"
#include "cobweb/incidence.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

/// One node per consecutive level, each step a cover.
using Chain = std::vector<NodeLabel>;

namespace detail {
inline void check_layer(const GradedPoset& P, std::size_t k, std::size_t n) {
    if (k < 1 || k > n || n > P.level_count()) {
        throw DomainError("layer (" + std::to_string(k) + "," + std::to_string(n) + ") outside levels 1.." +
                          std::to_string(P.level_count()));
    }
}

inline void check_node(const GradedPoset& P, const NodeLabel& x) {
    NodeLabel canon = P.labeling().node(x.level, x.position);
    if (x.global != 0 && x.global != canon.global) throw DomainError("node label has inconsistent global index");
}
}  // namespace detail

/// Visits every full-length cover path x_k → ... → x_n, ordered
/// lexicographically by positions. Returning false from the visitor stops.
inline void for_each_max_chain(const GradedPoset& P, std::size_t k, std::size_t n,
                               const std::function<bool(const Chain&)>& visit) {
    detail::check_layer(P, k, n);
    const auto& L = P.labeling();
    Chain chain;
    chain.reserve(n - k + 1);
    bool stop = false;
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t level, std::size_t pos) {
        chain.push_back(L.node(level, pos));
        if (level == n) {
            if (!visit(chain)) stop = true;
        } else {
            const BinaryMatrix& B = P.block(level);
            for (std::size_t j = 0; j < B.cols() && !stop; ++j)
                if (B.at(pos - 1, j)) dfs(level + 1, j + 1);
        }
        chain.pop_back();
    };
    for (std::size_t i = 1; i <= P.level_size(k) && !stop; ++i) dfs(k, i);
}

inline std::vector<Chain> enumerate_max_chains(const GradedPoset& P, std::size_t k, std::size_t n) {
    std::vector<Chain> out;
    for_each_max_chain(P, k, n, [&](const Chain& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

/// Count by walking every chain; the brute-force side of the cross-checks.
inline Integer enumerate_count(const GradedPoset& P, std::size_t k, std::size_t n) {
    Integer count = 0;
    for_each_max_chain(P, k, n, [&](const Chain&) {
        ++count;
        return true;
    });
    return count;
}

namespace detail {
// Pushes per-node path counts one level up through block `level`.
inline std::vector<Integer> push_up(const GradedPoset& P, std::size_t level, const std::vector<Integer>& counts) {
    const BinaryMatrix& B = P.block(level);
    std::vector<Integer> next(B.cols(), 0);
    for (std::size_t i = 0; i < B.rows(); ++i) {
        if (counts[i] == 0) continue;
        for (std::size_t j = 0; j < B.cols(); ++j)
            if (B.at(i, j)) next[j] += counts[i];
    }
    return next;
}
}  // namespace detail

/// Number of cover paths x → y; 1 when x = y.
inline Integer count_interval_chains(const GradedPoset& P, const NodeLabel& x, const NodeLabel& y) {
    detail::check_node(P, x);
    detail::check_node(P, y);
    if (y.level < x.level) return 0;
    if (y.level == x.level) return x.position == y.position ? 1 : 0;
    std::vector<Integer> counts(P.level_size(x.level), 0);
    counts[x.position - 1] = 1;
    for (std::size_t level = x.level; level < y.level; ++level) counts = detail::push_up(P, level, counts);
    return counts[y.position - 1];
}

/// |C_max⟨Φ_k → Φ_n⟩| by per-level dynamic programming.
inline Integer count_layer_chains(const GradedPoset& P, std::size_t k, std::size_t n) {
    detail::check_layer(P, k, n);
    std::vector<Integer> counts(P.level_size(k), 1);
    for (std::size_t level = k; level < n; ++level) counts = detail::push_up(P, level, counts);
    Integer total = 0;
    for (const auto& c : counts) total += c;
    return total;
}

/// C^{r,k,i}: chains over levels r..k ending at target (level k, position i).
inline Integer count_tail_chains(const GradedPoset& P, std::size_t r, const NodeLabel& target) {
    detail::check_node(P, target);
    if (r < 1 || r > target.level) throw DomainError("tail chains need 1 <= r <= level(target)");
    std::vector<Integer> counts(P.level_size(r), 1);
    for (std::size_t level = r; level < target.level; ++level) counts = detail::push_up(P, level, counts);
    return counts[target.position - 1];
}

/// Chains over levels level(source)..s starting at source.
inline Integer count_head_chains(const GradedPoset& P, const NodeLabel& source, std::size_t s) {
    detail::check_node(P, source);
    if (s < source.level || s > P.level_count()) throw DomainError("head chains need level(source) <= s <= top");
    std::vector<Integer> counts(P.level_size(source.level), 0);
    counts[source.position - 1] = 1;
    for (std::size_t level = source.level; level < s; ++level) counts = detail::push_up(P, level, counts);
    Integer total = 0;
    for (const auto& c : counts) total += c;
    return total;
}

struct MarkovReport {
    Integer lhs;        // C^{r,k} C^{k,s}
    Integer rhs;        // k_F C^{r,s}
    std::optional<Integer> split_lhs;  // C^{r,k} C^{k+1,s}, when k < s
    Integer split_rhs;  // C^{r,s}
    bool holds() const { return lhs == rhs && (!split_lhs || *split_lhs == split_rhs); }
};

/// Both sides counted by enumeration.
inline MarkovReport markov_product(const GradedPoset& P, std::size_t r, std::size_t k, std::size_t s) {
    if (!P.is_cobweb()) throw RefusedError("the Markov factorization is asserted for cobweb posets only");
    if (!(1 <= r && r <= k && k <= s && s <= P.level_count())) {
        throw DomainError("markov_product needs 1 <= r <= k <= s <= level count");
    }
    MarkovReport rep;
    Integer crk = enumerate_count(P, r, k);
    Integer crs = enumerate_count(P, r, s);
    rep.lhs = crk * enumerate_count(P, k, s);
    rep.rhs = Integer(static_cast<unsigned long>(P.level_size(k))) * crs;
    if (k < s) rep.split_lhs = crk * enumerate_count(P, k + 1, s);
    rep.split_rhs = crs;
    return rep;
}

/// V_{k,n} = [k_F] × ... × [n_F]
struct HyperBox {
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::vector<std::size_t> dims;

    Integer cardinality() const {
        Integer c = 1;
        for (auto d : dims) c *= static_cast<unsigned long>(d);
        return c;
    }

    bool contains(const std::vector<std::size_t>& p) const {
        if (p.size() != dims.size()) return false;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] < 1 || p[i] > dims[i]) return false;
        return true;
    }

    /// Mixed-radix rank of a point, first coordinate most significant.
    std::size_t index_of(const std::vector<std::size_t>& p) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < p.size(); ++i) idx = idx * dims[i] + (p[i] - 1);
        return idx;
    }

    /// All points in lexicographic order.
    std::vector<std::vector<std::size_t>> points() const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> p(dims.size(), 1);
        out.reserve(to_size(cardinality(), "hyper-box cardinality"));
        while (true) {
            out.push_back(p);
            std::size_t i = dims.size();
            while (i > 0 && p[i - 1] == dims[i - 1]) p[--i] = 1;
            if (i == 0) break;
            ++p[i - 1];
        }
        return out;
    }

    friend bool operator==(const HyperBox&, const HyperBox&) = default;
};

inline HyperBox hyperbox(const FSequence& F, std::size_t k, std::size_t n) {
    if (k < 1 || k > n) throw DomainError("hyper-box needs 1 <= k <= n");
    HyperBox b{k, n, {}};
    for (std::size_t j = k; j <= n; ++j) b.dims.push_back(to_size(F.at(j), "level size"));
    return b;
}

inline HyperBox hyperbox(const GradedPoset& P, std::size_t k, std::size_t n) {
    detail::check_layer(P, k, n);
    HyperBox b{k, n, {}};
    for (std::size_t j = k; j <= n; ++j) b.dims.push_back(P.level_size(j));
    return b;
}

/// V_{k,m} ⊕→ V_{m,n} = V_{k,n}; the shared face coordinate appears once.
inline HyperBox box_join(const HyperBox& A, const HyperBox& B) {
    if (A.hi != B.lo || A.dims.back() != B.dims.front()) {
        throw JoinError("box join needs A.hi = B.lo with equal face sizes (A.hi=" + std::to_string(A.hi) +
                        ", B.lo=" + std::to_string(B.lo) + ")");
    }
    HyperBox out{A.lo, B.hi, A.dims};
    out.dims.insert(out.dims.end(), B.dims.begin() + 1, B.dims.end());
    return out;
}

/// Point-level join: pairs agreeing on the shared coordinate, concatenated.
inline std::vector<std::vector<std::size_t>> box_join_points(const HyperBox& A, const HyperBox& B) {
    box_join(A, B);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& a : A.points())
        for (const auto& b : B.points()) {
            if (a.back() != b.front()) continue;
            std::vector<std::size_t> p = a;
            p.insert(p.end(), b.begin() + 1, b.end());
            out.push_back(std::move(p));
        }
    return out;
}

struct BijectionReport {
    Integer chains = 0;
    Integer box_points = 0;
    bool into_box = true;  // every chain maps to a point of the box
    bool injective = true;
    bool surjective = true;
    bool bijective() const { return into_box && injective && surjective; }
};

/// Checks that chain ↦ (position tuple) is a bijection onto V_{k,n}.
inline BijectionReport chain_box_bijection(const GradedPoset& P, std::size_t k, std::size_t n) {
    if (!P.is_cobweb()) throw RefusedError("the chain/box identification is stated for cobweb posets only");
    HyperBox box = hyperbox(P, k, n);
    BijectionReport rep;
    rep.box_points = box.cardinality();
    std::vector<bool> hit(to_size(rep.box_points, "hyper-box cardinality"), false);
    std::vector<std::size_t> p(n - k + 1);
    for_each_max_chain(P, k, n, [&](const Chain& c) {
        ++rep.chains;
        for (std::size_t i = 0; i < c.size(); ++i) p[i] = c[i].position;
        if (!box.contains(p)) {
            rep.into_box = false;
            return true;
        }
        std::size_t idx = box.index_of(p);
        if (hit[idx]) rep.injective = false;
        hit[idx] = true;
        return true;
    });
    for (bool h : hit)
        if (!h) rep.surjective = false;
    return rep;
}

struct PartitionReport {
    Integer chains;       // |C_max(Φ_{k+1} → Φ_n)|, enumerated; 1 when k = n
    Integer block_count;  // m_F!, m = n - k
    Rational ratio;       // chains / m_F!
    Rational fnomial;     // fnomial(F, n, k)
    bool divisible() const { return is_integral(ratio); }
    bool holds() const { return divisible() && ratio == fnomial; }
};

/// Cardinality side of the chain-partition statement for F-nomials.
inline PartitionReport fnomial_partition_check(const FSequence& F, std::size_t n, std::size_t k) {
    if (k > n) throw DomainError("fnomial_partition_check needs k <= n");
    auto verdict = is_cobweb_admissible(F, n);
    if (!verdict.admissible) throw RefusedError("sequence is not cobweb-admissible up to " + std::to_string(n));
    PartitionReport rep;
    if (k == n) {
        rep.chains = 1;
    } else {
        GradedPoset P = cobweb_poset(F, n);
        rep.chains = enumerate_count(P, k + 1, n);
    }
    rep.block_count = f_factorial(F, n - k);
    rep.ratio = Rational(rep.chains, rep.block_count);
    rep.ratio.canonicalize();
    rep.fnomial = fnomial(F, n, k);
    return rep;
}

struct MaxFnomialProbe {
    Rational lhs;       // fnomial(F, l, k)
    Integer max_entry;  // [Max] between ranks k-2 and l+1 of the rooted cobweb
    Rational rhs;       // max_entry / (l-k)_F!
    bool equal() const { return lhs == rhs; }
};

/// Reports both sides of fnomial(F,l,k) = [Max]_{k-2,l+1} / (l-k)_F! on the
/// rooted cobweb (rank 0 is the root). Not asserted.
inline MaxFnomialProbe max_fnomial_probe(const FSequence& F, std::size_t l, std::size_t k) {
    if (k < 2 || k > l) throw DomainError("probe needs 2 <= k <= l");
    GradedPoset R = cobweb_poset(F.rooted(l + 1), l + 2);
    const auto& L = R.labeling();
    MaxFnomialProbe p;
    p.lhs = fnomial(F, l, k);
    p.max_entry = count_interval_chains(R, L.node(k - 1, 1), L.node(l + 2, 1));
    p.rhs = Rational(p.max_entry, f_factorial(F, l - k));
    p.rhs.canonicalize();
    return p;
}

}  // namespace cobweb
