#pragma once

// Rooted posets and their Möbius values from the root, Whitney numbers and
// characteristic polynomials. Ranks are 0-based: rank(x) = level(x) - 1.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/exact.hpp"
#include "cobweb/fsequence.hpp"
#include "cobweb/incidence.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

/// A graded poset with a single bottom element 0 at level 1 (rank 0) and no
/// node above it that lacks a lower cover, so 0 ≤ x for every x.
class RootedPoset {
public:
    static bool is_rooted(const GradedPoset& P) {
        if (P.level_size(1) != 1) return false;
        for (std::size_t k = 2; k <= P.level_count(); ++k)
            for (std::size_t j = 0; j < P.level_size(k); ++j)
                if (P.block(k - 1).col_is_zero(j)) return false;
        return true;
    }

    static RootedPoset from(GradedPoset P) {
        if (!is_rooted(P)) {
            throw RefusedError("poset is not rooted: level 1 must be a singleton and every higher node needs a lower cover");
        }
        return RootedPoset(std::move(P));
    }

    const GradedPoset& poset() const { return P_; }
    /// n: the top rank.
    std::size_t top_rank() const { return P_.level_count() - 1; }
    std::size_t rank_size(std::size_t r) const { return P_.level_size(r + 1); }
    std::size_t rank_of(const NodeLabel& x) const { return x.level - 1; }

private:
    explicit RootedPoset(GradedPoset P) : P_(std::move(P)) {}
    GradedPoset P_;
};

/// Singleton root followed by cobweb levels 1_F..n_F.
inline RootedPoset root(const FSequence& F, std::size_t n) {
    if (n == 0) {
        std::optional<std::string> name;
        if (F.name()) name = "root+" + *F.name();
        return RootedPoset::from(antichain(1).with_sequence(name));
    }
    return RootedPoset::from(cobweb_poset(F.rooted(n), n + 1));
}

enum class RootMethod { closed_form, recurrence };

namespace detail {

// Sequence of rank sizes seen 1-based: index r+1 holds |rank r|.
inline FSequence rank_sequence(const RootedPoset& P) { return FSequence::custom(P.poset().level_sizes()); }

inline Integer root_mobius_closed(const RootedPoset& P, std::size_t rank) {
    if (!P.poset().is_cobweb()) throw RefusedError("closed-form Möbius values need a cobweb poset");
    return interval_mobius(rank_sequence(P), 1, rank + 1);
}

// μ(0, y) = -Σ_{0 ≤ z < y} μ(0, z) over global labels.
inline std::vector<Integer> root_mobius_row(const RootedPoset& P) {
    const GradedPoset& G = P.poset();
    const std::size_t N = G.node_count();
    auto reach = reachability(G);
    std::vector<Integer> mu(N, 0);
    mu[0] = 1;
    for (std::size_t y = 1; y < N; ++y) {
        Integer acc = 0;
        for (std::size_t z = 0; z < y; ++z)
            if (reach[z][y]) acc += mu[z];
        mu[y] = -acc;
    }
    return mu;
}

inline void check_rank(const RootedPoset& P, std::size_t r) {
    if (r > P.top_rank()) {
        throw DomainError("rank " + std::to_string(r) + " exceeds top rank " + std::to_string(P.top_rank()));
    }
}

}  // namespace detail

/// μ(0, x).
inline Integer mobius_from_root(const RootedPoset& P, const NodeLabel& x,
                                RootMethod method = RootMethod::closed_form) {
    NodeLabel canon = P.poset().labeling().node(x.level, x.position);
    if (method == RootMethod::closed_form) return detail::root_mobius_closed(P, P.rank_of(canon));
    return detail::root_mobius_row(P)[canon.global - 1];
}

enum class WhitneyMethod { closed_form, direct_sum };

/// w_r = Σ_{rank(x) = r} μ(0, x)
inline Integer whitney_first(const RootedPoset& P, std::size_t r, WhitneyMethod method = WhitneyMethod::closed_form) {
    detail::check_rank(P, r);
    if (method == WhitneyMethod::closed_form) {
        return Integer(static_cast<unsigned long>(P.rank_size(r))) * detail::root_mobius_closed(P, r);
    }
    auto mu = detail::root_mobius_row(P);
    const auto& L = P.poset().labeling();
    Integer w = 0;
    for (std::size_t i = 1; i <= P.rank_size(r); ++i) w += mu[L.global(r + 1, i) - 1];
    return w;
}

/// W_r = |rank r|
inline Integer whitney_second(const RootedPoset& P, std::size_t r) {
    detail::check_rank(P, r);
    return Integer(static_cast<unsigned long>(P.rank_size(r)));
}

/// χ(t), coefficients highest degree first.
class CharPoly {
public:
    explicit CharPoly(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
        if (c_.empty()) throw DomainError("characteristic polynomial needs at least one coefficient");
    }

    std::size_t degree() const { return c_.size() - 1; }
    const std::vector<Integer>& coefficients() const { return c_; }

    Integer evaluate(const Integer& t) const {
        Integer v = 0;
        for (const auto& a : c_) v = v * t + a;
        return v;
    }

    /// e.g. "t^2 - 2t + 3"
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        const std::size_t n = degree();
        for (std::size_t i = 0; i <= n; ++i) {
            const Integer& a = c_[i];
            if (a == 0) continue;
            std::size_t p = n - i;
            Integer mag = abs(a);
            if (first) {
                if (a < 0) os << '-';
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            if (mag != 1 || p == 0) os << mag.get_str();
            if (p >= 1) os << 't';
            if (p >= 2) os << '^' << p;
            first = false;
        }
        if (first) os << '0';
        return os.str();
    }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    std::vector<Integer> c_;
};

enum class CharPolyMethod { closed_form, direct };

/// χ(t) = Σ_x μ(0, x) t^{n - rank(x)}
inline CharPoly char_poly(const RootedPoset& P, CharPolyMethod method = CharPolyMethod::closed_form) {
    const std::size_t n = P.top_rank();
    std::vector<Integer> c(n + 1, 0);
    if (method == CharPolyMethod::closed_form) {
        for (std::size_t k = 0; k <= n; ++k) c[k] = whitney_first(P, k, WhitneyMethod::closed_form);
        return CharPoly(std::move(c));
    }
    auto mu = detail::root_mobius_row(P);
    const auto& L = P.poset().labeling();
    for (std::size_t x = 1; x <= P.poset().node_count(); ++x) c[L.rank_of(x) - 1] += mu[x - 1];
    return CharPoly(std::move(c));
}

}  // namespace cobweb
