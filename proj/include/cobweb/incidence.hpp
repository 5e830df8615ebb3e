#pragma once

// Incidence-algebra elements of a graded poset: cover κ, reflexive cover η,
// zeta (four routes), Möbius (three routes), [Max], L, Kroton functions and
// the level-indexed coding matrix.

#include <cstddef>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/blockmat.hpp"
#include "cobweb/error.hpp"
#include "cobweb/exact.hpp"
#include "cobweb/fsequence.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

using BoolMatrix = BlockMatrix<BooleanSemiring>;
using IntMatrix = BlockMatrix<IntegerRing>;

/// Block (k, k+1) holds B_k; everything else is zero.
template <Semiring R = IntegerRing>
BlockMatrix<R> kappa(const GradedPoset& P) {
    std::vector<typename R::value_type> e(P.node_count() * P.node_count(), R::zero());
    const std::size_t N = P.node_count();
    const auto& L = P.labeling();
    for (std::size_t k = 1; k < P.level_count(); ++k) {
        const BinaryMatrix& B = P.block(k);
        for (std::size_t i = 0; i < B.rows(); ++i)
            for (std::size_t j = 0; j < B.cols(); ++j)
                if (B.at(i, j)) e[(L.global(k, i + 1) - 1) * N + (L.global(k + 1, j + 1) - 1)] = R::one();
    }
    return BlockMatrix<R>(P.level_sizes(), std::move(e));
}

/// η = δ + κ
template <Semiring R = IntegerRing>
BlockMatrix<R> eta(const GradedPoset& P) {
    return add(BlockMatrix<R>::identity(P.level_sizes()), kappa<R>(P));
}

/// η^{-1} = Σ (-κ)^k
inline IntMatrix eta_inverse(const GradedPoset& P) { return unitriangular_inverse(eta<IntegerRing>(P)); }

inline IntMatrix to_integer(const BoolMatrix& M) {
    return M.map<IntegerRing>([](std::uint8_t v) { return Integer(v ? 1 : 0); });
}

/// Entrywise positive -> 1, zero -> 0. Negative entries are refused.
inline BoolMatrix logic_L(const IntMatrix& M) {
    return M.map<BooleanSemiring>([](const Integer& v) -> std::uint8_t {
        if (v < 0) throw RefusedError("L is defined on nonnegative matrices; found entry " + v.get_str());
        return v > 0 ? 1 : 0;
    });
}

enum class ZetaMethod { closure, label_delta, label_knuth, label_S };

inline const char* to_string(ZetaMethod m) {
    switch (m) {
        case ZetaMethod::closure: return "closure";
        case ZetaMethod::label_delta: return "label-delta";
        case ZetaMethod::label_knuth: return "label-knuth";
        case ZetaMethod::label_S: return "label-s";
    }
    return "?";
}

namespace detail {

inline bool delta(std::size_t a, std::size_t b) { return a == b; }

// ζ_1(x,y) = Σ_{k≥0} δ(x+k, y)
inline int label_zeta1(std::size_t x, std::size_t y, std::size_t N) {
    int v = 0;
    for (std::size_t k = 0; x + k <= N; ++k) v += delta(x + k, y);
    return v;
}

// ζ_0(x,y) = Σ_{s≥1} Σ_{k≥1} δ(x, k + S(s-1)) Σ_{r=1}^{s_F - k} δ(x + r, y)
inline int label_zeta0_delta(std::size_t x, std::size_t y, const NaturalLabeling& L,
                             const std::vector<std::size_t>& sizes) {
    int v = 0;
    for (std::size_t s = 1; s <= sizes.size(); ++s) {
        for (std::size_t k = 1; k <= sizes[s - 1]; ++k) {
            if (!delta(x, k + L.cumulative(s - 1))) continue;
            for (std::size_t r = 1; r + k <= sizes[s - 1]; ++r) v += delta(x + r, y);
        }
    }
    return v;
}

// ζ_0(x,y) = Σ_{s≥1} [x > S(s-1)][1 ≤ y - x ≤ S(s) - x]
inline int label_zeta0_knuth(std::size_t x, std::size_t y, const NaturalLabeling& L) {
    int v = 0;
    for (std::size_t s = 1; s <= L.level_count(); ++s) {
        bool a = x > L.cumulative(s - 1);
        bool b = y > x && y <= L.cumulative(s);
        v += (a && b) ? 1 : 0;
    }
    return v;
}

// [x ≤ y] - [x < y] Σ_{n≥0} [x > S(n)][y ≤ S(n+1)]
inline int label_zeta_S(std::size_t x, std::size_t y, const NaturalLabeling& L) {
    int sum = 0;
    for (std::size_t n = 0; n < L.level_count(); ++n)
        sum += (x > L.cumulative(n) && y <= L.cumulative(n + 1)) ? 1 : 0;
    return (x <= y ? 1 : 0) - (x < y ? 1 : 0) * sum;
}

inline std::uint8_t checked_bit(int v, std::size_t x, std::size_t y, const char* method) {
    if (v != 0 && v != 1) {
        throw DomainError(std::string(method) + " produced " + std::to_string(v) + " at (" + std::to_string(x) +
                          "," + std::to_string(y) + ")");
    }
    return static_cast<std::uint8_t>(v);
}

}  // namespace detail

/// ζ(x, y) = [x ≤ y]. The label formulas hold only for cobwebs.
inline BoolMatrix zeta(const GradedPoset& P, ZetaMethod method = ZetaMethod::closure) {
    if (method == ZetaMethod::closure) return nilpotent_closure(kappa<BooleanSemiring>(P));
    if (!P.is_cobweb()) {
        throw RefusedError(std::string("zeta method ") + to_string(method) + " is only valid on cobweb posets");
    }
    const auto& L = P.labeling();
    const std::size_t N = P.node_count();
    return BoolMatrix::from_function(P.level_sizes(), [&](std::size_t i, std::size_t j) -> std::uint8_t {
        std::size_t x = i + 1, y = j + 1;
        switch (method) {
            case ZetaMethod::label_delta:
                return detail::checked_bit(
                    detail::label_zeta1(x, y, N) - detail::label_zeta0_delta(x, y, L, P.level_sizes()), x, y,
                    "label-delta");
            case ZetaMethod::label_knuth:
                return detail::checked_bit((x <= y ? 1 : 0) - detail::label_zeta0_knuth(x, y, L), x, y,
                                           "label-knuth");
            case ZetaMethod::label_S:
                return detail::checked_bit(detail::label_zeta_S(x, y, L), x, y, "label-s");
            default:
                return 0;
        }
    });
}

/// K_s(r_F): 0 if s ≤ r, 1 if s = r+1, else Π_{i=r+1}^{s-1} (i_F - 1).
inline Integer kroton(const FSequence& F, std::size_t r, std::size_t s) {
    if (s <= r) return 0;
    Integer p = 1;
    for (std::size_t i = r + 1; i < s; ++i) p *= F.at(i) - 1;
    return p;
}

/// Level-indexed c_{r,s}, 1 ≤ r,s ≤ n.
class CodingMatrix {
public:
    explicit CodingMatrix(std::vector<std::vector<Integer>> c) : c_(std::move(c)) {}

    std::size_t size() const { return c_.size(); }
    const Integer& at(std::size_t r, std::size_t s) const {
        if (r < 1 || s < 1 || r > c_.size() || s > c_.size()) {
            throw DomainError("coding matrix index (" + std::to_string(r) + "," + std::to_string(s) +
                              ") out of range");
        }
        return c_[r - 1][s - 1];
    }
    const std::vector<std::vector<Integer>>& rows() const { return c_; }

    friend bool operator==(const CodingMatrix&, const CodingMatrix&) = default;

private:
    std::vector<std::vector<Integer>> c_;
};

/// c_{r,s} = δ_{r,s} + [s > r] (-1)^{s-r} K_s(r_F)
inline CodingMatrix coding_matrix(const FSequence& F, std::size_t n) {
    std::vector<std::vector<Integer>> c(n, std::vector<Integer>(n, 0));
    for (std::size_t r = 1; r <= n; ++r) {
        c[r - 1][r - 1] = 1;
        for (std::size_t s = r + 1; s <= n; ++s) c[r - 1][s - 1] = sign_power(s - r) * kroton(F, r, s);
    }
    return CodingMatrix(std::move(c));
}

/// The Möbius recurrence summed over interval elements: level r contributes
/// x alone, each level strictly between contributes i_F equal terms.
/// c_{r,s} = -(c_{r,r} + Σ_{r<i<s} i_F c_{r,i})
inline CodingMatrix coding_matrix_by_recurrence(const FSequence& F, std::size_t n) {
    std::vector<std::vector<Integer>> c(n, std::vector<Integer>(n, 0));
    for (std::size_t r = 1; r <= n; ++r) {
        c[r - 1][r - 1] = 1;
        for (std::size_t s = r + 1; s <= n; ++s) {
            Integer acc = c[r - 1][r - 1];
            for (std::size_t i = r + 1; i < s; ++i) acc += F.at(i) * c[r - 1][i - 1];
            c[r - 1][s - 1] = -acc;
        }
    }
    return CodingMatrix(std::move(c));
}

/// B(r_F × s_F) = B_r B_{r+1} ... B_{s-1} as an integer matrix; identity when r = s.
inline std::vector<std::vector<Integer>> path_count_block(const GradedPoset& P, std::size_t r, std::size_t s) {
    if (r < 1 || r > s || s > P.level_count()) {
        throw DomainError("path_count_block levels (" + std::to_string(r) + "," + std::to_string(s) +
                          ") out of range");
    }
    std::size_t rows = P.level_size(r);
    std::vector<std::vector<Integer>> acc(rows, std::vector<Integer>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) acc[i][i] = 1;
    for (std::size_t k = r; k < s; ++k) {
        const BinaryMatrix& B = P.block(k);
        std::vector<std::vector<Integer>> next(rows, std::vector<Integer>(B.cols(), 0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t t = 0; t < B.rows(); ++t) {
                if (acc[i][t] == 0) continue;
                for (std::size_t j = 0; j < B.cols(); ++j)
                    if (B.at(t, j)) next[i][j] += acc[i][t];
            }
        acc = std::move(next);
    }
    return acc;
}

/// [Max] = Σ κ^k over the integers; entry (x, y) counts cover paths x → y.
inline IntMatrix max_matrix(const GradedPoset& P) { return nilpotent_closure(kappa<IntegerRing>(P)); }

/// [Max]^{-1} = δ - κ
inline IntMatrix max_inverse(const GradedPoset& P) {
    return sub(IntMatrix::identity(P.level_sizes()), kappa<IntegerRing>(P));
}

enum class MobiusMethod { closed_form, invert, recurrence };

inline const char* to_string(MobiusMethod m) {
    switch (m) {
        case MobiusMethod::closed_form: return "closed-form";
        case MobiusMethod::invert: return "invert";
        case MobiusMethod::recurrence: return "recurrence";
    }
    return "?";
}

/// μ = ζ^{-1} over the integers.
inline IntMatrix mobius(const GradedPoset& P, MobiusMethod method = MobiusMethod::invert) {
    switch (method) {
        case MobiusMethod::invert:
            return unitriangular_inverse(to_integer(zeta(P, ZetaMethod::closure)));
        case MobiusMethod::closed_form: {
            if (!P.is_cobweb()) throw RefusedError("closed-form Möbius matrix is only valid on cobweb posets");
            CodingMatrix C = coding_matrix(FSequence::custom(P.level_sizes()), P.level_count());
            return IntMatrix::from_function(P.level_sizes(), [&](std::size_t i, std::size_t j) -> Integer {
                if (i == j) return 1;
                std::size_t li = P.labeling().rank_of(i + 1), lj = P.labeling().rank_of(j + 1);
                if (lj <= li) return 0;
                return C.at(li, lj);
            });
        }
        case MobiusMethod::recurrence: {
            // μ(x,y) = -Σ_{x≤z<y} μ(x,z); global labels are a linear extension.
            const std::size_t N = P.node_count();
            auto reach = reachability(P);
            std::vector<Integer> e(N * N, 0);
            for (std::size_t x = 0; x < N; ++x) {
                e[x * N + x] = 1;
                for (std::size_t y = x + 1; y < N; ++y) {
                    if (!reach[x][y]) continue;
                    Integer acc = 0;
                    for (std::size_t z = x; z < y; ++z)
                        if (reach[x][z] && reach[z][y]) acc += e[x * N + z];
                    e[x * N + y] = -acc;
                }
            }
            return IntMatrix(P.level_sizes(), std::move(e));
        }
    }
    throw DomainError("unknown Möbius method");
}

using WarningSink = std::function<void(const std::string&)>;

inline void stderr_warning(const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }

/// μ(x, y) for x ∈ Φ_r, y ∈ Φ_s of a cobweb: (-1)^{s-r} Π_{k=r+1}^{s-1} (k_F - 1).
inline Integer interval_mobius(const FSequence& F, std::size_t r, std::size_t s,
                               const WarningSink& warn = stderr_warning) {
    if (s < r) {
        if (warn) {
            warn("interval_mobius(r=" + std::to_string(r) + ", s=" + std::to_string(s) +
                 ") has s < r; returning 0");
        }
        return 0;
    }
    Integer p = sign_power(s - r);
    for (std::size_t k = r + 1; k < s; ++k) p *= F.at(k) - 1;
    return p;
}

/// Grid coordinate ⟨position, level⟩.
struct GridPoint {
    std::size_t position = 0;
    std::size_t level = 0;
};

/// δ(s,u)δ(t,v) - δ(t+1,v) + Σ_{k≥2} δ(t+k,v) (-1)^k Π_{i=t+1}^{v-1} (i_F - 1)
inline Integer mobius_krot(const FSequence& F, GridPoint x, GridPoint y) {
    auto check = [&](GridPoint p, const char* which) {
        if (p.level < 1 || p.position < 1 || Integer(static_cast<unsigned long>(p.position)) > F.at(p.level)) {
            throw DomainError(std::string("coordinate ") + which + " = <" + std::to_string(p.position) + "," +
                              std::to_string(p.level) + "> violates 1 <= position <= level_F");
        }
    };
    check(x, "x");
    check(y, "y");
    const std::size_t s = x.position, t = x.level, u = y.position, v = y.level;
    Integer out = (s == u && t == v) ? 1 : 0;
    if (t + 1 == v) out -= 1;
    if (v >= t + 2) {
        Integer p = sign_power(v - t);
        for (std::size_t i = t + 1; i < v; ++i) p *= F.at(i) - 1;
        out += p;
    }
    return out;
}

}  // namespace cobweb
