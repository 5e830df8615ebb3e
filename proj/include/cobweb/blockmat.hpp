#pragma once

// Square matrices indexed by the natural labeling of a graded poset, over
// the Boolean semiring or the integers. Multiplication skips block bands
// that are known to be zero, so powers of a cover matrix stay cheap.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/exact.hpp"

namespace cobweb {

/// ({0,1}, or, and). There is no additive inverse.
struct BooleanSemiring {
    using value_type = std::uint8_t;
    static constexpr const char* name = "boolean";
    static value_type zero() { return 0; }
    static value_type one() { return 1; }
    static value_type add(value_type a, value_type b) { return (a | b) ? 1 : 0; }
    static value_type mul(value_type a, value_type b) { return (a & b) ? 1 : 0; }
    static void mul_add(value_type& acc, value_type a, value_type b) { acc = (acc | (a & b)) ? 1 : 0; }
};

/// Arbitrary-precision integers.
struct IntegerRing {
    using value_type = Integer;
    static constexpr const char* name = "integer";
    static value_type zero() { return 0; }
    static value_type one() { return 1; }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type negate(const value_type& a) { return -a; }
    static void mul_add(value_type& acc, const value_type& a, const value_type& b) {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
};

template <class R>
concept Semiring = requires(typename R::value_type a, typename R::value_type b, typename R::value_type& acc) {
    { R::zero() } -> std::convertible_to<typename R::value_type>;
    { R::one() } -> std::convertible_to<typename R::value_type>;
    { R::add(a, b) } -> std::convertible_to<typename R::value_type>;
    { R::mul(a, b) } -> std::convertible_to<typename R::value_type>;
    R::mul_add(acc, a, b);
    { a == b } -> std::convertible_to<bool>;
};

template <class R>
concept Ring = Semiring<R> && requires(typename R::value_type a) {
    { R::negate(a) } -> std::convertible_to<typename R::value_type>;
};

enum class Structure {
    general,               // some nonzero entry below the block diagonal
    upper_block,           // zero below the block diagonal
    strictly_upper_block,  // zero on and below the block diagonal
    unitriangular,         // upper block, unit diagonal, zero strictly below the diagonal
};

inline const char* to_string(Structure s) {
    switch (s) {
        case Structure::general: return "general";
        case Structure::upper_block: return "upper_block";
        case Structure::strictly_upper_block: return "strictly_upper_block";
        case Structure::unitriangular: return "unitriangular";
    }
    return "?";
}

template <Semiring R>
class BlockMatrix {
public:
    using ring = R;
    using value_type = typename R::value_type;

    BlockMatrix(std::vector<std::size_t> level_sizes, std::vector<value_type> entries)
        : sizes_(std::move(level_sizes)), entries_(std::move(entries)) {
        init_offsets();
        if (entries_.size() != n_ * n_) {
            throw DomainError("matrix needs " + std::to_string(n_ * n_) + " entries for level sizes summing to " +
                              std::to_string(n_) + ", got " + std::to_string(entries_.size()));
        }
        classify();
    }

    static BlockMatrix zero(std::vector<std::size_t> level_sizes) {
        std::size_t n = 0;
        for (auto s : level_sizes) n += s;
        return BlockMatrix(std::move(level_sizes), std::vector<value_type>(n * n, R::zero()));
    }

    static BlockMatrix identity(std::vector<std::size_t> level_sizes) {
        return from_function(std::move(level_sizes),
                             [](std::size_t i, std::size_t j) { return i == j ? R::one() : R::zero(); });
    }

    /// f(i, j) with 0-based indices.
    template <class Fn>
    static BlockMatrix from_function(std::vector<std::size_t> level_sizes, Fn&& f) {
        std::size_t n = 0;
        for (auto s : level_sizes) n += s;
        std::vector<value_type> e;
        e.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) e.push_back(static_cast<value_type>(f(i, j)));
        return BlockMatrix(std::move(level_sizes), std::move(e));
    }

    std::size_t size() const { return n_; }
    std::size_t level_count() const { return sizes_.size(); }
    const std::vector<std::size_t>& level_sizes() const { return sizes_; }

    /// First 0-based index of 0-based level k.
    std::size_t offset(std::size_t k) const { return offsets_.at(k); }
    /// 0-based level of 0-based index i.
    std::size_t level_of(std::size_t i) const { return level_.at(i); }

    /// 0-based access.
    const value_type& at(std::size_t i, std::size_t j) const {
        if (i >= n_ || j >= n_) throw DomainError("matrix index out of range");
        return entries_[i * n_ + j];
    }
    const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<value_type>& entries() const { return entries_; }

    Structure structure() const { return structure_; }
    bool is_zero() const { return !has_nonzero_; }

    /// Smallest block distance level(j) - level(i) over nonzero entries.
    /// Negative for general matrices; meaningless when is_zero().
    std::ptrdiff_t min_band() const { return min_band_; }
    std::ptrdiff_t max_band() const { return max_band_; }

    /// Copy of block (r, s), 0-based levels.
    std::vector<std::vector<value_type>> block(std::size_t r, std::size_t s) const {
        std::vector<std::vector<value_type>> out(sizes_.at(r), std::vector<value_type>(sizes_.at(s)));
        for (std::size_t i = 0; i < sizes_[r]; ++i)
            for (std::size_t j = 0; j < sizes_[s]; ++j) out[i][j] = (*this)(offsets_[r] + i, offsets_[s] + j);
        return out;
    }

    template <class S, class Fn>
    BlockMatrix<S> map(Fn&& f) const {
        std::vector<typename S::value_type> e;
        e.reserve(entries_.size());
        for (const auto& v : entries_) e.push_back(f(v));
        return BlockMatrix<S>(sizes_, std::move(e));
    }

    friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
        return a.sizes_ == b.sizes_ && a.entries_ == b.entries_;
    }

private:
    void init_offsets() {
        offsets_.assign(sizes_.size() + 1, 0);
        for (std::size_t k = 0; k < sizes_.size(); ++k) offsets_[k + 1] = offsets_[k] + sizes_[k];
        n_ = offsets_.back();
        level_.resize(n_);
        for (std::size_t k = 0; k < sizes_.size(); ++k)
            for (std::size_t i = offsets_[k]; i < offsets_[k + 1]; ++i) level_[i] = k;
    }

    void classify() {
        const value_type z = R::zero(), o = R::one();
        min_band_ = std::numeric_limits<std::ptrdiff_t>::max();
        max_band_ = std::numeric_limits<std::ptrdiff_t>::min();
        has_nonzero_ = false;
        bool unit_diag = true, lower_zero = true;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                const value_type& v = entries_[i * n_ + j];
                if (i == j && !(v == o)) unit_diag = false;
                if (v == z) continue;
                if (j < i) lower_zero = false;
                has_nonzero_ = true;
                auto d = static_cast<std::ptrdiff_t>(level_[j]) - static_cast<std::ptrdiff_t>(level_[i]);
                min_band_ = std::min(min_band_, d);
                max_band_ = std::max(max_band_, d);
            }
        }
        if (!has_nonzero_ || min_band_ >= 1) {
            structure_ = Structure::strictly_upper_block;
        } else if (min_band_ < 0) {
            structure_ = Structure::general;
        } else if (unit_diag && lower_zero && n_ > 0) {
            structure_ = Structure::unitriangular;
        } else {
            structure_ = Structure::upper_block;
        }
    }

    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> level_;
    std::size_t n_ = 0;
    std::vector<value_type> entries_;
    Structure structure_ = Structure::general;
    bool has_nonzero_ = false;
    std::ptrdiff_t min_band_ = 0;
    std::ptrdiff_t max_band_ = 0;
};

namespace detail {
template <Semiring R>
void require_same_shape(const BlockMatrix<R>& a, const BlockMatrix<R>& b, const char* op) {
    if (a.level_sizes() != b.level_sizes()) {
        throw DomainError(std::string(op) + ": operands have different level sizes");
    }
}
}  // namespace detail

/// Exact product. For C(i,j) only middle indices t whose level lies in
/// [level(i) + A.min_band, level(j) - B.min_band] can contribute.
template <Semiring R>
BlockMatrix<R> mul(const BlockMatrix<R>& A, const BlockMatrix<R>& B) {
    detail::require_same_shape(A, B, "mul");
    const std::size_t n = A.size();
    const auto L = static_cast<std::ptrdiff_t>(A.level_count());
    std::vector<typename R::value_type> out(n * n, R::zero());
    if (A.is_zero() || B.is_zero()) return BlockMatrix<R>(A.level_sizes(), std::move(out));
    const auto zero = R::zero();
    const std::ptrdiff_t a_lo = A.min_band(), a_hi = A.max_band();
    const std::ptrdiff_t b_lo = B.min_band(), b_hi = B.max_band();
    for (std::size_t i = 0; i < n; ++i) {
        const auto li = static_cast<std::ptrdiff_t>(A.level_of(i));
        std::ptrdiff_t t_lo_level = std::max<std::ptrdiff_t>(0, li + a_lo);
        std::ptrdiff_t t_hi_level = std::min<std::ptrdiff_t>(L - 1, li + a_hi);
        if (t_lo_level > t_hi_level) continue;
        for (std::ptrdiff_t tl = t_lo_level; tl <= t_hi_level; ++tl) {
            std::size_t j_lo_level = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, tl + b_lo));
            std::ptrdiff_t j_hi = std::min<std::ptrdiff_t>(L - 1, tl + b_hi);
            if (static_cast<std::ptrdiff_t>(j_lo_level) > j_hi) continue;
            std::size_t j_begin = A.offset(j_lo_level);
            std::size_t j_end = A.offset(static_cast<std::size_t>(j_hi) + 1);
            for (std::size_t t = A.offset(static_cast<std::size_t>(tl));
                 t < A.offset(static_cast<std::size_t>(tl) + 1); ++t) {
                const auto& a = A(i, t);
                if (a == zero) continue;
                auto* row = &out[i * n];
                for (std::size_t j = j_begin; j < j_end; ++j) {
                    const auto& b = B(t, j);
                    if (b == zero) continue;
                    R::mul_add(row[j], a, b);
                }
            }
        }
    }
    return BlockMatrix<R>(A.level_sizes(), std::move(out));
}

template <Semiring R>
BlockMatrix<R> add(const BlockMatrix<R>& A, const BlockMatrix<R>& B) {
    detail::require_same_shape(A, B, "add");
    std::vector<typename R::value_type> e;
    e.reserve(A.entries().size());
    for (std::size_t k = 0; k < A.entries().size(); ++k) e.push_back(R::add(A.entries()[k], B.entries()[k]));
    return BlockMatrix<R>(A.level_sizes(), std::move(e));
}

template <Ring R>
BlockMatrix<R> negate(const BlockMatrix<R>& A) {
    return A.template map<R>([](const auto& v) { return R::negate(v); });
}

template <Ring R>
BlockMatrix<R> sub(const BlockMatrix<R>& A, const BlockMatrix<R>& B) {
    return add(A, negate(B));
}

/// I + K + K^2 + ..., for K zero on and below the block diagonal.
/// Over the Boolean semiring this is the reflexive-transitive closure.
template <Semiring R>
BlockMatrix<R> nilpotent_closure(const BlockMatrix<R>& K) {
    if (K.structure() != Structure::strictly_upper_block) {
        throw RefusedError(std::string("nilpotent closure needs a strictly upper block matrix, got ") +
                           to_string(K.structure()));
    }
    BlockMatrix<R> sum = BlockMatrix<R>::identity(K.level_sizes());
    BlockMatrix<R> term = K;
    // term = K^j has min_band >= j, so at most level_count - 1 terms are nonzero.
    while (!term.is_zero()) {
        sum = add(sum, term);
        term = mul(term, K);
    }
    return sum;
}

/// (I + N)^{-1} = Σ (-N)^k for unitriangular M = I + N.
template <Ring R>
BlockMatrix<R> unitriangular_inverse(const BlockMatrix<R>& M) {
    if (M.size() == 0) return M;
    if (M.structure() != Structure::unitriangular) {
        throw RefusedError(std::string("unitriangular inverse needs a unitriangular matrix, got ") +
                           to_string(M.structure()));
    }
    BlockMatrix<R> I = BlockMatrix<R>::identity(M.level_sizes());
    BlockMatrix<R> minusN = negate(sub(M, I));
    BlockMatrix<R> sum = I;
    BlockMatrix<R> term = minusN;
    for (std::size_t k = 1; !term.is_zero(); ++k) {
        if (k > M.size()) throw DomainError("unitriangular inverse series did not terminate");
        sum = add(sum, term);
        term = mul(term, minusN);
    }
    return sum;
}

/// Overlay of A (levels a_1..a_p) and B (levels b_1..b_q) with a_p = b_1
/// identified. The shared diagonal block must agree; cross blocks between
/// A-only and B-only levels are zero.
template <Semiring R>
BlockMatrix<R> natural_join(const BlockMatrix<R>& A, const BlockMatrix<R>& B) {
    if (A.level_count() == 0 || B.level_count() == 0 || A.level_sizes().back() != B.level_sizes().front()) {
        throw JoinError("matrix natural join needs the top level of A to match the bottom level of B");
    }
    std::vector<std::size_t> sizes = A.level_sizes();
    sizes.insert(sizes.end(), B.level_sizes().begin() + 1, B.level_sizes().end());
    const std::size_t off = A.offset(A.level_count() - 1);
    const std::size_t na = A.size(), nb = B.size();
    for (std::size_t i = off; i < na; ++i)
        for (std::size_t j = off; j < na; ++j)
            if (!(A(i, j) == B(i - off, j - off))) {
                throw JoinError("matrix natural join: shared diagonal block differs");
            }
    return BlockMatrix<R>::from_function(std::move(sizes), [&](std::size_t i, std::size_t j) {
        if (i < na && j < na) return A(i, j);
        if (i >= off && j >= off && i - off < nb && j - off < nb) return B(i - off, j - off);
        return R::zero();
    });
}

}  // namespace cobweb
