#pragma once

// F-sequences: the positive-integer level-size sequences k -> k_F that
// denominate graded posets, together with F-factorials and F-nomials.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/error.hpp"
#include "cobweb/exact.hpp"

namespace cobweb {

class FSequence {
public:
    enum class Kind { natural, fibonacci, gauss, constant, custom };

    static FSequence natural() { return FSequence(Kind::natural, 0, {}, "nat"); }

    /// 1_F = 1, 2_F = 1, 3_F = 2, ...
    static FSequence fibonacci() { return FSequence(Kind::fibonacci, 0, {}, "fib"); }

    /// k_F = 1 + q + ... + q^{k-1}
    static FSequence gauss(long q) {
        if (q < 2) throw ConstructionError("gauss sequence needs q >= 2, got " + std::to_string(q));
        return FSequence(Kind::gauss, q, {}, "gauss:q=" + std::to_string(q));
    }

    static FSequence constant(long c) {
        if (c < 1) throw ConstructionError("constant sequence needs c >= 1, got " + std::to_string(c));
        return FSequence(Kind::constant, c, {}, "const:" + std::to_string(c));
    }

    /// Fixed-length sequence; values[0] is 1_F.
    static FSequence custom(std::vector<Integer> values, std::optional<std::string> name = std::nullopt) {
        if (values.empty()) throw ConstructionError("custom sequence must be nonempty");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] < 1) {
                throw ConstructionError("custom sequence value at index " + std::to_string(i + 1) +
                                        " must be >= 1, got " + values[i].get_str());
            }
        }
        return FSequence(Kind::custom, 0, std::move(values), std::move(name));
    }

    static FSequence custom(const std::vector<std::size_t>& values, std::optional<std::string> name = std::nullopt) {
        std::vector<Integer> v;
        v.reserve(values.size());
        for (auto x : values) v.emplace_back(static_cast<unsigned long>(x));
        return custom(std::move(v), std::move(name));
    }

    /// One positive integer per line, index 1 first. Blank lines are skipped.
    static FSequence from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConstructionError("cannot open sequence file '" + path + "'");
        std::vector<Integer> values;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            auto last = line.find_last_not_of(" \t\r");
            std::string tok = line.substr(first, last - first + 1);
            Integer v;
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
                v.set_str(tok, 10) != 0) {
                throw ConstructionError(path + ":" + std::to_string(lineno) + ": expected a positive integer, got '" +
                                        tok + "'");
            }
            values.push_back(v);
        }
        return custom(std::move(values), "file:" + path);
    }

    /// Parses `nat | fib | gauss:q=<int> | const:<int> | file:<path>`.
    static FSequence parse(const std::string& spec) {
        if (spec == "nat") return natural();
        if (spec == "fib") return fibonacci();
        auto parse_long = [&](const std::string& digits) {
            if (digits.empty() || digits.size() > 18 ||
                digits.find_first_not_of("0123456789") != std::string::npos) {
                throw ConstructionError("bad integer parameter in sequence spec '" + spec + "'");
            }
            return std::stol(digits);
        };
        if (spec.rfind("gauss:q=", 0) == 0) return gauss(parse_long(spec.substr(8)));
        if (spec.rfind("const:", 0) == 0) return constant(parse_long(spec.substr(6)));
        if (spec.rfind("file:", 0) == 0) return from_file(spec.substr(5));
        throw ConstructionError("unknown sequence spec '" + spec +
                                "' (expected nat, fib, gauss:q=<int>, const:<int> or file:<path>)");
    }

    Kind kind() const { return kind_; }
    const std::optional<std::string>& name() const { return name_; }

    /// False only for custom sequences past their end.
    bool defined_at(std::size_t k) const { return k >= 1 && (kind_ != Kind::custom || k <= values_.size()); }

    /// Largest defined index, or nullopt when unbounded.
    std::optional<std::size_t> length() const {
        if (kind_ == Kind::custom) return values_.size();
        return std::nullopt;
    }

    /// k_F for k >= 1.
    Integer at(std::size_t k) const {
        if (k == 0) throw DomainError("levels are 1-based; 0_F exists only for rooted posets");
        switch (kind_) {
            case Kind::natural:
                return Integer(static_cast<unsigned long>(k));
            case Kind::fibonacci: {
                Integer a = 1, b = 1;
                for (std::size_t i = 2; i < k; ++i) {
                    Integer c = a + b;
                    a = b;
                    b = c;
                }
                return (k <= 2) ? Integer(1) : b;
            }
            case Kind::gauss: {
                Integer qk;
                mpz_ui_pow_ui(qk.get_mpz_t(), static_cast<unsigned long>(param_), static_cast<unsigned long>(k));
                return (qk - 1) / (param_ - 1);
            }
            case Kind::constant:
                return Integer(param_);
            case Kind::custom:
                if (k > values_.size()) {
                    throw DomainError("custom sequence has " + std::to_string(values_.size()) +
                                      " values; index " + std::to_string(k) + " is past its end");
                }
                return values_[k - 1];
        }
        throw DomainError("unreachable sequence kind");
    }

    Integer operator[](std::size_t k) const { return at(k); }

    /// ⟨1_F, ..., n_F⟩
    std::vector<Integer> prefix(std::size_t n) const {
        std::vector<Integer> out;
        out.reserve(n);
        for (std::size_t k = 1; k <= n; ++k) out.push_back(at(k));
        return out;
    }

    /// The sequence ⟨1, 1_F, ..., n_F⟩ seen 1-based: index 1 is the root level.
    FSequence rooted(std::size_t n) const {
        std::vector<Integer> v;
        v.reserve(n + 1);
        v.emplace_back(1);
        for (std::size_t k = 1; k <= n; ++k) v.push_back(at(k));
        return custom(std::move(v), name_ ? std::optional<std::string>("root+" + *name_) : std::nullopt);
    }

private:
    FSequence(Kind kind, long param, std::vector<Integer> values, std::optional<std::string> name)
        : kind_(kind), param_(param), values_(std::move(values)), name_(std::move(name)) {}

    Kind kind_;
    long param_;
    std::vector<Integer> values_;
    std::optional<std::string> name_;
};

/// 1_F · 2_F · ... · n_F; 0_F! = 1.
inline Integer f_factorial(const FSequence& F, std::size_t n) {
    Integer p = 1;
    for (std::size_t k = 1; k <= n; ++k) p *= F.at(k);
    return p;
}

/// n_F · (n-1)_F · ... · (n-k+1)_F
inline Integer f_falling(const FSequence& F, std::size_t n, std::size_t k) {
    if (k > n) {
        throw DomainError("falling F-factorial needs k <= n (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
    Integer p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= F.at(n - i);
    return p;
}

/// n_F^{k falling} / k_F!, exact.
inline Rational fnomial(const FSequence& F, std::size_t n, std::size_t k) {
    if (k > n) {
        throw DomainError("F-nomial needs k <= n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
    Rational r(f_falling(F, n, k), f_factorial(F, k));
    r.canonicalize();
    return r;
}

struct AdmissibilityVerdict {
    bool admissible = true;
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;  // (n, k)
};

/// Checks fnomial(F,n,k) ∈ N ∪ {0} for all 0 <= k <= n <= up_to.
inline AdmissibilityVerdict is_cobweb_admissible(const FSequence& F, std::size_t up_to) {
    if (up_to > 0 && !F.defined_at(up_to)) {
        throw DomainError("sequence is not defined through index " + std::to_string(up_to));
    }
    for (std::size_t n = 0; n <= up_to; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            Rational v = fnomial(F, n, k);
            if (!is_integral(v) || v < 0) return {false, std::make_pair(n, k)};
        }
    }
    return {};
}

}  // namespace cobweb
