#pragma once

// Property suites over a single poset, shared by the CLI `check` command
// and the tests. Each property reports pass, fail (with a detail) or skip.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cobweb/blockmat.hpp"
#include "cobweb/chains.hpp"
#include "cobweb/formats.hpp"
#include "cobweb/fsequence.hpp"
#include "cobweb/incidence.hpp"
#include "cobweb/invariants.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

enum class Outcome { pass, fail, skip };

struct PropertyResult {
    std::string suite;
    std::string name;
    Outcome outcome = Outcome::pass;
    std::string detail;
};

inline const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> s = {"fsequence", "poset", "blockmat", "zeta", "mobius",
                                               "max",       "markov", "whitney", "formats"};
    return s;
}

namespace detail {

class Recorder {
public:
    Recorder(std::vector<PropertyResult>& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

    // fn returns an empty string on success, else a description of the failure.
    void run(const std::string& name, const std::function<std::string()>& fn) {
        PropertyResult r{suite_, name, Outcome::pass, {}};
        try {
            r.detail = fn();
            if (!r.detail.empty()) r.outcome = Outcome::fail;
        } catch (const std::exception& e) {
            r.outcome = Outcome::fail;
            r.detail = std::string("exception: ") + e.what();
        }
        out_.push_back(std::move(r));
    }

    void skip(const std::string& name, const std::string& why) {
        out_.push_back({suite_, name, Outcome::skip, why});
    }

private:
    std::vector<PropertyResult>& out_;
    std::string suite_;
};

template <Semiring R>
std::string first_difference(const BlockMatrix<R>& a, const BlockMatrix<R>& b) {
    if (a.level_sizes() != b.level_sizes()) return "level sizes differ";
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a(i, j) == b(i, j))) {
                std::ostringstream os;
                os << "entries differ at (" << i + 1 << "," << j + 1 << ")";
                return os.str();
            }
    return {};
}

inline std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

inline void fsequence_suite(const GradedPoset& P, std::vector<PropertyResult>& out) {
    Recorder rec(out, "fsequence");
    FSequence F = FSequence::custom(P.level_sizes());
    const std::size_t n = P.level_count();
    rec.run("fnomial_symmetry", [&] {
        for (std::size_t m = 0; m <= n; ++m)
            for (std::size_t k = 0; k <= m; ++k)
                if (fnomial(F, m, k) != fnomial(F, m, m - k))
                    return "asymmetric at (" + std::to_string(m) + "," + std::to_string(k) + ")";
        return std::string();
    });
    rec.run("fnomial_times_factorial", [&] {
        for (std::size_t m = 0; m <= n; ++m)
            for (std::size_t k = 0; k <= m; ++k)
                if (fnomial(F, m, k) * Rational(f_factorial(F, k)) != Rational(f_falling(F, m, k)))
                    return "mismatch at (" + std::to_string(m) + "," + std::to_string(k) + ")";
        return std::string();
    });
    rec.run("factorial_is_full_falling", [&] {
        for (std::size_t m = 0; m <= n; ++m)
            if (f_factorial(F, m) != f_falling(F, m, m)) return "mismatch at n=" + std::to_string(m);
        return std::string();
    });
}

inline void poset_suite(const GradedPoset& P, std::vector<PropertyResult>& out) {
    Recorder rec(out, "poset");
    rec.run("labels_bijective", [&] {
        const auto& L = P.labeling();
        std::size_t expected = 1;
        for (std::size_t k = 1; k <= P.level_count(); ++k)
            for (std::size_t i = 1; i <= P.level_size(k); ++i) {
                if (L.global(k, i) != expected) return std::string("global labels are not consecutive");
                NodeLabel back = L.locate(expected);
                if (back.level != k || back.position != i) return std::string("locate does not invert global");
                ++expected;
            }
        return expect(expected == P.node_count() + 1, "labels do not cover [1, S(n)]");
    });
    rec.run("join_of_layers", [&] {
        GradedPoset acc = layer(P, 1, 1);
        for (std::size_t k = 1; k < P.level_count(); ++k) acc = natural_join(acc, layer(P, k, k + 1));
        return expect(acc == P, "left fold of layer joins differs from the poset");
    });
    rec.run("join_associative", [&] {
        if (P.level_count() < 4) return std::string();
        std::size_t n = P.level_count();
        GradedPoset A = layer(P, 1, 2), B = layer(P, 2, n - 1), C = layer(P, n - 1, n);
        return expect(natural_join(natural_join(A, B), C) == natural_join(A, natural_join(B, C)),
                      "(A+B)+C differs from A+(B+C)");
    });
    if (P.is_cobweb()) {
        rec.run("ordinal_sum_of_levels", [&] {
            GradedPoset acc = antichain(P.level_size(1));
            for (std::size_t k = 2; k <= P.level_count(); ++k) acc = ordinal_sum(acc, antichain(P.level_size(k)));
            return expect(acc == P, "ordinal sum of antichains differs from the cobweb");
        });
        rec.run("cobweb_has_no_mute", [&] { return expect(mute_nodes(P).empty(), "cobweb reports mute nodes"); });
    } else {
        rec.skip("ordinal_sum_of_levels", "not a cobweb");
        rec.skip("cobweb_has_no_mute", "not a cobweb");
    }
    rec.run("mute_flag_consistent",
            [&] { return expect(mute_nodes(P).empty() == P.has_no_mute(), "no_mute flag disagrees with mute_nodes"); });
}

inline void blockmat_suite(const GradedPoset& P, std::vector<PropertyResult>& out) {
    Recorder rec(out, "blockmat");
    IntMatrix K = kappa<IntegerRing>(P), E = eta<IntegerRing>(P), M = max_matrix(P);
    rec.run("kappa_nilpotent", [&] {
        IntMatrix p = IntMatrix::identity(P.level_sizes());
        for (std::size_t i = 0; i < P.level_count(); ++i) p = mul(p, K);
        return expect(p.is_zero(), "kappa^n is not zero");
    });
    rec.run("mul_associative", [&] {
        return first_difference(mul(mul(K, E), M), mul(K, mul(E, M)));
    });
    rec.run("mul_distributive", [&] {
        return first_difference(mul(K, add(E, M)), add(mul(K, E), mul(K, M)));
    });
    rec.run("boolean_mul_associative", [&] {
        BoolMatrix k = kappa<BooleanSemiring>(P), e = eta<BooleanSemiring>(P), z = zeta(P);
        return first_difference(mul(mul(k, e), z), mul(k, mul(e, z)));
    });
    rec.run("closure_reduces_to_boolean",
            [&] { return first_difference(logic_L(M), nilpotent_closure(kappa<BooleanSemiring>(P))); });
}

inline void zeta_suite(const GradedPoset& P, std::vector<PropertyResult>& out) {
    Recorder rec(out, "zeta");
    BoolMatrix Z = zeta(P, ZetaMethod::closure);
    rec.run("closure_matches_reachability", [&] {
        auto reach = reachability(P);
        BoolMatrix R = BoolMatrix::from_function(P.level_sizes(),
                                                 [&](std::size_t i, std::size_t j) { return reach[i][j]; });
        return first_difference(Z, R);
    });
    for (ZetaMethod m : {ZetaMethod::label_delta, ZetaMethod::label_knuth, ZetaMethod::label_S}) {
        std::string name = std::string("closure_equals_") + to_string(m);
        if (P.is_cobweb()) {
            rec.run(name, [&] { return first_difference(Z, zeta(P, m)); });
        } else {
            rec.skip(name, "label formulas need a cobweb");
        }
    }
    rec.run("L_of_max_is_zeta", [&] { return first_difference(logic_L(max_matrix(P)), Z); });
    rec.run("la_scala_faithful", [&] {
        auto r = la_scala(P);
        for (std::size_t i = 0; i < Z.size(); ++i)
            for (std::size_t j = 0; j < Z.size(); ++j)
                if ((r.lines[i][j] == '1') != (Z(i, j) == 1)) return std::string("render differs from zeta");
        return std::string();
    });
}

inline void mobius_suite(const GradedPoset& P, std::vector<PropertyResult>& out) {
    Recorder rec(out, "mobius");
    IntMatrix Zi = to_integer(zeta(P));
    IntMatrix Mu = mobius(P, MobiusMethod::invert);
    IntMatrix I = IntMatrix::identity(P.level_sizes());
    rec.run("zeta_mu_identity", [&] { return first_difference(mul(Zi, Mu), I); });
    rec.run("mu_zeta_identity", [&] { return first_difference(mul(Mu, Zi), I); });
    rec.run("invert_equals_recurrence", [&] { return first_difference(Mu, mobius(P, MobiusMethod::recurrence)); });
    rec.run("eta_inverse_identity", [&] { return first_difference(mul(eta<IntegerRing>(P), eta_inverse(P)), I); });
    if (P.is_cobweb()) {
        FSequence F = FSequence::custom(P.level_sizes());
        const std::size_t n = P.level_count();
        rec.run("invert_equals_closed_form",
                [&] { return first_difference(Mu, mobius(P, MobiusMethod::closed_form)); });
        rec.run("rank_dependence", [&] {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = r + 1; s < n; ++s) {
                    const Integer& v = Mu(Mu.offset(r), Mu.offset(s));
                    for (const auto& row : Mu.block(r, s))
                        for (const auto& e : row)
                            if (e != v) return "block (" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ") is not constant";
                }
            return std::string();
        });
        rec.run("coding_matches_interval_mobius", [&] {
            CodingMatrix C = coding_matrix(F, n);
            for (std::size_t r = 1; r <= n; ++r)
                for (std::size_t s = r; s <= n; ++s)
                    if (C.at(r, s) != interval_mobius(F, r, s)) return "mismatch at (" + std::to_string(r) + "," + std::to_string(s) + ")";
            return std::string();
        });
        rec.run("coding_weighted_recurrence", [&] {
            return expect(coding_matrix(F, n) == coding_matrix_by_recurrence(F, n),
                          "closed form differs from the element-sum recurrence");
        });
        rec.run("kroton_growth", [&] {
            for (std::size_t r = 1; r <= n; ++r) {
                if (r + 1 <= n && kroton(F, r, r + 1) != 1) return "K_{r,r+1} != 1 at r=" + std::to_string(r);
                for (std::size_t s = r + 1; s < n; ++s)
                    if (kroton(F, r, s + 1) != kroton(F, r, s) * (F.at(s) - 1))
                        return "growth fails at (" + std::to_string(r) + "," + std::to_string(s) + ")";
            }
            return std::string();
        });
        rec.run("coding_sign_pattern", [&] {
            CodingMatrix C = coding_matrix(F, n);
            for (std::size_t r = 1; r <= n; ++r)
                for (std::size_t s = 1; s <= n; ++s) {
                    const Integer& c = C.at(r, s);
                    if (s < r && c != 0) return std::string("nonzero below the diagonal");
                    if (s == r && c != 1) return std::string("diagonal is not 1");
                    if (s == r + 1 && c != -1) return std::string("superdiagonal is not -1");
                    if (s > r && c != 0 && sgn(c) != sign_power(s - r)) return std::string("sign does not alternate");
                }
            return std::string();
        });
    } else {
        for (const char* name : {"invert_equals_closed_form", "rank_dependence", "coding_matches_interval_mobius",
                                 "coding_weighted_recurrence", "kroton_growth", "coding_sign_pattern"})
            rec.skip(name, "closed forms need a cobweb");
    }
}

inline void max_suite(const GradedPoset& P, std::vector<PropertyResult>& out) {
    Recorder rec(out, "max");
    IntMatrix M = max_matrix(P);
    const auto& L = P.labeling();
    rec.run("max_equals_chain_count", [&] {
        for (std::size_t x = 1; x <= P.node_count(); ++x)
            for (std::size_t y = 1; y <= P.node_count(); ++y)
                if (M(x - 1, y - 1) != count_interval_chains(P, L.locate(x), L.locate(y)))
                    return "mismatch at (" + std::to_string(x) + "," + std::to_string(y) + ")";
        return std::string();
    });
    rec.run("max_times_inverse", [&] {
        return first_difference(mul(M, max_inverse(P)), IntMatrix::identity(P.level_sizes()));
    });
    rec.run("max_diagonal_one", [&] {
        for (std::size_t x = 0; x < M.size(); ++x)
            if (M(x, x) != 1) return std::string("diagonal entry is not 1");
        return std::string();
    });
    if (P.is_cobweb()) {
        FSequence F = FSequence::custom(P.level_sizes());
        const std::size_t n = P.level_count();
        rec.run("row_sums_falling_product", [&] {
            for (std::size_t top = 2; top <= n; ++top)
                for (std::size_t k = 1; k < top; ++k) {
                    Integer sum = 0;
                    std::size_t xk = L.global(k, 1) - 1;
                    for (std::size_t i = 1; i <= P.level_size(top); ++i) sum += M(xk, L.global(top, i) - 1);
                    if (sum != enumerate_count(P, k + 1, top) || sum != f_falling(F, top, top - k))
                        return "row sum fails for k=" + std::to_string(k) + ", n=" + std::to_string(top);
                }
            return std::string();
        });
        rec.run("layer_count_is_product", [&] {
            for (std::size_t k = 1; k <= n; ++k)
                for (std::size_t m = k; m <= n; ++m) {
                    Integer p = 1;
                    for (std::size_t j = k; j <= m; ++j) p *= static_cast<unsigned long>(P.level_size(j));
                    if (count_layer_chains(P, k, m) != p) return "count fails on layer (" + std::to_string(k) + "," + std::to_string(m) + ")";
                }
            return std::string();
        });
    } else {
        rec.skip("row_sums_falling_product", "stated for cobwebs");
        rec.skip("layer_count_is_product", "stated for cobwebs");
    }
    rec.run("block_product_law", [&] {
        for (std::size_t r = 1; r <= P.level_count(); ++r)
            for (std::size_t s = r; s <= P.level_count(); ++s) {
                auto B = path_count_block(P, r, s);
                for (std::size_t i = 0; i < B.size(); ++i)
                    for (std::size_t j = 0; j < B[i].size(); ++j)
                        if (B[i][j] != M(L.global(r, i + 1) - 1, L.global(s, j + 1) - 1))
                            return "block product differs from [Max] at levels (" + std::to_string(r) + "," + std::to_string(s) + ")";
            }
        return std::string();
    });
}

inline void markov_suite(const GradedPoset& P, std::vector<PropertyResult>& out) {
    Recorder rec(out, "markov");
    const std::size_t n = P.level_count();
    const auto& L = P.labeling();
    rec.run("chains_through_level", [&] {
        for (std::size_t r = 1; r <= n; ++r)
            for (std::size_t k = r; k <= n; ++k)
                for (std::size_t s = k + 1; s <= n; ++s) {
                    Integer sum = 0;
                    for (std::size_t i = 1; i <= P.level_size(k); ++i) {
                        NodeLabel x = L.node(k, i);
                        sum += count_tail_chains(P, r, x) * count_head_chains(P, x, s);
                    }
                    if (sum != count_layer_chains(P, r, s))
                        return "fails at (" + std::to_string(r) + "," + std::to_string(k) + "," + std::to_string(s) + ")";
                }
        return std::string();
    });
    if (!P.is_cobweb()) {
        for (const char* name : {"markov_product", "tail_independent_of_position", "chain_box_bijection"})
            rec.skip(name, "stated for cobwebs");
        return;
    }
    rec.run("markov_product", [&] {
        for (std::size_t r = 1; r <= n; ++r)
            for (std::size_t k = r; k <= n; ++k)
                for (std::size_t s = k; s <= n; ++s)
                    if (!markov_product(P, r, k, s).holds())
                        return "fails at (" + std::to_string(r) + "," + std::to_string(k) + "," + std::to_string(s) + ")";
        return std::string();
    });
    rec.run("tail_independent_of_position", [&] {
        for (std::size_t r = 1; r <= n; ++r)
            for (std::size_t k = r; k <= n; ++k) {
                Integer t = count_tail_chains(P, r, L.node(k, 1));
                for (std::size_t i = 2; i <= P.level_size(k); ++i)
                    if (count_tail_chains(P, r, L.node(k, i)) != t) return std::string("tail count depends on position");
                if (t * static_cast<unsigned long>(P.level_size(k)) != count_layer_chains(P, r, k))
                    return std::string("k_F C^{r,k,i} != C^{r,k}");
            }
        return std::string();
    });
    rec.run("chain_box_bijection", [&] {
        for (std::size_t k = 1; k <= n; ++k)
            for (std::size_t m = k; m <= n; ++m)
                if (!chain_box_bijection(P, k, m).bijective())
                    return "fails on layer (" + std::to_string(k) + "," + std::to_string(m) + ")";
        return std::string();
    });
}

inline void whitney_suite(const GradedPoset& P, std::vector<PropertyResult>& out) {
    Recorder rec(out, "whitney");
    if (!RootedPoset::is_rooted(P)) {
        rec.skip("whitney", "poset is not rooted");
        return;
    }
    RootedPoset R = RootedPoset::from(P);
    CharPoly direct = char_poly(R, CharPolyMethod::direct);
    rec.run("leading_coefficient_one", [&] {
        return expect(direct.coefficients().front() == 1 && direct.degree() == R.top_rank(),
                      "leading coefficient or degree wrong");
    });
    rec.run("whitney_sum_is_chi_at_one", [&] {
        Integer sum = 0;
        for (std::size_t r = 0; r <= R.top_rank(); ++r) sum += whitney_first(R, r, WhitneyMethod::direct_sum);
        return expect(sum == direct.evaluate(1), "sum of w_r differs from chi(1)");
    });
    rec.run("whitney_second_is_level_size", [&] {
        for (std::size_t r = 0; r <= R.top_rank(); ++r)
            if (whitney_second(R, r) != static_cast<unsigned long>(R.rank_size(r))) return std::string("W_r mismatch");
        return std::string();
    });
    if (P.is_cobweb()) {
        rec.run("whitney_closed_equals_direct", [&] {
            for (std::size_t r = 0; r <= R.top_rank(); ++r)
                if (whitney_first(R, r) != whitney_first(R, r, WhitneyMethod::direct_sum))
                    return "w_" + std::to_string(r) + " mismatch";
            return std::string();
        });
        rec.run("charpoly_closed_equals_direct",
                [&] { return expect(char_poly(R) == direct, "closed form " + char_poly(R).to_string() + " vs direct " + direct.to_string()); });
        rec.run("root_mobius_closed_equals_recurrence", [&] {
            const auto& L = P.labeling();
            for (std::size_t x = 1; x <= P.node_count(); ++x) {
                NodeLabel v = L.locate(x);
                if (mobius_from_root(R, v) != mobius_from_root(R, v, RootMethod::recurrence))
                    return "mismatch at node " + std::to_string(x);
            }
            return std::string();
        });
    } else {
        for (const char* name : {"whitney_closed_equals_direct", "charpoly_closed_equals_direct",
                                 "root_mobius_closed_equals_recurrence"})
            rec.skip(name, "closed forms need a cobweb");
    }
}

inline void formats_suite(const GradedPoset& P, std::vector<PropertyResult>& out) {
    Recorder rec(out, "formats");
    rec.run("json_round_trip", [&] {
        GradedPoset Q = poset_from_json(poset_to_json(P));
        return expect(Q == P && Q.sequence() == P.sequence() && poset_to_json(Q) == poset_to_json(P),
                      "round trip changed the poset");
    });
}

}  // namespace detail

/// Runs one suite by name, or every suite for "all".
inline std::vector<PropertyResult> run_checks(const GradedPoset& P, const std::string& suite = "all") {
    using Fn = void (*)(const GradedPoset&, std::vector<PropertyResult>&);
    static const std::vector<std::pair<std::string, Fn>> table = {
        {"fsequence", detail::fsequence_suite}, {"poset", detail::poset_suite},   {"blockmat", detail::blockmat_suite},
        {"zeta", detail::zeta_suite},           {"mobius", detail::mobius_suite}, {"max", detail::max_suite},
        {"markov", detail::markov_suite},       {"whitney", detail::whitney_suite}, {"formats", detail::formats_suite},
    };
    std::vector<PropertyResult> out;
    bool found = false;
    for (const auto& [name, fn] : table) {
        if (suite == "all" || suite == name) {
            fn(P, out);
            found = true;
        }
    }
    if (!found) throw DomainError("unknown check suite '" + suite + "'");
    return out;
}

}  // namespace cobweb
