#pragma once

// Text formats: poset JSON, matrix CSV/JSON, coding matrices, characteristic
// polynomials, chains, hyper-boxes, DOT Hasse diagrams and La Scala renders.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobweb/blockmat.hpp"
#include "cobweb/chains.hpp"
#include "cobweb/error.hpp"
#include "cobweb/incidence.hpp"
#include "cobweb/invariants.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

/// Canonical compact form; keys in schema order.
inline std::string poset_to_json(const GradedPoset& P) {
    nlohmann::ordered_json j;
    j["level_sizes"] = P.level_sizes();
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& B : P.blocks()) {
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < B.rows(); ++i) {
            auto row = nlohmann::ordered_json::array();
            for (std::size_t c = 0; c < B.cols(); ++c) row.push_back(B.at(i, c) ? 1 : 0);
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    j["blocks"] = std::move(blocks);
    j["flags"]["cobweb"] = P.is_cobweb();
    j["flags"]["no_mute"] = P.has_no_mute();
    if (P.sequence()) {
        j["sequence"] = *P.sequence();
    } else {
        j["sequence"] = nullptr;
    }
    return j.dump();
}

namespace detail {

inline std::size_t json_size(const nlohmann::json& v, const std::string& path) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError(path + ": expected a nonnegative integer");
    }
    return v.get<std::size_t>();
}

inline const nlohmann::json& json_field(const nlohmann::json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("/") + key + ": missing field");
    return *it;
}

}  // namespace detail

/// Validates the schema, rebuilds the poset and checks the stored flags.
inline GradedPoset poset_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("/: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("/: expected an object");

    const auto& js = detail::json_field(j, "level_sizes");
    if (!js.is_array() || js.empty()) throw ParseError("/level_sizes: expected a nonempty array");
    std::vector<std::size_t> sizes;
    for (std::size_t k = 0; k < js.size(); ++k) {
        std::string path = "/level_sizes/" + std::to_string(k);
        std::size_t s = detail::json_size(js[k], path);
        if (s == 0) throw ParseError(path + ": level sizes must be positive");
        sizes.push_back(s);
    }

    const auto& jb = detail::json_field(j, "blocks");
    if (!jb.is_array()) throw ParseError("/blocks: expected an array");
    if (jb.size() + 1 != sizes.size()) {
        throw ParseError("/blocks: expected " + std::to_string(sizes.size() - 1) + " blocks, got " +
                         std::to_string(jb.size()));
    }
    std::vector<BinaryMatrix> blocks;
    for (std::size_t b = 0; b < jb.size(); ++b) {
        std::string bpath = "/blocks/" + std::to_string(b);
        const auto& rows = jb[b];
        if (!rows.is_array() || rows.size() != sizes[b]) {
            throw ParseError(bpath + ": expected " + std::to_string(sizes[b]) + " rows");
        }
        BinaryMatrix B(sizes[b], sizes[b + 1]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::string rpath = bpath + "/" + std::to_string(i);
            if (!rows[i].is_array() || rows[i].size() != sizes[b + 1]) {
                throw ParseError(rpath + ": expected " + std::to_string(sizes[b + 1]) + " entries");
            }
            for (std::size_t c = 0; c < rows[i].size(); ++c) {
                const auto& v = rows[i][c];
                if (!v.is_number_integer() || (v.get<long long>() != 0 && v.get<long long>() != 1)) {
                    throw ParseError(rpath + "/" + std::to_string(c) + ": expected 0 or 1");
                }
                B.set(i, c, v.get<long long>() == 1);
            }
        }
        blocks.push_back(std::move(B));
    }

    const auto& jf = detail::json_field(j, "flags");
    if (!jf.is_object()) throw ParseError("/flags: expected an object");
    auto flag = [&](const char* key) {
        auto it = jf.find(key);
        if (it == jf.end() || !it->is_boolean()) throw ParseError(std::string("/flags/") + key + ": expected a boolean");
        return it->get<bool>();
    };
    bool cobweb_flag = flag("cobweb");
    bool no_mute_flag = flag("no_mute");

    const auto& jq = detail::json_field(j, "sequence");
    std::optional<std::string> seq;
    if (jq.is_string()) {
        seq = jq.get<std::string>();
    } else if (!jq.is_null()) {
        throw ParseError("/sequence: expected a string or null");
    }

    GradedPoset P = GradedPoset::from_blocks(std::move(sizes), std::move(blocks), std::move(seq));
    if (P.is_cobweb() != cobweb_flag) {
        throw ParseError(std::string("/flags/cobweb: stored ") + (cobweb_flag ? "true" : "false") +
                         " but the blocks give " + (P.is_cobweb() ? "true" : "false"));
    }
    if (P.has_no_mute() != no_mute_flag) {
        throw ParseError(std::string("/flags/no_mute: stored ") + (no_mute_flag ? "true" : "false") +
                         " but the blocks give " + (P.has_no_mute() ? "true" : "false"));
    }
    return P;
}

namespace detail {
inline void write_value(std::ostream& os, const Integer& v) { os << v.get_str(); }
inline void write_value(std::ostream& os, std::uint8_t v) { os << (v ? '1' : '0'); }

inline void write_sizes(std::ostream& os, const std::vector<std::size_t>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
}

inline std::string json_escape(const std::string& s) { return nlohmann::json(s).dump(); }
}  // namespace detail

/// Row-major, one line per row, plain decimal.
template <Semiring R>
void write_matrix_csv(std::ostream& os, const BlockMatrix<R>& M) {
    for (std::size_t i = 0; i < M.size(); ++i) {
        for (std::size_t j = 0; j < M.size(); ++j) {
            if (j) os << ',';
            detail::write_value(os, M(i, j));
        }
        os << '\n';
    }
}

/// {"level_sizes":[...],"entries":[[...],...]}, streamed row by row.
template <Semiring R>
void write_matrix_json(std::ostream& os, const BlockMatrix<R>& M) {
    os << "{\"level_sizes\":";
    detail::write_sizes(os, M.level_sizes());
    os << ",\"entries\":[";
    for (std::size_t i = 0; i < M.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < M.size(); ++j) {
            if (j) os << ',';
            detail::write_value(os, M(i, j));
        }
        os << ']';
    }
    os << "]}\n";
}

inline void write_coding_json(std::ostream& os, const CodingMatrix& C) {
    os << "{\"c\":[";
    for (std::size_t r = 0; r < C.size(); ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t s = 0; s < C.size(); ++s) os << (s ? "," : "") << C.rows()[r][s].get_str();
        os << ']';
    }
    os << "]}\n";
}

inline void write_charpoly_json(std::ostream& os, const CharPoly& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) os << (i ? "," : "") << p.coefficients()[i].get_str();
    os << "]\n";
}

inline void write_chain_json(std::ostream& os, const Chain& c) {
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << '[' << c[i].level << ',' << c[i].position << ']';
    os << ']';
}

/// [[[level,position],...],...] streamed from the enumerator.
inline void write_chains_json(std::ostream& os, const GradedPoset& P, std::size_t k, std::size_t n) {
    os << '[';
    bool first = true;
    for_each_max_chain(P, k, n, [&](const Chain& c) {
        if (!first) os << ',';
        first = false;
        write_chain_json(os, c);
        return true;
    });
    os << "]\n";
}

inline void write_hyperbox_json(std::ostream& os, const HyperBox& b, bool with_points) {
    os << "{\"lo\":" << b.lo << ",\"hi\":" << b.hi << ",\"dims\":";
    detail::write_sizes(os, b.dims);
    os << ",\"cardinality\":" << b.cardinality().get_str();
    if (with_points) {
        os << ",\"points\":[";
        bool first = true;
        for (const auto& p : b.points()) {
            if (!first) os << ',';
            first = false;
            detail::write_sizes(os, p);
        }
        os << ']';
    }
    os << "}\n";
}

/// Hasse diagram, minimal elements at the bottom, edges pointing up.
inline std::string to_dot(const GradedPoset& P) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (std::size_t k = 1; k <= P.level_count(); ++k) {
        os << "  { rank=same;";
        for (std::size_t i = 1; i <= P.level_size(k); ++i) os << " v" << k << '_' << i << ';';
        os << " }\n";
    }
    for (std::size_t k = 1; k < P.level_count(); ++k) {
        const BinaryMatrix& B = P.block(k);
        for (std::size_t i = 0; i < B.rows(); ++i)
            for (std::size_t j = 0; j < B.cols(); ++j)
                if (B.at(i, j)) os << "  v" << k << '_' << i + 1 << " -> v" << k + 1 << '_' << j + 1 << ";\n";
    }
    os << "}\n";
    return os.str();
}

struct LaScalaRender {
    std::vector<std::string> lines;

    std::string to_string() const {
        std::string out;
        for (const auto& l : lines) {
            out += l;
            out += '\n';
        }
        return out;
    }
};

/// '1' where ζ = 1, ' ' below the diagonal, '.' for zeros inside a level
/// (the staircase), '0' for other zeros above the diagonal.
inline LaScalaRender la_scala(const GradedPoset& P) {
    BoolMatrix Z = zeta(P, ZetaMethod::closure);
    LaScalaRender r;
    r.lines.reserve(Z.size());
    for (std::size_t i = 0; i < Z.size(); ++i) {
        std::string line(Z.size(), ' ');
        for (std::size_t j = 0; j < Z.size(); ++j) {
            if (Z(i, j)) {
                line[j] = '1';
            } else if (j > i) {
                line[j] = Z.level_of(i) == Z.level_of(j) ? '.' : '0';
            }
        }
        r.lines.push_back(std::move(line));
    }
    return r;
}

}  // namespace cobweb
