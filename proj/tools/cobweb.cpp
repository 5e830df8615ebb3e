// cobweb: generate F-graded posets and compute their incidence-algebra data.
//
// Exit codes: 0 success, 1 usage or domain error, 2 failed check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cobweb/checks.hpp"
#include "cobweb/formats.hpp"

using namespace cobweb;

namespace {

std::size_t max_levels() {
    const char* env = std::getenv("COBWEB_MAX_LEVELS");
    if (!env || !*env) return 12;
    std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
        throw DomainError("COBWEB_MAX_LEVELS must be a positive integer, got '" + s + "'");
    }
    return std::stoul(s);
}

void check_levels(std::size_t n) {
    std::size_t cap = max_levels();
    if (n > cap) {
        throw DomainError(std::to_string(n) + " levels exceeds COBWEB_MAX_LEVELS=" + std::to_string(cap));
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GradedPoset load_poset(const std::string& path) {
    GradedPoset P = [&] {
        try {
            return poset_from_json(read_file(path));
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }();
    check_levels(P.level_count());
    return P;
}

// Owns the -o file when given; otherwise stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw DomainError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

template <Semiring R>
void emit_matrix(std::ostream& os, const BlockMatrix<R>& M, const std::string& format) {
    if (format == "json") {
        write_matrix_json(os, M);
    } else {
        write_matrix_csv(os, M);
    }
}

std::vector<BinaryMatrix> load_blocks(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": invalid JSON: " + e.what());
    }
    if (j.is_object() && j.contains("blocks")) j = j["blocks"];
    if (!j.is_array()) throw ParseError(path + ": /blocks: expected an array of 0/1 matrices");
    std::vector<BinaryMatrix> out;
    for (std::size_t b = 0; b < j.size(); ++b) {
        std::vector<std::vector<int>> rows;
        try {
            rows = j[b].get<std::vector<std::vector<int>>>();
        } catch (const nlohmann::json::exception&) {
            throw ParseError(path + ": /blocks/" + std::to_string(b) + ": expected a matrix of integers");
        }
        out.push_back(BinaryMatrix::from_rows(rows));
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"F-graded posets, cobweb incidence algebras and their invariants"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("-o,--output", out_path, "write data to this file instead of stdout");
    std::function<void()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a poset JSON");
    std::string gen_seq;
    std::size_t gen_levels = 0;
    bool gen_root = false;
    std::string gen_blocks;
    gen->add_option("--seq", gen_seq, "nat | fib | gauss:q=<int> | const:<int> | file:<path>")->required();
    gen->add_option("--levels", gen_levels, "number of levels")->required();
    gen->add_flag("--root", gen_root, "prepend a singleton root level");
    gen->add_option("--blocks", gen_blocks, "JSON file with biadjacency blocks replacing the all-ones ones");
    gen->add_option("-o,--output", out_path, "output file");
    gen->callback([&] {
        action = [&] {
            check_levels(gen_levels + (gen_root ? 1 : 0));
            FSequence F = FSequence::parse(gen_seq);
            GradedPoset P = cobweb_poset(F, gen_levels);
            if (!gen_blocks.empty()) P = GradedPoset::from_blocks(P.level_sizes(), load_blocks(gen_blocks), F.name());
            if (gen_root) {
                std::optional<std::string> name;
                if (F.name()) name = "root+" + *F.name();
                P = ordinal_sum(antichain(1), P).with_sequence(name);
            }
            Output out(out_path);
            out.stream() << poset_to_json(P) << '\n';
        };
    });

    // matrix commands
    std::string poset_path, method, format = "csv";
    bool inverse = false;
    auto add_poset_arg = [&](CLI::App* c) {
        c->add_option("poset", poset_path, "poset JSON file")->required();
        c->add_option("-o,--output", out_path, "output file");
    };

    auto* zet = app.add_subcommand("zeta", "zeta matrix");
    add_poset_arg(zet);
    zet->add_option("--method", method, "closure | label-delta | label-knuth | label-s")
        ->check(CLI::IsMember({"closure", "label-delta", "label-knuth", "label-s"}));
    zet->add_option("--format", format, "csv | json | ascii")->check(CLI::IsMember({"csv", "json", "ascii"}));
    zet->callback([&] {
        action = [&] {
            GradedPoset P = load_poset(poset_path);
            ZetaMethod m = ZetaMethod::closure;
            if (method == "label-delta") m = ZetaMethod::label_delta;
            if (method == "label-knuth") m = ZetaMethod::label_knuth;
            if (method == "label-s") m = ZetaMethod::label_S;
            BoolMatrix Z = zeta(P, m);
            Output out(out_path);
            if (format == "ascii") {
                for (std::size_t i = 0; i < Z.size(); ++i) {
                    for (std::size_t j = 0; j < Z.size(); ++j) {
                        char c = j < i ? ' ' : (Z.level_of(i) == Z.level_of(j) ? '.' : '0');
                        out.stream() << (Z(i, j) ? '1' : c);
                    }
                    out.stream() << '\n';
                }
            } else {
                emit_matrix(out.stream(), Z, format);
            }
        };
    });

    auto* mob = app.add_subcommand("mobius", "Möbius matrix");
    add_poset_arg(mob);
    mob->add_option("--method", method, "closed-form | invert | recurrence")
        ->check(CLI::IsMember({"closed-form", "invert", "recurrence"}));
    mob->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    mob->callback([&] {
        action = [&] {
            GradedPoset P = load_poset(poset_path);
            MobiusMethod m = MobiusMethod::invert;
            if (method == "closed-form") m = MobiusMethod::closed_form;
            if (method == "recurrence") m = MobiusMethod::recurrence;
            IntMatrix M = mobius(P, m);
            Output out(out_path);
            emit_matrix(out.stream(), M, format);
        };
    });

    auto* mx = app.add_subcommand("max", "[Max] maximal-chain counting matrix");
    add_poset_arg(mx);
    mx->add_flag("--inverse", inverse, "print [Max]^{-1} = delta - kappa");
    mx->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    mx->callback([&] {
        action = [&] {
            GradedPoset P = load_poset(poset_path);
            Output out(out_path);
            emit_matrix(out.stream(), inverse ? max_inverse(P) : max_matrix(P), format);
        };
    });

    auto* et = app.add_subcommand("eta", "reflexive cover matrix");
    add_poset_arg(et);
    et->add_flag("--inverse", inverse, "print eta^{-1}");
    et->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    et->callback([&] {
        action = [&] {
            GradedPoset P = load_poset(poset_path);
            Output out(out_path);
            emit_matrix(out.stream(), inverse ? eta_inverse(P) : eta<IntegerRing>(P), format);
        };
    });

    auto* ch = app.add_subcommand("chains", "maximal chains of a layer");
    add_poset_arg(ch);
    std::size_t from = 0, to = 0;
    bool count_only = false;
    std::vector<std::size_t> interval;
    ch->add_option("--from", from, "lowest level");
    ch->add_option("--to", to, "highest level");
    ch->add_flag("--count-only", count_only, "print only the number of chains");
    ch->add_option("--interval", interval, "global labels x y: count cover paths x -> y")->expected(2);
    ch->callback([&] {
        action = [&] {
            GradedPoset P = load_poset(poset_path);
            Output out(out_path);
            if (!interval.empty()) {
                const auto& L = P.labeling();
                out.stream() << count_interval_chains(P, L.locate(interval[0]), L.locate(interval[1])).get_str()
                             << '\n';
                return;
            }
            if (from == 0 || to == 0) throw DomainError("chains needs --from and --to (or --interval)");
            if (count_only) {
                out.stream() << count_layer_chains(P, from, to).get_str() << '\n';
            } else {
                write_chains_json(out.stream(), P, from, to);
            }
        };
    });

    std::string seq;
    std::size_t na = 0, nb = 0;
    auto* fn = app.add_subcommand("fnomial", "F-nomial coefficient");
    fn->add_option("--seq", seq, "sequence spec")->required();
    fn->add_option("n", na)->required();
    fn->add_option("k", nb)->required();
    fn->add_option("-o,--output", out_path, "output file");
    fn->callback([&] {
        action = [&] {
            Rational v = fnomial(FSequence::parse(seq), na, nb);
            Output out(out_path);
            out.stream() << to_string(v) << '\n';
        };
    });

    std::size_t up_to = 0;
    auto* adm = app.add_subcommand("admissible", "cobweb-admissibility verdict");
    adm->add_option("--seq", seq, "sequence spec")->required();
    adm->add_option("--up-to", up_to, "check all 0 <= k <= n <= N")->required();
    adm->add_option("-o,--output", out_path, "output file");
    adm->callback([&] {
        action = [&] {
            auto v = is_cobweb_admissible(FSequence::parse(seq), up_to);
            Output out(out_path);
            if (v.admissible) {
                out.stream() << "admissible\n";
            } else {
                out.stream() << "first_failure " << v.first_failure->first << ' ' << v.first_failure->second << '\n';
            }
        };
    });

    auto* wh = app.add_subcommand("whitney", "Whitney numbers of a rooted poset");
    add_poset_arg(wh);
    wh->callback([&] {
        action = [&] {
            RootedPoset R = RootedPoset::from(load_poset(poset_path));
            WhitneyMethod m = R.poset().is_cobweb() ? WhitneyMethod::closed_form : WhitneyMethod::direct_sum;
            Output out(out_path);
            std::ostream& os = out.stream();
            os << "{\"first\":[";
            for (std::size_t r = 0; r <= R.top_rank(); ++r) os << (r ? "," : "") << whitney_first(R, r, m).get_str();
            os << "],\"second\":[";
            for (std::size_t r = 0; r <= R.top_rank(); ++r) os << (r ? "," : "") << whitney_second(R, r).get_str();
            os << "]}\n";
        };
    });

    auto* cp = app.add_subcommand("charpoly", "characteristic polynomial of a rooted poset");
    add_poset_arg(cp);
    cp->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text", "csv"}));
    cp->callback([&] {
        action = [&] {
            RootedPoset R = RootedPoset::from(load_poset(poset_path));
            CharPoly p = char_poly(R, R.poset().is_cobweb() ? CharPolyMethod::closed_form : CharPolyMethod::direct);
            Output out(out_path);
            if (format == "text") {
                out.stream() << p.to_string() << '\n';
            } else {
                write_charpoly_json(out.stream(), p);
            }
        };
    });

    std::size_t levels = 0;
    auto* cod = app.add_subcommand("coding", "coding matrix c_{r,s}");
    cod->add_option("--seq", seq, "sequence spec")->required();
    cod->add_option("--levels", levels, "number of levels")->required();
    cod->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cod->add_option("-o,--output", out_path, "output file");
    cod->callback([&] {
        action = [&] {
            check_levels(levels);
            CodingMatrix C = coding_matrix(FSequence::parse(seq), levels);
            Output out(out_path);
            if (format == "csv") {
                for (const auto& row : C.rows()) {
                    for (std::size_t s = 0; s < row.size(); ++s) out.stream() << (s ? "," : "") << row[s].get_str();
                    out.stream() << '\n';
                }
            } else {
                write_coding_json(out.stream(), C);
            }
        };
    });

    auto* kr = app.add_subcommand("kroton", "Kroton value K_s(r_F)");
    kr->add_option("--seq", seq, "sequence spec")->required();
    kr->add_option("r", na)->required();
    kr->add_option("s", nb)->required();
    kr->add_option("-o,--output", out_path, "output file");
    kr->callback([&] {
        action = [&] {
            Integer v = kroton(FSequence::parse(seq), na, nb);
            Output out(out_path);
            out.stream() << v.get_str() << '\n';
        };
    });

    std::string suite = "all";
    int check_status = 0;
    auto* chk = app.add_subcommand("check", "run invariant suites on a poset");
    add_poset_arg(chk);
    std::vector<std::string> suite_names = check_suites();
    suite_names.push_back("all");
    chk->add_option("--suite", suite, "all | fsequence | poset | blockmat | zeta | mobius | max | markov | whitney | formats")
        ->check(CLI::IsMember(suite_names));
    chk->callback([&] {
        action = [&] {
            GradedPoset P = load_poset(poset_path);
            auto results = run_checks(P, suite);
            Output out(out_path);
            const PropertyResult* first_fail = nullptr;
            for (const auto& r : results) {
                const char* tag = r.outcome == Outcome::pass ? "PASS" : r.outcome == Outcome::fail ? "FAIL" : "SKIP";
                out.stream() << tag << ' ' << r.suite << '/' << r.name;
                if (!r.detail.empty()) out.stream() << ": " << r.detail;
                out.stream() << '\n';
                if (r.outcome == Outcome::fail && !first_fail) first_fail = &r;
            }
            if (first_fail) {
                std::cerr << "check failed: " << first_fail->suite << '/' << first_fail->name << '\n';
                check_status = 2;
            }
        };
    });

    auto* dt = app.add_subcommand("dot", "Graphviz Hasse diagram");
    add_poset_arg(dt);
    dt->callback([&] {
        action = [&] {
            GradedPoset P = load_poset(poset_path);
            Output out(out_path);
            out.stream() << to_dot(P);
        };
    });

    auto* ls = app.add_subcommand("lascala", "ASCII staircase view of zeta");
    add_poset_arg(ls);
    ls->callback([&] {
        action = [&] {
            GradedPoset P = load_poset(poset_path);
            Output out(out_path);
            out.stream() << la_scala(P).to_string();
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    if (app.got_subcommand("coding") && cod->count("--format") == 0) format = "json";
    if (app.got_subcommand("charpoly") && cp->count("--format") == 0) format = "json";

    try {
        if (action) action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return check_status;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
