#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "char_poly.hpp"
#include "closed_form.hpp"
#include "cospectral.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "jacobi.hpp"
#include "joins.hpp"
#include "rational.hpp"
#include "report_json.hpp"
#include "roots.hpp"
#include "verify.hpp"

namespace alpha_spectra::cli {

/// ALPHA_SPECTRA_TOL if set, else 1e-8.
inline double default_tolerance() {
    const char* env = std::getenv("ALPHA_SPECTRA_TOL");
    if (!env || !*env) return kDefaultTolerance;
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(env).size() || !(v > 0))
        throw PreconditionError(std::string("ALPHA_SPECTRA_TOL is not a positive number: '") + env + "'");
    return v;
}

inline Graph load_graph(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read '" + path + "'");
    if (format == "graph6") {
        std::string line;
        std::getline(in, line);
        try {
            return parse_graph6(line);
        } catch (const Error& e) {
            throw PreconditionError(path + ": " + e.what());
        }
    }
    try {
        return read_edge_list(in);
    } catch (const Error& e) {
        throw PreconditionError(path + ": " + e.what());
    }
}

inline std::vector<Alpha> parse_alpha_list(const std::string& csv) {
    std::vector<Alpha> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Alpha::parse(item));
    return out;
}

namespace detail {

struct Operands {
    std::string kind, g1, g2, format = "edgelist";

    void add_to(CLI::App* sub, bool with_g2 = true) {
        sub->add_option("--kind", kind, "join kind")->required()->check(CLI::IsMember({"sv", "se", "rv", "re"}));
        sub->add_option("--g1", g1, "first operand file")->required();
        if (with_g2) sub->add_option("--g2", g2, "second operand file")->required();
        sub->add_option("--format", format, "operand file format")->check(CLI::IsMember({"edgelist", "graph6"}));
    }

    JoinKind join_kind() const { return parse_join_kind(kind); }
    Graph first() const { return load_graph(g1, format); }
    Graph second() const { return load_graph(g2, format); }
};

inline void note_disconnected(const Graph& g2, std::ostream& err) {
    if (g2.vertex_count() > 1 && component_count(g2) > 1)
        err << "note: G2 is disconnected; the closed forms are stated for connected operands\n";
}

}  // namespace detail

/// Runs one subcommand; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"A_alpha spectra of subdivision and R-graph joins"};
    app.require_subcommand(1, 1);

    detail::Operands join_ops, spec_ops, poly_ops, verify_ops, report_ops;
    std::string alpha_text, method = "closed", alphas_text;
    std::optional<double> tol_flag;
    std::vector<std::size_t> kpq_arg;

    auto* join_cmd = app.add_subcommand("join", "emit the join graph as an edge list");
    join_ops.add_to(join_cmd);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "A_alpha spectrum of the join");
    spec_ops.add_to(spectrum_cmd);
    spectrum_cmd->add_option("--alpha", alpha_text, "alpha as p/q")->required();
    spectrum_cmd->add_option("--method", method)->check(CLI::IsMember({"closed", "oracle", "both"}));
    spectrum_cmd->add_option("--tol", tol_flag, "comparison tolerance for --method both");

    auto* charpoly_cmd = app.add_subcommand("charpoly", "exact characteristic polynomial, ascending coefficients");
    poly_ops.add_to(charpoly_cmd);
    charpoly_cmd->add_option("--alpha", alpha_text, "alpha as p/q")->required();

    auto* verify_cmd = app.add_subcommand("verify", "closed form against the eigensolver over several alphas");
    verify_ops.add_to(verify_cmd);
    verify_cmd->add_option("--alphas", alphas_text, "comma-separated p/q list")->required();
    verify_cmd->add_option("--tol", tol_flag, "max allowed eigenvalue gap");

    auto* report_cmd = app.add_subcommand("report", "explicit spectrum report (JSON) for regular or K_{p,q} G2");
    report_ops.add_to(report_cmd, false);
    auto* report_g2 = report_cmd->add_option("--g2", report_ops.g2, "regular second operand file");
    auto* report_kpq = report_cmd->add_option("--kpq", kpq_arg, "G2 = K_{p,q}")->expected(2);
    report_g2->excludes(report_kpq);
    report_cmd->add_option("--alpha", alpha_text, "alpha as p/q")->required();

    std::string cos_kind, seeds, g1a, g1b, h, g, h1, h2, cos_format = "edgelist";
    bool emit_json = false;
    auto* cos_cmd = app.add_subcommand("cospectral", "build and certify an A_alpha-cospectral pair");
    cos_cmd->set_help_flag("--help", "print this help message and exit");
    cos_cmd->add_option("--kind", cos_kind)->required()->check(CLI::IsMember({"sv", "se", "rv", "re"}));
    cos_cmd->add_option("--seeds", seeds, "use the shipped seed pair")->check(CLI::IsMember({"builtin"}));
    cos_cmd->add_option("--g1a", g1a);
    cos_cmd->add_option("--g1b", g1b);
    cos_cmd->add_option("--h", h, "common second operand (default P3 with --seeds)");
    cos_cmd->add_option("--g", g);
    cos_cmd->add_option("--h1", h1);
    cos_cmd->add_option("--h2", h2);
    cos_cmd->add_option("--alpha", alpha_text, "alpha as p/q")->required();
    cos_cmd->add_option("--tol", tol_flag);
    cos_cmd->add_option("--format", cos_format)->check(CLI::IsMember({"edgelist", "graph6"}));
    cos_cmd->add_flag("--json", emit_json, "certificate as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const double tol = tol_flag ? *tol_flag : default_tolerance();
        if (!(tol > 0)) throw PreconditionError("tolerance must be positive");

        if (*join_cmd) {
            write_edge_list(out, join(join_ops.join_kind(), join_ops.first(), join_ops.second()).graph);
            return 0;
        }
        if (*spectrum_cmd) {
            const Alpha a = Alpha::parse(alpha_text);
            const JoinKind kind = spec_ops.join_kind();
            const Graph g1 = spec_ops.first(), g2 = spec_ops.second();
            detail::note_disconnected(g2, err);
            if (method == "oracle") {
                out << oracle_spectrum(kind, g1, g2, a).serialize();
                return 0;
            }
            const Spectrum closed = real_roots(theorem_charpoly(kind, g1, g2, a));
            out << closed.serialize();
            if (method == "closed") return 0;
            SweepReport rep;
            rep.alpha = a;
            rep.kind = kind;
            rep.order = g1.vertex_count() + g1.edge_count() + g2.vertex_count();
            rep.comparison = compare(closed, oracle_spectrum(kind, g1, g2, a), tol);
            out << rep.line() << "\n";
            return rep.pass() ? 0 : 1;
        }
        if (*charpoly_cmd) {
            const Alpha a = Alpha::parse(alpha_text);
            const Graph g2 = poly_ops.second();
            detail::note_disconnected(g2, err);
            out << theorem_charpoly(poly_ops.join_kind(), poly_ops.first(), g2, a).to_string() << "\n";
            return 0;
        }
        if (*verify_cmd) {
            const auto alphas = parse_alpha_list(alphas_text);
            const Graph g2 = verify_ops.second();
            detail::note_disconnected(g2, err);
            const auto reports = sweep(verify_ops.join_kind(), verify_ops.first(), g2, alphas, tol);
            bool ok = true;
            for (const auto& r : reports) {
                out << r.line() << "\n";
                ok = ok && r.pass();
            }
            return ok ? 0 : 1;
        }
        if (*report_cmd) {
            const Alpha a = Alpha::parse(alpha_text);
            const JoinKind kind = report_ops.join_kind();
            ClosedSpectrumReport rep;
            if (!kpq_arg.empty()) {
                rep = corollary_spectrum_kpq(kind, report_ops.first(), kpq_arg[0], kpq_arg[1], a);
            } else if (!report_ops.g2.empty()) {
                const Graph g2 = report_ops.second();
                detail::note_disconnected(g2, err);
                rep = corollary_spectrum_regular(kind, report_ops.first(), g2, a);
            } else {
                throw PreconditionError("report needs --g2 or --kpq");
            }
            out << to_json(rep).dump(2) << "\n";
            return 0;
        }
        if (*cos_cmd) {
            const Alpha a = Alpha::parse(alpha_text);
            const JoinKind kind = parse_join_kind(cos_kind);
            const bool g1_mode = !seeds.empty() || !g1a.empty() || !g1b.empty();
            const bool g2_mode = !g.empty() || !h1.empty() || !h2.empty();
            if (g1_mode == g2_mode)
                throw PreconditionError("cospectral needs exactly one of --seeds builtin, --g1a/--g1b/--h, --g/--h1/--h2");
            CospectralPair pair;
            if (g1_mode) {
                Graph first, second;
                if (!seeds.empty()) {
                    if (!g1a.empty() || !g1b.empty()) throw PreconditionError("--seeds excludes --g1a/--g1b");
                    const auto seed = seed_pairs().front();
                    first = seed.first;
                    second = seed.second;
                } else {
                    if (g1a.empty() || g1b.empty() || h.empty())
                        throw PreconditionError("--g1a, --g1b and --h are required together");
                    first = load_graph(g1a, cos_format);
                    second = load_graph(g1b, cos_format);
                }
                const Graph common = h.empty() ? path_graph(3) : load_graph(h, cos_format);
                pair = make_pair_g1(kind, first, second, common, a, tol);
            } else {
                if (g.empty() || h1.empty() || h2.empty())
                    throw PreconditionError("--g, --h1 and --h2 are required together");
                pair = make_pair_g2(kind, load_graph(g, cos_format), load_graph(h1, cos_format),
                                    load_graph(h2, cos_format), a, tol);
            }
            if (emit_json) {
                out << to_json(pair.certificate).dump(2) << "\n";
            } else {
                out << pair.certificate.serialize() << "graph first\n";
                write_edge_list(out, pair.first);
                out << "graph second\n";
                write_edge_list(out, pair.second);
            }
            return pair.certificate.certified ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace alpha_spectra::cli
