#include "lamsep/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "lamsep/acceptance.hpp"
#include "lamsep/builder.hpp"
#include "lamsep/io.hpp"
#include "lamsep/oracle.hpp"
#include "lamsep/theorem_check.hpp"

namespace lamsep {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << text;
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
        std::istringstream ps(piece);
        int v;
        while (ps >> v) out.push_back(v);
        if (!ps.eof())
            throw Error(ErrorKind::ParseError, "bad vertex list element '" + piece + "'");
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty vertex list");
    return out;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::NotLaminar:
        case ErrorKind::NotACutset:
        case ErrorKind::NotDeciduous:
        case ErrorKind::InvalidDecomposition:
        case ErrorKind::InvalidSeparation:
        case ErrorKind::CrossingPair:
            return kExitPropertyFalse;
        case ErrorKind::InternalInvariant:
            return kExitInternal;
        default:
            return kExitUsage;
    }
}

struct Paths {
    std::string graph, seps, td, out, dot, cutset;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"laminar many-sided separations and deciduous tree decompositions"};
    app.require_subcommand(1);

    Paths paths;
    bool min_width = false;

    auto* check = app.add_subcommand("check-laminar", "test a separation family for laminarity");
    check->add_option("--graph", paths.graph, "graph file (.gr)")->required();
    check->add_option("--seps", paths.seps, "separation family (JSON)")->required();

    auto* build = app.add_subcommand("build-td", "build the deciduous tree decomposition of a laminar family");
    build->add_option("--graph", paths.graph)->required();
    build->add_option("--seps", paths.seps)->required();
    build->add_option("--out", paths.out, "write the decomposition here instead of stdout");
    build->add_option("--dot", paths.dot, "also write a Graphviz rendering");
    build->add_flag("--min-width", min_width, "report min bag size minus one instead of the width");

    auto* tau = app.add_subcommand("tau", "separation attached to each tree edge");
    tau->add_option("--graph", paths.graph)->required();
    tau->add_option("--td", paths.td)->required();

    auto* tau_star = app.add_subcommand("tau-star", "many-sided separation attached to each center node");
    tau_star->add_option("--graph", paths.graph)->required();
    tau_star->add_option("--td", paths.td)->required();

    auto* project_cmd = app.add_subcommand("project", "2-sided projection of a family");
    project_cmd->add_option("--seps", paths.seps)->required();

    int max_size = 0;
    auto* cutsets = app.add_subcommand("minimal-cutsets", "enumerate minimal cutsets");
    cutsets->add_option("--graph", paths.graph)->required();
    cutsets->add_option("--max-size", max_size, "largest cutset size to report")->required();

    auto* from_cutset = app.add_subcommand("from-cutset", "separation whose sides are the components left by a cutset");
    from_cutset->add_option("--graph", paths.graph)->required();
    from_cutset->add_option("--cutset", paths.cutset, "comma or space separated vertex ids")->required();

    std::string model;
    oracle::GraphSpec spec;
    auto* gen = app.add_subcommand("gen", "generate a graph deterministically");
    gen->add_option("--model", model, "path|cycle|star|grid|tree|gnp")->required();
    gen->add_option("--n", spec.n);
    gen->add_option("--rows", spec.rows);
    gen->add_option("--cols", spec.cols);
    gen->add_option("--p", spec.p);
    gen->add_option("--seed", spec.seed);
    gen->add_option("--out", paths.out);

    int nmax = 6, jobs = 1;
    bool quick = false;
    std::string replay;
    auto* selfcheck = app.add_subcommand("selfcheck", "run the whole verification corpus");
    selfcheck->add_option("--nmax", nmax, "exhaustive catalog bound (<= 6)");
    selfcheck->add_option("--jobs", jobs, "parallel workers over independent instances");
    selfcheck->add_option("--replay", replay, "re-run the checks recorded in a certificate file");
    selfcheck->add_flag("--quick", quick, "trimmed corpus for smoke runs");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*check) {
            Graph g = parse_graph(read_file(paths.graph));
            SeparationFamily f = parse_family(read_file(paths.seps));
            if (f.n() != g.n())
                throw Error(ErrorKind::ContextMismatch,
                            "family n = " + std::to_string(f.n()) + ", graph n = " +
                                std::to_string(g.n()));
            for (const ManySidedSeparation& s : f) {
                MsepCheck mc = validate_msep(g, s);
                if (!mc.ok())
                    throw Error(ErrorKind::InvalidSeparation,
                                s.to_string() + ": " + mc.violations.front().witness);
            }
            if (auto crossing = is_laminar(f)) {
                out << "crossing pair:\n"
                    << f.member(crossing->first).to_string() << '\n'
                    << f.member(crossing->second).to_string() << '\n';
                return kExitPropertyFalse;
            }
            out << "laminar (" << f.size() << " separation(s))\n";
            return kExitOk;
        }

        if (*build) {
            Graph g = parse_graph(read_file(paths.graph));
            SeparationFamily f = parse_family(read_file(paths.seps));
            if (f.n() != g.n())
                throw Error(ErrorKind::ContextMismatch,
                            "family n = " + std::to_string(f.n()) + ", graph n = " +
                                std::to_string(g.n()));
            try {
                TreeDecomposition td = build_deciduous_td(g, f);
                std::string text = emit_td(td);
                if (paths.out.empty()) {
                    out << text;
                } else {
                    write_file(paths.out, text);
                    out << "wrote " << paths.out << ": " << td.node_count() << " nodes, "
                        << (min_width ? "min-width " + std::to_string(min_bag_width(td))
                                      : "width " + std::to_string(width(td)))
                        << '\n';
                }
                if (!paths.dot.empty()) write_file(paths.dot, emit_dot(td));
                return kExitOk;
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::InternalInvariant && !e.certificate().empty()) {
                    std::string cert_path =
                        (paths.out.empty() ? std::string("lamsep") : paths.out) + ".cert.json";
                    write_file(cert_path, e.certificate());
                    err << "error: " << e.what() << " (certificate: " << cert_path << ")\n";
                    return kExitInternal;
                }
                throw;
            }
        }

        if (*tau || *tau_star) {
            Graph g = parse_graph(read_file(paths.graph));
            TreeDecomposition td = parse_td(read_file(paths.td));
            SeparationFamily f =
                *tau ? edge_separations(g, td) : center_separations(g, td);
            out << emit_family(f);
            return kExitOk;
        }

        if (*project_cmd) {
            SeparationFamily f = parse_family(read_file(paths.seps));
            out << emit_family(project_family(f));
            return kExitOk;
        }

        if (*cutsets) {
            Graph g = parse_graph(read_file(paths.graph));
            for (const VertexSet& c : enum_minimal_cutsets(g, max_size)) {
                bool first = true;
                for (int v : c.members()) {
                    if (!first) out << ' ';
                    out << v;
                    first = false;
                }
                out << '\n';
            }
            return kExitOk;
        }

        if (*from_cutset) {
            Graph g = parse_graph(read_file(paths.graph));
            VertexSet c(g.n());
            for (int v : parse_vertex_list(paths.cutset)) {
                if (v < 1 || v > g.n())
                    throw Error(ErrorKind::OutOfRange, "cutset vertex " + std::to_string(v) +
                                                           " not in 1.." + std::to_string(g.n()));
                c.insert(v);
            }
            SeparationFamily f(g.n());
            f.insert(separation_from_cutset(g, c));
            out << emit_family(f);
            return kExitOk;
        }

        if (*gen) {
            spec.model = oracle::parse_model(model);
            std::string text = emit_graph(oracle::gen_graph(spec));
            if (paths.out.empty()) out << text;
            else {
                write_file(paths.out, text);
                out << "wrote " << paths.out << '\n';
            }
            return kExitOk;
        }

        if (*selfcheck) {
            if (!replay.empty()) {
                Certificate cert = parse_certificate(read_file(replay));
                if (!cert.has_graph)
                    throw Error(ErrorKind::ParseError,
                                "certificate lacks a graph; cannot replay");
                TheoremReport report = check_all(cert.graph, cert.family);
                out << "replaying check '" << cert.check << "'\n" << report.summary();
                return report.all_ok() ? kExitOk : kExitPropertyFalse;
            }
            if (nmax < 1 || nmax > 6)
                throw Error(ErrorKind::BadParams, "--nmax must be between 1 and 6");
            if (jobs < 1) throw Error(ErrorKind::BadParams, "--jobs must be >= 1");
            accept::Options opts;
            opts.catalog_nmax = nmax;
            opts.jobs = jobs;
            opts.quick = quick;
            auto start = std::chrono::steady_clock::now();
            std::vector<accept::CriterionResult> results = accept::run_core(opts);
            bool all = true;
            for (const accept::CriterionResult& r : results) {
                out << accept::format_line(r) << '\n';
                all = all && r.pass;
            }
            double total =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            out.setf(std::ios::fixed);
            out.precision(2);
            out << (all ? "all checks passed" : "some checks FAILED") << " in " << total << "s\n";
            return all ? kExitOk : kExitPropertyFalse;
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InternalInvariant && !e.certificate().empty()) {
            err << "error: " << e.what() << '\n' << e.certificate();
            return kExitInternal;
        }
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

} // namespace lamsep
