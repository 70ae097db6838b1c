// Acceptance suite: one pass/fail line per criterion. A1-A8 come from the
// shared corpus runner; A9 exercises the command line round trips, the exit
// code contract, and the end-to-end selfcheck timing.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lamsep/acceptance.hpp"
#include "lamsep/cli.hpp"
#include "lamsep/io.hpp"

using namespace lamsep;

namespace {

const std::string kFixtures = LAMSEP_FIXTURE_DIR;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Cli {
    int code;
    std::string out;
};

Cli cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str()};
}

accept::CriterionResult run_a9() {
    auto start = std::chrono::steady_clock::now();
    accept::CriterionResult r;
    r.id = "A9";
    r.title = "byte-stable tooling, exit codes, end-to-end selfcheck";
    std::vector<std::string> problems;

    // parse/emit round trips on the fixture corpus: one normalization pass,
    // then bytes must be a fixed point
    for (const std::string& name : {"p3.gr", "p5.gr", "c4.gr", "k13.gr", "tri.gr"}) {
        std::string text = slurp(kFixtures + "/" + name);
        std::string once = emit_graph(parse_graph(text));
        if (emit_graph(parse_graph(once)) != once) problems.push_back(name + " not stable");
        if (parse_graph(once).edges() != parse_graph(text).edges())
            problems.push_back(name + " round trip changed the graph");
    }
    for (const std::string& name : {"p5_two.json", "c4_crossing.json", "star.json", "tri_three.json"}) {
        std::string text = slurp(kFixtures + "/" + name);
        std::string once = emit_family(parse_family(text));
        if (emit_family(parse_family(once)) != once) problems.push_back(name + " not stable");
        if (parse_family(once) != parse_family(text))
            problems.push_back(name + " round trip changed the family");
    }
    for (const std::string& name : {"p5_path.td", "p3_chain.td", "single_bag.td"}) {
        std::string text = slurp(kFixtures + "/" + name);
        std::string once = emit_td(parse_td(text));
        if (emit_td(parse_td(once)) != once) problems.push_back(name + " not stable");
    }

    // exit code contract: 0 true, 1 property false, 2 usage or parse error
    auto expect_code = [&](std::vector<std::string> args, int want, const std::string& label) {
        int got = cli(std::move(args)).code;
        if (got != want)
            problems.push_back(label + ": exit " + std::to_string(got) + ", wanted " +
                               std::to_string(want));
    };
    expect_code({"check-laminar", "--graph", kFixtures + "/p5.gr", "--seps", kFixtures + "/p5_two.json"},
                0, "laminar family");
    expect_code({"check-laminar", "--graph", kFixtures + "/c4.gr", "--seps",
                 kFixtures + "/c4_crossing.json"},
                1, "crossing family");
    expect_code({"build-td", "--graph", kFixtures + "/c4.gr", "--seps", kFixtures + "/p5_two.json"},
                2, "context mismatch");
    expect_code({"nonsense"}, 2, "unknown subcommand");
    expect_code({"tau-star", "--graph", kFixtures + "/p3.gr", "--td", kFixtures + "/p3_chain.td"},
                1, "non-deciduous input");

    // identical invocations must emit identical bytes
    Cli first = cli({"tau", "--graph", kFixtures + "/p5.gr", "--td", kFixtures + "/p5_path.td"});
    Cli second = cli({"tau", "--graph", kFixtures + "/p5.gr", "--td", kFixtures + "/p5_path.td"});
    if (first.out != second.out) problems.push_back("tau output not reproducible");

    // the whole corpus, end to end, through the public interface
    auto sc_start = std::chrono::steady_clock::now();
    Cli selfcheck = cli({"selfcheck", "--jobs", "2"});
    double sc_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - sc_start).count();
    for (const std::string& id : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8"})
        if (selfcheck.out.find("] " + id + " ") == std::string::npos)
            problems.push_back("selfcheck output lacks " + id);
    if (sc_seconds >= 300.0)
        problems.push_back("selfcheck took " + std::to_string(sc_seconds) + "s");

    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = problems.empty();
    std::ostringstream detail;
    detail << "selfcheck " << static_cast<int>(sc_seconds * 100) / 100.0 << "s";
    for (const std::string& p : problems) detail << "; " << p;
    r.detail = detail.str();
    return r;
}

} // namespace

int main(int argc, char** argv) {
    std::string only;
    accept::Options opts;
    opts.jobs = 2;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) only = argv[++i];
        else if (arg == "--jobs" && i + 1 < argc) opts.jobs = std::stoi(argv[++i]);
        else if (arg == "--quick") opts.quick = true;
    }

    std::vector<accept::CriterionResult> results;
    try {
        if (only.empty() || only != "A9")
            results = accept::run_core(opts);
        if (only.empty() || only == "A9") results.push_back(run_a9());
    } catch (const std::exception& e) {
        std::cerr << "acceptance harness error: " << e.what() << '\n';
        return 3;
    }

    bool all = true;
    for (const accept::CriterionResult& r : results) {
        if (!only.empty() && r.id != only) continue;
        std::cout << accept::format_line(r) << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
