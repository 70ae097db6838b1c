#include "lamsep/theorem_check.hpp"

#include <sstream>

#include "lamsep/builder.hpp"
#include "lamsep/io.hpp"

namespace lamsep {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::HypothesisNotMet: return "hypothesis-not-met";
    }
    return "?";
}

bool TheoremReport::all_ok() const {
    for (const CheckResult& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

std::string TheoremReport::summary() const {
    std::ostringstream os;
    for (const CheckResult& c : checks) {
        os << c.name << ": " << to_string(c.status);
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << '\n';
    }
    return os.str();
}

TheoremReport check_all(const Graph& g, const SeparationFamily& f) {
    TheoremReport report;
    auto fail = [&](const std::string& name, const std::string& detail) {
        report.checks.push_back({name, CheckStatus::Fail, detail});
        if (report.certificate.empty())
            report.certificate = certificate_for_check(g, f, name, detail);
    };
    auto pass = [&](const std::string& name, const std::string& detail = "") {
        report.checks.push_back({name, CheckStatus::Pass, detail});
    };
    auto skip = [&](const std::string& name) {
        report.checks.push_back({name, CheckStatus::Skipped, ""});
    };

    if (auto crossing = is_laminar(f)) {
        fail("laminar", f.member(crossing->first).to_string() + " crosses " +
                            f.member(crossing->second).to_string());
        skip("projection-laminar");
        skip("build-round-trip");
        skip("rebuilt-centers-laminar");
        skip("edge-separations-match-projection");
        return report;
    }
    pass("laminar", std::to_string(f.size()) + " member(s)");

    if (auto crossing = is_laminar(project_family(f)))
        fail("projection-laminar", "projected members " + std::to_string(crossing->first) + " and " +
                                       std::to_string(crossing->second) + " cross");
    else
        pass("projection-laminar");

    bool built_ok = false;
    SeparationFamily rebuilt(g.n());
    SeparationFamily edge_seps(g.n());
    try {
        TreeDecomposition td = build_deciduous_td(g, f);
        rebuilt = center_separations(g, td);
        edge_seps = edge_separations(g, td);
        if (rebuilt != f)
            fail("build-round-trip", "center separations differ from the input family");
        else
            pass("build-round-trip", std::to_string(td.node_count()) + " nodes, width " +
                                         std::to_string(width(td)));
        built_ok = rebuilt == f;
    } catch (const Error& e) {
        report.checks.push_back({"build-round-trip", CheckStatus::Fail, e.what()});
        if (report.certificate.empty()) {
            report.certificate =
                e.certificate().empty() ? certificate_for_check(g, f, "build-round-trip", e.what())
                                        : e.certificate();
        }
    }

    if (!built_ok) {
        skip("rebuilt-centers-laminar");
        skip("edge-separations-match-projection");
        return report;
    }

    if (auto crossing = is_laminar(rebuilt))
        fail("rebuilt-centers-laminar", "members " + std::to_string(crossing->first) + " and " +
                                            std::to_string(crossing->second) + " cross");
    else
        pass("rebuilt-centers-laminar");

    bool hypothesis = true;
    try {
        for (const ManySidedSeparation& s : f) {
            if (is_minimal_cutset(g, s.cutset()) != CutsetVerdict::Minimal) {
                hypothesis = false;
                break;
            }
            auto comps = components_within(g, s.cutset().complement());
            if (comps.size() != static_cast<std::size_t>(s.arity()) ||
                !std::equal(comps.begin(), comps.end(), s.sides().begin())) {
                hypothesis = false;
                break;
            }
        }
    } catch (const Error&) {
        hypothesis = false; // e.g. disconnected graph: minimal cutsets undefined
    }
    if (!hypothesis) {
        report.checks.push_back({"edge-separations-match-projection", CheckStatus::HypothesisNotMet,
                                 "some member is not a full minimal-cutset separation"});
    } else if (edge_seps != project_family(f)) {
        fail("edge-separations-match-projection", "edge separations differ from the projection");
    } else {
        pass("edge-separations-match-projection");
    }
    return report;
}

} // namespace lamsep
