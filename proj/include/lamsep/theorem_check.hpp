#pragma once

#include <string>
#include <vector>

#include "lamsep/separation.hpp"

namespace lamsep {

enum class CheckStatus { Pass, Fail, Skipped, HypothesisNotMet };

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

/// Outcome of running every whole-theorem check on one (graph, family)
/// instance. A failing entry always comes with a replayable certificate.
struct TheoremReport {
    std::vector<CheckResult> checks;
    std::string certificate; // JSON, nonempty iff some check failed

    bool all_ok() const;
    std::string summary() const;
};

/// Runs, in order: family laminarity; projection laminarity; the build round
/// trip (valid, deciduous, center separations equal the family); laminarity
/// of the rebuilt center separations; and, when every member's cutset is a
/// minimal cutset with sides equal to the components it leaves, equality of
/// the edge separations with the projection. Failures become report entries,
/// never exceptions.
TheoremReport check_all(const Graph& g, const SeparationFamily& f);

} // namespace lamsep
