#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lamsep/theorem_check.hpp"

namespace lamsep::accept {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    int catalog_nmax = 6; // exhaustive catalog bound (<= 6)
    int jobs = 1;
    bool quick = false; // trims the corpus for fast smoke runs
};

/// Runs the desk-scale verification corpus: every theorem and lemma checked
/// exhaustively on small graphs plus seeded larger instances. One result per
/// criterion; a result fails when any instance fails or the time budget is
/// exceeded.
std::vector<CriterionResult> run_core(const Options& opts);

std::string format_line(const CriterionResult& r);

} // namespace lamsep::accept
