#pragma once

#include <string>

#include "lamsep/tree_decomposition.hpp"

namespace lamsep {

/// Reads either PACE 2017 format (`c` comments, `p tw <n> <m>` header, one
/// `u v` line per edge) or a plain edge list (first line `n`, then `u v`
/// lines).
Graph parse_graph(const std::string& text);
/// PACE 2017 text, edges sorted. Byte-stable for a given graph.
std::string emit_graph(const Graph& g);

/// PACE-style decomposition: `s td <#bags> <max-bag-size> <n>` header, bag
/// lines `b <id> <v...>`, then one `<i> <j>` line per tree edge. `c` comment
/// lines are ignored, including the emitted `c x-class:` record.
TreeDecomposition parse_td(const std::string& text);
/// Emits the decomposition with a `c x-class:` comment naming the internal
/// class of the leaf bipartition when one exists.
std::string emit_td(const TreeDecomposition& td);

/// {"n": int, "separations": [{"cutset": [...], "sides": [[...], ...]}]},
/// vertices 1-indexed. Readers accept members and vertices in any order;
/// emission is canonical.
SeparationFamily parse_family(const std::string& text);
std::string emit_family(const SeparationFamily& f);

/// Graphviz rendering of a decomposition with bags as labels.
std::string emit_dot(const TreeDecomposition& td);

struct Certificate {
    bool has_graph = false;
    Graph graph;
    SeparationFamily family{0};
    std::string check;
};

Certificate parse_certificate(const std::string& text);
std::string certificate_for_check(const Graph& g, const SeparationFamily& f,
                                  const std::string& check, const std::string& witness);

} // namespace lamsep
