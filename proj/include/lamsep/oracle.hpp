#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lamsep/separation.hpp"

namespace lamsep::oracle {

/// Literal four-pair scan of the 2-sided non-crossing definition, written
/// against plain sorted vectors so it shares no set machinery with
/// noncrossing(). Both arguments must be 2-sided.
bool noncrossing_2sided_reference(const ManySidedSeparation& s1, const ManySidedSeparation& s2);

/// Definitional minimal-cutset test: a cutset is minimal iff removing any
/// proper subset leaves the graph connected. Independent of
/// is_minimal_cutset.
CutsetVerdict minimal_cutset_definitional(const Graph& g, const VertexSet& cutset);

/// Every valid many-sided separation with nonempty sides, by exhaustive
/// enumeration of cutset choices and set partitions of the rest. Refuses
/// n > guard_n.
SeparationFamily enum_mseps_bruteforce(const Graph& g, int guard_n = 9);

/// Every valid 2-sided separation (empty sides included), canonical.
std::vector<ManySidedSeparation> enum_two_sided(const Graph& g, int guard_n = 12);

enum class GraphModel { Path, Cycle, Star, Grid, Tree, Gnp };

struct GraphSpec {
    GraphModel model = GraphModel::Path;
    int n = 0;
    int rows = 0, cols = 0; // grid
    double p = 0.0;         // gnp
    std::uint64_t seed = 0; // tree, gnp
};

GraphModel parse_model(const std::string& name);

/// Deterministic graph for (model, params, seed).
Graph gen_graph(const GraphSpec& spec);

/// All connected graphs with 1..nmax vertices, one canonical representative
/// per isomorphism class, deterministic order. nmax <= 7.
std::vector<Graph> connected_catalog(int nmax);

/// Deterministic sample of connected graphs on exactly n vertices (edge
/// probability sweeps under the given seed).
std::vector<Graph> sample_connected(int n, std::size_t count, std::uint64_t seed);

enum class LaminarStrategy { MinimalCutsetsGreedy, Exhaustive };

/// Candidates for laminar families: the separation of every minimal cutset,
/// canonical order.
std::vector<ManySidedSeparation> cutset_separations(const Graph& g);

/// Greedy strategy: scan cutset separations in canonical order, keep each
/// one that stays pairwise non-crossing with those kept, stop at
/// max_members.
SeparationFamily gen_laminar_family(const Graph& g, LaminarStrategy strategy,
                                    std::uint64_t seed = 0,
                                    std::size_t max_members = SIZE_MAX);

/// Exhaustive strategy: every pairwise non-crossing subset of the cutset
/// separations with at most max_members members (the empty family included).
std::vector<SeparationFamily> gen_laminar_families_exhaustive(const Graph& g,
                                                              std::size_t max_members);

/// Seeded random pairwise non-crossing subset of the cutset separations.
SeparationFamily random_laminar_subfamily(const Graph& g, std::uint64_t seed);

} // namespace lamsep::oracle
