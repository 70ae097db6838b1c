#pragma once

#include <utility>
#include <vector>

#include "lamsep/vertex_set.hpp"

namespace lamsep {

/// Simple undirected graph on vertices 1..n. Immutable after construction.
class Graph {
public:
    /// Validates endpoints, rejects self-loops and duplicate edges.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    /// Edges normalized to u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const VertexSet& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    VertexSet vertices() const { return VertexSet::full(n_); }
    bool is_connected() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adjacency_;
};

/// True iff no edge of g has one end in X and the other in Y.
bool anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Connected components of the subgraph induced on S, ordered by minimum
/// vertex id.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s);

enum class CutsetVerdict { NotCutset, CutsetNotMinimal, Minimal };

const char* to_string(CutsetVerdict v);

/// Requires g connected and C a proper subset of V. Minimal iff C is a
/// cutset and every c in C has a neighbor in every component of G - C.
CutsetVerdict is_minimal_cutset(const Graph& g, const VertexSet& cutset);

/// All minimal cutsets of size <= max_size, canonical order. Brute force over
/// vertex subsets; refuses graphs with n > guard_n.
std::vector<VertexSet> enum_minimal_cutsets(const Graph& g, int max_size, int guard_n = 16);

} // namespace lamsep
