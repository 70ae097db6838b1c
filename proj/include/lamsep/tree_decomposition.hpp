#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamsep/separation.hpp"

namespace lamsep {

/// Tree plus bag map over a graph context. Node ids are arbitrary distinct
/// ints; validation checks tree-ness and the three decomposition conditions.
class TreeDecomposition {
public:
    TreeDecomposition(int graph_n, std::vector<std::pair<int, int>> tree_edges,
                      std::map<int, VertexSet> bags);

    int graph_n() const { return n_; }
    /// Ascending node ids.
    std::vector<int> nodes() const;
    const std::vector<std::pair<int, int>>& tree_edges() const { return edges_; }
    const VertexSet& bag(int node) const;
    const std::map<int, VertexSet>& bags() const { return bags_; }
    std::size_t node_count() const { return bags_.size(); }

    int degree(int node) const;
    const std::vector<int>& adjacent(int node) const;

    /// Support of a graph vertex: the tree nodes whose bags contain it.
    std::vector<int> support(int vertex) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, VertexSet> bags_;
    std::map<int, std::vector<int>> adjacency_;
};

enum class TdViolationKind { NotATree, VertexUncovered, EdgeUncovered, SupportDisconnected };

struct TdViolation {
    TdViolationKind kind;
    std::string witness;
};

struct TdCheck {
    std::vector<TdViolation> violations;
    bool ok() const { return violations.empty(); }
};

TdCheck validate_td(const Graph& g, const TreeDecomposition& td);

/// max over bags of |bag| - 1.
int width(const TreeDecomposition& td);
/// min over bags of |bag| - 1, for comparison output only.
int min_bag_width(const TreeDecomposition& td);

struct Bipartition {
    std::vector<int> x; // internal class
    std::vector<int> y; // class containing every leaf
};

/// The 2-coloring of the tree with every leaf in y, when all leaf-to-leaf
/// paths have even length; nullopt otherwise. A single node yields
/// x = {}, y = {node}.
std::optional<Bipartition> leaf_bipartition(const TreeDecomposition& td);

/// The 2-sided separation attached to each tree edge: cutset is the bag
/// intersection, sides are the bag unions of the two subtrees minus it.
/// Canonical set over all edges. Throws InvalidDecomposition when td fails
/// validation.
SeparationFamily edge_separations(const Graph& g, const TreeDecomposition& td);

/// The many-sided separation attached to each node of the internal class of
/// the leaf bipartition: cutset is its bag, one side per branch. Throws
/// NotDeciduous when the bipartition does not exist.
SeparationFamily center_separations(const Graph& g, const TreeDecomposition& td);

} // namespace lamsep
