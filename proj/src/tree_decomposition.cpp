#include "lamsep/tree_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lamsep {

TreeDecomposition::TreeDecomposition(int graph_n, std::vector<std::pair<int, int>> tree_edges,
                                     std::map<int, VertexSet> bags)
    : n_(graph_n), edges_(std::move(tree_edges)), bags_(std::move(bags)) {
    if (bags_.empty())
        throw Error(ErrorKind::InvalidDecomposition, "a tree decomposition needs at least one node");
    for (auto& [node, bag] : bags_) {
        if (bag.universe() != n_)
            throw Error(ErrorKind::ContextMismatch, "bag universe does not match graph context");
        adjacency_[node]; // ensure every node has an adjacency entry
    }
    for (auto& [a, b] : edges_) {
        if (!bags_.count(a) || !bags_.count(b))
            throw Error(ErrorKind::InvalidDecomposition,
                        "tree edge " + std::to_string(a) + "-" + std::to_string(b) +
                            " touches an unknown node");
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& [node, adj] : adjacency_) std::sort(adj.begin(), adj.end());
}

std::vector<int> TreeDecomposition::nodes() const {
    std::vector<int> out;
    out.reserve(bags_.size());
    for (auto& [node, bag] : bags_) out.push_back(node);
    return out;
}

const VertexSet& TreeDecomposition::bag(int node) const {
    auto it = bags_.find(node);
    if (it == bags_.end())
        throw Error(ErrorKind::OutOfRange, "unknown tree node " + std::to_string(node));
    return it->second;
}

int TreeDecomposition::degree(int node) const { return static_cast<int>(adjacent(node).size()); }

const std::vector<int>& TreeDecomposition::adjacent(int node) const {
    auto it = adjacency_.find(node);
    if (it == adjacency_.end())
        throw Error(ErrorKind::OutOfRange, "unknown tree node " + std::to_string(node));
    return it->second;
}

std::vector<int> TreeDecomposition::support(int vertex) const {
    std::vector<int> out;
    for (auto& [node, bag] : bags_)
        if (bag.contains(vertex)) out.push_back(node);
    return out;
}

namespace {

// Nodes reachable from start without using banned.
std::set<int> reach(const TreeDecomposition& td, int start, std::optional<int> banned) {
    std::set<int> seen{start};
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int nxt : td.adjacent(cur)) {
            if ((banned && nxt == *banned) || seen.count(nxt)) continue;
            seen.insert(nxt);
            queue.push_back(nxt);
        }
    }
    return seen;
}

bool is_tree(const TreeDecomposition& td) {
    if (td.tree_edges().size() + 1 != td.node_count()) return false;
    return reach(td, td.nodes().front(), std::nullopt).size() == td.node_count();
}

VertexSet bag_union(const TreeDecomposition& td, const std::set<int>& nodes) {
    VertexSet out(td.graph_n());
    for (int t : nodes) out |= td.bag(t);
    return out;
}

} // namespace

TdCheck validate_td(const Graph& g, const TreeDecomposition& td) {
    if (td.graph_n() != g.n())
        throw Error(ErrorKind::ContextMismatch,
                    "decomposition built for n = " + std::to_string(td.graph_n()) +
                        ", graph has n = " + std::to_string(g.n()));
    TdCheck check;
    if (!is_tree(td)) {
        check.violations.push_back({TdViolationKind::NotATree,
                                    std::to_string(td.node_count()) + " nodes, " +
                                        std::to_string(td.tree_edges().size()) + " edges"});
        return check;
    }
    VertexSet covered(g.n());
    for (int t : td.nodes()) covered |= td.bag(t);
    for (int v = 1; v <= g.n(); ++v)
        if (!covered.contains(v))
            check.violations.push_back(
                {TdViolationKind::VertexUncovered, "vertex " + std::to_string(v)});
    for (auto [u, v] : g.edges()) {
        bool inside = false;
        for (int t : td.nodes())
            if (td.bag(t).contains(u) && td.bag(t).contains(v)) {
                inside = true;
                break;
            }
        if (!inside)
            check.violations.push_back({TdViolationKind::EdgeUncovered,
                                        "edge " + std::to_string(u) + "-" + std::to_string(v)});
    }
    for (int v = 1; v <= g.n(); ++v) {
        std::vector<int> supp = td.support(v);
        if (supp.size() <= 1) continue;
        // connected iff a walk from one support node stays inside the support
        std::set<int> want(supp.begin(), supp.end());
        std::set<int> seen{supp.front()};
        std::deque<int> queue{supp.front()};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int nxt : td.adjacent(cur))
                if (want.count(nxt) && !seen.count(nxt)) {
                    seen.insert(nxt);
                    queue.push_back(nxt);
                }
        }
        if (seen.size() != want.size())
            check.violations.push_back(
                {TdViolationKind::SupportDisconnected, "vertex " + std::to_string(v)});
    }
    return check;
}

int width(const TreeDecomposition& td) {
    int w = -1;
    for (int t : td.nodes()) w = std::max(w, td.bag(t).size() - 1);
    return w;
}

int min_bag_width(const TreeDecomposition& td) {
    int w = td.graph_n();
    for (int t : td.nodes()) w = std::min(w, td.bag(t).size() - 1);
    return w;
}

std::optional<Bipartition> leaf_bipartition(const TreeDecomposition& td) {
    if (!is_tree(td)) return std::nullopt;
    std::vector<int> nodes = td.nodes();
    if (nodes.size() == 1) return Bipartition{{}, {nodes.front()}};
    // 2-color by BFS, then require all leaves in one class.
    std::map<int, int> color;
    color[nodes.front()] = 0;
    std::deque<int> queue{nodes.front()};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int nxt : td.adjacent(cur))
            if (!color.count(nxt)) {
                color[nxt] = 1 - color[cur];
                queue.push_back(nxt);
            }
    }
    int leaf_color = -1;
    for (int t : nodes)
        if (td.degree(t) <= 1) {
            if (leaf_color == -1) leaf_color = color[t];
            else if (color[t] != leaf_color) return std::nullopt;
        }
    Bipartition bp;
    for (int t : nodes) (color[t] == leaf_color ? bp.y : bp.x).push_back(t);
    return bp;
}

SeparationFamily edge_separations(const Graph& g, const TreeDecomposition& td) {
    TdCheck check = validate_td(g, td);
    if (!check.ok())
        throw Error(ErrorKind::InvalidDecomposition,
                    "decomposition fails validation (" + check.violations.front().witness + ")");
    SeparationFamily out(g.n());
    for (auto [t1, t2] : td.tree_edges()) {
        VertexSet cut = td.bag(t1) & td.bag(t2);
        VertexSet side1 = bag_union(td, reach(td, t1, t2)) - cut;
        VertexSet side2 = bag_union(td, reach(td, t2, t1)) - cut;
        out.insert(ManySidedSeparation(g.n(), {side1, side2}, cut));
    }
    return out;
}

SeparationFamily center_separations(const Graph& g, const TreeDecomposition& td) {
    TdCheck check = validate_td(g, td);
    if (!check.ok())
        throw Error(ErrorKind::InvalidDecomposition,
                    "decomposition fails validation (" + check.violations.front().witness + ")");
    auto bp = leaf_bipartition(td);
    if (!bp)
        throw Error(ErrorKind::NotDeciduous, "some leaf-to-leaf path has odd length");
    SeparationFamily out(g.n());
    for (int x : bp->x) {
        VertexSet cut = td.bag(x);
        std::vector<VertexSet> sides;
        for (int y : td.adjacent(x)) sides.push_back(bag_union(td, reach(td, y, x)) - cut);
        out.insert(ManySidedSeparation(g.n(), sides, cut));
    }
    return out;
}

} // namespace lamsep
