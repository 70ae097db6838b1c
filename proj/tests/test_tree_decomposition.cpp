#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <map>

#include "lamsep/oracle.hpp"
#include "lamsep/tree_decomposition.hpp"

using namespace lamsep;

namespace {

Graph p3() { return Graph::build(3, {{1, 2}, {2, 3}}); }
Graph p5() { return Graph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}); }
Graph k13() { return Graph::build(4, {{1, 2}, {1, 3}, {1, 4}}); }

ManySidedSeparation msep(int n, std::vector<std::vector<int>> sides, std::vector<int> cutset) {
    std::vector<VertexSet> vs;
    for (auto& s : sides) vs.emplace_back(n, s);
    return ManySidedSeparation(n, vs, VertexSet(n, cutset));
}

// The five-node path decomposition of P5 with bags {1,2},{2},{2,3,4},{4},{4,5}.
TreeDecomposition p5_path_td() {
    return TreeDecomposition(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}},
                             {{1, VertexSet(5, {1, 2})},
                              {2, VertexSet(5, {2})},
                              {3, VertexSet(5, {2, 3, 4})},
                              {4, VertexSet(5, {4})},
                              {5, VertexSet(5, {4, 5})}});
}

// Bare tree (empty bags over an empty graph) for structural checks.
TreeDecomposition bare_tree(const std::vector<std::pair<int, int>>& edges, int nodes) {
    std::map<int, VertexSet> bags;
    for (int t = 1; t <= nodes; ++t) bags[t] = VertexSet(0);
    return TreeDecomposition(0, edges, bags);
}

// Independent parity reference: breadth-first distances between all leaf pairs.
bool all_leaf_paths_even(const TreeDecomposition& td) {
    std::vector<int> leaves;
    for (int t : td.nodes())
        if (td.degree(t) <= 1) leaves.push_back(t);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        std::map<int, int> dist{{leaves[i], 0}};
        std::deque<int> queue{leaves[i]};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int nxt : td.adjacent(cur))
                if (!dist.count(nxt)) {
                    dist[nxt] = dist[cur] + 1;
                    queue.push_back(nxt);
                }
        }
        for (std::size_t j = i + 1; j < leaves.size(); ++j)
            if (dist[leaves[j]] % 2 != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("validate_td") {
    Graph g = p3();
    TreeDecomposition ok(3, {{1, 2}}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2, 3})}});
    CHECK(validate_td(g, ok).ok());

    TreeDecomposition uncovered(3, {{1, 2}}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2})}});
    auto check = validate_td(g, uncovered);
    REQUIRE_FALSE(check.ok());
    CHECK(check.violations.front().kind == TdViolationKind::VertexUncovered);
    CHECK(check.violations.front().witness == "vertex 3");

    TreeDecomposition torn(3, {{1, 2}, {2, 3}},
                           {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2})}, {3, VertexSet(3, {1, 3})}});
    check = validate_td(g, torn);
    REQUIRE_FALSE(check.ok());
    bool support = false, edge = false;
    for (const TdViolation& v : check.violations) {
        support |= v.kind == TdViolationKind::SupportDisconnected && v.witness == "vertex 1";
        edge |= v.kind == TdViolationKind::EdgeUncovered; // 2-3 fits in no bag either
    }
    CHECK(support);
    CHECK(edge);
}

TEST_CASE("validate_td flags missing edges and non-trees") {
    Graph g = p3();
    TreeDecomposition no_edge(3, {{1, 2}}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {3})}});
    auto check = validate_td(g, no_edge);
    REQUIRE_FALSE(check.ok());
    bool found = false;
    for (const TdViolation& v : check.violations)
        found |= v.kind == TdViolationKind::EdgeUncovered && v.witness == "edge 2-3";
    CHECK(found);

    TreeDecomposition forest(3, {}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2, 3})}});
    check = validate_td(g, forest);
    REQUIRE_FALSE(check.ok());
    CHECK(check.violations.front().kind == TdViolationKind::NotATree);

    TreeDecomposition p3_td(3, {{1, 2}}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2, 3})}});
    CHECK_THROWS_WITH_AS((void)validate_td(p5(), p3_td), doctest::Contains("ContextMismatch"),
                         Error);
}

TEST_CASE("width") {
    Graph g = p3();
    TreeDecomposition td(3, {{1, 2}}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2, 3})}});
    CHECK(width(td) == 1);
    CHECK(min_bag_width(td) == 1);

    TreeDecomposition single(5, {}, {{1, VertexSet::full(5)}});
    CHECK(width(single) == 4);

    TreeDecomposition star(4, {{1, 2}, {1, 3}, {1, 4}},
                           {{1, VertexSet(4, {1})},
                            {2, VertexSet(4, {1, 2})},
                            {3, VertexSet(4, {1, 3})},
                            {4, VertexSet(4, {1, 4})}});
    CHECK(width(star) == 1);
    CHECK(min_bag_width(star) == 0);
}

TEST_CASE("leaf_bipartition") {
    TreeDecomposition star = bare_tree({{1, 2}, {1, 3}, {1, 4}}, 4);
    auto bp = leaf_bipartition(star);
    REQUIRE(bp.has_value());
    CHECK(bp->x == std::vector<int>{1});
    CHECK(bp->y == std::vector<int>{2, 3, 4});

    CHECK_FALSE(leaf_bipartition(bare_tree({{1, 2}}, 2)).has_value());

    auto path = leaf_bipartition(bare_tree({{1, 2}, {2, 3}, {3, 4}, {4, 5}}, 5));
    REQUIRE(path.has_value());
    CHECK(path->x == std::vector<int>{2, 4});

    auto lone = leaf_bipartition(bare_tree({}, 1));
    REQUIRE(lone.has_value());
    CHECK(lone->x.empty());
    CHECK(lone->y == std::vector<int>{1});
}

TEST_CASE("deciduous iff every leaf pair is an even distance apart (all trees up to 7 nodes)") {
    for (int n = 1; n <= 7; ++n) {
        // all labeled trees via sequence decoding: n^(n-2) sequences
        std::size_t total = 1;
        for (int i = 0; i < n - 2; ++i) total *= static_cast<std::size_t>(n);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t rest = code;
            std::vector<int> seq(static_cast<std::size_t>(std::max(0, n - 2)));
            for (int& x : seq) {
                x = static_cast<int>(rest % static_cast<std::size_t>(n)) + 1;
                rest /= static_cast<std::size_t>(n);
            }
            // decode
            std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
            for (int x : seq) ++degree[static_cast<std::size_t>(x)];
            std::vector<std::pair<int, int>> edges;
            std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
            for (int x : seq) {
                int leaf = 0;
                for (int v = 1; v <= n; ++v)
                    if (degree[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
                        leaf = v;
                        break;
                    }
                used[static_cast<std::size_t>(leaf)] = true;
                edges.emplace_back(leaf, x);
                --degree[static_cast<std::size_t>(x)];
            }
            if (n >= 2) {
                std::vector<int> last;
                for (int v = 1; v <= n; ++v)
                    if (degree[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)])
                        last.push_back(v);
                edges.emplace_back(last[0], last[1]);
            }
            TreeDecomposition tree = bare_tree(edges, n);
            CHECK(leaf_bipartition(tree).has_value() == all_leaf_paths_even(tree));
        }
    }
}

TEST_CASE("edge_separations") {
    Graph g3 = p3();
    TreeDecomposition chain(3, {{1, 2}}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2, 3})}});
    SeparationFamily tau = edge_separations(g3, chain);
    REQUIRE(tau.size() == 1);
    CHECK(tau.contains(msep(3, {{1}, {3}}, {2})));

    SeparationFamily from_path = edge_separations(p5(), p5_path_td());
    REQUIRE(from_path.size() == 2); // four edges, two canonical separations
    CHECK(from_path.contains(msep(5, {{1}, {3, 4, 5}}, {2})));
    CHECK(from_path.contains(msep(5, {{1, 2, 3}, {5}}, {4})));

    TreeDecomposition single(5, {}, {{1, VertexSet::full(5)}});
    CHECK(edge_separations(p5(), single).empty());

    TreeDecomposition invalid(3, {{1, 2}}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2})}});
    CHECK_THROWS_WITH_AS((void)edge_separations(g3, invalid),
                         doctest::Contains("InvalidDecomposition"), Error);
}

TEST_CASE("center_separations") {
    // star decomposition: center bag C, leaf bags A_i plus C
    Graph g = k13();
    TreeDecomposition star(4, {{1, 2}, {1, 3}, {1, 4}},
                           {{1, VertexSet(4, {1})},
                            {2, VertexSet(4, {1, 2})},
                            {3, VertexSet(4, {1, 3})},
                            {4, VertexSet(4, {1, 4})}});
    SeparationFamily tau_star = center_separations(g, star);
    REQUIRE(tau_star.size() == 1);
    CHECK(tau_star.contains(msep(4, {{2}, {3}, {4}}, {1})));

    SeparationFamily from_path = center_separations(p5(), p5_path_td());
    REQUIRE(from_path.size() == 2);
    CHECK(from_path.contains(msep(5, {{1}, {3, 4, 5}}, {2})));
    CHECK(from_path.contains(msep(5, {{1, 2, 3}, {5}}, {4})));

    TreeDecomposition single(5, {}, {{1, VertexSet::full(5)}});
    CHECK(center_separations(p5(), single).empty());

    Graph g3 = p3();
    TreeDecomposition two(3, {{1, 2}}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2, 3})}});
    CHECK_THROWS_WITH_AS((void)center_separations(g3, two), doctest::Contains("NotDeciduous"),
                         Error);
}

TEST_CASE("center_separations is invariant under node relabeling") {
    TreeDecomposition original = p5_path_td();
    std::map<int, VertexSet> bags;
    std::vector<std::pair<int, int>> edges;
    auto relabel = [](int t) { return 97 - 13 * t; };
    for (int t : original.nodes()) bags[relabel(t)] = original.bag(t);
    for (auto [a, b] : original.tree_edges()) edges.emplace_back(relabel(a), relabel(b));
    TreeDecomposition shuffled(5, edges, bags);
    CHECK(center_separations(p5(), shuffled) == center_separations(p5(), original));
    CHECK(edge_separations(p5(), shuffled) == edge_separations(p5(), original));
}

TEST_CASE("extracted separations are valid for the underlying graph") {
    for (const ManySidedSeparation& s : center_separations(p5(), p5_path_td()))
        CHECK(validate_msep(p5(), s).ok());
    for (const ManySidedSeparation& s : edge_separations(p5(), p5_path_td()))
        CHECK(validate_msep(p5(), s).ok());
}
