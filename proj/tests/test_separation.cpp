#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lamsep/oracle.hpp"
#include "lamsep/separation.hpp"

using namespace lamsep;

namespace {

Graph p5() { return Graph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}); }
Graph c4() { return Graph::build(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }
Graph k13() { return Graph::build(4, {{1, 2}, {1, 3}, {1, 4}}); }

ManySidedSeparation msep(int n, std::vector<std::vector<int>> sides, std::vector<int> cutset) {
    std::vector<VertexSet> vs;
    for (auto& s : sides) vs.emplace_back(n, s);
    return ManySidedSeparation(n, vs, VertexSet(n, cutset));
}

} // namespace

TEST_CASE("validate_msep") {
    Graph g = p5();
    CHECK(validate_msep(g, msep(5, {{1}, {3, 4, 5}}, {2})).ok());
    CHECK(validate_msep(g, msep(5, {{1, 3}, {5}}, {2, 4})).ok());

    MsepCheck bad = validate_msep(g, msep(5, {{1, 2, 3}, {4, 5}}, {}));
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.violations.front().condition == 4);
    CHECK(bad.violations.front().witness == "edge 3-4 joins sides 1 and 2");

    MsepCheck overlap = validate_msep(g, msep(5, {{1, 2}, {2, 3}}, {4, 5}));
    REQUIRE_FALSE(overlap.ok());
    CHECK(overlap.violations.front().condition == 2);

    MsepCheck uncovered = validate_msep(g, msep(5, {{1}, {3}}, {2}));
    REQUIRE_FALSE(uncovered.ok());
    bool found_cover = false;
    for (const MsepViolation& v : uncovered.violations) found_cover |= v.condition == 3;
    CHECK(found_cover);

    MsepCheck with_empty = validate_msep(g, msep(5, {{1}, {}}, {2, 3, 4, 5}));
    CHECK(with_empty.ok());
    CHECK(with_empty.empty_sides == std::vector<int>{2});

    CHECK_THROWS_AS((void)validate_msep(g, msep(4, {{1}, {3}}, {2, 4})), Error);
}

TEST_CASE("canonical form and family equality") {
    ManySidedSeparation a = msep(5, {{3, 4, 5}, {1}}, {2});
    ManySidedSeparation b = msep(5, {{1}, {3, 4, 5}}, {2});
    CHECK(a == b);
    CHECK(a.side(1) == VertexSet(5, {1}));
    CHECK(a.side(2) == VertexSet(5, {3, 4, 5}));

    // same sides, different cutsets stay distinct
    CHECK(msep(5, {{1}, {3}}, {2}) != msep(5, {{1}, {3}}, {2, 4}));

    SeparationFamily f(5);
    CHECK(f.insert(a));
    CHECK_FALSE(f.insert(b)); // permuted duplicate
    CHECK(f.size() == 1);

    // empty sides sort last
    ManySidedSeparation e = msep(5, {{}, {1}}, {2, 3, 4, 5});
    CHECK(e.side(1) == VertexSet(5, {1}));
    CHECK(e.side(2).empty());
}

TEST_CASE("noncrossing witnesses") {
    ManySidedSeparation s1 = msep(5, {{1}, {3, 4, 5}}, {2});
    ManySidedSeparation s2 = msep(5, {{1, 2, 3}, {5}}, {4});
    auto w = noncrossing(s1, s2);
    REQUIRE(w.has_value());
    CHECK(*w == std::make_pair(2, 1));

    ManySidedSeparation c1 = msep(4, {{2}, {4}}, {1, 3});
    ManySidedSeparation c2 = msep(4, {{1}, {3}}, {2, 4});
    CHECK_FALSE(noncrossing(c1, c2).has_value());

    // any 2-sided separation with a nonempty second side against itself
    auto self = noncrossing(s1, s1);
    REQUIRE(self.has_value());
    CHECK(*self == std::make_pair(1, 2));

    // a 3-sided separation with nonempty sides crosses itself
    ManySidedSeparation star = msep(4, {{2}, {3}, {4}}, {1});
    CHECK_FALSE(noncrossing(star, star).has_value());

    CHECK_THROWS_AS((void)noncrossing(s1, c1), Error);
}

TEST_CASE("noncrossing truth value is symmetric on every small msep pair") {
    for (const Graph& g : oracle::connected_catalog(5)) {
        SeparationFamily all = oracle::enum_mseps_bruteforce(g);
        for (const ManySidedSeparation& a : all)
            for (const ManySidedSeparation& b : all)
                CHECK(noncrossing(a, b).has_value() == noncrossing(b, a).has_value());
    }
}

TEST_CASE("is_laminar") {
    SeparationFamily f(5);
    f.insert(msep(5, {{1}, {3, 4, 5}}, {2}));
    f.insert(msep(5, {{1, 2, 3}, {5}}, {4}));
    CHECK_FALSE(is_laminar(f).has_value());

    SeparationFamily crossing(4);
    crossing.insert(msep(4, {{2}, {4}}, {1, 3}));
    crossing.insert(msep(4, {{1}, {3}}, {2, 4}));
    auto pair = is_laminar(crossing);
    REQUIRE(pair.has_value());
    CHECK(pair->first == 0);
    CHECK(pair->second == 1);

    SeparationFamily single(5);
    single.insert(msep(5, {{1}, {3, 4, 5}}, {2}));
    CHECK_FALSE(is_laminar(single).has_value());
}

TEST_CASE("project") {
    ManySidedSeparation star = msep(4, {{2}, {3}, {4}}, {1});
    SeparationFamily rho = project(star);
    REQUIRE(rho.size() == 3);
    CHECK(rho.contains(msep(4, {{2}, {3, 4}}, {1})));
    CHECK(rho.contains(msep(4, {{3}, {2, 4}}, {1})));
    CHECK(rho.contains(msep(4, {{4}, {2, 3}}, {1})));

    // projecting a 2-sided separation collapses the two mirror tuples
    ManySidedSeparation two = msep(5, {{1}, {3, 4, 5}}, {2});
    SeparationFamily same = project(two);
    REQUIRE(same.size() == 1);
    CHECK(same.contains(two));

    ManySidedSeparation degenerate = msep(5, {{1}, {}}, {2, 3, 4, 5});
    SeparationFamily still = project(degenerate);
    REQUIRE(still.size() == 1);
    CHECK(still.contains(degenerate));
}

TEST_CASE("project_family") {
    SeparationFamily f(5);
    f.insert(msep(5, {{1}, {3, 4, 5}}, {2}));
    f.insert(msep(5, {{1, 2, 3}, {5}}, {4}));
    CHECK(project_family(f) == f); // 2-sided members project to themselves

    SeparationFamily star_family(4);
    star_family.insert(msep(4, {{2}, {3}, {4}}, {1}));
    CHECK(project_family(star_family).size() == 3);

    SeparationFamily empty(5);
    CHECK(project_family(empty).empty());
}

TEST_CASE("coarsen") {
    ManySidedSeparation star = msep(4, {{2}, {3}, {4}}, {1});
    CHECK(coarsen(star, {1, 2}) == msep(4, {{2, 3}, {4}}, {1}));
    CHECK_THROWS_WITH_AS((void)coarsen(star, {}), doctest::Contains("BadIndexSet"), Error);
    CHECK_THROWS_WITH_AS((void)coarsen(star, {1, 2, 3}), doctest::Contains("BadIndexSet"), Error);
    CHECK_THROWS_WITH_AS((void)coarsen(star, {4}), doctest::Contains("BadIndexSet"), Error);

    // distinct coarsenings of a 3-sided separation: 2^(k-1) - 1 = 3
    SeparationFamily outputs(4);
    for (std::uint64_t mask = 1; mask + 1 < (1u << 3); ++mask) {
        std::vector<int> index_set;
        for (int i = 1; i <= 3; ++i)
            if ((mask >> (i - 1)) & 1u) index_set.push_back(i);
        outputs.insert(coarsen(star, index_set));
    }
    CHECK(outputs.size() == 3);

    // coarsenings of valid separations stay valid
    Graph g = k13();
    for (const ManySidedSeparation& s : outputs) CHECK(validate_msep(g, s).ok());
}

TEST_CASE("separation_from_cutset") {
    ManySidedSeparation s = separation_from_cutset(p5(), VertexSet(5, {2}));
    CHECK(s == msep(5, {{1}, {3, 4, 5}}, {2}));
    CHECK(separation_from_cutset(c4(), VertexSet(4, {1, 3})) == msep(4, {{2}, {4}}, {1, 3}));
    CHECK_THROWS_WITH_AS((void)separation_from_cutset(p5(), VertexSet(5)),
                         doctest::Contains("NotACutset"), Error);
}

TEST_CASE("full cutset separations: connected sides, disconnected coarsenings") {
    for (const Graph& g : oracle::connected_catalog(5)) {
        for (const VertexSet& cut : enum_minimal_cutsets(g, g.n())) {
            ManySidedSeparation s = separation_from_cutset(g, cut);
            CHECK(validate_msep(g, s).ok());
            for (int i = 1; i <= s.arity(); ++i)
                CHECK(components_within(g, s.side(i)).size() == 1);
            if (s.arity() < 3) continue;
            CHECK(project(s).size() == static_cast<std::size_t>(s.arity()));
            // no 2-sided coarsening keeps both sides connected
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << s.arity()); ++mask) {
                std::vector<int> index_set;
                for (int i = 1; i <= s.arity(); ++i)
                    if ((mask >> (i - 1)) & 1u) index_set.push_back(i);
                ManySidedSeparation flat = coarsen(s, index_set);
                CHECK(validate_msep(g, flat).ok());
                bool both_connected = components_within(g, flat.side(1)).size() == 1 &&
                                      components_within(g, flat.side(2)).size() == 1;
                CHECK_FALSE(both_connected);
            }
        }
    }
}
