#include "lamsep/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "lamsep/builder.hpp"
#include "lamsep/oracle.hpp"

namespace lamsep::accept {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    int width = std::min<int>(jobs, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(width));
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
}

std::vector<Graph> large_corpus(bool quick) {
    using namespace oracle;
    std::vector<Graph> out;
    int top = quick ? 8 : 12;
    for (int n = 4; n <= top; ++n) out.push_back(gen_graph({GraphModel::Path, n}));
    for (int n = 3; n <= top; ++n) out.push_back(gen_graph({GraphModel::Cycle, n}));
    std::vector<std::pair<int, int>> grids{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}};
    for (auto [r, c] : grids) {
        if (r * c > top) continue;
        GraphSpec spec;
        spec.model = GraphModel::Grid;
        spec.rows = r;
        spec.cols = c;
        out.push_back(gen_graph(spec));
    }
    for (int n = 6; n <= top; ++n)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            GraphSpec spec;
            spec.model = GraphModel::Tree;
            spec.n = n;
            spec.seed = seed;
            out.push_back(gen_graph(spec));
        }
    for (int n = 6; n <= top; ++n)
        for (Graph& g : sample_connected(n, 2, 100 + static_cast<std::uint64_t>(n)))
            out.push_back(std::move(g));
    return out;
}

struct CorpusInstance {
    std::size_t graph_index;
    SeparationFamily family;
};

/// Shared A2 material: the exhaustive small-graph catalog plus, per graph,
/// every pairwise non-crossing subset (<= 4 members) of its minimal-cutset
/// separations, the greedy family and its prefixes.
struct SmallCorpus {
    std::vector<Graph> graphs;
    std::vector<CorpusInstance> instances;
};

SmallCorpus small_corpus(const Options& opts) {
    SmallCorpus corpus;
    corpus.graphs = oracle::connected_catalog(opts.catalog_nmax);
    std::mutex lock;
    std::vector<std::vector<CorpusInstance>> per_graph(corpus.graphs.size());
    parallel_for(corpus.graphs.size(), opts.jobs, [&](std::size_t gi) {
        const Graph& g = corpus.graphs[gi];
        std::vector<CorpusInstance> local;
        for (SeparationFamily& f : oracle::gen_laminar_families_exhaustive(g, 4))
            local.push_back({gi, std::move(f)});
        SeparationFamily greedy = oracle::gen_laminar_family(
            g, oracle::LaminarStrategy::MinimalCutsetsGreedy);
        if (greedy.size() > 4) {
            // exhaustive subsets already cover sizes <= 4
            for (std::size_t len = 5; len <= greedy.size(); ++len) {
                SeparationFamily prefix(g.n());
                for (std::size_t i = 0; i < len; ++i) prefix.insert(greedy.member(i));
                local.push_back({gi, std::move(prefix)});
            }
        }
        std::lock_guard<std::mutex> guard(lock);
        per_graph[gi] = std::move(local);
    });
    for (auto& chunk : per_graph)
        for (auto& inst : chunk) corpus.instances.push_back(std::move(inst));
    return corpus;
}

struct Tally {
    std::atomic<std::size_t> checked{0};
    std::atomic<std::size_t> failed{0};
    std::mutex lock;
    std::string first_failure;

    void ok() { checked.fetch_add(1); }
    void bad(const std::string& what) {
        checked.fetch_add(1);
        failed.fetch_add(1);
        std::lock_guard<std::mutex> guard(lock);
        if (first_failure.empty()) first_failure = what;
    }
};

std::string summarize(const Tally& tally, const std::string& unit) {
    std::ostringstream os;
    os << tally.checked.load() << ' ' << unit << ", " << tally.failed.load() << " failing";
    if (!tally.first_failure.empty()) os << "; first: " << tally.first_failure;
    return os.str();
}

CriterionResult finish(std::string id, std::string title, Clock::time_point start,
                       double budget_seconds, Tally& tally, const std::string& unit,
                       const std::string& extra = "") {
    CriterionResult r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.seconds = elapsed(start);
    r.detail = summarize(tally, unit);
    if (!extra.empty()) r.detail += "; " + extra;
    r.pass = tally.failed.load() == 0 && r.seconds < budget_seconds;
    if (r.seconds >= budget_seconds) r.detail += "; over time budget";
    return r;
}

} // namespace

std::vector<CriterionResult> run_core(const Options& opts) {
    std::vector<CriterionResult> results;

    // A1: centers of every built decomposition form a laminar family.
    {
        auto start = Clock::now();
        Tally tally;
        std::vector<Graph> graphs = large_corpus(opts.quick);
        parallel_for(graphs.size(), opts.jobs, [&](std::size_t gi) {
            const Graph& g = graphs[gi];
            std::vector<SeparationFamily> families;
            SeparationFamily greedy =
                oracle::gen_laminar_family(g, oracle::LaminarStrategy::MinimalCutsetsGreedy);
            for (std::size_t len = 0; len <= greedy.size(); ++len) {
                SeparationFamily prefix(g.n());
                for (std::size_t i = 0; i < len; ++i) prefix.insert(greedy.member(i));
                families.push_back(std::move(prefix));
            }
            for (std::uint64_t seed = 1; seed <= 5; ++seed)
                families.push_back(oracle::random_laminar_subfamily(g, seed));
            for (const SeparationFamily& f : families) {
                try {
                    TreeDecomposition td = build_deciduous_td(g, f);
                    if (is_laminar(center_separations(g, td)))
                        tally.bad("crossing centers on graph " + std::to_string(gi));
                    else
                        tally.ok();
                } catch (const Error& e) {
                    tally.bad(std::string("build failed: ") + e.what());
                }
            }
        });
        std::size_t wanted = opts.quick ? 100 : 500;
        std::string extra;
        if (tally.checked.load() < wanted) {
            extra = "corpus too small (< " + std::to_string(wanted) + ")";
            tally.failed.fetch_add(1);
        }
        results.push_back(finish("A1", "built decompositions have laminar center separations",
                                 start, 60.0, tally, "decompositions", extra));
    }

    SmallCorpus corpus = small_corpus(opts);

    // A2: exhaustive build round trip on the small catalog.
    {
        auto start = Clock::now();
        Tally tally;
        std::atomic<std::size_t> certificates{0};
        parallel_for(corpus.instances.size(), opts.jobs, [&](std::size_t i) {
            const CorpusInstance& inst = corpus.instances[i];
            const Graph& g = corpus.graphs[inst.graph_index];
            try {
                TreeDecomposition td = build_deciduous_td(g, inst.family);
                if (!validate_td(g, td).ok())
                    tally.bad("invalid decomposition, graph " + std::to_string(inst.graph_index));
                else if (!leaf_bipartition(td))
                    tally.bad("non-deciduous result, graph " + std::to_string(inst.graph_index));
                else if (center_separations(g, td) != inst.family)
                    tally.bad("round trip mismatch, graph " + std::to_string(inst.graph_index));
                else
                    tally.ok();
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::InternalInvariant) certificates.fetch_add(1);
                tally.bad(std::string(e.what()) + ", graph " + std::to_string(inst.graph_index));
            }
        });
        std::ostringstream extra;
        extra << corpus.graphs.size() << " graphs, " << certificates.load() << " certificates";
        results.push_back(finish("A2", "exhaustive build round trip (catalog n <= " +
                                           std::to_string(opts.catalog_nmax) + ")",
                                 start, 120.0, tally, "families", extra.str()));
    }

    // A3: projections of laminar families are laminar.
    {
        auto start = Clock::now();
        Tally tally;
        parallel_for(corpus.instances.size(), opts.jobs, [&](std::size_t i) {
            const CorpusInstance& inst = corpus.instances[i];
            if (is_laminar(project_family(inst.family)))
                tally.bad("crossing projection, graph " + std::to_string(inst.graph_index));
            else
                tally.ok();
        });
        results.push_back(
            finish("A3", "family projections stay laminar", start, 30.0, tally, "families"));
    }

    // A4: minimal-cutset characterization agrees with the definitional test,
    // and minimal cutset vertices reach every component.
    {
        auto start = Clock::now();
        Tally tally;
        std::vector<Graph> graphs = oracle::connected_catalog(std::min(opts.catalog_nmax, 5));
        for (Graph& g : oracle::sample_connected(5, opts.quick ? 10 : 40, 11)) graphs.push_back(std::move(g));
        for (Graph& g : oracle::sample_connected(6, opts.quick ? 10 : 60, 12)) graphs.push_back(std::move(g));
        for (Graph& g : oracle::sample_connected(7, opts.quick ? 10 : 100, 13)) graphs.push_back(std::move(g));
        parallel_for(graphs.size(), opts.jobs, [&](std::size_t gi) {
            const Graph& g = graphs[gi];
            int n = g.n();
            for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
                VertexSet cut(n);
                for (int v = 1; v <= n; ++v)
                    if ((mask >> (v - 1)) & 1u) cut.insert(v);
                CutsetVerdict fast = is_minimal_cutset(g, cut);
                CutsetVerdict slow = oracle::minimal_cutset_definitional(g, cut);
                if (fast != slow) {
                    tally.bad("verdicts differ on " + cut.to_string() + ", graph " +
                              std::to_string(gi));
                    continue;
                }
                if (fast == CutsetVerdict::Minimal) {
                    bool reaches_all = true;
                    for (int c : cut.members())
                        for (const VertexSet& comp : components_within(g, cut.complement()))
                            if (!g.neighbors(c).intersects(comp)) reaches_all = false;
                    if (!reaches_all) {
                        tally.bad("cut vertex misses a component, " + cut.to_string());
                        continue;
                    }
                }
                tally.ok();
            }
        });
        results.push_back(finish("A4", "minimal-cutset characterization matches the definition",
                                 start, 60.0, tally, "cutsets",
                                 std::to_string(graphs.size()) + " graphs"));
    }

    // A5: edge separations of the built decomposition equal the projection
    // whenever every member is a full minimal-cutset separation.
    {
        auto start = Clock::now();
        Tally tally;
        parallel_for(corpus.instances.size(), opts.jobs, [&](std::size_t i) {
            const CorpusInstance& inst = corpus.instances[i];
            const Graph& g = corpus.graphs[inst.graph_index];
            try {
                TreeDecomposition td = build_deciduous_td(g, inst.family);
                if (edge_separations(g, td) != project_family(inst.family))
                    tally.bad("projection mismatch, graph " + std::to_string(inst.graph_index));
                else
                    tally.ok();
            } catch (const Error& e) {
                tally.bad(std::string(e.what()) + ", graph " + std::to_string(inst.graph_index));
            }
        });
        results.push_back(finish("A5", "edge separations equal the projection (minimal cutsets)",
                                 start, 60.0, tally, "families"));
    }

    // A6: the many-sided non-crossing test restricted to two sides agrees
    // with the independent 2-sided reference.
    {
        auto start = Clock::now();
        Tally tally;
        std::vector<Graph> graphs = oracle::connected_catalog(std::min(opts.catalog_nmax, 5));
        parallel_for(graphs.size(), opts.jobs, [&](std::size_t gi) {
            const Graph& g = graphs[gi];
            std::vector<ManySidedSeparation> seps = oracle::enum_two_sided(g);
            for (const ManySidedSeparation& s1 : seps)
                for (const ManySidedSeparation& s2 : seps) {
                    bool fast = noncrossing(s1, s2).has_value();
                    bool slow = oracle::noncrossing_2sided_reference(s1, s2);
                    if (fast != slow)
                        tally.bad(s1.to_string() + " vs " + s2.to_string() + ", graph " +
                                  std::to_string(gi));
                    else
                        tally.ok();
                }
        });
        results.push_back(finish("A6", "2-sided non-crossing agrees with the reference scan",
                                 start, 60.0, tally, "pairs"));
    }

    // A7: edge separations of every valid decomposition are laminar.
    {
        auto start = Clock::now();
        Tally tally;
        parallel_for(corpus.instances.size(), opts.jobs, [&](std::size_t i) {
            const CorpusInstance& inst = corpus.instances[i];
            const Graph& g = corpus.graphs[inst.graph_index];
            try {
                TreeDecomposition td = build_deciduous_td(g, inst.family);
                if (is_laminar(edge_separations(g, td)))
                    tally.bad("crossing edge separations, graph " + std::to_string(inst.graph_index));
                else
                    tally.ok();
            } catch (const Error& e) {
                tally.bad(std::string(e.what()) + ", graph " + std::to_string(inst.graph_index));
            }
        });
        // hand-built decompositions exercise shapes the builder never emits
        {
            Graph p3 = Graph::build(3, {{1, 2}, {2, 3}});
            TreeDecomposition chain(3, {{1, 2}}, {{1, VertexSet(3, {1, 2})}, {2, VertexSet(3, {2, 3})}});
            Graph p5 = Graph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
            TreeDecomposition single(5, {}, {{1, VertexSet::full(5)}});
            if (is_laminar(edge_separations(p3, chain)))
                tally.bad("crossing edge separations on the 2-bag chain");
            else
                tally.ok();
            if (is_laminar(edge_separations(p5, single)))
                tally.bad("crossing edge separations on the single bag");
            else
                tally.ok();
        }
        results.push_back(finish("A7", "edge separations of valid decompositions are laminar",
                                 start, 30.0, tally, "decompositions"));
    }

    // A8: pinned fixed points.
    {
        auto start = Clock::now();
        Tally tally;
        auto expect = [&](const std::string& what, bool ok, const std::string& detail) {
            if (ok) tally.ok();
            else tally.bad(what + ": " + detail);
        };
        Graph p3 = Graph::build(3, {{1, 2}, {2, 3}});
        Graph p4 = Graph::build(4, {{1, 2}, {2, 3}, {3, 4}});
        Graph k3 = Graph::build(3, {{1, 2}, {2, 3}, {1, 3}});
        std::size_t c3 = oracle::enum_mseps_bruteforce(p3).size();
        std::size_t c4 = oracle::enum_mseps_bruteforce(p4).size();
        std::size_t ck = oracle::enum_mseps_bruteforce(k3).size();
        expect("P3 count", c3 == 1, "got " + std::to_string(c3));
        expect("P4 count", c4 == 4,
               "got " + std::to_string(c4) +
                   " (enumeration also finds ({1},{4},{2,3}), whose cutset spans an edge)");
        expect("K3 count", ck == 0, "got " + std::to_string(ck));

        Graph p5 = Graph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
        SeparationFamily two(5);
        two.insert(ManySidedSeparation(5, {VertexSet(5, {1}), VertexSet(5, {3, 4, 5})}, VertexSet(5, {2})));
        two.insert(ManySidedSeparation(5, {VertexSet(5, {1, 2, 3}), VertexSet(5, {5})}, VertexSet(5, {4})));
        try {
            TreeDecomposition td = build_deciduous_td(p5, two);
            std::vector<std::vector<int>> bags;
            for (int t : td.nodes()) bags.push_back(td.bag(t).members());
            std::sort(bags.begin(), bags.end());
            std::vector<std::vector<int>> want{{1, 2}, {2}, {2, 3, 4}, {4}, {4, 5}};
            std::sort(want.begin(), want.end());
            expect("P5 bag multiset", bags == want, "bag multiset differs");
            expect("P5 node count", td.node_count() == 5,
                   "got " + std::to_string(td.node_count()));
        } catch (const Error& e) {
            expect("P5 build", false, e.what());
        }
        results.push_back(finish("A8", "pinned enumeration counts and the P5 fixed point", start,
                                 60.0, tally, "fixed points"));
    }

    return results;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " [" << r.seconds << "s]";
    if (!r.detail.empty()) os << " | " << r.detail;
    return os.str();
}

} // namespace lamsep::accept
