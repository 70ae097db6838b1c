#include "lamsep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>

namespace lamsep::oracle {

namespace {

// [0, 1) double from the raw engine stream; avoids distribution objects so
// output is identical across standard libraries.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

} // namespace

bool noncrossing_2sided_reference(const ManySidedSeparation& s1, const ManySidedSeparation& s2) {
    if (!s1.is_two_sided() || !s2.is_two_sided())
        throw Error(ErrorKind::NotTwoSided, "reference checker handles 2-sided separations only");
    if (s1.n() != s2.n())
        throw Error(ErrorKind::ContextMismatch, "separations over different graphs");
    auto side_union = [](const ManySidedSeparation& s, int side_index, bool with_cutset) {
        std::vector<int> out = s.side(side_index).members();
        if (with_cutset) {
            std::vector<int> cut = s.cutset().members();
            out.insert(out.end(), cut.begin(), cut.end());
            std::sort(out.begin(), out.end());
        }
        return out;
    };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            std::vector<int> left = side_union(s1, 3 - i, true);   // A_{3-i} + C
            std::vector<int> right = side_union(s2, j, true);      // B_j + D
            std::vector<int> left2 = side_union(s2, 3 - j, true);  // B_{3-j} + D
            std::vector<int> right2 = side_union(s1, i, true);     // A_i + C
            if (std::includes(right.begin(), right.end(), left.begin(), left.end()) &&
                std::includes(right2.begin(), right2.end(), left2.begin(), left2.end()))
                return true;
        }
    return false;
}

CutsetVerdict minimal_cutset_definitional(const Graph& g, const VertexSet& cutset) {
    if (!g.is_connected()) throw Error(ErrorKind::NotConnectedGraph, "graph is not connected");
    if (cutset.size() == g.n())
        throw Error(ErrorKind::OutOfRange, "cutset must be a proper subset of V");
    int n = g.n();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    auto connected_without = [&](const std::vector<int>& removed) {
        std::vector<bool> banned(static_cast<std::size_t>(n) + 1, false);
        for (int v : removed) banned[static_cast<std::size_t>(v)] = true;
        int start = 0;
        for (int v = 1; v <= n; ++v)
            if (!banned[static_cast<std::size_t>(v)]) {
                start = v;
                break;
            }
        if (start == 0) return true;
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        int visited = 0;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            ++visited;
            for (int nxt : adj[static_cast<std::size_t>(cur)])
                if (!banned[static_cast<std::size_t>(nxt)] && !seen[static_cast<std::size_t>(nxt)]) {
                    seen[static_cast<std::size_t>(nxt)] = true;
                    stack.push_back(nxt);
                }
        }
        int alive = n - static_cast<int>(removed.size());
        return visited == alive;
    };
    std::vector<int> members = cutset.members();
    if (connected_without(members)) return CutsetVerdict::NotCutset;
    std::size_t k = members.size();
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << k); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1u) sub.push_back(members[i]);
        if (!connected_without(sub)) return CutsetVerdict::CutsetNotMinimal;
    }
    return CutsetVerdict::Minimal;
}

SeparationFamily enum_mseps_bruteforce(const Graph& g, int guard_n) {
    int n = g.n();
    if (n > guard_n)
        throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds enumeration guard " +
                                             std::to_string(guard_n));
    SeparationFamily out(n);
    // Literal validity filter on plain data, independent of validate_msep.
    auto valid = [&](const std::vector<std::vector<int>>& sides) {
        for (std::size_t i = 0; i < sides.size(); ++i)
            for (std::size_t j = i + 1; j < sides.size(); ++j)
                for (auto [u, v] : g.edges()) {
                    bool ui = std::count(sides[i].begin(), sides[i].end(), u) > 0;
                    bool vi = std::count(sides[i].begin(), sides[i].end(), v) > 0;
                    bool uj = std::count(sides[j].begin(), sides[j].end(), u) > 0;
                    bool vj = std::count(sides[j].begin(), sides[j].end(), v) > 0;
                    if ((ui && vj) || (uj && vi)) return false;
                }
        return true;
    };
    for (std::uint64_t cmask = 0; cmask < (std::uint64_t{1} << n); ++cmask) {
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (!((cmask >> (v - 1)) & 1u)) rest.push_back(v);
        std::size_t r = rest.size();
        if (r < 2) continue;
        // Set partitions of `rest` by restricted growth strings.
        std::vector<std::size_t> rgs(r, 0);
        while (true) {
            std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
            if (blocks >= 2) {
                std::vector<std::vector<int>> sides(blocks);
                for (std::size_t i = 0; i < r; ++i) sides[rgs[i]].push_back(rest[i]);
                if (valid(sides)) {
                    std::vector<VertexSet> vsides;
                    for (const auto& side : sides) vsides.emplace_back(n, side);
                    VertexSet cut(n);
                    for (int v = 1; v <= n; ++v)
                        if ((cmask >> (v - 1)) & 1u) cut.insert(v);
                    out.insert(ManySidedSeparation(n, vsides, cut));
                }
            }
            // next restricted growth string
            bool advanced = false;
            std::size_t pos = r;
            while (pos > 1) {
                --pos;
                std::size_t prefix_max = 0;
                for (std::size_t i = 0; i < pos; ++i) prefix_max = std::max(prefix_max, rgs[i]);
                if (rgs[pos] <= prefix_max) {
                    ++rgs[pos];
                    for (std::size_t i = pos + 1; i < r; ++i) rgs[i] = 0;
                    advanced = true;
                    break;
                }
                rgs[pos] = 0;
            }
            if (!advanced) break;
        }
    }
    return out;
}

std::vector<ManySidedSeparation> enum_two_sided(const Graph& g, int guard_n) {
    int n = g.n();
    if (n > guard_n)
        throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds enumeration guard " +
                                             std::to_string(guard_n));
    SeparationFamily seen(n);
    std::vector<std::size_t> label(static_cast<std::size_t>(n), 0); // 0 cutset, 1, 2
    while (true) {
        VertexSet a(n), b(n), c(n);
        for (int v = 1; v <= n; ++v) {
            std::size_t l = label[static_cast<std::size_t>(v - 1)];
            (l == 0 ? c : (l == 1 ? a : b)).insert(v);
        }
        if (anticomplete(g, a, b)) seen.insert(ManySidedSeparation(n, {a, b}, c));
        std::size_t pos = static_cast<std::size_t>(n);
        while (pos > 0) {
            --pos;
            if (label[pos] < 2) {
                ++label[pos];
                for (std::size_t i = pos + 1; i < static_cast<std::size_t>(n); ++i) label[i] = 0;
                break;
            }
            label[pos] = 0;
        }
        if (pos == 0 && label[0] == 0) break;
    }
    return seen.members();
}

GraphModel parse_model(const std::string& name) {
    if (name == "path") return GraphModel::Path;
    if (name == "cycle") return GraphModel::Cycle;
    if (name == "star") return GraphModel::Star;
    if (name == "grid") return GraphModel::Grid;
    if (name == "tree") return GraphModel::Tree;
    if (name == "gnp") return GraphModel::Gnp;
    throw Error(ErrorKind::BadParams, "unknown graph model '" + name + "'");
}

Graph gen_graph(const GraphSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    switch (spec.model) {
        case GraphModel::Path: {
            if (spec.n < 1) throw Error(ErrorKind::BadParams, "path needs n >= 1");
            for (int v = 1; v < spec.n; ++v) edges.emplace_back(v, v + 1);
            return Graph::build(spec.n, edges);
        }
        case GraphModel::Cycle: {
            if (spec.n < 3) throw Error(ErrorKind::BadParams, "cycle needs n >= 3");
            for (int v = 1; v < spec.n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(spec.n, 1);
            return Graph::build(spec.n, edges);
        }
        case GraphModel::Star: {
            if (spec.n < 1) throw Error(ErrorKind::BadParams, "star needs n >= 1");
            for (int v = 2; v <= spec.n; ++v) edges.emplace_back(1, v);
            return Graph::build(spec.n, edges);
        }
        case GraphModel::Grid: {
            if (spec.rows < 1 || spec.cols < 1)
                throw Error(ErrorKind::BadParams, "grid needs rows >= 1 and cols >= 1");
            auto id = [&](int r, int c) { return r * spec.cols + c + 1; };
            for (int r = 0; r < spec.rows; ++r)
                for (int c = 0; c < spec.cols; ++c) {
                    if (c + 1 < spec.cols) edges.emplace_back(id(r, c), id(r, c + 1));
                    if (r + 1 < spec.rows) edges.emplace_back(id(r, c), id(r + 1, c));
                }
            return Graph::build(spec.rows * spec.cols, edges);
        }
        case GraphModel::Tree: {
            if (spec.n < 1) throw Error(ErrorKind::BadParams, "tree needs n >= 1");
            if (spec.n == 1) return Graph::build(1, {});
            if (spec.n == 2) return Graph::build(2, {{1, 2}});
            std::mt19937_64 rng(spec.seed);
            std::vector<int> pruefer(static_cast<std::size_t>(spec.n - 2));
            for (int& x : pruefer) x = static_cast<int>(pick(rng, static_cast<std::uint64_t>(spec.n))) + 1;
            std::vector<int> degree(static_cast<std::size_t>(spec.n) + 1, 1);
            for (int x : pruefer) ++degree[static_cast<std::size_t>(x)];
            std::vector<int> leaves;
            for (int v = spec.n; v >= 1; --v)
                if (degree[static_cast<std::size_t>(v)] == 1) leaves.push_back(v);
            std::sort(leaves.begin(), leaves.end(), std::greater<>());
            for (int x : pruefer) {
                int leaf = leaves.back();
                leaves.pop_back();
                edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                if (--degree[static_cast<std::size_t>(x)] == 1) {
                    leaves.push_back(x);
                    std::sort(leaves.begin(), leaves.end(), std::greater<>());
                }
            }
            int a = leaves[1], b = leaves[0];
            edges.emplace_back(std::min(a, b), std::max(a, b));
            return Graph::build(spec.n, edges);
        }
        case GraphModel::Gnp: {
            if (spec.n < 1) throw Error(ErrorKind::BadParams, "gnp needs n >= 1");
            if (spec.p < 0.0 || spec.p > 1.0)
                throw Error(ErrorKind::BadParams, "gnp needs p in [0, 1]");
            std::mt19937_64 rng(spec.seed);
            for (int u = 1; u <= spec.n; ++u)
                for (int v = u + 1; v <= spec.n; ++v)
                    if (unit_double(rng) < spec.p) edges.emplace_back(u, v);
            return Graph::build(spec.n, edges);
        }
    }
    throw Error(ErrorKind::BadParams, "unknown graph model");
}

namespace {

int edge_slot(int n, int u, int v) {
    // 0-based position of edge {u,v} (1-indexed, u < v) in the fixed pair order.
    int idx = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (a == u && b == v) return idx;
            ++idx;
        }
    return -1;
}

bool mask_connected(int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& pairs) {
    std::uint64_t seen = 1; // vertex 1
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!((mask >> i) & 1u)) continue;
            auto [u, v] = pairs[i];
            std::uint64_t bu = std::uint64_t{1} << (u - 1);
            std::uint64_t bv = std::uint64_t{1} << (v - 1);
            if (frontier & bu) next |= bv;
            if (frontier & bv) next |= bu;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n;
}

} // namespace

std::vector<Graph> connected_catalog(int nmax) {
    if (nmax > 7)
        throw Error(ErrorKind::TooLarge, "catalog supports nmax <= 7");
    std::vector<Graph> out;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
        std::size_t m = pairs.size();
        // permutation -> edge slot remap
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<std::vector<int>> remaps;
        do {
            std::vector<int> remap(m);
            for (std::size_t i = 0; i < m; ++i) {
                int u = perm[static_cast<std::size_t>(pairs[i].first - 1)];
                int v = perm[static_cast<std::size_t>(pairs[i].second - 1)];
                if (u > v) std::swap(u, v);
                remap[i] = edge_slot(n, u, v);
            }
            remaps.push_back(remap);
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<std::uint64_t> canonical;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            if (!mask_connected(n, mask, pairs)) continue;
            bool least = true;
            for (const auto& remap : remaps) {
                std::uint64_t image = 0;
                for (std::size_t i = 0; i < m; ++i)
                    if ((mask >> i) & 1u) image |= std::uint64_t{1} << remap[i];
                if (image < mask) {
                    least = false;
                    break;
                }
            }
            if (least) canonical.push_back(mask);
        }
        for (std::uint64_t mask : canonical) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1u) edges.push_back(pairs[i]);
            out.push_back(Graph::build(n, edges));
        }
    }
    return out;
}

std::vector<Graph> sample_connected(int n, std::size_t count, std::uint64_t seed) {
    std::vector<Graph> out;
    const double sweeps[] = {0.3, 0.4, 0.5, 0.6};
    std::uint64_t attempt = 0;
    while (out.size() < count) {
        GraphSpec spec;
        spec.model = GraphModel::Gnp;
        spec.n = n;
        spec.p = sweeps[attempt % 4];
        spec.seed = seed * 1000003 + attempt;
        ++attempt;
        Graph g = gen_graph(spec);
        if (g.is_connected()) out.push_back(std::move(g));
        if (attempt > 100 * count + 1000)
            throw Error(ErrorKind::InternalInvariant, "connected sampling failed to converge", "");
    }
    return out;
}

std::vector<ManySidedSeparation> cutset_separations(const Graph& g) {
    std::vector<ManySidedSeparation> out;
    for (const VertexSet& cut : enum_minimal_cutsets(g, g.n(), 16))
        out.push_back(separation_from_cutset(g, cut));
    std::sort(out.begin(), out.end(), [](const ManySidedSeparation& a, const ManySidedSeparation& b) {
        return ManySidedSeparation::cmp(a, b) < 0;
    });
    return out;
}

SeparationFamily gen_laminar_family(const Graph& g, LaminarStrategy strategy, std::uint64_t seed,
                                    std::size_t max_members) {
    if (strategy != LaminarStrategy::MinimalCutsetsGreedy)
        throw Error(ErrorKind::BadParams,
                    "the exhaustive strategy enumerates many families; call "
                    "gen_laminar_families_exhaustive");
    (void)seed; // the greedy scan is deterministic
    SeparationFamily out(g.n());
    std::vector<ManySidedSeparation> kept;
    for (const ManySidedSeparation& cand : cutset_separations(g)) {
        if (kept.size() >= max_members) break;
        bool ok = true;
        for (const ManySidedSeparation& have : kept)
            if (!noncrossing(have, cand)) {
                ok = false;
                break;
            }
        if (ok) {
            kept.push_back(cand);
            out.insert(cand);
        }
    }
    return out;
}

std::vector<SeparationFamily> gen_laminar_families_exhaustive(const Graph& g,
                                                              std::size_t max_members) {
    std::vector<ManySidedSeparation> cands = cutset_separations(g);
    std::size_t c = cands.size();
    std::vector<std::vector<bool>> compatible(c, std::vector<bool>(c, false));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j)
            compatible[i][j] = compatible[j][i] = noncrossing(cands[i], cands[j]).has_value();

    std::vector<SeparationFamily> out;
    std::vector<std::size_t> chosen;
    auto emit = [&]() {
        SeparationFamily f(g.n());
        for (std::size_t i : chosen) f.insert(cands[i]);
        out.push_back(std::move(f));
    };
    // Depth-first over index-increasing extensions; every visited node is a
    // pairwise non-crossing subset.
    std::function<void(std::size_t)> step = [&](std::size_t next) {
        emit();
        if (chosen.size() >= max_members) return;
        for (std::size_t i = next; i < c; ++i) {
            bool ok = true;
            for (std::size_t j : chosen)
                if (!compatible[j][i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            step(i + 1);
            chosen.pop_back();
        }
    };
    step(0);
    return out;
}

SeparationFamily random_laminar_subfamily(const Graph& g, std::uint64_t seed) {
    std::vector<ManySidedSeparation> cands = cutset_separations(g);
    std::mt19937_64 rng(seed);
    for (std::size_t i = cands.size(); i > 1; --i)
        std::swap(cands[i - 1], cands[pick(rng, i)]);
    SeparationFamily out(g.n());
    std::vector<ManySidedSeparation> kept;
    for (const ManySidedSeparation& cand : cands) {
        if (unit_double(rng) < 0.3) continue;
        bool ok = true;
        for (const ManySidedSeparation& have : kept)
            if (!noncrossing(have, cand)) {
                ok = false;
                break;
            }
        if (ok) {
            kept.push_back(cand);
            out.insert(cand);
        }
    }
    return out;
}

} // namespace lamsep::oracle
