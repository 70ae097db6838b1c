#include "lamsep/graph.hpp"

#include <algorithm>
#include <bit>

namespace lamsep {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.adjacency_.assign(static_cast<std::size_t>(n) + 1, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw Error(ErrorKind::OutOfRange, "edge endpoint " + std::to_string(u < 1 || u > n ? u : v) +
                                                   " not in 1.." + std::to_string(n));
        if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (g.adjacency_[static_cast<std::size_t>(u)].contains(v))
            throw Error(ErrorKind::DuplicateEdge,
                        "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        g.adjacency_[static_cast<std::size_t>(u)].insert(v);
        g.adjacency_[static_cast<std::size_t>(v)].insert(u);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 1 || v > n_)
        throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
    return adjacency_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    return u != v && neighbors(u).contains(v);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return components_within(*this, vertices()).size() == 1;
}

bool anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.universe() != g.n() || y.universe() != g.n())
        throw Error(ErrorKind::OutOfRange, "vertex set universe does not match graph");
    for (int v : x.members())
        if (g.neighbors(v).intersects(y)) return false;
    return true;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n())
        throw Error(ErrorKind::OutOfRange, "vertex set universe does not match graph");
    std::vector<VertexSet> out;
    VertexSet remaining = s;
    // Scanning seeds in ascending order yields components sorted by min id.
    while (!remaining.empty()) {
        int seed = remaining.min();
        VertexSet comp(g.n());
        VertexSet frontier(g.n());
        frontier.insert(seed);
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next(g.n());
            for (int v : frontier.members()) next |= g.neighbors(v);
            next &= remaining;
            next -= comp;
            frontier = next;
        }
        out.push_back(comp);
        remaining -= comp;
    }
    return out;
}

const char* to_string(CutsetVerdict v) {
    switch (v) {
        case CutsetVerdict::NotCutset: return "NotCutset";
        case CutsetVerdict::CutsetNotMinimal: return "CutsetNotMinimal";
        case CutsetVerdict::Minimal: return "Minimal";
    }
    return "?";
}

CutsetVerdict is_minimal_cutset(const Graph& g, const VertexSet& cutset) {
    if (cutset.universe() != g.n())
        throw Error(ErrorKind::OutOfRange, "cutset universe does not match graph");
    if (!g.is_connected()) throw Error(ErrorKind::NotConnectedGraph, "graph is not connected");
    if (cutset.size() == g.n())
        throw Error(ErrorKind::OutOfRange, "cutset must be a proper subset of V");
    auto comps = components_within(g, cutset.complement());
    if (comps.size() < 2) return CutsetVerdict::NotCutset;
    for (int c : cutset.members())
        for (const VertexSet& comp : comps)
            if (!g.neighbors(c).intersects(comp)) return CutsetVerdict::CutsetNotMinimal;
    return CutsetVerdict::Minimal;
}

std::vector<VertexSet> enum_minimal_cutsets(const Graph& g, int max_size, int guard_n) {
    if (!g.is_connected()) throw Error(ErrorKind::NotConnectedGraph, "graph is not connected");
    if (g.n() > guard_n)
        throw Error(ErrorKind::TooLarge, "n = " + std::to_string(g.n()) + " exceeds enumeration guard " +
                                             std::to_string(guard_n));
    std::vector<VertexSet> out;
    int n = g.n();
    int cap = std::min(max_size, n > 0 ? n - 1 : 0);
    for (std::uint64_t mask = 1; n > 0 && mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) > cap) continue;
        VertexSet c(n);
        for (int v = 1; v <= n; ++v)
            if ((mask >> (v - 1)) & 1u) c.insert(v);
        if (is_minimal_cutset(g, c) == CutsetVerdict::Minimal) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace lamsep
