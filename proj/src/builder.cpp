#include "lamsep/builder.hpp"

#include <algorithm>
#include <sstream>

#include "lamsep/certificate.hpp"

namespace lamsep {

int side_of(const ManySidedSeparation& s, const ManySidedSeparation& other) {
    if (!noncrossing(s, other))
        throw Error(ErrorKind::CrossingPair,
                    s.to_string() + " crosses " + other.to_string());
    for (int i = 1; i <= s.arity(); ++i) {
        VertexSet region = s.region(i);
        for (int j = 1; j <= other.arity(); ++j)
            if (other.core_excluding(j).subset_of(region)) return i;
    }
    // Unreachable: a non-crossing witness provides such an i.
    throw Error(ErrorKind::InternalInvariant, "non-crossing pair without a containing side",
                certificate_for_pair(s, other));
}

std::pair<std::size_t, int> find_outermost(const SeparationFamily& f) {
    if (f.empty()) throw Error(ErrorKind::BadParams, "family is empty");
    if (auto crossing = is_laminar(f))
        throw Error(ErrorKind::NotLaminar,
                    f.member(crossing->first).to_string() + " crosses " +
                        f.member(crossing->second).to_string());
    for (std::size_t m = 0; m < f.size(); ++m) {
        const ManySidedSeparation& s = f.member(m);
        for (int i = 1; i <= s.arity(); ++i) {
            VertexSet region = s.region(i);
            bool all_inside = true;
            for (std::size_t other = 0; other < f.size() && all_inside; ++other) {
                if (other == m) continue;
                const ManySidedSeparation& o = f.member(other);
                bool some_j = false;
                for (int j = 1; j <= o.arity() && !some_j; ++j)
                    some_j = o.core_excluding(j).subset_of(region);
                all_inside = some_j;
            }
            if (all_inside) return {m, i};
        }
    }
    throw Error(ErrorKind::InternalInvariant, "laminar family without an outermost side",
                certificate_for_family(f));
}

namespace {

struct FlagTable {
    std::vector<Flag> flags;
    // facing[m][o] = side_of(member m, member o) for m != o
    std::vector<std::vector<int>> facing;
};

FlagTable flag_table(const SeparationFamily& f) {
    FlagTable t;
    t.facing.assign(f.size(), std::vector<int>(f.size(), 0));
    for (std::size_t m = 0; m < f.size(); ++m) {
        for (int i = 1; i <= f.member(m).arity(); ++i) t.flags.push_back({m, i});
        for (std::size_t o = 0; o < f.size(); ++o)
            if (o != m) t.facing[m][o] = side_of(f.member(m), f.member(o));
    }
    return t;
}

// Two flags share a junction when their separations face each other through
// them and no third member both lies in that corridor and distinguishes the
// two (sees them on different sides). A member seeing both endpoints on the
// same side sits at the junction itself rather than between them.
bool facing_adjacent(const FlagTable& t, std::size_t members, Flag a, Flag b) {
    if (a.member == b.member) return false;
    if (t.facing[a.member][b.member] != a.side) return false;
    if (t.facing[b.member][a.member] != b.side) return false;
    for (std::size_t w = 0; w < members; ++w) {
        if (w == a.member || w == b.member) continue;
        if (t.facing[a.member][w] == a.side && t.facing[b.member][w] == b.side &&
            t.facing[w][a.member] != t.facing[w][b.member])
            return false;
    }
    return true;
}

} // namespace

std::vector<LocationClass> locations(const SeparationFamily& f) {
    if (auto crossing = is_laminar(f))
        throw Error(ErrorKind::NotLaminar,
                    f.member(crossing->first).to_string() + " crosses " +
                        f.member(crossing->second).to_string());
    if (f.empty()) return {LocationClass{{}, VertexSet::full(f.n())}};

    FlagTable t = flag_table(f);
    std::vector<std::size_t> parent(t.flags.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto root = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < t.flags.size(); ++i)
        for (std::size_t j = i + 1; j < t.flags.size(); ++j)
            if (facing_adjacent(t, f.size(), t.flags[i], t.flags[j]))
                parent[root(i)] = root(j);

    std::vector<LocationClass> out;
    std::vector<int> class_of(t.flags.size(), -1);
    for (std::size_t i = 0; i < t.flags.size(); ++i) {
        std::size_t r = root(i);
        if (class_of[r] == -1) {
            class_of[r] = static_cast<int>(out.size());
            out.push_back(LocationClass{{}, VertexSet::full(f.n())});
        }
        LocationClass& cls = out[static_cast<std::size_t>(class_of[r])];
        cls.flags.push_back(t.flags[i]);
        cls.region &= f.member(t.flags[i].member).region(t.flags[i].side);
    }
    for (LocationClass& cls : out) std::sort(cls.flags.begin(), cls.flags.end());
    std::sort(out.begin(), out.end(),
              [](const LocationClass& a, const LocationClass& b) { return a.flags.front() < b.flags.front(); });
    return out;
}

TreeDecomposition build_deciduous_td(const Graph& g, const SeparationFamily& f) {
    if (f.n() != g.n())
        throw Error(ErrorKind::ContextMismatch,
                    "family built for n = " + std::to_string(f.n()) + ", graph has n = " +
                        std::to_string(g.n()));
    for (const ManySidedSeparation& s : f) {
        MsepCheck check = validate_msep(g, s);
        if (!check.ok())
            throw Error(ErrorKind::InvalidSeparation,
                        s.to_string() + ": " + check.violations.front().witness);
    }
    std::vector<LocationClass> classes = locations(f); // NotLaminar raised here

    auto fail = [&](const std::string& what) -> Error {
        return Error(ErrorKind::InternalInvariant, what, certificate_for_build(g, f, classes, what));
    };

    std::map<int, VertexSet> bags;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t m = 0; m < f.size(); ++m)
        bags[static_cast<int>(m) + 1] = f.member(m).cutset();
    int next_id = static_cast<int>(f.size()) + 1;
    for (const LocationClass& cls : classes) {
        bags[next_id] = cls.region;
        for (const Flag& flag : cls.flags) {
            for (const Flag& other : cls.flags)
                if (&flag != &other && flag.member == other.member)
                    throw fail("location class holds two flags of one member");
            edges.emplace_back(static_cast<int>(flag.member) + 1, next_id);
        }
        ++next_id;
    }
    std::sort(edges.begin(), edges.end());

    if (edges.size() + 1 != bags.size()) throw fail("flag incidences do not form a tree");
    TreeDecomposition td(g.n(), edges, bags);

    TdCheck check = validate_td(g, td);
    if (!check.ok()) throw fail("built decomposition fails validation: " + check.violations.front().witness);
    auto bp = leaf_bipartition(td);
    if (!bp) throw fail("built decomposition is not deciduous");
    std::vector<int> expected_x;
    for (std::size_t m = 0; m < f.size(); ++m) expected_x.push_back(static_cast<int>(m) + 1);
    if (bp->x != expected_x) throw fail("bipartition does not isolate the member nodes");
    if (center_separations(g, td) != f) throw fail("center separations differ from the input family");
    return td;
}

} // namespace lamsep
