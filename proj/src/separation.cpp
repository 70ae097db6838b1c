#include "lamsep/separation.hpp"

#include <algorithm>
#include <sstream>

namespace lamsep {

ManySidedSeparation::ManySidedSeparation(int n, std::vector<VertexSet> sides, VertexSet cutset)
    : n_(n), sides_(std::move(sides)), cutset_(std::move(cutset)) {
    if (arity() < 2)
        throw Error(ErrorKind::InvalidSeparation, "a separation needs at least two sides");
    for (const VertexSet& s : sides_)
        if (s.universe() != n_)
            throw Error(ErrorKind::ContextMismatch, "side universe does not match separation context");
    if (cutset_.universe() != n_)
        throw Error(ErrorKind::ContextMismatch, "cutset universe does not match separation context");
    std::sort(sides_.begin(), sides_.end(), canonical_less);
}

const VertexSet& ManySidedSeparation::side(int i) const {
    if (i < 1 || i > arity())
        throw Error(ErrorKind::OutOfRange, "side index " + std::to_string(i) + " not in 1.." +
                                               std::to_string(arity()));
    return sides_[static_cast<std::size_t>(i - 1)];
}

VertexSet ManySidedSeparation::region(int i) const { return side(i) | cutset_; }

VertexSet ManySidedSeparation::core_excluding(int j) const {
    VertexSet all(n_);
    for (const VertexSet& s : sides_) all |= s;
    all -= side(j);
    all |= cutset_;
    return all;
}

int ManySidedSeparation::cmp(const ManySidedSeparation& a, const ManySidedSeparation& b) {
    if (a.n_ != b.n_)
        throw Error(ErrorKind::ContextMismatch, "comparing separations over different graphs");
    std::size_t common = std::min(a.sides_.size(), b.sides_.size());
    for (std::size_t i = 0; i < common; ++i)
        if (int d = VertexSet::cmp(a.sides_[i], b.sides_[i]); d != 0) return d;
    if (a.sides_.size() != b.sides_.size()) return a.sides_.size() < b.sides_.size() ? -1 : 1;
    return VertexSet::cmp(a.cutset_, b.cutset_);
}

std::string ManySidedSeparation::to_string() const {
    std::ostringstream os;
    os << '(';
    for (const VertexSet& s : sides_) os << s.to_string() << ',';
    os << cutset_.to_string() << ')';
    return os.str();
}

MsepCheck validate_msep(const Graph& g, const ManySidedSeparation& s) {
    if (s.n() != g.n())
        throw Error(ErrorKind::ContextMismatch,
                    "separation built for n = " + std::to_string(s.n()) + ", graph has n = " +
                        std::to_string(g.n()));
    MsepCheck check;
    std::vector<VertexSet> parts = s.sides();
    parts.push_back(s.cutset());
    // (ii) pairwise disjoint
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].intersects(parts[j])) {
                VertexSet shared = parts[i] & parts[j];
                std::string a = i < s.sides().size() ? "side " + std::to_string(i + 1) : "cutset";
                std::string b = j < s.sides().size() ? "side " + std::to_string(j + 1) : "cutset";
                check.violations.push_back(
                    {2, a + " and " + b + " share vertex " + std::to_string(shared.min())});
            }
    // (iii) union covers V
    VertexSet all(g.n());
    for (const VertexSet& p : parts) all |= p;
    if (all != g.vertices()) {
        VertexSet missing = g.vertices() - all;
        check.violations.push_back({3, "vertex " + std::to_string(missing.min()) + " uncovered"});
    }
    // (iv) sides pairwise anticomplete
    for (int i = 1; i <= s.arity(); ++i)
        for (int j = i + 1; j <= s.arity(); ++j)
            if (!anticomplete(g, s.side(i), s.side(j))) {
                for (auto [u, v] : g.edges())
                    if ((s.side(i).contains(u) && s.side(j).contains(v)) ||
                        (s.side(j).contains(u) && s.side(i).contains(v))) {
                        check.violations.push_back({4, "edge " + std::to_string(u) + "-" +
                                                           std::to_string(v) + " joins sides " +
                                                           std::to_string(i) + " and " +
                                                           std::to_string(j)});
                        break;
                    }
            }
    for (int i = 1; i <= s.arity(); ++i)
        if (s.side(i).empty()) check.empty_sides.push_back(i);
    return check;
}

std::optional<std::pair<int, int>> noncrossing(const ManySidedSeparation& s1,
                                               const ManySidedSeparation& s2) {
    if (s1.n() != s2.n())
        throw Error(ErrorKind::ContextMismatch, "separations over different graphs");
    for (int i = 1; i <= s1.arity(); ++i) {
        VertexSet r1 = s1.region(i);
        for (int j = 1; j <= s2.arity(); ++j) {
            if (s2.core_excluding(j).subset_of(r1) && s1.core_excluding(i).subset_of(s2.region(j)))
                return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

bool SeparationFamily::insert(const ManySidedSeparation& s) {
    if (s.n() != n_)
        throw Error(ErrorKind::ContextMismatch, "separation context does not match family");
    auto it = std::lower_bound(members_.begin(), members_.end(), s,
                               [](const ManySidedSeparation& a, const ManySidedSeparation& b) {
                                   return ManySidedSeparation::cmp(a, b) < 0;
                               });
    if (it != members_.end() && *it == s) return false;
    members_.insert(it, s);
    return true;
}

bool SeparationFamily::contains(const ManySidedSeparation& s) const {
    if (s.n() != n_) return false;
    auto it = std::lower_bound(members_.begin(), members_.end(), s,
                               [](const ManySidedSeparation& a, const ManySidedSeparation& b) {
                                   return ManySidedSeparation::cmp(a, b) < 0;
                               });
    return it != members_.end() && *it == s;
}

bool SeparationFamily::operator==(const SeparationFamily& o) const {
    if (n_ != o.n_ || members_.size() != o.members_.size()) return false;
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i] != o.members_[i]) return false;
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> is_laminar(const SeparationFamily& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!noncrossing(f.member(i), f.member(j))) return std::make_pair(i, j);
    return std::nullopt;
}

SeparationFamily project(const ManySidedSeparation& s) {
    SeparationFamily out(s.n());
    for (int i = 1; i <= s.arity(); ++i) {
        VertexSet rest(s.n());
        for (int j = 1; j <= s.arity(); ++j)
            if (j != i) rest |= s.side(j);
        out.insert(ManySidedSeparation(s.n(), {s.side(i), rest}, s.cutset()));
    }
    return out;
}

SeparationFamily project_family(const SeparationFamily& f) {
    SeparationFamily out(f.n());
    for (const ManySidedSeparation& s : f)
        for (const ManySidedSeparation& p : project(s)) out.insert(p);
    return out;
}

ManySidedSeparation coarsen(const ManySidedSeparation& s, const std::vector<int>& index_set) {
    std::vector<bool> inside(static_cast<std::size_t>(s.arity()) + 1, false);
    for (int i : index_set) {
        if (i < 1 || i > s.arity())
            throw Error(ErrorKind::BadIndexSet, "side index " + std::to_string(i) + " not in 1.." +
                                                    std::to_string(s.arity()));
        inside[static_cast<std::size_t>(i)] = true;
    }
    std::size_t chosen = static_cast<std::size_t>(std::count(inside.begin(), inside.end(), true));
    if (chosen == 0) throw Error(ErrorKind::BadIndexSet, "index set is empty");
    if (chosen == static_cast<std::size_t>(s.arity()))
        throw Error(ErrorKind::BadIndexSet, "index set covers every side");
    VertexSet a(s.n()), b(s.n());
    for (int i = 1; i <= s.arity(); ++i)
        (inside[static_cast<std::size_t>(i)] ? a : b) |= s.side(i);
    return ManySidedSeparation(s.n(), {a, b}, s.cutset());
}

ManySidedSeparation separation_from_cutset(const Graph& g, const VertexSet& cutset) {
    if (cutset.universe() != g.n())
        throw Error(ErrorKind::OutOfRange, "cutset universe does not match graph");
    if (!g.is_connected()) throw Error(ErrorKind::NotConnectedGraph, "graph is not connected");
    auto comps = components_within(g, cutset.complement());
    if (comps.size() < 2)
        throw Error(ErrorKind::NotACutset,
                    "removing " + cutset.to_string() + " leaves " + std::to_string(comps.size()) +
                        " component(s)");
    return ManySidedSeparation(g.n(), comps, cutset);
}

} // namespace lamsep
