#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamsep/graph.hpp"

namespace lamsep {

/// Partition (A_1, ..., A_k, C) of the vertex universe with k >= 2 sides.
/// Stored in canonical form: sides ordered by (min element, size,
/// lexicographic), empty sides last. The k = 2 case doubles as the standard
/// separation. Construction does not check the partition or anticomplete
/// conditions; validate_msep does.
class ManySidedSeparation {
public:
    ManySidedSeparation(int n, std::vector<VertexSet> sides, VertexSet cutset);

    int n() const { return n_; }
    int arity() const { return static_cast<int>(sides_.size()); }
    const std::vector<VertexSet>& sides() const { return sides_; }
    /// 1-indexed.
    const VertexSet& side(int i) const;
    const VertexSet& cutset() const { return cutset_; }

    /// side(i) | cutset.
    VertexSet region(int i) const;
    /// (union of all sides minus side j) | cutset, the part that must fit
    /// inside one region of a non-crossing partner.
    VertexSet core_excluding(int j) const;

    bool is_two_sided() const { return arity() == 2; }

    static int cmp(const ManySidedSeparation& a, const ManySidedSeparation& b);
    bool operator==(const ManySidedSeparation& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const ManySidedSeparation& o) const { return cmp(*this, o) != 0; }

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<VertexSet> sides_;
    VertexSet cutset_;
};

struct MsepViolation {
    int condition = 0; // 1..4 per the many-sided separation definition
    std::string witness;
};

struct MsepCheck {
    std::vector<MsepViolation> violations;
    /// 1-indexed canonical side positions that are empty; flagged as warnings
    /// in strict mode, never as violations.
    std::vector<int> empty_sides;
    bool ok() const { return violations.empty(); }
};

MsepCheck validate_msep(const Graph& g, const ManySidedSeparation& s);

/// Least (i, j), 1-indexed, witnessing that s1 and s2 are non-crossing, or
/// nullopt when they cross. Truth value is symmetric in the arguments.
std::optional<std::pair<int, int>> noncrossing(const ManySidedSeparation& s1,
                                               const ManySidedSeparation& s2);

/// Duplicate-free canonical set of separations over one vertex universe.
class SeparationFamily {
public:
    explicit SeparationFamily(int n) : n_(n) {}

    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    /// 0-indexed, canonical order.
    const ManySidedSeparation& member(std::size_t i) const { return members_[i]; }
    const std::vector<ManySidedSeparation>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    /// Canonical insert; duplicates are dropped. Returns true when inserted.
    bool insert(const ManySidedSeparation& s);
    bool contains(const ManySidedSeparation& s) const;

    bool operator==(const SeparationFamily& o) const;
    bool operator!=(const SeparationFamily& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<ManySidedSeparation> members_; // sorted, unique
};

/// nullopt when laminar; otherwise the canonical-order-first crossing pair
/// as member indices (i < j).
std::optional<std::pair<std::size_t, std::size_t>> is_laminar(const SeparationFamily& f);

/// The standard separations (A_i, union of the other sides, C) for each i,
/// deduplicated canonically.
SeparationFamily project(const ManySidedSeparation& s);
SeparationFamily project_family(const SeparationFamily& f);

/// Merge the sides listed in index_set (1-indexed) against the rest,
/// producing a 2-sided separation. index_set must be a proper nonempty
/// subset of 1..k.
ManySidedSeparation coarsen(const ManySidedSeparation& s, const std::vector<int>& index_set);

/// Sides are the connected components of G - C. Requires g connected and at
/// least two components.
ManySidedSeparation separation_from_cutset(const Graph& g, const VertexSet& cutset);

} // namespace lamsep
