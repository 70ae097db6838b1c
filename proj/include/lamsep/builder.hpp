#pragma once

#include <cstddef>
#include <vector>

#include "lamsep/tree_decomposition.hpp"

namespace lamsep {

/// One side of one family member: member is the 0-indexed position in the
/// canonical family order, side is 1-indexed.
struct Flag {
    std::size_t member;
    int side;

    bool operator==(const Flag& o) const { return member == o.member && side == o.side; }
    bool operator<(const Flag& o) const {
        return member != o.member ? member < o.member : side < o.side;
    }
};

/// Equivalence class of mutually facing flags. Its region, the intersection
/// of side-plus-cutset over the member flags, becomes one bag of the built
/// decomposition.
struct LocationClass {
    std::vector<Flag> flags; // sorted
    VertexSet region;
};

/// The smallest side index i of s such that the whole of `other` except one
/// of its sides fits inside side i plus the cutset of s. Requires the pair
/// to be non-crossing and distinct.
int side_of(const ManySidedSeparation& s, const ManySidedSeparation& other);

/// The canonically least (member index, side index) whose region contains
/// every other member's core. Exists for every nonempty laminar family.
std::pair<std::size_t, int> find_outermost(const SeparationFamily& f);

/// Partition of all flags of a laminar family into location classes,
/// canonical order. The empty family yields one class with region V.
std::vector<LocationClass> locations(const SeparationFamily& f);

/// Deciduous tree decomposition whose center separations equal f: one
/// internal node per member (bag = its cutset, node ids 1..|f| in canonical
/// family order) and one node per location class (bag = its region), joined
/// where the class holds a flag of the member. The result is post-validated;
/// any failure raises InternalInvariant carrying a replayable certificate
/// instead of returning a bad decomposition.
TreeDecomposition build_deciduous_td(const Graph& g, const SeparationFamily& f);

} // namespace lamsep
