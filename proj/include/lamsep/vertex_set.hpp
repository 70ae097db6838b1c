#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lamsep/error.hpp"

namespace lamsep {

/// Subset of the vertex universe 1..n of a fixed graph, stored as a bitset.
/// All binary operations require both operands to share the same universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> vertices);
    VertexSet(int universe, const std::vector<int>& vertices);

    static VertexSet full(int universe);

    int universe() const { return n_; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const;
    bool empty() const { return size() == 0; }
    /// Smallest member, or 0 when empty.
    int min() const;
    std::vector<int> members() const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet complement() const;

    bool subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Canonical order: nonempty sets first, keyed by (min element, size,
    /// lexicographic member sequence); empty sets compare greatest.
    /// Returns <0, 0, >0.
    static int cmp(const VertexSet& a, const VertexSet& b);

    /// "{1,3,5}" with members ascending; "{}" when empty.
    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;

    void check_vertex(int v) const;
    void check_universe(const VertexSet& o) const;
};

inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
    return VertexSet::cmp(a, b) < 0;
}

} // namespace lamsep
