#include "lamsep/vertex_set.hpp"

#include <bit>
#include <sstream>

namespace lamsep {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::NotConnectedGraph: return "NotConnectedGraph";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::BadIndexSet: return "BadIndexSet";
        case ErrorKind::NotACutset: return "NotACutset";
        case ErrorKind::NotLaminar: return "NotLaminar";
        case ErrorKind::CrossingPair: return "CrossingPair";
        case ErrorKind::NotTwoSided: return "NotTwoSided";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::InvalidSeparation: return "InvalidSeparation";
        case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
        case ErrorKind::NotDeciduous: return "NotDeciduous";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Error";
}

VertexSet::VertexSet(int universe) : n_(universe) {
    if (universe < 0) throw Error(ErrorKind::OutOfRange, "negative universe");
    words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> vertices) : VertexSet(universe) {
    for (int v : vertices) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<int>& vertices) : VertexSet(universe) {
    for (int v : vertices) insert(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 1; v <= universe; ++v) s.insert(v);
    return s;
}

void VertexSet::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw Error(ErrorKind::OutOfRange,
                    "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
}

void VertexSet::check_universe(const VertexSet& o) const {
    if (n_ != o.n_)
        throw Error(ErrorKind::ContextMismatch,
                    "vertex sets over different universes (" + std::to_string(n_) + " vs " +
                        std::to_string(o.n_) + ")");
}

bool VertexSet::contains(int v) const {
    check_vertex(v);
    return (words_[static_cast<std::size_t>((v - 1) / 64)] >> ((v - 1) % 64)) & 1u;
}

void VertexSet::insert(int v) {
    check_vertex(v);
    words_[static_cast<std::size_t>((v - 1) / 64)] |= std::uint64_t{1} << ((v - 1) % 64);
}

void VertexSet::erase(int v) {
    check_vertex(v);
    words_[static_cast<std::size_t>((v - 1) / 64)] &= ~(std::uint64_t{1} << ((v - 1) % 64));
}

int VertexSet::size() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

int VertexSet::min() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]))) + 1;
    return 0;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(i * 64) + b + 1);
            w &= w - 1;
        }
    }
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    if (!out.words_.empty() && n_ % 64 != 0)
        out.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    return out;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

int VertexSet::cmp(const VertexSet& a, const VertexSet& b) {
    a.check_universe(b);
    bool ea = a.empty(), eb = b.empty();
    if (ea || eb) return ea == eb ? 0 : (ea ? 1 : -1);
    if (int d = a.min() - b.min(); d != 0) return d;
    if (int d = a.size() - b.size(); d != 0) return d;
    // Equal min and size: lexicographic on ascending member sequences. The
    // first divergence is the lowest vertex in the symmetric difference, and
    // the set holding it is the smaller sequence.
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t d = a.words_[i] ^ b.words_[i];
        if (d) {
            std::uint64_t low = d & (~d + 1);
            return (a.words_[i] & low) ? -1 : 1;
        }
    }
    return 0;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : members()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace lamsep
