#include "lexidim/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "lexidim/error.hpp"

namespace lexidim {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw InputError("vertex set contains a duplicate vertex");
    }
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    VertexSet out;
    out.members_.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        out.members_.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
    VertexSet out;
    for (Vertex v = first; v < last; ++v) out.members_.push_back(v);
    return out;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::to_mask() const {
    std::uint64_t mask = 0;
    for (Vertex v : members_) {
        if (v >= 64) throw InputError("vertex index does not fit a 64-bit mask");
        mask |= std::uint64_t{1} << v;
    }
    return mask;
}

VertexSet VertexSet::with(Vertex v) const {
    if (contains(v)) return *this;
    VertexSet out = *this;
    out.members_.insert(std::lower_bound(out.members_.begin(), out.members_.end(), v), v);
    return out;
}

VertexSet VertexSet::without(Vertex v) const {
    VertexSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
    if (it != out.members_.end() && *it == v) out.members_.erase(it);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i != 0) os << ',';
        os << members_[i];
    }
    os << '}';
    return os.str();
}

}  // namespace lexidim
