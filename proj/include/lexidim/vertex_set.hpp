#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lexidim {

using Vertex = std::size_t;

// Strictly increasing list of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    // Bit i of mask set <=> vertex i is a member.
    static VertexSet from_mask(std::uint64_t mask);
    // Every vertex in [first, last).
    static VertexSet range(Vertex first, Vertex last);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;
    Vertex operator[](std::size_t i) const { return members_[i]; }

    std::span<const Vertex> members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    // Requires every member < 64.
    std::uint64_t to_mask() const;

    VertexSet with(Vertex v) const;
    VertexSet without(Vertex v) const;

    // "{0,2,5}"
    std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Lexicographic on the sorted member lists.
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
        return a.members_ <=> b.members_;
    }

private:
    std::vector<Vertex> members_;
};

}  // namespace lexidim
