#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace betapack {

using Vertex = std::uint32_t;
using Mask = std::uint64_t;

/// Subset of the vertex universe {0, ..., universe-1}, stored as a bitset.
///
/// Two sets compare equal only when they share the universe as well as the
/// members. Ordering (operator<) is lexicographic on the sorted member
/// sequences, which is the tie-break used for solver witnesses.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet from_mask(std::size_t universe, Mask mask);
    static VertexSet full(std::size_t universe);

    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }
    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool empty() const noexcept { return size() == 0; }
    [[nodiscard]] bool contains(Vertex v) const noexcept;

    void insert(Vertex v);
    void erase(Vertex v);

    [[nodiscard]] VertexSet complement() const;
    [[nodiscard]] VertexSet united(const VertexSet& other) const;
    [[nodiscard]] VertexSet minus(const VertexSet& other) const;
    [[nodiscard]] bool is_subset_of(const VertexSet& other) const;
    [[nodiscard]] bool is_proper() const noexcept { return size() < universe_; }

    [[nodiscard]] std::vector<Vertex> members() const;
    // Requires universe() <= 64.
    [[nodiscard]] Mask to_mask() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend bool operator<(const VertexSet& a, const VertexSet& b);

private:
    void check_same_universe(const VertexSet& other) const;
    void trim();

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace betapack
