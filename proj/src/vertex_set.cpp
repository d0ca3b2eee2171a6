#include "betapack/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "betapack/error.hpp"

namespace betapack {

namespace {

constexpr std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t universe, Mask mask) {
    if (universe > 64) throw InputError("mask construction needs a universe of at most 64 vertices");
    VertexSet s(universe);
    if (universe > 0) {
        if (universe < 64 && (mask >> universe) != 0) throw InputError("mask has members outside the universe");
        s.words_[0] = mask;
    }
    return s;
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) {
        throw InputError("vertex " + std::to_string(v) + " out of range for " + std::to_string(universe_) +
                         " vertices");
    }
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
    if (v < universe_) words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

VertexSet VertexSet::complement() const {
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
}

VertexSet VertexSet::united(const VertexSet& other) const {
    check_same_universe(other);
    VertexSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
    return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    check_same_universe(other);
    VertexSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        for (auto w = words_[i]; w != 0; w &= w - 1) {
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        }
    }
    return out;
}

Mask VertexSet::to_mask() const {
    if (universe_ > 64) throw InputError("vertex set too large for a 64-bit mask");
    return words_.empty() ? 0 : words_[0];
}

bool operator<(const VertexSet& a, const VertexSet& b) {
    const auto am = a.members();
    const auto bm = b.members();
    return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) throw InputError("vertex sets over different universes");
}

void VertexSet::trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

}  // namespace betapack
