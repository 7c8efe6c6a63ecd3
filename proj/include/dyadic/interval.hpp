#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dyadic {

// Deepest grid the library accepts; 2^24 leaves is far past anything the
// exact mode can handle in reasonable time.
inline constexpr int kMaxDepth = 24;

// The dyadic interval [position * 2^-level, (position + 1) * 2^-level) of the
// unit universe U = [0, 1).
struct DyadicInterval {
    int level = 0;
    std::uint64_t position = 0;

    [[nodiscard]] static DyadicInterval universe() { return {}; }
    // Validated constructor.
    [[nodiscard]] static DyadicInterval make(int level, std::uint64_t position);

    [[nodiscard]] bool is_universe() const noexcept { return level == 0; }
    [[nodiscard]] DyadicInterval parent() const;
    [[nodiscard]] DyadicInterval left() const noexcept { return {level + 1, 2 * position}; }
    [[nodiscard]] DyadicInterval right() const noexcept { return {level + 1, 2 * position + 1}; }
    // True if this is the right half of its parent.
    [[nodiscard]] bool is_right_child() const noexcept { return (position & 1U) != 0; }

    [[nodiscard]] bool contains(const DyadicInterval& other) const noexcept {
        return other.level >= level && (other.position >> (other.level - level)) == position;
    }
    [[nodiscard]] bool disjoint(const DyadicInterval& other) const noexcept {
        return !contains(other) && !other.contains(*this);
    }

    // Leaves [first_leaf, last_leaf) covered at the given depth.
    [[nodiscard]] std::uint64_t first_leaf(int depth) const noexcept { return position << (depth - level); }
    [[nodiscard]] std::uint64_t last_leaf(int depth) const noexcept {
        return (position + 1) << (depth - level);
    }
    [[nodiscard]] bool contains_leaf(std::uint64_t leaf, int depth) const noexcept {
        return (leaf >> (depth - level)) == position;
    }

    // Breadth-first index: 2^level - 1 + position.
    [[nodiscard]] std::size_t heap_index() const noexcept {
        return (std::size_t{1} << level) - 1 + static_cast<std::size_t>(position);
    }
    [[nodiscard]] static DyadicInterval from_heap_index(std::size_t index) noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
    friend auto operator<=>(const DyadicInterval&, const DyadicInterval&) = default;
};

// All intervals of levels 0..depth-1 in (level, position) order; these are the
// intervals that carry Haar coefficients on a depth-N grid.
[[nodiscard]] std::vector<DyadicInterval> interval_family(int depth);

// Throws invalid-depth unless 1 <= depth <= kMaxDepth.
void check_depth(int depth);

// The leaf interval containing `leaf` and its ancestors, innermost first.
[[nodiscard]] std::vector<DyadicInterval> containing_chain(std::uint64_t leaf, int depth);

}  // namespace dyadic
