#include "dyadic/interval.hpp"

#include "dyadic/error.hpp"

#include <bit>

namespace dyadic {

DyadicInterval DyadicInterval::make(int level, std::uint64_t position) {
    if (level < 0 || level > kMaxDepth) {
        throw DyadicError(ErrorKind::invalid_depth, "level " + std::to_string(level) + " out of range");
    }
    if (position >= (std::uint64_t{1} << level)) {
        throw DyadicError(ErrorKind::shape_error, "position " + std::to_string(position) +
                                                      " out of range at level " + std::to_string(level));
    }
    return {level, position};
}

DyadicInterval DyadicInterval::parent() const {
    if (level == 0) throw DyadicError(ErrorKind::no_parent, "the universe has no parent");
    return {level - 1, position / 2};
}

DyadicInterval DyadicInterval::from_heap_index(std::size_t index) noexcept {
    const int level = std::bit_width(index + 1) - 1;
    return {level, static_cast<std::uint64_t>(index + 1 - (std::size_t{1} << level))};
}

std::string DyadicInterval::to_string() const {
    return "(" + std::to_string(level) + "," + std::to_string(position) + ")";
}

void check_depth(int depth) {
    if (depth < 1 || depth > kMaxDepth) {
        throw DyadicError(ErrorKind::invalid_depth, "depth " + std::to_string(depth) + " not in [1, " +
                                                        std::to_string(kMaxDepth) + "]");
    }
}

std::vector<DyadicInterval> interval_family(int depth) {
    check_depth(depth);
    std::vector<DyadicInterval> out;
    out.reserve((std::size_t{1} << depth) - 1);
    for (int level = 0; level < depth; ++level) {
        for (std::uint64_t pos = 0; pos < (std::uint64_t{1} << level); ++pos) out.push_back({level, pos});
    }
    return out;
}

std::vector<DyadicInterval> containing_chain(std::uint64_t leaf, int depth) {
    std::vector<DyadicInterval> chain;
    chain.reserve(static_cast<std::size_t>(depth) + 1);
    for (int level = depth; level >= 0; --level) chain.push_back({level, leaf >> (depth - level)});
    return chain;
}

}  // namespace dyadic
