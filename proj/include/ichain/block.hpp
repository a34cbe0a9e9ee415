#ifndef ICHAIN_BLOCK_HPP
#define ICHAIN_BLOCK_HPP

#include <compare>
#include <string>

#include "ichain/errors.hpp"
#include "ichain/model.hpp"

namespace ichain {

/// Connected interval {left, ..., right} of sites.
struct Block {
    int left;
    int right;

    Block(int l, int r) : left(l), right(r) {
        if (l > r) {
            throw DomainError("empty block [" + std::to_string(l) + ", " + std::to_string(r) + "]");
        }
    }

    int size() const noexcept { return right - left + 1; }
    bool contains(int x) const noexcept { return x >= left && x <= right; }
    bool inside(const Volume& v) const noexcept { return v.contains(left) && v.contains(right); }

    std::string to_string() const {
        return "[" + std::to_string(left) + "," + std::to_string(right) + "]";
    }

    friend auto operator<=>(const Block&, const Block&) = default;
};

}  // namespace ichain

#endif  // ICHAIN_BLOCK_HPP
