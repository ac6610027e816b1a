#pragma once

#include <vector>

#include "discvar/errors.hpp"
#include "discvar/monomial.hpp"
#include "discvar/ring.hpp"

namespace discvar {

enum class ordering { less = -1, equal = 0, greater = 1 };

// Block (product) order: blocks are compared first to last, and within a
// block monomials compare by degree-reverse-lexicographic over the block's
// declared variable sequence.  The blocks must partition the ring's
// variables exactly.
class block_order {
public:
    block_order(ring_ptr ring, std::vector<std::vector<int>> blocks)
        : ring_(std::move(ring)), blocks_(std::move(blocks)) {
        std::vector<char> seen(ring_->size(), 0);
        std::size_t count = 0;
        for (const auto& blk : blocks_)
            for (int v : blk) {
                if (v < 0 || static_cast<std::size_t>(v) >= ring_->size() || seen[static_cast<std::size_t>(v)])
                    throw error("block_order: blocks must partition the ring variables");
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
            }
        if (count != ring_->size())
            throw error("block_order: blocks must cover every ring variable");
    }

    const ring_ptr& ring() const { return ring_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    ordering compare(const monomial& a, const monomial& b) const {
        if (a.size() != ring_->size() || b.size() != ring_->size())
            throw ring_mismatch("monomial arity does not match the order's ring");
        for (const auto& blk : blocks_) {
            std::int64_t da = 0, db = 0;
            for (int v : blk) {
                da += a.exponent(v);
                db += b.exponent(v);
            }
            if (da != db) return da > db ? ordering::greater : ordering::less;
            // Degrevlex tie-break: scan the block's variables from last to
            // first; the monomial with the smaller exponent there is greater.
            for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
                std::int32_t ea = a.exponent(*it), eb = b.exponent(*it);
                if (ea != eb) return ea < eb ? ordering::greater : ordering::less;
            }
        }
        return ordering::equal;
    }

    bool less(const monomial& a, const monomial& b) const { return compare(a, b) == ordering::less; }
    bool greater(const monomial& a, const monomial& b) const { return compare(a, b) == ordering::greater; }

    bool operator==(const block_order& o) const {
        return same_ring(ring_, o.ring_) && blocks_ == o.blocks_;
    }
    bool operator!=(const block_order& o) const { return !(*this == o); }

private:
    ring_ptr ring_;
    std::vector<std::vector<int>> blocks_;
};

// Degrevlex over all variables in declaration order (single block).
inline block_order degrevlex_order(const ring_ptr& ring) {
    std::vector<int> all(ring->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return block_order(ring, {all});
}

// The two-block elimination order with X dominant: an X-free leading
// monomial certifies an X-free element.
inline block_order elimination_order_x(const ring_ptr& ring) {
    return block_order(ring, {ring->unknown_indices(), ring->parameter_indices()});
}

// Prepend a fresh-variable block to a base order (the fresh variables come
// first and dominate everything).
inline block_order prepend_block(const ring_ptr& ring, std::vector<int> fresh,
                                 const block_order& base) {
    std::vector<std::vector<int>> blocks;
    blocks.push_back(std::move(fresh));
    for (const auto& blk : base.blocks()) blocks.push_back(blk);
    return block_order(ring, std::move(blocks));
}

}  // namespace discvar
