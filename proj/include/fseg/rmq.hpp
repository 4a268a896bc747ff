#pragma once

// Range-maximum helpers used by the column updates: a rebuildable sparse
// table (the reference path) and the jump-pointer chain that memoizes
// left-to-right scans inside the retired previous-column arrays (the
// default path).

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace fseg {

// Max-variant sparse table.  O(n log n) build, O(1) query, storage reused
// across rebuilds.
template <typename T>
class SparseMaxTable {
public:
    void build(std::span<const T> values) {
        n_ = values.size();
        const auto levels = n_ > 1 ? static_cast<unsigned>(std::bit_width(n_ - 1)) : 1u;
        if (rows_.size() < levels)
            rows_.resize(levels);
        rows_[0].assign(values.begin(), values.end());
        for (unsigned lvl = 1; lvl < levels; ++lvl) {
            const std::size_t half = std::size_t{1} << (lvl - 1);
            const std::size_t count = n_ - (half << 1) + 1;
            rows_[lvl].resize(count);
            for (std::size_t i = 0; i < count; ++i)
                rows_[lvl][i] = std::max(rows_[lvl - 1][i], rows_[lvl - 1][i + half]);
        }
    }

    // Max over values[lo..hi], inclusive, 0-based, lo <= hi < n.
    T query(std::size_t lo, std::size_t hi) const {
        const auto lvl = static_cast<unsigned>(std::bit_width(hi - lo + 1) - 1);
        const std::size_t span = std::size_t{1} << lvl;
        return std::max(rows_[lvl][lo], rows_[lvl][hi + 1 - span]);
    }

    std::size_t slots() const {
        std::size_t total = 0;
        for (const auto& row : rows_)
            total += row.capacity();
        return total;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<T>> rows_;
};

// Range maximum over the ORIGINAL values of vals[j..i] (positions 1-based,
// j <= i), served from a jump table that both arrays double as: for every
// previously touched position p, jump[p] points past p and vals[p] holds
// the max of the original values over [p, jump[p]).  All positions
// traversed by this call are redirected to i+1 with their maxima updated,
// so later queries ending beyond i skip the whole range in one hop.
// Right ends must strictly increase across calls (each pointer is at most
// one past the largest right end seen, or the chain would overshoot i).
//
// `chain` is scratch for the traversal (the recursion in the obvious
// formulation can reach depth m).  `touches` counts visited positions.
template <typename V>
V range_max_jump(std::uint32_t j, std::uint32_t i,
                 std::span<std::uint32_t> jump, std::span<V> vals,
                 std::vector<std::uint32_t>& chain, std::uint64_t* touches = nullptr) {
    chain.clear();
    std::uint32_t p = j;
    while (p != i) {
        chain.push_back(p);
        p = jump[p - 1];
    }
    if (touches)
        *touches += chain.size() + 1;
    V running = vals[i - 1];
    for (std::size_t h = chain.size(); h-- > 0;) {
        const std::uint32_t q = chain[h];
        if (vals[q - 1] > running)
            running = vals[q - 1];
        vals[q - 1] = running;
        jump[q - 1] = i + 1;
    }
    return running;
}

} // namespace fseg
