#pragma once

// Slow, obviously-correct reference implementations.  Used by the test
// suite and the `verify` subcommand only; nothing here shares code with
// the streaming path.

#include <cstdint>
#include <vector>

#include "fseg/panel.hpp"

namespace fseg {

// |R[j,k]|: number of distinct row substrings over columns [j, k].
// Throws OutOfRange unless 1 <= j <= k <= n.
std::uint32_t distinct_count(const Panel& panel, pos_t j, pos_t k);

struct OracleResult {
    std::uint32_t sentinel = 0;
    std::vector<std::uint32_t> M;  // M[k] for k in [0, n]; M[0] = sentinel
    std::vector<pos_t> split;      // optimal split per k (0 = whole prefix)
    std::uint64_t min_len = 1;

    std::uint32_t optimum() const { return M.back(); }
    bool feasible() const { return optimum() < sentinel; }

    // Boundaries 0 = b[0] < ... < b[r] = n of one optimal segmentation.
    std::vector<pos_t> segmentation() const;
};

// Quadratic reference recurrence, evaluated verbatim:
//   M(k) = sentinel                                       for k < L
//   M(k) = |R[1,k]|                                       for L <= k < 2L
//   M(k) = min over j of max{M(j), |R[j+1,k]|}, j <= k-L  for k >= 2L
OracleResult oracle_dp(const Panel& panel, std::uint64_t L);

// Ground truth by brute force over every boundary subset with all segment
// lengths >= L; returns the sentinel m+1 when no segmentation is feasible.
// Throws TooLarge for n > 24.
std::uint32_t enumerate_segmentations(const Panel& panel, std::uint64_t L);

} // namespace fseg
