#pragma once

// Positional Burrows-Wheeler transform: per-column arrays a_k (row ids
// ordered by reversed prefix) and d_k (divergence: 1-based start of the
// longest common suffix with the previous sorted row, k+1 when empty),
// computed column by column in two variants.

#include <cstdint>
#include <span>
#include <vector>

#include "fseg/panel.hpp"
#include "fseg/rmq.hpp"

namespace fseg {

struct PbwtColumn {
    pos_t k = 0;                  // column index, 0 = before the first column
    std::vector<std::uint32_t> a; // permutation of row ids 1..m
    std::vector<pos_t> d;         // divergence values in [1, k+1]
};

// Reusable per-column workspace.  counts/last are the counting-sort bucket
// array and the per-symbol last-seen position (1-based, 0 = unseen).
struct PbwtScratch {
    explicit PbwtScratch(std::uint32_t sigma)
        : counts(sigma + 1), last(sigma) {}

    std::vector<std::uint32_t> counts;
    std::vector<std::uint32_t> last;
    std::vector<std::uint32_t> chain; // jump-variant traversal scratch
    SparseMaxTable<pos_t> rmq;        // rmq-variant table over d_{k-1}
    std::uint64_t maxd_touches = 0;   // positions visited by maxd, cumulative
};

// Column 0: identity permutation, all divergences 1 (every suffix of the
// empty prefix is empty, so d = k+1 = 1).
PbwtColumn pbwt_init(std::uint32_t m);

// One column update, divergence maxima answered by a range-maximum table
// over d_{k-1}.  prev is left intact.  col holds {R_1[k], ..., R_m[k]}.
void pbwt_step_rmq(const PbwtColumn& prev, std::span<const std::uint8_t> col,
                   PbwtColumn& out, PbwtScratch& scratch);
PbwtColumn pbwt_step_rmq(const PbwtColumn& prev, std::span<const std::uint8_t> col,
                         PbwtScratch& scratch);

// Same output, but the maxima are served by maxd() below, which rewrites
// prev.a and prev.d in place as a jump table.  prev is consumed.
void pbwt_step_jump(PbwtColumn& prev, std::span<const std::uint8_t> col,
                    PbwtColumn& out, PbwtScratch& scratch);
PbwtColumn pbwt_step_jump(PbwtColumn&& prev, std::span<const std::uint8_t> col,
                          PbwtScratch& scratch);

// Max of the original aux_d over positions [j, i] (1-based, j <= i),
// redirecting every traversed jump pointer in aux_a to i+1 and storing the
// accumulated maxima back into aux_d.
pos_t maxd(std::uint32_t j, std::uint32_t i,
           std::span<std::uint32_t> aux_a, std::span<pos_t> aux_d);

// Reference implementation: sorts row ids by reversed prefix directly and
// scans adjacent common suffixes.  O(m^2 k); for tests and `verify`.
PbwtColumn naive_pbwt(const Panel& panel, pos_t k);

} // namespace fseg
