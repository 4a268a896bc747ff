#pragma once

// Streaming minimum-segmentation solver.  M(k) is the smallest achievable
// maximum segment cardinality over all segmentations of columns [1, k]
// into segments of length >= L.  The segmenter consumes one column at a
// time in O(m) (amortized) work and O(m + L) state: instead of the
// divergence array d_k it keeps the compacted class representation
//
//   s[1..r]  distinct d_k values, increasing, s[r] = k+1
//   t[1..r]  multiplicity of s[j] in d_k
//   e[1..m]  class index of each sorted row: s[e[i]] = d_k[i]
//   u[1..r]  min (value, split position) of past M over the class's
//            column range, sentinel-valued where no finite M exists
//
// plus a ring buffer of the last L values of M.  Cardinalities of the
// candidate split classes are suffix sums of t, so each M(k) falls out of
// one right-to-left pass over r <= m classes.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "fseg/column_source.hpp"
#include "fseg/panel.hpp"
#include "fseg/rmq.hpp"

namespace fseg {

// Strategy for the in-column range maxima over e_{k-1}: rewrite the
// retired previous-column arrays as a jump table (default, fastest in
// practice) or rebuild a sparse table every column (reference path).
enum class MaxMode : std::uint8_t { jump, rmq };

// One entry of u: minimum past M' over a class's column range and a split
// position attaining it (0 when the minimum is the sentinel).
struct MinSplit {
    std::uint32_t value;
    pos_t pos;
};

class Segmenter {
public:
    // State for column 0.  L is the minimum segment length; sigma bounds
    // the column symbols.  Throws EmptyInput (m = 0), InvalidL (L = 0).
    Segmenter(std::uint32_t m, std::uint64_t L, std::uint32_t sigma = 256,
              MaxMode mode = MaxMode::jump);

    struct StepOut {
        std::uint32_t value; // M(k); sentinel() while k < L
        pos_t split;         // backtrack entry: 0 if M(k) = |R[1,k]|, else the split j
    };

    // Consumes column k = current()+1.  O(m + sigma) plus the range-max work.
    StepOut step(std::span<const std::uint8_t> column);

    std::uint32_t row_count() const { return m_; }
    std::uint64_t min_segment_length() const { return L_; }
    pos_t current() const { return k_; }
    std::uint32_t sentinel() const { return sentinel_; }

    std::uint32_t class_count() const { return static_cast<std::uint32_t>(s_.size()); }
    std::span<const pos_t> s() const { return s_; }
    std::span<const std::uint32_t> t() const { return t_; }
    std::span<const MinSplit> u() const { return u_; }
    std::span<const std::uint32_t> e() const { return {e_.data(), m_}; }
    std::span<const std::uint32_t> a() const { return {a_.data(), m_}; }

    // |R[s[j]-1, k]| = t[j] + ... + t[r], 1 <= j <= r.  Throws OutOfRange.
    std::uint32_t suffix_sum_t(std::uint32_t j) const;

    // Total scalar slots held across all working arrays (space contract).
    std::size_t workspace_slots() const;

    std::uint64_t range_max_touches() const { return touches_; }

private:
    MinSplit past_min(std::int64_t ell) const; // M'(ell) for the step to column k_+1

    std::uint32_t m_;
    std::uint64_t L_;
    std::uint32_t sigma_;
    MaxMode mode_;
    std::uint32_t sentinel_; // m+1: beats every max, loses every min
    pos_t k_ = 0;

    // a_/e_ describe column k_; the *_next_ pair is filled during a step
    // and swapped in.  Both a arrays carry one spare slot so the retired
    // one can host tmp (class remap table, up to r+1 <= m+1 entries).
    std::vector<std::uint32_t> a_, a_next_;
    std::vector<std::uint32_t> e_, e_next_;
    std::vector<pos_t> s_;
    std::vector<std::uint32_t> t_;
    std::vector<MinSplit> u_;
    std::vector<std::uint32_t> ring_;   // ring_[j % L] = M(j) for the last L values
    std::vector<std::uint32_t> counts_; // bucket array C[0..sigma]
    std::vector<std::uint32_t> last_;   // last occurrence P[0..sigma-1]
    std::vector<std::uint32_t> chain_;  // jump-mode traversal scratch
    SparseMaxTable<std::uint32_t> rmq_; // rmq mode only
    std::uint64_t touches_ = 0;
};

// Result of a full streaming run: M(n), and per column the stored split
// (backtrack[k-1] belongs to column k).
struct StreamResult {
    std::uint32_t m = 0;
    pos_t n = 0;
    std::uint64_t min_len = 1;
    std::uint32_t sentinel = 0;
    std::uint32_t optimum = 0; // M(n); sentinel when n < L
    std::vector<pos_t> backtrack;

    bool feasible() const { return optimum < sentinel; }
};

// Drives a Segmenter over all n columns of the source.  Throws
// SourceExhausted if the source ends early.  n < L leaves optimum at the
// sentinel (reported, not thrown, so callers can decide).
StreamResult run_streaming(ColumnSource& source, std::uint64_t L,
                           MaxMode mode = MaxMode::jump);

// Walks the stored splits from column n down to 0 and returns the segment
// boundaries 0 = b[0] < ... < b[r] = n.  Throws CorruptBacktrack on a
// cycle or a hop shorter than L, InfeasibleLength if the run was not
// feasible.
std::vector<pos_t> backtrack_splits(const StreamResult& result);

// One extra pass over the data: per-segment distinct-row counts via
// partition refinement (O(m log m) per column, O(m) state).
std::vector<std::uint32_t> segment_cardinalities(ColumnSource& source,
                                                 std::span<const pos_t> boundaries);

// Full pipeline: stream, backtrack, annotate cardinalities.  Throws
// InfeasibleLength when n < L.
Segmentation solve(ColumnSource& source, std::uint64_t L, MaxMode mode = MaxMode::jump);
Segmentation solve(const Panel& panel, std::uint64_t L, MaxMode mode = MaxMode::jump);

} // namespace fseg
