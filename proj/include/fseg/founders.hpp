#pragma once

// From an optimal segmentation to concrete founder sequences: collect the
// distinct substrings ("blocks") of every segment, assign blocks to founder
// slots with a greedy continuity heuristic, and concatenate slot-wise.

#include <cstdint>
#include <vector>

#include "fseg/panel.hpp"

namespace fseg {

struct SegmentBlocks {
    std::vector<pos_t> boundaries;
    // blocks[seg]: distinct substrings, sorted by their reversal.
    std::vector<std::vector<std::vector<std::uint8_t>>> blocks;
    // block_of[seg][row-1]: index into blocks[seg].
    std::vector<std::vector<std::uint32_t>> block_of;

    std::uint32_t max_block_count() const;
};

// Throws SegmentationMismatch if seg does not partition the panel columns.
SegmentBlocks extract_blocks(const Panel& panel, const Segmentation& seg);

// Builds K founders.  Per segment, each block is pinned to the slot most
// of its rows occupied in the previous segment (vote counting, ties to the
// lowest slot); segments with fewer than K blocks fill the leftover slots
// with their best-supported block.  Deterministic.
FounderSet assemble_founders(const SegmentBlocks& blocks, std::uint32_t founder_count);

// Parse validity: R_i[j] = F_{P_i[j]}[j] at every position.
bool validate_founders(const Panel& panel, const FounderSet& founders);

} // namespace fseg
