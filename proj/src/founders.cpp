#include "fseg/founders.hpp"

#include <algorithm>
#include <map>

namespace fseg {

namespace {

bool less_reversed(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

} // namespace

std::uint32_t SegmentBlocks::max_block_count() const {
    std::size_t best = 0;
    for (const auto& b : blocks)
        best = std::max(best, b.size());
    return static_cast<std::uint32_t>(best);
}

SegmentBlocks extract_blocks(const Panel& panel, const Segmentation& seg) {
    if (!seg.valid_for(panel.columns()))
        throw SegmentationMismatch("segmentation does not partition the panel columns");

    SegmentBlocks out;
    out.boundaries = seg.boundaries;
    out.blocks.resize(seg.segments());
    out.block_of.assign(seg.segments(), std::vector<std::uint32_t>(panel.rows()));

    std::vector<std::uint8_t> piece;
    for (std::size_t s = 0; s < seg.segments(); ++s) {
        const pos_t from = seg.boundaries[s] + 1;
        const pos_t to = seg.boundaries[s + 1];
        std::map<std::vector<std::uint8_t>, std::vector<std::uint32_t>> seen;
        for (std::uint32_t row = 1; row <= panel.rows(); ++row) {
            piece.clear();
            for (pos_t c = from; c <= to; ++c)
                piece.push_back(panel.symbol(row, c));
            seen[piece].push_back(row - 1);
        }
        auto& blocks = out.blocks[s];
        blocks.reserve(seen.size());
        std::vector<std::vector<std::uint32_t>> members;
        for (auto& [substr, rows] : seen) {
            blocks.push_back(substr);
            members.push_back(std::move(rows));
        }
        std::vector<std::uint32_t> order(blocks.size());
        for (std::uint32_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
            return less_reversed(blocks[x], blocks[y]);
        });
        std::vector<std::vector<std::uint8_t>> sorted(blocks.size());
        for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
            sorted[rank] = std::move(blocks[order[rank]]);
            for (std::uint32_t row0 : members[order[rank]])
                out.block_of[s][row0] = rank;
        }
        blocks = std::move(sorted);
    }
    return out;
}

FounderSet assemble_founders(const SegmentBlocks& sb, std::uint32_t founder_count) {
    const std::uint32_t K = founder_count;
    const auto segments = sb.blocks.size();
    const auto m = static_cast<std::uint32_t>(sb.block_of.empty() ? 0 : sb.block_of[0].size());
    if (K < sb.max_block_count())
        throw SegmentationMismatch("founder count smaller than the widest segment");

    FounderSet out;
    out.boundaries = sb.boundaries;
    out.founders.assign(K, {});
    out.parses.assign(m, std::vector<std::uint32_t>(segments));

    std::vector<std::uint32_t> prev_slot(m, 0);
    for (std::size_t s = 0; s < segments; ++s) {
        const auto& blocks = sb.blocks[s];
        const auto& block_of = sb.block_of[s];
        const auto B = static_cast<std::uint32_t>(blocks.size());

        std::vector<std::uint32_t> support(B, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            ++support[block_of[i]];

        // slot_of[b]: the slot block b is pinned to; block_in[f]: the block
        // occupying slot f.
        std::vector<std::uint32_t> slot_of(B);
        std::vector<std::uint32_t> block_in(K);
        if (s == 0) {
            for (std::uint32_t b = 0; b < B; ++b)
                slot_of[b] = b;
        } else {
            // votes[b][f]: rows of block b whose previous slot is f.
            std::vector<std::vector<std::uint32_t>> votes(B, std::vector<std::uint32_t>(K, 0));
            for (std::uint32_t i = 0; i < m; ++i)
                ++votes[block_of[i]][prev_slot[i]];

            std::vector<bool> block_done(B, false), slot_taken(K, false);
            slot_of.assign(B, K); // K = unassigned
            for (std::uint32_t assigned = 0; assigned < B; ++assigned) {
                std::uint32_t best_votes = 0, best_b = B, best_f = K;
                for (std::uint32_t b = 0; b < B; ++b) {
                    if (block_done[b])
                        continue;
                    for (std::uint32_t f = 0; f < K; ++f) {
                        if (slot_taken[f])
                            continue;
                        if (votes[b][f] > best_votes) {
                            best_votes = votes[b][f];
                            best_b = b;
                            best_f = f;
                        }
                    }
                }
                if (best_votes == 0)
                    break;
                slot_of[best_b] = best_f;
                block_done[best_b] = true;
                slot_taken[best_f] = true;
            }
            // Blocks with no usable votes take the lowest free slots.
            std::uint32_t next_free = 0;
            for (std::uint32_t b = 0; b < B; ++b) {
                if (slot_of[b] != K)
                    continue;
                while (slot_taken[next_free])
                    ++next_free;
                slot_of[b] = next_free;
                slot_taken[next_free] = true;
            }
        }

        // Leftover slots duplicate the best-supported block of the segment.
        std::uint32_t filler = 0;
        for (std::uint32_t b = 1; b < B; ++b)
            if (support[b] > support[filler])
                filler = b;
        std::vector<bool> filled(K, false);
        for (std::uint32_t b = 0; b < B; ++b) {
            block_in[slot_of[b]] = b;
            filled[slot_of[b]] = true;
        }
        for (std::uint32_t f = 0; f < K; ++f)
            if (!filled[f])
                block_in[f] = filler;

        for (std::uint32_t f = 0; f < K; ++f) {
            const auto& piece = blocks[block_in[f]];
            out.founders[f].insert(out.founders[f].end(), piece.begin(), piece.end());
        }

        for (std::uint32_t i = 0; i < m; ++i) {
            const std::uint32_t b = block_of[i];
            // Stay in the previous slot whenever it carries the row's block.
            std::uint32_t slot = slot_of[b];
            if (s > 0 && block_in[prev_slot[i]] == b)
                slot = prev_slot[i];
            if (s > 0 && slot != prev_slot[i])
                ++out.crossover_count;
            out.parses[i][s] = slot;
            prev_slot[i] = slot;
        }
    }
    return out;
}

bool validate_founders(const Panel& panel, const FounderSet& fs) {
    const std::uint32_t m = panel.rows();
    if (fs.boundaries.empty() || fs.boundaries.back() != panel.columns())
        return false;
    if (fs.parses.size() != m)
        return false;
    for (const auto& f : fs.founders)
        if (f.size() != panel.columns())
            return false;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (fs.parses[i].size() + 1 != fs.boundaries.size())
            return false;
        for (std::size_t s = 0; s + 1 < fs.boundaries.size(); ++s) {
            const std::uint32_t slot = fs.parses[i][s];
            if (slot >= fs.founders.size())
                return false;
            for (pos_t c = fs.boundaries[s] + 1; c <= fs.boundaries[s + 1]; ++c)
                if (panel.symbol(i + 1, c) != fs.founders[slot][c - 1])
                    return false;
        }
    }
    return true;
}

} // namespace fseg
