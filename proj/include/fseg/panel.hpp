#pragma once

// Core data model: the recombinant panel (m haplotype strings of common
// length n over a dense byte alphabet) and the two result types shared by
// every other module.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fseg/errors.hpp"

namespace fseg {

using pos_t = std::uint64_t; // 1-based column positions; 0 is "none"

// Panel of m recombinant strings, each of length n, stored row-major as
// dense ranks in [0, sigma).  Rows and columns are addressed 1-based
// throughout the library, matching the rest of the position arithmetic.
// Immutable after construction.
class Panel {
public:
    // Remaps input characters to dense ranks in first-occurrence order
    // (row-major scan).  Throws EmptyInput, UnequalLengths.
    static Panel from_rows(const std::vector<std::string>& rows);

    // Same, but ranks follow the given alphabet string (alphabet[r] is the
    // character of rank r).  Characters outside the alphabet are an error.
    static Panel from_rows(const std::vector<std::string>& rows, std::string_view alphabet);

    // Adopts already-ranked data (row-major, m*n bytes).  When no alphabet
    // is given, a printable default is used for decoding.
    static Panel from_ranked(std::uint32_t m, pos_t n, std::uint32_t sigma,
                             std::vector<std::uint8_t> data, std::string alphabet = {});

    std::uint32_t rows() const { return m_; }
    pos_t columns() const { return n_; }
    std::uint32_t sigma() const { return sigma_; }

    // R_row[col], 1 <= row <= m, 1 <= col <= n.  Unchecked.
    std::uint8_t symbol(std::uint32_t row, pos_t col) const {
        return data_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)];
    }

    // Column k as {R_1[k], ..., R_m[k]}.  Throws OutOfRange.
    std::vector<std::uint8_t> column(pos_t k) const;
    void column_into(pos_t k, std::span<std::uint8_t> out) const;

    // Rank <-> character mapping (invertible by construction).
    char decode(std::uint8_t rank) const { return alphabet_[rank]; }
    std::uint8_t encode(char c) const;
    const std::string& alphabet() const { return alphabet_; }

    std::string decode_row(std::uint32_t row) const;
    std::string decode_slice(std::uint32_t row, pos_t from, pos_t to) const;

    std::span<const std::uint8_t> raw() const { return data_; }

private:
    Panel() = default;

    std::uint32_t m_ = 0;
    pos_t n_ = 0;
    std::uint32_t sigma_ = 0;
    std::vector<std::uint8_t> data_; // row-major, m*n ranks
    std::string alphabet_;           // rank -> original character
};

// A segmentation of the columns [1, n]: boundaries are the segment right
// ends, front-padded with 0, so segment j covers
// [boundaries[j-1]+1, boundaries[j]].
struct Segmentation {
    std::vector<pos_t> boundaries;             // 0 = b[0] < b[1] < ... < b[r] = n
    std::vector<std::uint32_t> cardinalities;  // per segment: |R[b[j-1]+1, b[j]]|
    std::uint64_t min_len = 1;                 // the L this segmentation was built for

    std::size_t segments() const { return cardinalities.size(); }
    std::uint32_t max_cardinality() const;     // K

    // Partition of [1, n] with every segment at least min_len long.
    bool valid_for(pos_t n) const;
};

// K founder strings plus, per recombinant, one founder slot per segment.
// Parses are stored per segment (they are constant inside a segment by
// construction); slots are 0-based internally.
struct FounderSet {
    std::vector<std::vector<std::uint8_t>> founders; // K rows of n ranks
    std::vector<std::vector<std::uint32_t>> parses;  // [recombinant][segment] -> slot
    std::vector<pos_t> boundaries;                   // as in Segmentation
    std::uint64_t crossover_count = 0;               // parse changes across boundaries, summed

    std::uint32_t founder_count() const { return static_cast<std::uint32_t>(founders.size()); }
};

} // namespace fseg
