#pragma once

// File ingestion and serialization: row-per-line text, FASTA, and the
// FSEG1 column-major binary stream.
//
// FSEG1 layout: the 5 magic bytes "FSEG1", m as 32-bit little-endian
// unsigned, n as 64-bit little-endian unsigned, then n blocks of m bytes,
// one block per column, symbols already ranked.

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <string>
#include <vector>

#include "fseg/column_source.hpp"
#include "fseg/panel.hpp"

namespace fseg {

enum class InputFormat : std::uint8_t { auto_detect, fasta, rows, colstream };

InputFormat parse_format(const std::string& name); // "auto"|"fasta"|"rows"|"colstream"

// Detects by content: leading '>' = fasta, the FSEG1 magic = colstream,
// anything else = rows.
InputFormat detect_format(const std::string& path);

// One sequence per line.  Throws IoError, EmptyInput, UnequalLengths.
Panel read_rows(const std::string& path);
Panel read_rows(std::istream& in);

// FASTA records ('>' headers, wrapped sequence lines), all equal length.
Panel read_fasta(const std::string& path);
Panel read_fasta(std::istream& in);

// Dispatches on the requested or detected format.  A colstream input is
// materialized into a Panel.
Panel read_panel(const std::string& path, InputFormat format = InputFormat::auto_detect);

void write_colstream(const Panel& panel, const std::string& path);
void write_colstream(const Panel& panel, std::ostream& out);

// Streaming access to an FSEG1 file; never materializes the matrix.
// Throws BadMagic on a wrong header, Truncated on a short column block.
class ColstreamSource final : public ColumnSource {
public:
    explicit ColstreamSource(std::string path);

    std::uint32_t rows() const override { return m_; }
    pos_t columns() const override { return n_; }
    std::uint32_t sigma() const override { return 256; }

    bool next(std::span<std::uint8_t> out) override;
    void reset() override;

private:
    std::string path_;
    std::ifstream in_;
    std::uint32_t m_ = 0;
    pos_t n_ = 0;
    pos_t cursor_ = 0;
};

} // namespace fseg
