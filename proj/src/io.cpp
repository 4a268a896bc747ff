#include "fseg/io.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>

namespace fseg {

namespace {

constexpr std::array<char, 5> kMagic = {'F', 'S', 'E', 'G', '1'};

std::ifstream open_input(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    return in;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
}

void put_u32_le(std::ostream& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64_le(std::ostream& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_le(std::istream& in, int bytes, const char* what) {
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) {
        const int c = in.get();
        if (c == std::istream::traits_type::eof())
            throw Truncated(std::string("unexpected end of file while reading ") + what);
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
}

} // namespace

InputFormat parse_format(const std::string& name) {
    if (name == "auto")
        return InputFormat::auto_detect;
    if (name == "fasta")
        return InputFormat::fasta;
    if (name == "rows")
        return InputFormat::rows;
    if (name == "colstream")
        return InputFormat::colstream;
    throw IoError("unknown input format '" + name + "'");
}

InputFormat detect_format(const std::string& path) {
    auto in = open_input(path, std::ios::in | std::ios::binary);
    std::array<char, 5> head{};
    in.read(head.data(), head.size());
    if (in.gcount() >= 1 && head[0] == '>')
        return InputFormat::fasta;
    if (in.gcount() == 5 && head == kMagic)
        return InputFormat::colstream;
    return InputFormat::rows;
}

Panel read_rows(const std::string& path) {
    auto in = open_input(path);
    return read_rows(in);
}

Panel read_rows(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        strip_cr(line);
        rows.push_back(line);
    }
    while (!rows.empty() && rows.back().empty())
        rows.pop_back();
    return Panel::from_rows(rows);
}

Panel read_fasta(const std::string& path) {
    auto in = open_input(path);
    return read_fasta(in);
}

Panel read_fasta(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    bool in_record = false;
    while (std::getline(in, line)) {
        strip_cr(line);
        if (line.empty())
            continue;
        if (line[0] == '>') {
            rows.emplace_back();
            in_record = true;
        } else {
            if (!in_record)
                throw IoError("FASTA input does not start with a '>' header");
            rows.back() += line;
        }
    }
    return Panel::from_rows(rows);
}

Panel read_panel(const std::string& path, InputFormat format) {
    if (format == InputFormat::auto_detect)
        format = detect_format(path);
    switch (format) {
    case InputFormat::fasta:
        return read_fasta(path);
    case InputFormat::rows:
        return read_rows(path);
    case InputFormat::colstream: {
        ColstreamSource source(path);
        const std::uint32_t m = source.rows();
        const pos_t n = source.columns();
        std::vector<std::uint8_t> data(static_cast<std::size_t>(m) * n);
        std::vector<std::uint8_t> column(m);
        std::uint8_t top = 0;
        for (pos_t k = 1; k <= n; ++k) {
            if (!source.next(column))
                throw Truncated("colstream ended before column " + std::to_string(k));
            for (std::uint32_t i = 0; i < m; ++i) {
                data[static_cast<std::size_t>(i) * n + (k - 1)] = column[i];
                top = std::max(top, column[i]);
            }
        }
        const std::uint32_t sigma = n == 0 ? 1 : top + 1u;
        return Panel::from_ranked(m, n, sigma, std::move(data));
    }
    default:
        throw IoError("unresolved input format");
    }
}

void write_colstream(const Panel& panel, const std::string& path) {
    std::ofstream out(path, std::ios::out | std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    write_colstream(panel, out);
}

void write_colstream(const Panel& panel, std::ostream& out) {
    out.write(kMagic.data(), kMagic.size());
    put_u32_le(out, panel.rows());
    put_u64_le(out, panel.columns());
    std::vector<std::uint8_t> column(panel.rows());
    for (pos_t k = 1; k <= panel.columns(); ++k) {
        panel.column_into(k, column);
        out.write(reinterpret_cast<const char*>(column.data()), column.size());
    }
    if (!out)
        throw IoError("write failed");
}

ColstreamSource::ColstreamSource(std::string path) : path_(std::move(path)) {
    in_ = open_input(path_, std::ios::in | std::ios::binary);
    std::array<char, 5> head{};
    in_.read(head.data(), head.size());
    if (in_.gcount() != 5 || head != kMagic)
        throw BadMagic("'" + path_ + "' is not an FSEG1 file");
    m_ = static_cast<std::uint32_t>(get_le(in_, 4, "row count"));
    n_ = get_le(in_, 8, "column count");
    if (m_ == 0)
        throw EmptyInput{};
}

bool ColstreamSource::next(std::span<std::uint8_t> out) {
    if (cursor_ >= n_)
        return false;
    in_.read(reinterpret_cast<char*>(out.data()), m_);
    if (static_cast<std::size_t>(in_.gcount()) != m_)
        throw Truncated("column " + std::to_string(cursor_ + 1) + " of '" + path_ +
                        "' is incomplete");
    ++cursor_;
    return true;
}

void ColstreamSource::reset() {
    in_.clear();
    in_.seekg(17); // magic + m + n
    cursor_ = 0;
}

} // namespace fseg
