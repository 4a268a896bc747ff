#include "fseg/panel.hpp"

#include <algorithm>
#include <array>

namespace fseg {

namespace {

// Decoding table for ranked panels built without an explicit alphabet.
std::string default_alphabet(std::uint32_t sigma) {
    static constexpr std::string_view printable =
        "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    std::string out;
    out.reserve(sigma);
    for (std::uint32_t r = 0; r < sigma; ++r)
        out.push_back(r < printable.size() ? printable[r] : static_cast<char>(r));
    return out;
}

void check_rows(const std::vector<std::string>& rows) {
    if (rows.empty())
        throw EmptyInput{};
    const std::size_t n = rows.front().size();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != n)
            throw UnequalLengths("row " + std::to_string(i + 1) + " has length " +
                                 std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
    }
}

} // namespace

Panel Panel::from_rows(const std::vector<std::string>& rows) {
    check_rows(rows);
    Panel p;
    p.m_ = static_cast<std::uint32_t>(rows.size());
    p.n_ = rows.front().size();
    p.data_.reserve(static_cast<std::size_t>(p.m_) * p.n_);

    std::array<int, 256> rank;
    rank.fill(-1);
    for (const auto& row : rows) {
        for (char c : row) {
            auto& r = rank[static_cast<unsigned char>(c)];
            if (r < 0) {
                r = static_cast<int>(p.alphabet_.size());
                p.alphabet_.push_back(c);
            }
            p.data_.push_back(static_cast<std::uint8_t>(r));
        }
    }
    p.sigma_ = static_cast<std::uint32_t>(p.alphabet_.size());
    return p;
}

Panel Panel::from_rows(const std::vector<std::string>& rows, std::string_view alphabet) {
    check_rows(rows);
    if (alphabet.size() > 256)
        throw AlphabetTooLarge("alphabet has " + std::to_string(alphabet.size()) + " symbols");
    std::array<int, 256> rank;
    rank.fill(-1);
    for (std::size_t r = 0; r < alphabet.size(); ++r)
        rank[static_cast<unsigned char>(alphabet[r])] = static_cast<int>(r);

    Panel p;
    p.m_ = static_cast<std::uint32_t>(rows.size());
    p.n_ = rows.front().size();
    p.sigma_ = static_cast<std::uint32_t>(alphabet.size());
    p.alphabet_.assign(alphabet);
    p.data_.reserve(static_cast<std::size_t>(p.m_) * p.n_);
    for (const auto& row : rows) {
        for (char c : row) {
            const int r = rank[static_cast<unsigned char>(c)];
            if (r < 0)
                throw SymbolOutOfRange(std::string("character '") + c + "' not in alphabet");
            p.data_.push_back(static_cast<std::uint8_t>(r));
        }
    }
    return p;
}

Panel Panel::from_ranked(std::uint32_t m, pos_t n, std::uint32_t sigma,
                         std::vector<std::uint8_t> data, std::string alphabet) {
    if (m == 0)
        throw EmptyInput{};
    if (sigma == 0 || sigma > 256)
        throw AlphabetTooLarge("sigma must be in [1, 256], got " + std::to_string(sigma));
    if (data.size() != static_cast<std::size_t>(m) * n)
        throw UnequalLengths("ranked data has " + std::to_string(data.size()) +
                             " symbols, expected m*n = " + std::to_string(static_cast<std::size_t>(m) * n));
    for (std::uint8_t b : data) {
        if (b >= sigma)
            throw SymbolOutOfRange("rank " + std::to_string(b) + " >= sigma " + std::to_string(sigma));
    }
    Panel p;
    p.m_ = m;
    p.n_ = n;
    p.sigma_ = sigma;
    p.data_ = std::move(data);
    p.alphabet_ = alphabet.empty() ? default_alphabet(sigma) : std::move(alphabet);
    if (p.alphabet_.size() != sigma)
        throw AlphabetTooLarge("alphabet size does not match sigma");
    return p;
}

std::vector<std::uint8_t> Panel::column(pos_t k) const {
    std::vector<std::uint8_t> out(m_);
    column_into(k, out);
    return out;
}

void Panel::column_into(pos_t k, std::span<std::uint8_t> out) const {
    if (k < 1 || k > n_)
        throw OutOfRange("column " + std::to_string(k) + " outside [1, " + std::to_string(n_) + "]");
    for (std::uint32_t i = 0; i < m_; ++i)
        out[i] = data_[static_cast<std::size_t>(i) * n_ + (k - 1)];
}

std::uint8_t Panel::encode(char c) const {
    const auto pos = alphabet_.find(c);
    if (pos == std::string::npos)
        throw SymbolOutOfRange(std::string("character '") + c + "' not in alphabet");
    return static_cast<std::uint8_t>(pos);
}

std::string Panel::decode_row(std::uint32_t row) const {
    return decode_slice(row, 1, n_);
}

std::string Panel::decode_slice(std::uint32_t row, pos_t from, pos_t to) const {
    std::string out;
    out.reserve(to - from + 1);
    for (pos_t k = from; k <= to; ++k)
        out.push_back(decode(symbol(row, k)));
    return out;
}

std::uint32_t Segmentation::max_cardinality() const {
    std::uint32_t best = 0;
    for (std::uint32_t c : cardinalities)
        best = std::max(best, c);
    return best;
}

bool Segmentation::valid_for(pos_t n) const {
    if (boundaries.size() < 2 || boundaries.front() != 0 || boundaries.back() != n)
        return false;
    if (cardinalities.size() != boundaries.size() - 1)
        return false;
    for (std::size_t j = 1; j < boundaries.size(); ++j) {
        if (boundaries[j] <= boundaries[j - 1])
            return false;
        if (boundaries[j] - boundaries[j - 1] < min_len)
            return false;
    }
    return true;
}

} // namespace fseg
