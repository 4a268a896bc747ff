#include "fseg/pbwt.hpp"

#include <algorithm>
#include <numeric>

namespace fseg {

namespace {

void check_column(std::span<const std::uint8_t> col, std::uint32_t m, std::uint32_t sigma) {
    if (col.size() != m)
        throw OutOfRange("column has " + std::to_string(col.size()) + " symbols, expected m = " +
                         std::to_string(m));
    for (std::uint8_t b : col) {
        if (b >= sigma)
            throw SymbolOutOfRange("symbol " + std::to_string(b) + " >= sigma " + std::to_string(sigma));
    }
}

// Shared counting-sort header: bucket counts from the raw column, then
// prefix sums so that counts[b]+1 is the first slot of bucket b.
void prepare_buckets(std::span<const std::uint8_t> col, PbwtScratch& scratch) {
    std::fill(scratch.counts.begin(), scratch.counts.end(), 0u);
    std::fill(scratch.last.begin(), scratch.last.end(), 0u);
    for (std::uint8_t b : col)
        ++scratch.counts[b + 1];
    for (std::size_t b = 1; b + 1 < scratch.counts.size(); ++b)
        scratch.counts[b] += scratch.counts[b - 1];
}

} // namespace

PbwtColumn pbwt_init(std::uint32_t m) {
    if (m < 1)
        throw EmptyInput{};
    PbwtColumn c;
    c.k = 0;
    c.a.resize(m);
    std::iota(c.a.begin(), c.a.end(), 1u);
    c.d.assign(m, 1);
    return c;
}

void pbwt_step_rmq(const PbwtColumn& prev, std::span<const std::uint8_t> col,
                   PbwtColumn& out, PbwtScratch& scratch) {
    const auto m = static_cast<std::uint32_t>(prev.a.size());
    const auto sigma = static_cast<std::uint32_t>(scratch.last.size());
    check_column(col, m, sigma);
    prepare_buckets(col, scratch);
    scratch.rmq.build(prev.d);

    const pos_t k = prev.k + 1;
    out.k = k;
    out.a.resize(m);
    out.d.resize(m);
    for (std::uint32_t i = 1; i <= m; ++i) {
        const std::uint32_t row = prev.a[i - 1];
        const std::uint8_t b = col[row - 1];
        const std::uint32_t slot = ++scratch.counts[b];
        out.a[slot - 1] = row;
        const std::uint32_t p = scratch.last[b];
        // max{d_{k-1}[l] : p < l <= i}, or k+1 for the first of its bucket
        out.d[slot - 1] = p == 0 ? k + 1 : scratch.rmq.query(p, i - 1);
        scratch.last[b] = i;
    }
}

PbwtColumn pbwt_step_rmq(const PbwtColumn& prev, std::span<const std::uint8_t> col,
                         PbwtScratch& scratch) {
    PbwtColumn out;
    pbwt_step_rmq(prev, col, out, scratch);
    return out;
}

void pbwt_step_jump(PbwtColumn& prev, std::span<const std::uint8_t> col,
                    PbwtColumn& out, PbwtScratch& scratch) {
    const auto m = static_cast<std::uint32_t>(prev.a.size());
    const auto sigma = static_cast<std::uint32_t>(scratch.last.size());
    check_column(col, m, sigma);
    prepare_buckets(col, scratch);

    const pos_t k = prev.k + 1;
    out.k = k;
    out.a.resize(m);
    out.d.resize(m);
    for (std::uint32_t i = 1; i <= m; ++i) {
        const std::uint32_t row = prev.a[i - 1];
        const std::uint8_t b = col[row - 1];
        const std::uint32_t slot = ++scratch.counts[b];
        out.a[slot - 1] = row;
        prev.a[i - 1] = i + 1; // retire a_{k-1}[i]: it is jump table now
        const std::uint32_t p = scratch.last[b];
        out.d[slot - 1] = p == 0
            ? k + 1
            : range_max_jump<pos_t>(p + 1, i, prev.a, prev.d, scratch.chain, &scratch.maxd_touches);
        scratch.last[b] = i;
    }
}

PbwtColumn pbwt_step_jump(PbwtColumn&& prev, std::span<const std::uint8_t> col,
                          PbwtScratch& scratch) {
    PbwtColumn out;
    pbwt_step_jump(prev, col, out, scratch);
    return out;
}

pos_t maxd(std::uint32_t j, std::uint32_t i,
           std::span<std::uint32_t> aux_a, std::span<pos_t> aux_d) {
    std::vector<std::uint32_t> chain;
    return range_max_jump<pos_t>(j, i, aux_a, aux_d, chain);
}

PbwtColumn naive_pbwt(const Panel& panel, pos_t k) {
    if (k < 1 || k > panel.columns())
        throw OutOfRange("column " + std::to_string(k) + " outside [1, " +
                         std::to_string(panel.columns()) + "]");
    const std::uint32_t m = panel.rows();

    // Reversed prefix of row x is smaller iff the first mismatch walking
    // right-to-left from k is smaller.
    const auto less_reversed = [&](std::uint32_t x, std::uint32_t y) {
        for (pos_t c = k; c >= 1; --c) {
            const std::uint8_t sx = panel.symbol(x, c);
            const std::uint8_t sy = panel.symbol(y, c);
            if (sx != sy)
                return sx < sy;
        }
        return false;
    };

    PbwtColumn out;
    out.k = k;
    out.a.resize(m);
    std::iota(out.a.begin(), out.a.end(), 1u);
    std::stable_sort(out.a.begin(), out.a.end(), less_reversed);

    out.d.resize(m);
    out.d[0] = k + 1;
    for (std::uint32_t i = 1; i < m; ++i) {
        pos_t lcs = 0;
        while (lcs < k && panel.symbol(out.a[i], k - lcs) == panel.symbol(out.a[i - 1], k - lcs))
            ++lcs;
        out.d[i] = k + 1 - lcs;
    }
    return out;
}

} // namespace fseg
