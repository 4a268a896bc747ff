#include "fseg/oracle.hpp"

#include <algorithm>
#include <string_view>

namespace fseg {

std::uint32_t distinct_count(const Panel& panel, pos_t j, pos_t k) {
    if (j < 1 || j > k || k > panel.columns())
        throw OutOfRange("segment [" + std::to_string(j) + ", " + std::to_string(k) +
                         "] outside [1, " + std::to_string(panel.columns()) + "]");
    std::vector<std::string_view> slices;
    slices.reserve(panel.rows());
    const auto* base = reinterpret_cast<const char*>(panel.raw().data());
    for (std::uint32_t i = 0; i < panel.rows(); ++i)
        slices.emplace_back(base + static_cast<std::size_t>(i) * panel.columns() + (j - 1),
                            k - j + 1);
    std::sort(slices.begin(), slices.end());
    const auto last = std::unique(slices.begin(), slices.end());
    return static_cast<std::uint32_t>(last - slices.begin());
}

std::vector<pos_t> OracleResult::segmentation() const {
    std::vector<pos_t> bounds;
    pos_t k = M.size() - 1;
    bounds.push_back(k);
    while (k != 0) {
        const pos_t j = split[k];
        bounds.push_back(j);
        k = j;
    }
    std::reverse(bounds.begin(), bounds.end());
    return bounds;
}

OracleResult oracle_dp(const Panel& panel, std::uint64_t L) {
    const pos_t n = panel.columns();
    OracleResult res;
    res.sentinel = panel.rows() + 1;
    res.min_len = L;
    res.M.assign(n + 1, res.sentinel);
    res.split.assign(n + 1, 0);

    for (pos_t k = 1; k <= n; ++k) {
        if (k < L)
            continue;
        if (k < 2 * L) {
            res.M[k] = distinct_count(panel, 1, k);
            continue;
        }
        std::uint32_t best = res.sentinel;
        pos_t best_j = 0;
        for (pos_t j = 0; j + L <= k; ++j) {
            const std::uint32_t cand = std::max(res.M[j], distinct_count(panel, j + 1, k));
            if (cand < best) {
                best = cand;
                best_j = j;
            }
        }
        res.M[k] = best;
        res.split[k] = best_j;
    }
    return res;
}

std::uint32_t enumerate_segmentations(const Panel& panel, std::uint64_t L) {
    const pos_t n = panel.columns();
    if (n > 24)
        throw TooLarge("exhaustive enumeration limited to n <= 24, got n = " + std::to_string(n));
    const std::uint32_t sentinel = panel.rows() + 1;
    if (n == 0 || n < L)
        return sentinel;

    // cards[j][k] = |R[j,k]| so the 2^(n-1) masks only do table lookups.
    std::vector<std::vector<std::uint32_t>> cards(n + 1, std::vector<std::uint32_t>(n + 1, 0));
    for (pos_t j = 1; j <= n; ++j)
        for (pos_t k = j; k <= n; ++k)
            cards[j][k] = distinct_count(panel, j, k);

    std::uint32_t best = sentinel;
    const std::uint64_t masks = std::uint64_t{1} << (n - 1); // bit c set = cut after column c+1
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        pos_t prev = 0;
        std::uint32_t worst = 0;
        bool ok = true;
        for (pos_t end = 1; end <= n; ++end) {
            if (end < n && !(mask & (std::uint64_t{1} << (end - 1))))
                continue;
            if (end - prev < L) {
                ok = false;
                break;
            }
            worst = std::max(worst, cards[prev + 1][end]);
            prev = end;
        }
        if (ok)
            best = std::min(best, worst);
    }
    return best;
}

} // namespace fseg
