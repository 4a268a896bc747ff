#include "fseg/segmenter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fseg {

namespace {

// Smaller value wins; on equal values the smaller split position wins.
inline void merge_min(MinSplit& acc, const MinSplit& x) {
    if (x.value < acc.value || (x.value == acc.value && x.pos < acc.pos))
        acc = x;
}

} // namespace

Segmenter::Segmenter(std::uint32_t m, std::uint64_t L, std::uint32_t sigma, MaxMode mode)
    : m_(m), L_(L), sigma_(sigma), mode_(mode), sentinel_(m + 1) {
    if (m < 1)
        throw EmptyInput{};
    if (L < 1)
        throw InvalidL("minimum segment length must be at least 1");
    if (sigma < 1 || sigma > 256)
        throw AlphabetTooLarge("sigma must be in [1, 256], got " + std::to_string(sigma));

    // Column-0 state: one class holding every row (all empty suffixes equal).
    a_.resize(m + 1);
    std::iota(a_.begin(), a_.begin() + m, 1u);
    a_next_.resize(m + 1);
    e_.assign(m, 1);
    e_next_.resize(m);
    s_.reserve(m + 1);
    s_.push_back(1);
    t_.reserve(m + 1);
    t_.push_back(m);
    u_.reserve(m + 2);
    u_.push_back({sentinel_, 0});
    ring_.assign(L, sentinel_);
    counts_.resize(sigma + 1);
    last_.resize(sigma);
    chain_.reserve(m);

    if (mode_ == MaxMode::jump) {
        // Space contract: everything above is O(m + L) plus the O(sigma)
        // bucket arrays.  Checked structurally at construction.
        if (workspace_slots() > 10 * (static_cast<std::size_t>(m) + L) + 2 * sigma + 16)
            throw std::logic_error("segmenter workspace exceeds its space contract");
    }
}

MinSplit Segmenter::past_min(std::int64_t ell) const {
    // M'(ell) while building column k_+1: M(ell) for 1 <= ell <= k-L,
    // sentinel otherwise.  Only ever asked for ell >= k-L, so the ring
    // buffer of the last L values suffices.
    const std::int64_t k = static_cast<std::int64_t>(k_) + 1;
    if (ell < 1 || ell > k - static_cast<std::int64_t>(L_))
        return {sentinel_, 0};
    const std::uint32_t v = ring_[static_cast<std::uint64_t>(ell) % L_];
    return {v, v == sentinel_ ? pos_t{0} : static_cast<pos_t>(ell)};
}

Segmenter::StepOut Segmenter::step(std::span<const std::uint8_t> column) {
    if (column.size() != m_)
        throw OutOfRange("column has " + std::to_string(column.size()) +
                         " symbols, expected m = " + std::to_string(m_));
    const pos_t k = k_ + 1;
    const std::int64_t kl = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(L_);
    const auto S = static_cast<std::uint32_t>(s_.size()) + 1;

    // The class system of column k-1 gains the new class [k-1, k-1] at the
    // end; classes whose s value vanishes from d_k get merged during
    // compaction below.
    s_.push_back(k + 1);
    u_.push_back(past_min(static_cast<std::int64_t>(k) - 1));

    std::fill(counts_.begin(), counts_.end(), 0u);
    std::fill(last_.begin(), last_.end(), 0u);
    t_.assign(S, 0);
    for (std::uint8_t b : column) {
        if (b >= sigma_)
            throw SymbolOutOfRange("symbol " + std::to_string(b) + " >= sigma " +
                                   std::to_string(sigma_));
        ++counts_[b + 1];
    }
    for (std::uint32_t b = 1; b < sigma_; ++b)
        counts_[b] += counts_[b - 1];

    std::span<std::uint32_t> prev_a(a_.data(), m_);
    std::span<std::uint32_t> prev_e(e_.data(), m_);
    if (mode_ == MaxMode::rmq)
        rmq_.build(std::span<const std::uint32_t>(prev_e));

    // Counting-sort pass: stable on the previous order, so a_next_ is the
    // new reversed-prefix order; e carries the class of the implicit d.
    for (std::uint32_t i = 1; i <= m_; ++i) {
        const std::uint32_t row = prev_a[i - 1];
        const std::uint8_t b = column[row - 1];
        const std::uint32_t slot = ++counts_[b];
        a_next_[slot - 1] = row;
        if (mode_ == MaxMode::jump)
            prev_a[i - 1] = i + 1; // retired entry joins the jump table
        const std::uint32_t p = last_[b];
        if (p == 0) {
            e_next_[slot - 1] = S; // d_k = k+1, the class appended above
        } else if (mode_ == MaxMode::jump) {
            e_next_[slot - 1] = range_max_jump<std::uint32_t>(p + 1, i, prev_a, prev_e,
                                                              chain_, &touches_);
        } else {
            e_next_[slot - 1] = rmq_.query(p, i - 1);
        }
        last_[b] = i;
    }

    for (std::uint32_t i = 0; i < m_; ++i)
        ++t_[e_next_[i] - 1];

    // Compact s/t, merge u by running minima, and remap e through tmp.
    // tmp lives in the retired a array (m+1 slots, enough for S <= m+1).
    // In-place is safe: every write lands at or left of the read cursor,
    // and a write at the cursor itself carries the unchanged value.
    u_.push_back({sentinel_, 0}); // dummy past the end
    std::uint32_t* tmp = a_.data();
    std::uint32_t j = 1;
    for (std::uint32_t i = 1; i <= S; ++i) {
        merge_min(u_[j - 1], u_[i - 1]);
        if (t_[i - 1] != 0) {
            tmp[i - 1] = j;
            s_[j - 1] = s_[i - 1];
            t_[j - 1] = t_[i - 1];
            u_[j] = u_[i];
            // M'(k-L) just became finite; fold it into the class whose
            // column range contains k-L.
            if (static_cast<std::int64_t>(s_[j - 1]) - 1 > kl &&
                (j == 1 || static_cast<std::int64_t>(s_[j - 2]) - 1 <= kl))
                merge_min(u_[j - 1], past_min(kl));
            ++j;
        }
    }
    const std::uint32_t r = j - 1;
    s_.resize(r);
    t_.resize(r);
    u_.resize(r);
    for (std::uint32_t i = 0; i < m_; ++i)
        e_next_[i] = tmp[e_next_[i] - 1];

    std::swap(a_, a_next_);
    std::swap(e_, e_next_);
    k_ = k;

    // M(k): sentinel below L; |R[1,k]| up to 2L-1; otherwise the best of
    // max{|R[s[j]-1, k]|, u[j]} over the classes, where the cardinality is
    // the suffix sum of t.  A class with s[j] = 1 holds rows whose whole
    // prefix repeats an earlier row; it contributes no distinct prefix and
    // its u is always the sentinel, so it never wins.
    StepOut out{sentinel_, 0};
    if (k >= L_) {
        std::uint32_t whole = 0; // |R[1,k]|
        for (std::uint32_t jj = 0; jj < r; ++jj)
            whole += t_[jj];
        if (s_[0] == 1)
            whole -= t_[0];
        if (k < 2 * L_) {
            out.value = whole;
        } else {
            std::uint32_t best = sentinel_;
            pos_t best_pos = 0;
            std::uint32_t suffix = 0;
            for (std::uint32_t jj = r; jj >= 1; --jj) {
                suffix += t_[jj - 1];
                const std::uint32_t cand = std::max(suffix, u_[jj - 1].value);
                if (cand <= best) { // <=: the leftmost class wins ties
                    best = cand;
                    best_pos = u_[jj - 1].pos;
                }
            }
            if (whole <= best) {
                out.value = whole; // one segment [1,k] is as good as any split
            } else {
                out.value = best;
                out.split = best_pos;
            }
        }
    }
    ring_[k % L_] = out.value;
    return out;
}

std::uint32_t Segmenter::suffix_sum_t(std::uint32_t j) const {
    const auto r = static_cast<std::uint32_t>(t_.size());
    if (j < 1 || j > r)
        throw OutOfRange("class index " + std::to_string(j) + " outside [1, " +
                         std::to_string(r) + "]");
    std::uint32_t sum = 0;
    for (std::uint32_t i = j; i <= r; ++i)
        sum += t_[i - 1];
    return sum;
}

std::size_t Segmenter::workspace_slots() const {
    std::size_t slots = a_.capacity() + a_next_.capacity() + e_.capacity() + e_next_.capacity();
    slots += s_.capacity() + t_.capacity() + 2 * u_.capacity();
    slots += ring_.capacity() + counts_.capacity() + last_.capacity() + chain_.capacity();
    slots += rmq_.slots();
    return slots;
}

StreamResult run_streaming(ColumnSource& source, std::uint64_t L, MaxMode mode) {
    const std::uint32_t m = source.rows();
    const pos_t n = source.columns();

    StreamResult result;
    result.m = m;
    result.n = n;
    result.min_len = L;
    result.sentinel = m + 1;
    result.optimum = m + 1;
    result.backtrack.resize(n);
    if (n < L) // infeasible; skip the O(m + L) state entirely
        return result;

    Segmenter seg(m, L, source.sigma(), mode);
    std::vector<std::uint8_t> column(m);
    for (pos_t k = 1; k <= n; ++k) {
        if (!source.next(column))
            throw SourceExhausted("source ended after " + std::to_string(k - 1) +
                                  " of " + std::to_string(n) + " columns");
        const auto out = seg.step(column);
        result.backtrack[k - 1] = out.split;
        if (k == n)
            result.optimum = out.value;
    }
    return result;
}

std::vector<pos_t> backtrack_splits(const StreamResult& result) {
    if (!result.feasible())
        throw InfeasibleLength("no segmentation: n = " + std::to_string(result.n) +
                               " is shorter than L = " + std::to_string(result.min_len));
    std::vector<pos_t> bounds;
    pos_t k = result.n;
    pos_t steps = 0;
    bounds.push_back(k);
    while (k != 0) {
        if (++steps > result.n)
            throw CorruptBacktrack("backtrack did not terminate");
        const pos_t j = result.backtrack[k - 1];
        if (j >= k || k - j < result.min_len)
            throw CorruptBacktrack("hop " + std::to_string(k) + " -> " + std::to_string(j) +
                                   " is shorter than L = " + std::to_string(result.min_len));
        k = j;
        bounds.push_back(k);
    }
    std::reverse(bounds.begin(), bounds.end());
    return bounds;
}

std::vector<std::uint32_t> segment_cardinalities(ColumnSource& source,
                                                 std::span<const pos_t> boundaries) {
    source.reset();
    const std::uint32_t m = source.rows();
    std::vector<std::uint32_t> cards;
    cards.reserve(boundaries.size() - 1);

    // Partition refinement: rows sharing a group id have equal substrings
    // over the current segment so far.
    std::vector<std::uint32_t> group(m, 0);
    std::vector<std::uint32_t> order(m);
    std::vector<std::uint64_t> key(m);
    std::vector<std::uint8_t> column(m);

    std::size_t seg = 1;
    for (pos_t k = 1; k <= boundaries.back(); ++k) {
        if (!source.next(column))
            throw SourceExhausted("source ended after " + std::to_string(k - 1) + " columns");
        for (std::uint32_t i = 0; i < m; ++i)
            key[i] = (static_cast<std::uint64_t>(group[i]) << 8) | column[i];
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t x, std::uint32_t y) { return key[x] < key[y]; });
        std::uint32_t groups = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            if (i > 0 && key[order[i]] != key[order[i - 1]])
                ++groups;
            group[order[i]] = groups;
        }
        ++groups;
        if (k == boundaries[seg]) {
            cards.push_back(groups);
            std::fill(group.begin(), group.end(), 0u);
            ++seg;
        }
    }
    return cards;
}

Segmentation solve(ColumnSource& source, std::uint64_t L, MaxMode mode) {
    const auto result = run_streaming(source, L, mode);
    if (!result.feasible())
        throw InfeasibleLength("no segmentation: n = " + std::to_string(result.n) +
                               " is shorter than L = " + std::to_string(result.min_len));
    const auto bounds = backtrack_splits(result);
    auto cards = segment_cardinalities(source, bounds);
    Segmentation seg;
    seg.boundaries = bounds;
    seg.cardinalities = std::move(cards);
    seg.min_len = L;
    return seg;
}

Segmentation solve(const Panel& panel, std::uint64_t L, MaxMode mode) {
    PanelColumnSource source(panel);
    return solve(source, L, mode);
}

} // namespace fseg
