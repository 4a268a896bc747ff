#pragma once

// Column-wise access to a panel: either an in-memory matrix or a file in
// the FSEG1 column-major layout (io.hpp).  Sources are rewindable so the
// per-segment cardinality pass can re-read the data after backtracking.

#include <cstdint>
#include <span>

#include "fseg/panel.hpp"

namespace fseg {

class ColumnSource {
public:
    virtual ~ColumnSource() = default;

    virtual std::uint32_t rows() const = 0;
    virtual pos_t columns() const = 0;
    virtual std::uint32_t sigma() const = 0;

    // Fills out (rows() bytes) with the next column; false when exhausted.
    virtual bool next(std::span<std::uint8_t> out) = 0;

    // Rewinds to the first column.
    virtual void reset() = 0;
};

class PanelColumnSource final : public ColumnSource {
public:
    explicit PanelColumnSource(const Panel& panel) : panel_(panel) {}

    std::uint32_t rows() const override { return panel_.rows(); }
    pos_t columns() const override { return panel_.columns(); }
    std::uint32_t sigma() const override { return panel_.sigma(); }

    bool next(std::span<std::uint8_t> out) override {
        if (cursor_ >= panel_.columns())
            return false;
        panel_.column_into(++cursor_, out);
        return true;
    }

    void reset() override { cursor_ = 0; }

private:
    const Panel& panel_;
    pos_t cursor_ = 0;
};

} // namespace fseg
