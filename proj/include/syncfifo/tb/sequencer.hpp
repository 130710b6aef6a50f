#pragma once

#include <syncfifo/error.hpp>
#include <syncfifo/prng.hpp>
#include <syncfifo/tb/transaction.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace syncfifo::tb {

struct KindWeights {
    std::uint32_t write = 1;
    std::uint32_t read = 1;
    std::uint32_t both = 1;
    std::uint32_t idle = 1;

    std::uint64_t total() const { return std::uint64_t{write} + read + both + idle; }
};

struct SequenceSpec {
    enum class Mode { directed, random };

    Mode mode = Mode::directed;
    std::vector<Transaction> directed_items; // ids are reassigned on emission
    std::size_t count = 0;
    KindWeights weights;
    std::uint64_t data_min = 0;
    std::uint64_t data_max = ~std::uint64_t{0};

    static SequenceSpec directed(std::vector<Transaction> items) {
        SequenceSpec s;
        s.mode = Mode::directed;
        s.count = items.size();
        s.directed_items = std::move(items);
        return s;
    }

    static SequenceSpec random(std::size_t count, KindWeights weights, std::uint64_t data_min,
                               std::uint64_t data_max) {
        SequenceSpec s;
        s.mode = Mode::random;
        s.count = count;
        s.weights = weights;
        s.data_min = data_min;
        s.data_max = data_max;
        return s;
    }

    std::size_t length() const { return mode == Mode::directed ? directed_items.size() : count; }

    void validate(const FifoConfig &config) const {
        if (length() == 0)
            throw ConfigError("sequence must contain at least one item");
        if (mode == Mode::directed) {
            for (const auto &t : directed_items)
                if (t.data & ~config.data_mask())
                    throw ConfigError("directed item data exceeds FIFO width");
            return;
        }
        if (weights.total() == 0)
            throw ConfigError("at least one kind weight must be positive");
        if (data_min > data_max || data_min > config.data_mask())
            throw ConfigError("empty data range");
    }
};

/// Hands out one transaction per call.
///
/// In random mode each item consumes exactly two PRNG draws, kind first and
/// data second, whether or not the kind carries data. Kinds are picked by
/// `draw % total_weight` against the cumulative weights in the order
/// WRITE, READ, BOTH, IDLE; data is `data_min + draw % span`.
class Sequencer {
public:
    Sequencer(SequenceSpec spec, const FifoConfig &config, std::uint64_t seed)
        : spec_(std::move(spec)), rng_(seed), mask_(config.data_mask()) {
        spec_.validate(config);
        spec_.data_max = std::min(spec_.data_max, mask_);
    }

    bool exhausted() const { return issued_ >= spec_.length(); }
    std::size_t issued() const { return issued_; }
    std::size_t remaining() const { return spec_.length() - issued_; }
    const SequenceSpec &spec() const { return spec_; }

    /// std::nullopt signals end of sequence.
    std::optional<Transaction> next_item() {
        if (exhausted())
            return std::nullopt;
        Transaction t;
        if (spec_.mode == SequenceSpec::Mode::directed) {
            t = spec_.directed_items[issued_];
        } else {
            t.kind = draw_kind();
            const std::uint64_t data = draw_data();
            t.data = (t.kind == TxnKind::write || t.kind == TxnKind::both) ? data : 0;
        }
        t.id = issued_++;
        return t;
    }

private:
    TxnKind draw_kind() {
        std::uint64_t r = rng_.next() % spec_.weights.total();
        const std::pair<TxnKind, std::uint32_t> table[] = {
            {TxnKind::write, spec_.weights.write},
            {TxnKind::read, spec_.weights.read},
            {TxnKind::both, spec_.weights.both},
            {TxnKind::idle, spec_.weights.idle},
        };
        for (auto [kind, w] : table) {
            if (r < w)
                return kind;
            r -= w;
        }
        return TxnKind::idle; // unreachable
    }

    std::uint64_t draw_data() {
        const std::uint64_t raw = rng_.next();
        const std::uint64_t span = spec_.data_max - spec_.data_min + 1; // 0 means the full 2^64 range
        return span == 0 ? raw : spec_.data_min + raw % span;
    }

    SequenceSpec spec_;
    SplitMix64 rng_;
    std::uint64_t mask_;
    std::size_t issued_ = 0;
};

} // namespace syncfifo::tb
