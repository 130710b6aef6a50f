#pragma once

// Registry of built-in tests. Each entry maps a name to the sequence the
// agent's sequencer will play for a given FIFO configuration.

#include <syncfifo/error.hpp>
#include <syncfifo/fifo_core.hpp>
#include <syncfifo/tb/sequencer.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace syncfifo::tb {

inline constexpr std::array<std::string_view, 8> kRegisteredTests = {
    "reset_check",    "write_read_order", "fill_to_full",    "drain_to_empty",
    "overflow_guard", "underflow_guard",  "simultaneous_rw", "random_soak",
};

inline constexpr std::size_t kRandomSoakDefaultCount = 10'000;
inline constexpr KindWeights kRandomSoakWeights{4, 4, 1, 1};

struct TestParams {
    std::optional<std::size_t> transactions; ///< overrides random_soak's item count
};

namespace detail {

inline Transaction wr(std::uint64_t d) { return {TxnKind::write, d, 0}; }
inline Transaction rd() { return {TxnKind::read, 0, 0}; }
inline Transaction both(std::uint64_t d) { return {TxnKind::both, d, 0}; }
inline Transaction idle() { return {TxnKind::idle, 0, 0}; }

// Starts with the values seen on the UVM waveform, then a fixed byte pattern.
inline std::uint64_t fill_value(std::size_t i, std::uint64_t mask) {
    static constexpr std::uint8_t head[] = {0x26, 0x19, 0x17, 0x08};
    const std::uint64_t v = i < 4 ? head[i] : (i * 0x3b + 0x11) & 0xff;
    return v & mask;
}

inline void append_fill(std::vector<Transaction> &seq, std::size_t n, std::uint64_t mask, std::size_t offset = 0) {
    for (std::size_t i = 0; i < n; ++i)
        seq.push_back(wr(fill_value(offset + i, mask)));
}

inline void append_reads(std::vector<Transaction> &seq, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        seq.push_back(rd());
}

} // namespace detail

inline bool is_registered(std::string_view name) {
    for (auto n : kRegisteredTests)
        if (n == name)
            return true;
    return false;
}

inline std::string registered_test_list() {
    std::string s;
    for (auto n : kRegisteredTests) {
        if (!s.empty())
            s += ", ";
        s += n;
    }
    return s;
}

inline SequenceSpec make_sequence(std::string_view name, const FifoConfig &config, const TestParams &params = {}) {
    using namespace detail;
    const std::uint64_t mask = config.data_mask();
    const std::size_t depth = config.depth;
    std::vector<Transaction> seq;

    if (name == "reset_check") {
        seq = {idle(), idle(), wr(0x5a & mask), rd(), idle()};
    } else if (name == "write_read_order") {
        for (std::uint64_t d : {0x00, 0xa1, 0xb2, 0xc3, 0xd4, 0xe5, 0xf6, 0x07})
            seq.push_back(wr(d & mask));
        append_reads(seq, 8);
    } else if (name == "fill_to_full") {
        append_fill(seq, depth, mask);
    } else if (name == "drain_to_empty") {
        append_fill(seq, depth, mask);
        append_reads(seq, depth);
    } else if (name == "overflow_guard") {
        append_fill(seq, depth, mask);
        seq.push_back(wr(0xff & mask));
        append_reads(seq, depth);
    } else if (name == "underflow_guard") {
        seq = {rd(), wr(0x3c & mask), rd(), rd()};
    } else if (name == "simultaneous_rw") {
        // Every interior occupancy, then both boundary cases.
        std::size_t n = 0;
        for (std::size_t k = 1; k < depth; ++k) {
            append_fill(seq, k, mask, n);
            n += k;
            for (std::size_t j = 0; j < depth; ++j)
                seq.push_back(both(fill_value(n++, mask)));
            append_reads(seq, k);
        }
        seq.push_back(both(fill_value(n++, mask))); // empty: read refused, write taken
        seq.push_back(rd());
        append_fill(seq, depth, mask, n);
        n += depth;
        seq.push_back(both(fill_value(n++, mask))); // full: write refused, read taken
        append_reads(seq, depth);
    } else if (name == "random_soak") {
        return SequenceSpec::random(params.transactions.value_or(kRandomSoakDefaultCount), kRandomSoakWeights, 0,
                                    mask);
    } else {
        throw LookupError("unknown test '" + std::string(name) + "'; registered tests: " + registered_test_list());
    }
    return SequenceSpec::directed(std::move(seq));
}

} // namespace syncfifo::tb
