#pragma once

#include <syncfifo/fifo_core.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

namespace syncfifo::tb {

enum class TxnKind { write, read, both, idle };

struct Transaction {
    TxnKind kind = TxnKind::idle;
    std::uint64_t data = 0; ///< meaningful for write and both
    std::uint64_t id = 0;

    bool operator==(const Transaction &) const = default;
};

enum class OpKind { write_accepted, read_accepted, write_rejected, read_rejected };

/// One accepted or rejected operation reconstructed by the monitor from pins.
struct ObservedOp {
    std::uint64_t cycle = 0;
    OpKind op = OpKind::write_accepted;
    std::uint64_t data = 0;
    bool full_after = false;
    bool empty_after = true;

    bool operator==(const ObservedOp &) const = default;
};

enum class MismatchCategory { data, full_flag, empty_flag };

struct MismatchRecord {
    std::uint64_t cycle = 0;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
    MismatchCategory category = MismatchCategory::data;

    bool operator==(const MismatchRecord &) const = default;
};

/// Everything the monitor publishes for one clock edge.
struct MonitorSample {
    std::uint64_t cycle = 0;
    bool reset = false;
    std::vector<ObservedOp> ops;
    FifoOutputs outputs;
};

constexpr std::string_view to_string(TxnKind k) {
    switch (k) {
    case TxnKind::write: return "WRITE";
    case TxnKind::read: return "READ";
    case TxnKind::both: return "BOTH";
    case TxnKind::idle: return "IDLE";
    }
    return "?";
}

constexpr std::string_view to_string(OpKind k) {
    switch (k) {
    case OpKind::write_accepted: return "WRITE_ACCEPTED";
    case OpKind::read_accepted: return "READ_ACCEPTED";
    case OpKind::write_rejected: return "WRITE_REJECTED";
    case OpKind::read_rejected: return "READ_REJECTED";
    }
    return "?";
}

constexpr std::string_view to_string(MismatchCategory c) {
    switch (c) {
    case MismatchCategory::data: return "DATA";
    case MismatchCategory::full_flag: return "FULL_FLAG";
    case MismatchCategory::empty_flag: return "EMPTY_FLAG";
    }
    return "?";
}

} // namespace syncfifo::tb
