#pragma once

#include <syncfifo/ref_model.hpp>
#include <syncfifo/tb/transaction.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace syncfifo::tb {

/// Checks one observed operation against the reference queue, updating it.
/// Rejected operations are not checked here; the per-cycle flag comparison
/// covers the guards that produced them.
inline std::vector<MismatchRecord> scoreboard_check(const ObservedOp &op, RefQueue &ref) {
    std::vector<MismatchRecord> out;
    switch (op.op) {
    case OpKind::write_accepted:
        if (!ref.push(op.data))
            out.push_back({op.cycle, 1, 0, MismatchCategory::full_flag});
        break;
    case OpKind::read_accepted:
        if (auto expected = ref.pop()) {
            if (*expected != op.data)
                out.push_back({op.cycle, *expected, op.data, MismatchCategory::data});
        } else {
            out.push_back({op.cycle, 1, 0, MismatchCategory::empty_flag});
        }
        break;
    case OpKind::write_rejected:
    case OpKind::read_rejected:
        break;
    }
    return out;
}

inline std::vector<MismatchRecord> compare_flags(std::uint64_t cycle, const FifoOutputs &dut, const RefQueue &ref) {
    std::vector<MismatchRecord> out;
    const auto expected = ref.flags();
    if (expected.full != dut.full)
        out.push_back({cycle, expected.full, dut.full, MismatchCategory::full_flag});
    if (expected.empty != dut.empty)
        out.push_back({cycle, expected.empty, dut.empty, MismatchCategory::empty_flag});
    return out;
}

struct OpCounters {
    std::uint64_t writes_accepted = 0;
    std::uint64_t reads_accepted = 0;
    std::uint64_t writes_rejected = 0;
    std::uint64_t reads_rejected = 0;

    bool operator==(const OpCounters &) const = default;
};

class Scoreboard {
public:
    Scoreboard(std::size_t depth, unsigned width) : ref_(depth, width) {}

    /// Analysis-port entry point.
    void write(const MonitorSample &s) {
        if (s.reset) {
            ref_.clear();
            check_reset(s);
            return;
        }
        for (const auto &op : s.ops) {
            count(op.op);
            if (op.op == OpKind::write_accepted || op.op == OpKind::read_accepted)
                ++checks_;
            append(scoreboard_check(op, ref_));
        }
        append(compare_flags(s.cycle, s.outputs, ref_));
    }

    const std::vector<MismatchRecord> &mismatches() const { return mismatches_; }
    const OpCounters &counters() const { return counters_; }
    std::uint64_t checks() const { return checks_; }
    const RefQueue &reference() const { return ref_; }
    bool passed() const { return mismatches_.empty(); }

private:
    // While reset is held the DUT must show data_out=0, full=0, empty=1.
    void check_reset(const MonitorSample &s) {
        if (s.outputs.data_out != 0)
            mismatches_.push_back({s.cycle, 0, s.outputs.data_out, MismatchCategory::data});
        append(compare_flags(s.cycle, s.outputs, ref_));
    }

    void count(OpKind k) {
        switch (k) {
        case OpKind::write_accepted: ++counters_.writes_accepted; break;
        case OpKind::read_accepted: ++counters_.reads_accepted; break;
        case OpKind::write_rejected: ++counters_.writes_rejected; break;
        case OpKind::read_rejected: ++counters_.reads_rejected; break;
        }
    }

    void append(const std::vector<MismatchRecord> &more) {
        mismatches_.insert(mismatches_.end(), more.begin(), more.end());
    }

    RefQueue ref_;
    std::vector<MismatchRecord> mismatches_;
    OpCounters counters_;
    std::uint64_t checks_ = 0;
};

} // namespace syncfifo::tb
