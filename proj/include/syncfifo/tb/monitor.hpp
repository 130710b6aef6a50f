#pragma once

#include <syncfifo/fifo_core.hpp>
#include <syncfifo/tb/transaction.hpp>

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace syncfifo::tb {

struct FlagPair {
    bool full = false;
    bool empty = true;
};

/// Reconstructs operations from pins sampled around one edge. Write events
/// always precede read events within a cycle.
inline std::vector<ObservedOp> monitor_sample(FlagPair pre, const FifoInputs &in, const FifoOutputs &out,
                                              std::uint64_t cycle) {
    std::vector<ObservedOp> ops;
    if (in.wn)
        ops.push_back({cycle, pre.full ? OpKind::write_rejected : OpKind::write_accepted, in.data_in, out.full,
                       out.empty});
    if (in.rn) {
        if (pre.empty)
            ops.push_back({cycle, OpKind::read_rejected, 0, out.full, out.empty});
        else
            ops.push_back({cycle, OpKind::read_accepted, out.data_out, out.full, out.empty});
    }
    return ops;
}

/// Passive observer with an analysis port. Subscribers receive every sample
/// in connection order.
class Monitor {
public:
    using Subscriber = std::function<void(const MonitorSample &)>;

    void connect(Subscriber s) { subscribers_.push_back(std::move(s)); }

    const MonitorSample &sample(FlagPair pre, const FifoInputs &in, const FifoOutputs &out, std::uint64_t cycle) {
        last_ = MonitorSample{cycle, in.reset, {}, out};
        if (!in.reset)
            last_.ops = monitor_sample(pre, in, out, cycle);
        for (auto &s : subscribers_)
            s(last_);
        return last_;
    }

    const MonitorSample &last() const { return last_; }

private:
    std::vector<Subscriber> subscribers_;
    MonitorSample last_;
};

} // namespace syncfifo::tb
