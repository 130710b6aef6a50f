#pragma once

#include <syncfifo/fifo_core.hpp>
#include <syncfifo/tb/transaction.hpp>

namespace syncfifo::tb {

/// Transaction to pin values. Reset is owned by the kernel and is always low here.
inline FifoInputs drive(const Transaction &t) {
    FifoInputs in;
    switch (t.kind) {
    case TxnKind::write:
        in.wn = true;
        in.data_in = t.data;
        break;
    case TxnKind::read:
        in.rn = true;
        break;
    case TxnKind::both:
        in.wn = in.rn = true;
        in.data_in = t.data;
        break;
    case TxnKind::idle:
        break;
    }
    return in;
}

class Driver {
public:
    FifoInputs drive(const Transaction &t) {
        ++driven_;
        return tb::drive(t);
    }

    std::size_t driven() const { return driven_; }

private:
    std::size_t driven_ = 0;
};

} // namespace syncfifo::tb
