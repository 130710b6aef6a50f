#pragma once

// Cycle-accurate model of a single-clock FIFO.
//
// Pointers carry one extra wrap bit above the index bits, so they live in
// [0, 2*depth). The FIFO is empty when both pointers are equal and full when
// the index bits match but the wrap bits differ. All state updates commit at
// the rising edge; reads see the memory contents from before the edge.

#include <syncfifo/error.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace syncfifo {

struct FifoConfig {
    std::uint32_t depth = 8;
    unsigned width = 8;

    void validate() const {
        if (depth < 2 || !std::has_single_bit(depth))
            throw ConfigError("depth must be a power of two >= 2, got " + std::to_string(depth));
        if (width < 1 || width > 64)
            throw ConfigError("width must be in 1..64, got " + std::to_string(width));
    }

    std::uint64_t data_mask() const {
        return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    }

    /// log2(depth) index bits plus the wrap bit.
    unsigned pointer_bits() const { return static_cast<unsigned>(std::countr_zero(depth)) + 1; }

    std::uint32_t pointer_modulus() const { return 2 * depth; }

    bool operator==(const FifoConfig &) const = default;
};

struct FifoState {
    std::vector<std::uint64_t> memory;
    std::uint32_t wptr = 0;
    std::uint32_t rptr = 0;
    std::uint64_t data_out_reg = 0;

    std::uint32_t depth() const { return static_cast<std::uint32_t>(memory.size()); }

    auto operator<=>(const FifoState &) const = default;
};

struct FifoInputs {
    std::uint64_t data_in = 0;
    bool wn = false;
    bool rn = false;
    bool reset = false;

    bool operator==(const FifoInputs &) const = default;
};

struct FifoOutputs {
    std::uint64_t data_out = 0;
    bool full = false;
    bool empty = true;

    bool operator==(const FifoOutputs &) const = default;
};

/// Deliberate DUT mutations used to prove the checker can fail.
enum class FaultMode {
    none,
    invert_full_guard, ///< writes accepted only when full
};

inline FifoState make_state(const FifoConfig &config) {
    config.validate();
    FifoState s;
    s.memory.assign(config.depth, 0);
    return s;
}

inline std::uint32_t occupancy(const FifoState &s) {
    const std::uint32_t mod = 2 * s.depth();
    return (s.wptr + mod - s.rptr) % mod;
}

inline bool is_empty(const FifoState &s) { return s.wptr == s.rptr; }

inline bool is_full(const FifoState &s) {
    const std::uint32_t depth = s.depth();
    const bool wrap_differs = ((s.wptr ^ s.rptr) & depth) != 0;
    const bool index_equal = ((s.wptr ^ s.rptr) & (depth - 1)) == 0;
    return wrap_differs && index_equal;
}

inline FifoOutputs outputs_of(const FifoState &s) {
    return {s.data_out_reg, is_full(s), is_empty(s)};
}

/// Advances `state` by one rising edge and returns the registered outputs.
inline FifoOutputs posedge(const FifoConfig &config, FifoState &state, const FifoInputs &in,
                           FaultMode fault = FaultMode::none) {
    if (in.data_in & ~config.data_mask())
        throw ContractViolation("data_in " + std::to_string(in.data_in) + " exceeds " +
                                std::to_string(config.width) + "-bit width");
    if (state.depth() != config.depth)
        throw ContractViolation("state depth does not match config");

    if (in.reset) {
        state = make_state(config);
        return outputs_of(state);
    }

    const bool full = is_full(state);
    const bool empty = is_empty(state);
    const bool write_guard = fault == FaultMode::invert_full_guard ? full : !full;
    const bool write_accept = in.wn && write_guard;
    const bool read_accept = in.rn && !empty;
    const std::uint32_t mod = config.pointer_modulus();
    const std::uint32_t index_mask = config.depth - 1;

    // Read first so it observes pre-edge memory.
    if (read_accept) {
        state.data_out_reg = state.memory[state.rptr & index_mask];
        state.rptr = (state.rptr + 1) % mod;
    }
    if (write_accept) {
        state.memory[state.wptr & index_mask] = in.data_in;
        state.wptr = (state.wptr + 1) % mod;
    }
    return outputs_of(state);
}

struct Transition {
    FifoState state;
    FifoOutputs outputs;
};

/// Pure form of posedge(): leaves `state` untouched.
inline Transition next_state(const FifoConfig &config, FifoState state, const FifoInputs &in,
                             FaultMode fault = FaultMode::none) {
    FifoOutputs out = posedge(config, state, in, fault);
    return {std::move(state), out};
}

/// FNV-1a over memory, pointers and the output register.
inline std::uint64_t digest(const FifoState &s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    for (auto v : s.memory)
        mix(v);
    mix(s.wptr);
    mix(s.rptr);
    mix(s.data_out_reg);
    return h;
}

/// Stateful wrapper owning config, state and fault mode.
class SyncFifo {
public:
    explicit SyncFifo(FifoConfig config = {}, FaultMode fault = FaultMode::none)
        : config_(config), state_(make_state(config)), fault_(fault) {}

    FifoOutputs posedge(const FifoInputs &in) { return syncfifo::posedge(config_, state_, in, fault_); }

    const FifoConfig &config() const { return config_; }
    const FifoState &state() const { return state_; }
    FifoOutputs outputs() const { return outputs_of(state_); }
    FaultMode fault() const { return fault_; }

    bool full() const { return is_full(state_); }
    bool empty() const { return is_empty(state_); }
    std::uint32_t occupancy() const { return syncfifo::occupancy(state_); }

private:
    FifoConfig config_;
    FifoState state_;
    FaultMode fault_;
};

} // namespace syncfifo
