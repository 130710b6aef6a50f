#pragma once

// Golden reference: an ideal bounded queue with no notion of cycles or
// pointers. The scoreboard mirrors accepted DUT operations into it.

#include <syncfifo/error.hpp>

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>

namespace syncfifo {

struct RefFlags {
    bool full = false;
    bool empty = true;

    bool operator==(const RefFlags &) const = default;
};

class RefQueue {
public:
    explicit RefQueue(std::size_t capacity = 8, unsigned width = 8) : capacity_(capacity), width_(width) {
        if (capacity == 0)
            throw ConfigError("reference queue capacity must be positive");
        if (width < 1 || width > 64)
            throw ConfigError("reference queue width must be in 1..64");
    }

    /// Appends `data` unless the queue is at capacity. Returns whether it was accepted.
    bool push(std::uint64_t data) {
        if (width_ < 64 && (data >> width_) != 0)
            throw ContractViolation("value " + std::to_string(data) + " exceeds queue width");
        if (items_.size() >= capacity_)
            return false;
        items_.push_back(data);
        return true;
    }

    std::optional<std::uint64_t> pop() {
        if (items_.empty())
            return std::nullopt;
        auto front = items_.front();
        items_.pop_front();
        return front;
    }

    RefFlags flags() const { return {items_.size() == capacity_, items_.empty()}; }

    std::size_t size() const { return items_.size(); }
    std::size_t capacity() const { return capacity_; }
    const std::deque<std::uint64_t> &items() const { return items_; }
    void clear() { items_.clear(); }

private:
    std::deque<std::uint64_t> items_;
    std::size_t capacity_;
    unsigned width_;
};

} // namespace syncfifo
