#pragma once

#include <syncfifo/fifo_core.hpp>
#include <syncfifo/tb/coverage.hpp>
#include <syncfifo/tb/driver.hpp>
#include <syncfifo/tb/monitor.hpp>
#include <syncfifo/tb/scoreboard.hpp>
#include <syncfifo/tb/sequencer.hpp>
#include <syncfifo/tb/tests.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace syncfifo::tb {

enum class AgentMode { active, passive };

/// Active agents own a sequencer and driver; passive agents only monitor.
struct Agent {
    AgentMode mode = AgentMode::active;
    std::optional<Sequencer> sequencer;
    std::optional<Driver> driver;
    Monitor monitor;

    bool is_active() const { return mode == AgentMode::active; }
};

struct EnvironmentOptions {
    AgentMode agent_mode = AgentMode::active;
    std::uint64_t seed = 1;
    TestParams params;
};

/// Owns the agent, scoreboard and coverage collector, with the monitor's
/// analysis port wired to both. Not movable: subscribers hold `this`.
class Environment {
public:
    Environment(std::string test_name, const FifoConfig &config, const EnvironmentOptions &opts)
        : test_name_(std::move(test_name)), config_(config), scoreboard_(config.depth, config.width),
          coverage_(config.depth, config.width) {
        config_.validate();
        auto spec = make_sequence(test_name_, config_, opts.params);
        agent_.mode = opts.agent_mode;
        if (agent_.is_active()) {
            agent_.sequencer.emplace(std::move(spec), config_, opts.seed);
            agent_.driver.emplace();
        }
        agent_.monitor.connect([this](const MonitorSample &s) { scoreboard_.write(s); });
        agent_.monitor.connect([this](const MonitorSample &s) { coverage_.write(s); });
    }

    Environment(const Environment &) = delete;
    Environment &operator=(const Environment &) = delete;

    const std::string &test_name() const { return test_name_; }
    const FifoConfig &config() const { return config_; }
    Agent &agent() { return agent_; }
    const Agent &agent() const { return agent_; }
    const Scoreboard &scoreboard() const { return scoreboard_; }
    const CoverageCollector &coverage() const { return coverage_; }

private:
    std::string test_name_;
    FifoConfig config_;
    Agent agent_;
    Scoreboard scoreboard_;
    CoverageCollector coverage_;
};

inline std::unique_ptr<Environment> build_environment(std::string_view test_name, const FifoConfig &config,
                                                      const EnvironmentOptions &opts = {}) {
    return std::make_unique<Environment>(std::string(test_name), config, opts);
}

} // namespace syncfifo::tb
