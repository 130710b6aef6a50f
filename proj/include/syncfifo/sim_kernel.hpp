#pragma once

// Cycle-driven simulation of one test. Cycle k's rising edge happens at
// t = k * clock_period. The first `reset_cycles` edges see reset high; after
// that the agent plays one transaction per edge until the sequence runs out.

#include <syncfifo/error.hpp>
#include <syncfifo/fifo_core.hpp>
#include <syncfifo/tb/environment.hpp>
#include <syncfifo/waveform.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace syncfifo {

struct SimConfig {
    std::uint64_t clock_period_ns = 10;
    std::uint64_t reset_cycles = 10;
    std::uint64_t max_cycles = 1'000'000;
    std::uint64_t seed = 1;

    void validate() const {
        if (clock_period_ns == 0)
            throw ConfigError("clock period must be positive");
        if (reset_cycles < 1)
            throw ConfigError("at least one reset cycle is required");
        if (max_cycles <= reset_cycles)
            throw ConfigError("max_cycles must exceed reset_cycles");
    }
};

struct RunReport {
    std::string test;
    std::uint64_t seed = 0;
    std::uint64_t cycles = 0;
    std::uint64_t writes_accepted = 0;
    std::uint64_t reads_accepted = 0;
    std::uint64_t writes_rejected = 0;
    std::uint64_t reads_rejected = 0;
    std::vector<tb::MismatchRecord> mismatches;
    tb::CoverageReport coverage;
    bool truncated = false;
    std::vector<std::string> notes;
    bool pass = false;
};

/// Everything that happened at one edge. `pre` and `post` are the DUT state
/// on either side of it.
struct CycleRecord {
    std::uint64_t cycle = 0;
    std::uint64_t time_ns = 0;
    bool reset = false;
    std::optional<tb::Transaction> txn;
    FifoInputs inputs;
    FifoState pre;
    FifoState post;
    FifoOutputs outputs;
    std::vector<tb::ObservedOp> observed;
};

using CycleObserver = std::function<void(const CycleRecord &)>;

struct RunOptions {
    std::optional<std::filesystem::path> vcd_path;
    std::optional<std::size_t> transactions;
    FaultMode fault = FaultMode::none;
    CycleObserver on_cycle;
};

/// Fixed roster: 1-bit wires, data buses, then the pointer registers.
inline std::vector<vcd::SignalDecl> fifo_signal_roster(const FifoConfig &config) {
    using vcd::VarKind;
    const unsigned pw = config.pointer_bits();
    struct Item {
        const char *name;
        unsigned width;
        VarKind kind;
    };
    const Item items[] = {
        {"clock", 1, VarKind::wire},      {"data_in", config.width, VarKind::wire}, {"reset", 1, VarKind::wire},
        {"wn", 1, VarKind::wire},         {"rn", 1, VarKind::wire},                 {"full", 1, VarKind::wire},
        {"empty", 1, VarKind::wire},      {"data_out", config.width, VarKind::wire}, {"wptr", pw, VarKind::reg},
        {"rptr", pw, VarKind::reg},
    };
    std::vector<vcd::SignalDecl> out;
    for (const auto &it : items)
        out.push_back({it.name, it.width, it.kind, vcd::make_id_code(out.size())});
    return out;
}

class Simulator {
public:
    Simulator(tb::Environment &env, const SimConfig &sim, FaultMode fault = FaultMode::none)
        : env_(env), sim_(sim), dut_(env.config(), fault) {
        sim_.validate();
        if (!env_.agent().is_active())
            throw ConfigError("simulation requires an active agent");
    }

    /// Opens a VCD whose #0 values are the DUT outputs under reset.
    void attach_vcd(const std::filesystem::path &path) {
        const auto roster = fifo_signal_roster(env_.config());
        ids_.clear();
        for (const auto &s : roster)
            ids_.push_back(s.id_code);
        std::vector<std::string> initial;
        for (const auto &s : roster)
            initial.emplace_back(s.width, '0');
        initial[sig_clock] = "1";
        initial[sig_reset] = "1";
        initial[sig_empty] = "1";
        vcd_.emplace(vcd::VcdWriter::open(path, roster, std::move(initial)));
    }

    bool done() const {
        return truncated() || (cycle_ >= sim_.reset_cycles && env_.agent().sequencer->exhausted());
    }

    bool truncated() const { return cycle_ >= sim_.max_cycles && !env_.agent().sequencer->exhausted(); }

    /// One clock edge. Pre-edge flags are sampled before the DUT commits.
    CycleRecord step() {
        CycleRecord rec;
        rec.cycle = cycle_;
        rec.time_ns = cycle_ * sim_.clock_period_ns;
        rec.reset = cycle_ < sim_.reset_cycles;
        rec.pre = dut_.state();

        const FifoOutputs pre_out = dut_.outputs();
        if (rec.reset) {
            rec.inputs.reset = true;
        } else {
            rec.txn = env_.agent().sequencer->next_item();
            rec.inputs = env_.agent().driver->drive(*rec.txn);
        }
        rec.outputs = dut_.posedge(rec.inputs);
        rec.post = dut_.state();
        const auto &sample = env_.agent().monitor.sample({pre_out.full, pre_out.empty}, rec.inputs, rec.outputs,
                                                         rec.cycle);
        rec.observed = sample.ops;
        if (vcd_)
            dump(rec);
        ++cycle_;
        return rec;
    }

    std::uint64_t cycle() const { return cycle_; }
    const SyncFifo &dut() const { return dut_; }

    /// Closes the dump (if any) one period after the last edge.
    void finish_vcd() {
        if (vcd_)
            vcd_->finish(cycle_ * sim_.clock_period_ns);
    }

private:
    enum Sig { sig_clock, sig_data_in, sig_reset, sig_wn, sig_rn, sig_full, sig_empty, sig_data_out, sig_wptr, sig_rptr };

    void dump(const CycleRecord &r) {
        auto &w = *vcd_;
        const auto t = r.time_ns;
        w.change(t, ids_[sig_clock], 1);
        w.change(t, ids_[sig_data_in], r.inputs.data_in);
        w.change(t, ids_[sig_reset], r.inputs.reset);
        w.change(t, ids_[sig_wn], r.inputs.wn);
        w.change(t, ids_[sig_rn], r.inputs.rn);
        w.change(t, ids_[sig_full], r.outputs.full);
        w.change(t, ids_[sig_empty], r.outputs.empty);
        w.change(t, ids_[sig_data_out], r.outputs.data_out);
        w.change(t, ids_[sig_wptr], r.post.wptr);
        w.change(t, ids_[sig_rptr], r.post.rptr);
        if (sim_.clock_period_ns >= 2)
            w.change(t + sim_.clock_period_ns / 2, ids_[sig_clock], 0);
    }

    tb::Environment &env_;
    SimConfig sim_;
    SyncFifo dut_;
    std::uint64_t cycle_ = 0;
    std::optional<vcd::VcdWriter> vcd_;
    std::vector<std::string> ids_;
};

/// Builds the environment for `test_name`, simulates it to completion and
/// collects the verdict. A VCD that cannot be written is reported in
/// `notes`; the simulation itself still runs.
inline RunReport run_test(std::string_view test_name, const SimConfig &sim, const FifoConfig &fifo,
                          const RunOptions &opts = {}) {
    sim.validate();
    fifo.validate();
    tb::EnvironmentOptions env_opts;
    env_opts.seed = sim.seed;
    env_opts.params.transactions = opts.transactions;
    auto env = tb::build_environment(test_name, fifo, env_opts);

    RunReport report;
    report.test = std::string(test_name);
    report.seed = sim.seed;

    Simulator simulator(*env, sim, opts.fault);
    bool vcd_ok = false;
    if (opts.vcd_path) {
        try {
            simulator.attach_vcd(*opts.vcd_path);
            vcd_ok = true;
        } catch (const Error &e) {
            report.notes.push_back(std::string("vcd: ") + e.what());
        }
    }

    while (!simulator.done()) {
        auto rec = simulator.step();
        if (opts.on_cycle)
            opts.on_cycle(rec);
    }
    if (vcd_ok) {
        try {
            simulator.finish_vcd();
        } catch (const Error &e) {
            report.notes.push_back(std::string("vcd: ") + e.what());
        }
    }

    const auto &sb = env->scoreboard();
    report.cycles = simulator.cycle();
    report.writes_accepted = sb.counters().writes_accepted;
    report.reads_accepted = sb.counters().reads_accepted;
    report.writes_rejected = sb.counters().writes_rejected;
    report.reads_rejected = sb.counters().reads_rejected;
    report.mismatches = sb.mismatches();
    report.coverage = env->coverage().report();
    report.truncated = simulator.truncated();
    if (report.truncated)
        report.notes.push_back("truncated: max_cycles reached with " +
                               std::to_string(env->agent().sequencer->remaining()) + " transactions unsent");
    report.pass = report.mismatches.empty() && !report.truncated;
    return report;
}

} // namespace syncfifo
