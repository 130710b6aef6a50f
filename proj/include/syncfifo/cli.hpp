#pragma once

// Command-line front end: `list` and `run`. Kept in a header so tests can
// drive parse_args()/execute() in-process.

#include <syncfifo/error.hpp>
#include <syncfifo/report.hpp>
#include <syncfifo/sim_kernel.hpp>
#include <syncfifo/tb/tests.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace syncfifo::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_internal = 3 };

enum class Command { run, list };
enum class ReportFormat { text, json };

struct CliConfig {
    Command command = Command::list;
    std::string test;
    std::uint64_t seed = 1;
    std::optional<std::size_t> transactions;
    std::optional<std::uint64_t> cycles;
    std::uint32_t depth = 8;
    unsigned width = 8;
    std::optional<std::filesystem::path> vcd;
    ReportFormat report = ReportFormat::text;
    std::optional<std::filesystem::path> out;
    bool inject_fault = false;
};

/// Bad command line. `what()` holds the message followed by usage text.
class UsageError : public Error {
public:
    using Error::Error;
};

/// `--help` was given; `what()` is the help text.
class HelpRequested : public Error {
public:
    using Error::Error;
};

namespace detail {

struct App {
    CLI::App app{"Cycle-accurate synchronous FIFO simulator and testbench runner", "syncfifo"};
    CLI::App *run = nullptr;
    CLI::App *list = nullptr;
    CliConfig cfg;
    std::string report = "text";
    std::string vcd;
    std::string out;
    std::size_t transactions = 0;
    std::uint64_t cycles = 0;

    App() {
        app.require_subcommand(1);
        list = app.add_subcommand("list", "Print the registered test names");
        run = app.add_subcommand("run", "Run one registered test");
        run->add_option("--test", cfg.test, "Registered test name")->required();
        run->add_option("--seed", cfg.seed, "PRNG seed (decimal or 0x hex)");
        run->add_option("--transactions", transactions, "Random sequence length override")
            ->check(CLI::PositiveNumber);
        run->add_option("--cycles", cycles, "Maximum simulated cycles, reset included")->check(CLI::PositiveNumber);
        run->add_option("--depth", cfg.depth, "FIFO depth (power of two, >= 2)");
        run->add_option("--width", cfg.width, "Data width in bits (1..64)");
        run->add_option("--vcd", vcd, "Write a VCD waveform to this path");
        run->add_option("--report", report, "Report format")->check(CLI::IsMember({"text", "json"}));
        run->add_option("--out", out, "Write the report to this path instead of stdout");
        run->add_flag("--inject-fault", cfg.inject_fault, "Invert the DUT's full guard (checker self-test)");
    }
};

} // namespace detail

inline std::string usage() {
    detail::App a;
    return a.app.help() + "\n" + a.run->help();
}

/// `args` excludes the program name.
inline CliConfig parse_args(const std::vector<std::string> &args) {
    detail::App a;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        a.app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested(usage());
    } catch (const CLI::ParseError &e) {
        throw UsageError(std::string(e.what()) + "\n\n" + usage());
    }

    CliConfig cfg = a.cfg;
    if (a.list->parsed()) {
        cfg.command = Command::list;
        return cfg;
    }
    cfg.command = Command::run;
    cfg.report = a.report == "json" ? ReportFormat::json : ReportFormat::text;
    if (!a.vcd.empty())
        cfg.vcd = a.vcd;
    if (!a.out.empty())
        cfg.out = a.out;
    if (a.run->count("--transactions"))
        cfg.transactions = a.transactions;
    if (a.run->count("--cycles"))
        cfg.cycles = a.cycles;
    if (!tb::is_registered(cfg.test))
        throw UsageError("unknown test '" + cfg.test + "'; registered tests: " + tb::registered_test_list());
    try {
        FifoConfig{cfg.depth, cfg.width}.validate();
    } catch (const ConfigError &e) {
        throw UsageError(e.what());
    }
    return cfg;
}

inline CliConfig parse_args(int argc, const char *const *argv) {
    return parse_args(std::vector<std::string>(argv + 1, argv + argc));
}

inline int execute(const CliConfig &cfg, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    try {
        if (cfg.command == Command::list) {
            for (auto name : tb::kRegisteredTests)
                out << name << '\n';
            return exit_pass;
        }

        SimConfig sim;
        sim.seed = cfg.seed;
        if (cfg.cycles)
            sim.max_cycles = *cfg.cycles;
        RunOptions opts;
        opts.vcd_path = cfg.vcd;
        opts.transactions = cfg.transactions;
        opts.fault = cfg.inject_fault ? FaultMode::invert_full_guard : FaultMode::none;

        const auto report = run_test(cfg.test, sim, FifoConfig{cfg.depth, cfg.width}, opts);
        const std::string text = cfg.report == ReportFormat::json ? to_json_string(report) : to_text(report);
        if (cfg.out) {
            std::ofstream f(*cfg.out, std::ios::binary | std::ios::trunc);
            f << text;
            if (!f)
                throw IoError("cannot write report to '" + cfg.out->string() + "'");
        } else {
            out << text;
        }
        for (const auto &n : report.notes)
            err << "syncfifo: " << n << '\n';
        return report.pass ? exit_pass : exit_fail;
    } catch (const ConfigError &e) {
        err << "syncfifo: " << e.what() << '\n';
        return exit_usage;
    } catch (const LookupError &e) {
        err << "syncfifo: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "syncfifo: internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

/// Whole-program entry: parse, execute, map errors to exit codes.
inline int main(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    try {
        return execute(parse_args(argc, argv), out, err);
    } catch (const HelpRequested &h) {
        out << h.what();
        return exit_pass;
    } catch (const UsageError &e) {
        err << "syncfifo: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace syncfifo::cli
