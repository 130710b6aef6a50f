// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <syncfifo/cli.hpp>
#include <syncfifo/syncfifo.hpp>

#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace syncfifo;
using namespace syncfifo::tb;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char *title, const std::function<Outcome()> &body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        o = body();
    } catch (const std::exception &e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] AC%-2d %s (%.1f ms)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, ms,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    failures += !o.ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

fs::path scratch(const std::string &name) {
    auto dir = fs::temp_directory_path() / "syncfifo_acceptance";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "syncfifo");
    std::vector<const char *> argv;
    for (auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    return cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
}

// Header grammar and timestamp order checked line by line, without vcd_parse.
std::string external_vcd_check(const std::string &text) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);)
        lines.push_back(l);
    if (lines.empty() || lines[0] != "$timescale 1ns $end")
        return "first line is not '$timescale 1ns $end'";
    if (lines.size() < 2 || lines[1] != "$scope module tb $end")
        return "missing '$scope module tb $end'";
    std::size_t i = 2;
    while (i < lines.size() && lines[i].rfind("$var ", 0) == 0) {
        if (lines[i].size() < 5 || lines[i].substr(lines[i].size() - 5) != " $end")
            return "unterminated $var";
        ++i;
    }
    if (i == 2)
        return "no $var lines";
    if (i >= lines.size() || lines[i] != "$upscope $end")
        return "missing '$upscope $end'";
    if (++i >= lines.size() || lines[i] != "$enddefinitions $end")
        return "missing '$enddefinitions $end'";
    bool have = false;
    unsigned long long prev = 0;
    for (++i; i < lines.size(); ++i) {
        if (lines[i].empty() || lines[i][0] != '#')
            continue;
        const auto t = std::stoull(lines[i].substr(1));
        if (have && t <= prev)
            return "timestamp " + std::to_string(t) + " does not increase";
        have = true;
        prev = t;
    }
    return have ? "" : "no timestamps";
}

// Re-emits a parsed trace through the writer.
std::string reemit(const vcd::VcdTrace &trace) {
    std::vector<std::string> initial(trace.signals.size());
    std::vector<bool> seen(trace.signals.size(), false);
    std::vector<vcd::VcdEvent> rest;
    for (const auto &e : trace.events) {
        std::size_t idx = 0;
        while (trace.signals[idx].id_code != e.signal)
            ++idx;
        if (e.time == 0 && !seen[idx]) {
            initial[idx] = e.value;
            seen[idx] = true;
        } else {
            rest.push_back(e);
        }
    }
    std::ostringstream os;
    vcd::VcdWriter w(os, trace.signals, initial, trace.timescale);
    for (const auto &e : rest)
        w.change(e);
    w.finish(trace.end_time);
    return os.str();
}

} // namespace

int main() {
    criterion(1, "write_read_order reproduces the fill/readback waveform", [] {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<std::uint64_t> writes, reads;
        std::vector<CycleRecord> recs;
        RunOptions opts;
        opts.on_cycle = [&](const CycleRecord &r) {
            recs.push_back(r);
            for (const auto &op : r.observed) {
                if (op.op == OpKind::write_accepted)
                    writes.push_back(op.data);
                if (op.op == OpKind::read_accepted)
                    reads.push_back(op.data);
            }
        };
        const auto report = run_test("write_read_order", {}, {}, opts);
        const double elapsed = seconds_since(t0);

        const std::vector<std::uint64_t> expect = {0x00, 0xa1, 0xb2, 0xc3, 0xd4, 0xe5, 0xf6, 0x07};
        o.require(writes == expect, "write data differs from 00,a1,b2,c3,d4,e5,f6,07");
        o.require(reads == expect, "read data differs from write data");
        o.require(report.mismatches.empty(), "scoreboard mismatches");

        std::size_t writes_seen = 0, reads_seen = 0;
        for (const auto &r : recs) {
            const bool first_write_pending = writes_seen == 0;
            if (first_write_pending)
                o.require(outputs_of(r.pre).empty, "empty low before first write");
            for (const auto &op : r.observed) {
                writes_seen += op.op == OpKind::write_accepted;
                reads_seen += op.op == OpKind::read_accepted;
            }
            o.require(r.outputs.full == (writes_seen - reads_seen == 8 && !r.reset),
                      "full not asserted exactly after the 8th write (cycle " + std::to_string(r.cycle) + ")");
            if (writes_seen > 0 && reads_seen < 8)
                o.require(!r.outputs.empty, "empty high while data is stored");
            if (reads_seen == 8)
                o.require(r.outputs.empty, "empty did not re-assert after the 8th read");
        }
        o.require(reads_seen == 8, "fewer than 8 reads");
        o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");
        return o;
    });

    criterion(2, "reset window 0-100 ns holds outputs at reset values", [] {
        Outcome o;
        const auto path = scratch("reset.vcd");
        SimConfig sim;
        sim.clock_period_ns = 10;
        sim.reset_cycles = 10;
        RunOptions opts;
        opts.vcd_path = path;
        std::size_t in_window = 0;
        opts.on_cycle = [&](const CycleRecord &r) {
            if (r.time_ns < 100) {
                ++in_window;
                o.require(r.reset, "reset low inside window");
                o.require(r.outputs == FifoOutputs{0, false, true}, "outputs not (0, full=0, empty=1) in window");
            } else {
                o.require(!r.reset, "reset high after 100 ns");
            }
        };
        const auto report = run_test("reset_check", sim, {}, opts);
        o.require(report.pass, "reset_check did not pass");
        o.require(in_window == 10, "expected 10 cycles in [0,100)");
        const auto trace = vcd::vcd_parse_file(path);
        const std::string reset_id = fifo_signal_roster({})[2].id_code;
        std::vector<vcd::VcdEvent> reset_events;
        for (const auto &e : trace.events)
            if (e.signal == reset_id)
                reset_events.push_back(e);
        o.require(reset_events.size() == 2, "reset should have exactly one falling edge");
        if (reset_events.size() == 2) {
            o.require(reset_events[0].time == 0 && reset_events[0].value == "1", "reset not high at t=0");
            o.require(reset_events[1].time == 100 && reset_events[1].value == "0", "reset does not fall at t=100");
        }
        return o;
    });

    criterion(3, "overflow/underflow attempts leave the state digest unchanged", [] {
        Outcome o;
        std::size_t overflow_checked = 0, underflow_checked = 0;
        RunOptions opts;
        opts.on_cycle = [&](const CycleRecord &r) {
            for (const auto &op : r.observed)
                if (op.op == OpKind::write_rejected) {
                    ++overflow_checked;
                    o.require(occupancy(r.pre) == 8, "rejected write on a non-full FIFO");
                    o.require(digest(r.pre) == digest(r.post), "digest changed on overflow");
                }
        };
        const auto over = run_test("overflow_guard", {}, {}, opts);
        o.require(over.mismatches.empty(), "overflow_guard mismatches");
        o.require(overflow_checked == 1, "expected exactly one rejected 9th write");

        opts.on_cycle = [&](const CycleRecord &r) {
            for (const auto &op : r.observed)
                if (op.op == OpKind::read_rejected) {
                    ++underflow_checked;
                    o.require(digest(r.pre) == digest(r.post), "digest changed on underflow");
                }
        };
        const auto under = run_test("underflow_guard", {}, {}, opts);
        o.require(under.mismatches.empty(), "underflow_guard mismatches");
        o.require(underflow_checked >= 1, "no rejected read observed");
        return o;
    });

    criterion(4, "simultaneous_rw keeps occupancy and order at occupancies 1..7", [] {
        Outcome o;
        std::set<std::uint32_t> covered;
        RunOptions opts;
        opts.on_cycle = [&](const CycleRecord &r) {
            if (!r.txn || r.txn->kind != TxnKind::both)
                return;
            const auto before = occupancy(r.pre);
            if (before >= 1 && before <= 7) {
                covered.insert(before);
                o.require(occupancy(r.post) == before, "occupancy changed under simultaneous R/W");
            }
        };
        const auto report = run_test("simultaneous_rw", {}, {}, opts);
        o.require(report.mismatches.empty(), "order/flag mismatches");
        o.require(covered == std::set<std::uint32_t>{1, 2, 3, 4, 5, 6, 7}, "not every occupancy 1..7 exercised");
        return o;
    });

    criterion(5, "random_soak seed 0xDEADBEEF: zero mismatches, 100% coverage", [] {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        SimConfig sim;
        sim.seed = 0xDEADBEEF;
        RunOptions opts;
        opts.transactions = 10'000;
        const auto report = run_test("random_soak", sim, {8, 8}, opts);
        const double elapsed = seconds_since(t0);
        o.require(report.mismatches.empty(), std::to_string(report.mismatches.size()) + " mismatches");
        o.require(report.coverage.percent() == 100.0,
                  "coverage " + std::to_string(report.coverage.percent()) + "%");
        o.require(report.coverage.bins_hit() == 8, "not all 8 bins hit");
        o.require(report.cycles == 10'010, "expected 10 reset + 10000 transaction cycles");
        o.require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s >= 5 s");
        return o;
    });

    criterion(6, "exhaustive depth=2 width=1 state space", [] {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = oracle::explore({2, 1});
        const double elapsed = seconds_since(t0);
        o.require(r.violations.empty(), r.violations.empty() ? "" : r.violations.front());
        o.require(r.states > 1 && r.states <= 4 * 4 * 4 * 2, "state count outside the finite bound");
        o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");
        if (o.ok)
            o.detail = std::to_string(r.states) + " states";
        return o;
    });

    criterion(7, "identical invocations give byte-identical JSON and VCD", [] {
        Outcome o;
        std::vector<std::string> reports, dumps;
        for (int i = 0; i < 2; ++i) {
            const auto rep = scratch("det" + std::to_string(i) + ".json");
            const auto vcd = scratch("det" + std::to_string(i) + ".vcd");
            const int code = cli_run({"run", "--test", "random_soak", "--seed", "0xDEADBEEF", "--report", "json",
                                      "--out", rep.string(), "--vcd", vcd.string()});
            o.require(code == 0, "run exited " + std::to_string(code));
            reports.push_back(slurp(rep));
            dumps.push_back(slurp(vcd));
        }
        o.require(!reports[0].empty() && reports[0] == reports[1], "JSON reports differ");
        o.require(!dumps[0].empty() && dumps[0] == dumps[1], "VCD files differ");
        return o;
    });

    criterion(8, "every emitted VCD round-trips and passes the header/timestamp check", [] {
        Outcome o;
        for (auto name : kRegisteredTests) {
            const auto path = scratch(std::string(name) + ".vcd");
            RunOptions opts;
            opts.vcd_path = path;
            run_test(name, {}, {}, opts);
            const auto text = slurp(path);
            const auto ext = external_vcd_check(text);
            o.require(ext.empty(), std::string(name) + ": " + ext);
            o.require(reemit(vcd::vcd_parse(text)) == text, std::string(name) + ": parse/re-emit not identical");
        }
        return o;
    });

    criterion(9, "fault injection (inverted full guard) is caught", [] {
        Outcome o;
        std::size_t total_mismatches = 0;
        bool any_exit_one = false;
        for (auto name : kRegisteredTests) {
            if (name == "random_soak")
                continue;
            const auto rep = scratch("fault_" + std::string(name) + ".json");
            const int code = cli_run({"run", "--test", std::string(name), "--inject-fault", "--report", "json", "--out",
                                      rep.string()});
            const auto j = nlohmann::json::parse(slurp(rep));
            const auto n = j["mismatches"].size();
            total_mismatches += n;
            o.require((n > 0) == (code == 1), std::string(name) + ": exit code disagrees with mismatches");
            any_exit_one |= code == 1;
        }
        o.require(total_mismatches >= 1, "no mismatch recorded");
        o.require(any_exit_one, "no run exited with code 1");
        if (o.ok)
            o.detail = std::to_string(total_mismatches) + " mismatches";
        return o;
    });

    criterion(10, "SplitMix64 seed 0 first output is 0xE220A8397B1DCDAF", [] {
        Outcome o;
        SplitMix64 r(0);
        o.require(r.next() == 0xE220A8397B1DCDAFULL, "first output differs");
        return o;
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
