#pragma once

// Two-state VCD (IEEE 1364 value change dump) writer and a reader that
// understands what the writer produces.

#include <syncfifo/error.hpp>

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace syncfifo::vcd {

enum class VarKind { wire, reg };

struct SignalDecl {
    std::string name;
    unsigned width = 1;
    VarKind kind = VarKind::wire;
    std::string id_code;

    bool operator==(const SignalDecl &) const = default;
};

struct VcdEvent {
    std::uint64_t time = 0;
    std::string signal; ///< id code
    std::string value;  ///< MSB-first bit string, exactly the declared width

    bool operator==(const VcdEvent &) const = default;
};

struct VcdTrace {
    std::string timescale;
    std::vector<SignalDecl> signals;
    std::vector<VcdEvent> events;
    std::optional<std::uint64_t> end_time; ///< last `#` marker in the body
};

inline std::string to_bits(std::uint64_t v, unsigned width) {
    std::string s(width, '0');
    for (unsigned i = 0; i < width && i < 64; ++i)
        if ((v >> i) & 1)
            s[width - 1 - i] = '1';
    return s;
}

/// Short printable identifier: '!'..'~' then two characters, and so on.
inline std::string make_id_code(std::size_t index) {
    constexpr std::size_t radix = '~' - '!' + 1;
    std::string id;
    do {
        id.push_back(static_cast<char>('!' + index % radix));
        index /= radix;
    } while (index-- > 0);
    return id;
}

inline std::string_view to_string(VarKind k) { return k == VarKind::wire ? "wire" : "reg"; }

class VcdWriter {
public:
    /// Writes the header, `#0` and an initial value for every signal
    /// (`initial` may be empty for all-zero).
    VcdWriter(std::ostream &out, std::vector<SignalDecl> signals, std::vector<std::string> initial = {},
              std::string timescale = "1ns")
        : out_(&out), signals_(std::move(signals)) {
        start(timescale, std::move(initial));
    }

    static VcdWriter open(const std::filesystem::path &path, std::vector<SignalDecl> signals,
                          std::vector<std::string> initial = {}, std::string timescale = "1ns") {
        auto file = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file)
            throw IoError("cannot open VCD file '" + path.string() + "' for writing");
        VcdWriter w(std::move(file), std::move(signals));
        w.start(timescale, std::move(initial));
        return w;
    }

    VcdWriter(VcdWriter &&) = default;
    VcdWriter &operator=(VcdWriter &&) = default;

    /// Emits the change unless it repeats the signal's last value.
    void change(const VcdEvent &e) {
        if (finished_)
            throw VcdError("change after finish");
        if (e.time < time_)
            throw VcdError("time regression: " + std::to_string(e.time) + " < " + std::to_string(time_));
        const std::size_t idx = index_of(e.signal);
        validate_value(signals_[idx], e.value);
        time_ = e.time;
        if (last_[idx] == e.value)
            return;
        mark_time();
        emit_value(signals_[idx], e.value);
        last_[idx] = e.value;
    }

    void change(std::uint64_t time, std::string_view id, std::uint64_t value) {
        const std::size_t idx = index_of(id);
        change({time, std::string(id), to_bits(value, signals_[idx].width)});
    }

    /// Optionally closes the dump with a final timestamp, then flushes.
    void finish(std::optional<std::uint64_t> end_time = std::nullopt) {
        if (finished_)
            return;
        if (end_time) {
            if (*end_time < time_)
                throw VcdError("end time precedes last change");
            time_ = *end_time;
            mark_time();
        }
        out_->flush();
        finished_ = true;
        if (file_) {
            file_->close();
            if (file_->fail())
                throw IoError("failed writing VCD file");
        }
        if (!*out_)
            throw IoError("failed writing VCD stream");
    }

    const std::vector<SignalDecl> &signals() const { return signals_; }
    std::uint64_t time() const { return time_; }

private:
    VcdWriter(std::unique_ptr<std::ofstream> file, std::vector<SignalDecl> signals)
        : file_(std::move(file)), out_(file_.get()), signals_(std::move(signals)) {}

    void start(const std::string &timescale, std::vector<std::string> initial) {
        std::unordered_set<std::string> seen;
        for (const auto &s : signals_) {
            if (s.width < 1)
                throw VcdError("signal '" + s.name + "' has zero width");
            if (s.id_code.empty() || s.name.empty())
                throw VcdError("signal needs a name and an id code");
            for (char c : s.id_code)
                if (c < '!' || c > '~')
                    throw VcdError("id code for '" + s.name + "' is not printable ASCII");
            if (!seen.insert(s.id_code).second)
                throw VcdError("duplicate id code '" + s.id_code + "'");
            index_.emplace(s.id_code, index_.size());
        }
        if (initial.empty())
            for (const auto &s : signals_)
                initial.emplace_back(s.width, '0');
        if (initial.size() != signals_.size())
            throw VcdError("initial value count does not match signal count");

        *out_ << "$timescale " << timescale << " $end\n";
        *out_ << "$scope module tb $end\n";
        for (const auto &s : signals_)
            *out_ << "$var " << to_string(s.kind) << ' ' << s.width << ' ' << s.id_code << ' ' << s.name
                  << " $end\n";
        *out_ << "$upscope $end\n";
        *out_ << "$enddefinitions $end\n";
        *out_ << "#0\n";
        marked_ = 0;
        last_.resize(signals_.size());
        for (std::size_t i = 0; i < signals_.size(); ++i) {
            validate_value(signals_[i], initial[i]);
            emit_value(signals_[i], initial[i]);
            last_[i] = std::move(initial[i]);
        }
        if (!*out_)
            throw IoError("failed writing VCD header");
    }

    std::size_t index_of(std::string_view id) const {
        auto it = index_.find(std::string(id));
        if (it == index_.end())
            throw VcdError("undeclared signal id '" + std::string(id) + "'");
        return it->second;
    }

    static void validate_value(const SignalDecl &s, const std::string &v) {
        if (v.size() != s.width)
            throw VcdError("value width " + std::to_string(v.size()) + " does not match '" + s.name + "' width " +
                           std::to_string(s.width));
        for (char c : v)
            if (c != '0' && c != '1')
                throw VcdError("only two-state values are supported");
    }

    void mark_time() {
        if (marked_ && *marked_ == time_)
            return;
        *out_ << '#' << time_ << '\n';
        marked_ = time_;
    }

    void emit_value(const SignalDecl &s, const std::string &v) {
        if (s.width == 1)
            *out_ << v << s.id_code << '\n';
        else
            *out_ << 'b' << v << ' ' << s.id_code << '\n';
    }

    std::unique_ptr<std::ofstream> file_;
    std::ostream *out_;
    std::vector<SignalDecl> signals_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::string> last_;
    std::uint64_t time_ = 0;
    std::optional<std::uint64_t> marked_;
    bool finished_ = false;
};

namespace detail {

class Tokenizer {
public:
    explicit Tokenizer(std::string_view text) : text_(text) {}

    /// Next whitespace-separated token, or empty at end of input.
    std::string_view next() {
        while (pos_ < text_.size() && is_space(text_[pos_])) {
            if (text_[pos_] == '\n')
                ++line_;
            ++pos_;
        }
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_]))
            ++pos_;
        return text_.substr(begin, pos_ - begin);
    }

    std::size_t line() const { return line_; }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

inline std::uint64_t parse_u64(std::string_view s, std::size_t line, const char *what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw VcdParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
    return v;
}

} // namespace detail

/// Parses a dump into declarations and the ordered list of value changes.
/// Value changes inside `$dumpvars` blocks are accepted; x/z values are not.
inline VcdTrace vcd_parse(std::string_view text) {
    VcdTrace trace;
    detail::Tokenizer tok(text);
    std::unordered_map<std::string, std::size_t> index;

    auto expect_end = [&](std::string_view construct) {
        for (;;) {
            auto t = tok.next();
            if (t.empty())
                throw VcdParseError(tok.line(), "unterminated " + std::string(construct));
            if (t == "$end")
                return;
        }
    };

    bool definitions_done = false;
    while (!definitions_done) {
        auto t = tok.next();
        if (t.empty())
            throw VcdParseError(tok.line(), "truncated header: missing $enddefinitions");
        if (t == "$timescale") {
            std::string ts;
            for (auto p = tok.next(); p != "$end"; p = tok.next()) {
                if (p.empty())
                    throw VcdParseError(tok.line(), "unterminated $timescale");
                ts += p;
            }
            trace.timescale = ts;
        } else if (t == "$var") {
            const std::size_t line = tok.line();
            SignalDecl d;
            auto kind = tok.next();
            if (kind == "wire")
                d.kind = VarKind::wire;
            else if (kind == "reg")
                d.kind = VarKind::reg;
            else
                throw VcdParseError(line, "unsupported var kind '" + std::string(kind) + "'");
            d.width = static_cast<unsigned>(detail::parse_u64(tok.next(), line, "width"));
            if (d.width == 0)
                throw VcdParseError(line, "zero-width var");
            d.id_code = std::string(tok.next());
            d.name = std::string(tok.next());
            if (d.id_code.empty() || d.name.empty() || d.name == "$end")
                throw VcdParseError(line, "malformed $var");
            expect_end("$var");
            if (!index.emplace(d.id_code, trace.signals.size()).second)
                throw VcdParseError(line, "duplicate id code '" + d.id_code + "'");
            trace.signals.push_back(std::move(d));
        } else if (t == "$enddefinitions") {
            expect_end("$enddefinitions");
            definitions_done = true;
        } else if (t == "$scope" || t == "$upscope" || t == "$date" || t == "$version" || t == "$comment") {
            expect_end(t);
        } else {
            throw VcdParseError(tok.line(), "unexpected token in header '" + std::string(t) + "'");
        }
    }

    std::optional<std::uint64_t> now;
    auto add_change = [&](std::string_view id, std::string value) {
        const std::size_t line = tok.line();
        if (!now)
            throw VcdParseError(line, "value change before first timestamp");
        auto it = index.find(std::string(id));
        if (it == index.end())
            throw VcdParseError(line, "undeclared id '" + std::string(id) + "'");
        const auto &decl = trace.signals[it->second];
        for (char c : value)
            if (c != '0' && c != '1')
                throw VcdParseError(line, "non two-state value '" + value + "'");
        if (value.size() > decl.width)
            throw VcdParseError(line, "value wider than '" + decl.name + "'");
        if (value.size() < decl.width)
            value.insert(0, decl.width - value.size(), '0');
        trace.events.push_back({*now, std::string(id), std::move(value)});
    };

    for (auto t = tok.next(); !t.empty(); t = tok.next()) {
        if (t.front() == '#') {
            const auto time = detail::parse_u64(t.substr(1), tok.line(), "timestamp");
            if (now && time <= *now)
                throw VcdParseError(tok.line(), "timestamps must strictly increase");
            now = time;
        } else if (t == "$dumpvars" || t == "$dumpon" || t == "$dumpoff" || t == "$dumpall" || t == "$end") {
            continue;
        } else if (t == "$comment") {
            expect_end("$comment");
        } else if (t.front() == 'b' || t.front() == 'B') {
            auto bits = std::string(t.substr(1));
            auto id = tok.next();
            if (id.empty())
                throw VcdParseError(tok.line(), "vector change without id");
            add_change(id, std::move(bits));
        } else if (t.front() == '0' || t.front() == '1') {
            if (t.size() < 2)
                throw VcdParseError(tok.line(), "scalar change without id");
            add_change(t.substr(1), std::string(1, t.front()));
        } else {
            throw VcdParseError(tok.line(), "unexpected token '" + std::string(t) + "'");
        }
    }
    trace.end_time = now;
    return trace;
}

inline VcdTrace vcd_parse_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return vcd_parse(ss.str());
}

} // namespace syncfifo::vcd
