#include "shellgame/trace_csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace shellgame {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

[[noreturn]] void bad_field(int lineno, std::string_view column, std::string_view value) {
    throw CsvError("line " + std::to_string(lineno) + ": bad " + std::string(column) + " '" +
                   std::string(value) + "'");
}

template <typename T>
T number(int lineno, std::string_view column, std::string_view s) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) bad_field(lineno, column, s);
    return v;
}

std::optional<ButtonId> opt_button(int lineno, std::string_view column, std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto b = parse_button(s);
    if (!b) bad_field(lineno, column, s);
    return b;
}

std::string_view opt_text(const std::optional<ButtonId>& b) { return b ? to_string(*b) : ""; }

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CsvError("cannot write " + path.string() + ": " + std::strerror(errno));
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw CsvError("write failed for " + path.string() + ": " + std::strerror(errno));
    }
}

void expect_header(std::istream& in, std::string_view header) {
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw CsvError("unexpected CSV header: '" + line + "'");
    }
}

}  // namespace

std::string format_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    if (std::strcmp(buf, "-0.000000") == 0) return "0.000000";
    return buf;
}

void write_trace_csv(std::ostream& out, std::span<const TraceRow> rows) {
    out << kTraceHeader << '\n';
    for (const auto& row : rows) {
        const TraceRecord& r = row.record;
        out << row.trial_id << ',' << r.tick << ',' << format_fixed(r.time) << ','
            << format_fixed(r.human.position.x) << ',' << format_fixed(r.human.position.y) << ','
            << opt_text(r.human.goal) << ',' << format_fixed(r.assistant.position.x) << ','
            << format_fixed(r.assistant.position.y) << ',' << opt_text(r.assistant.goal) << ','
            << opt_text(r.assistant.pointing) << ',' << (r.enforced ? to_string(*r.enforced) : "");
        for (double q : r.q) out << ',' << format_fixed(q);
        out << '\n';
    }
}

void write_trace_csv(std::ostream& out, std::string_view trial_id, std::span<const TraceRecord> trace) {
    std::vector<TraceRow> rows;
    rows.reserve(trace.size());
    for (const auto& r : trace) rows.push_back({std::string(trial_id), r});
    write_trace_csv(out, rows);
}

void write_trace_csv(const std::filesystem::path& path, std::string_view trial_id,
                     std::span<const TraceRecord> trace) {
    auto out = open_for_write(path);
    write_trace_csv(out, trial_id, trace);
    finish(out, path);
}

std::vector<TraceRow> read_trace_csv(std::istream& in) {
    expect_header(in, kTraceHeader);
    std::vector<TraceRow> rows;
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto f = split(line);
        if (f.size() != 16) {
            throw CsvError("line " + std::to_string(lineno) + ": expected 16 fields, got " +
                           std::to_string(f.size()));
        }
        TraceRow row;
        row.trial_id = std::string(f[0]);
        TraceRecord& r = row.record;
        r.tick = number<std::int64_t>(lineno, "tick", f[1]);
        r.time = number<double>(lineno, "time_s", f[2]);
        r.human.position = {number<double>(lineno, "human_x", f[3]), number<double>(lineno, "human_y", f[4])};
        r.human.goal = opt_button(lineno, "human_goal", f[5]);
        r.assistant.position = {number<double>(lineno, "asst_x", f[6]), number<double>(lineno, "asst_y", f[7])};
        r.assistant.goal = opt_button(lineno, "asst_goal", f[8]);
        r.assistant.pointing = opt_button(lineno, "asst_pointing", f[9]);
        if (!f[10].empty()) {
            r.enforced = parse_alternative(f[10]);
            if (!r.enforced) bad_field(lineno, "enforced", f[10]);
        }
        for (std::size_t i = 0; i < kAlternativeCount; ++i) {
            r.q[i] = number<double>(lineno, "q", f[11 + i]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TraceRow> read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CsvError("cannot read " + path.string() + ": " + std::strerror(errno));
    }
    try {
        return read_trace_csv(in);
    } catch (const CsvError& e) {
        throw CsvError(path.string() + ": " + e.what());
    }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
    out << kSummaryHeader << '\n';
    for (const auto& r : rows) {
        out << r.trial_id << ',' << to_string(r.policy) << ',' << to_string(r.human_choice) << ','
            << r.replication << ',' << r.seed << ',' << to_string(r.correct_button) << ','
            << opt_text(r.human_button) << ',' << opt_text(r.assistant_button) << ',' << r.human_score
            << ',' << r.assistant_score << ',' << format_fixed(r.duration) << '\n';
    }
}

void write_summary_csv(const std::filesystem::path& path, std::span<const SummaryRow> rows) {
    auto out = open_for_write(path);
    write_summary_csv(out, rows);
    finish(out, path);
}

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
    expect_header(in, kSummaryHeader);
    std::vector<SummaryRow> rows;
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto f = split(line);
        if (f.size() != 11) {
            throw CsvError("line " + std::to_string(lineno) + ": expected 11 fields, got " +
                           std::to_string(f.size()));
        }
        SummaryRow r;
        r.trial_id = std::string(f[0]);
        const auto policy = parse_policy(f[1]);
        if (!policy) bad_field(lineno, "policy", f[1]);
        r.policy = *policy;
        const auto choice = parse_human_choice(f[2]);
        if (!choice) bad_field(lineno, "human_choice", f[2]);
        r.human_choice = *choice;
        r.replication = number<int>(lineno, "replication", f[3]);
        r.seed = number<std::uint64_t>(lineno, "seed", f[4]);
        const auto correct = parse_button(f[5]);
        if (!correct) bad_field(lineno, "correct_button", f[5]);
        r.correct_button = *correct;
        r.human_button = opt_button(lineno, "human_button", f[6]);
        r.assistant_button = opt_button(lineno, "assistant_button", f[7]);
        r.human_score = number<int>(lineno, "human_score", f[8]);
        r.assistant_score = number<int>(lineno, "assistant_score", f[9]);
        r.duration = number<double>(lineno, "duration_s", f[10]);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace shellgame
