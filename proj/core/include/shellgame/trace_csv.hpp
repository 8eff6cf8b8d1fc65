#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shellgame/engine.hpp"
#include "shellgame/grid.hpp"

namespace shellgame {

// Numeric fields use 6 decimal places; absent values are empty fields.
inline constexpr std::string_view kTraceHeader =
    "trial_id,tick,time_s,human_x,human_y,human_goal,asst_x,asst_y,asst_goal,asst_pointing,enforced,"
    "q1,q2,q3,q4,q5";
inline constexpr std::string_view kSummaryHeader =
    "trial_id,policy,human_choice,replication,seed,correct_button,human_button,assistant_button,"
    "human_score,assistant_score,duration_s";

class CsvError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TraceRow {
    std::string trial_id;
    TraceRecord record;
};

/// Fixed 6-decimal rendering shared by every CSV column; -0 prints as 0.
std::string format_fixed(double v);

void write_trace_csv(std::ostream& out, std::string_view trial_id, std::span<const TraceRecord> trace);
void write_trace_csv(std::ostream& out, std::span<const TraceRow> rows);
void write_trace_csv(const std::filesystem::path& path, std::string_view trial_id,
                     std::span<const TraceRecord> trace);
std::vector<TraceRow> read_trace_csv(std::istream& in);
std::vector<TraceRow> read_trace_csv(const std::filesystem::path& path);

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);
void write_summary_csv(const std::filesystem::path& path, std::span<const SummaryRow> rows);
std::vector<SummaryRow> read_summary_csv(std::istream& in);

}  // namespace shellgame
