#include "shellgame/svg.hpp"

#include <cerrno>
#include <cstdlib>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "shellgame/trace_csv.hpp"

namespace shellgame {

namespace {

constexpr double kScale = 200.0;  // px per meter
constexpr double kMargin = 30.0;
constexpr const char* kHumanColour = "#d62728";
constexpr const char* kAssistantColour = "#1f77b4";

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    if (std::strcmp(buf, "-0.00") == 0) return "0.00";
    return buf;
}

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Snap to the precision stored in trace CSVs so that re-plotting stored traces
// reproduces the SVG written during the run.
double stored(double v) { return std::strtod(format_fixed(v).c_str(), nullptr); }

struct Canvas {
    const ArenaSpec& arena;

    double px(double x) const { return kMargin + (stored(x) + arena.width / 2.0) * kScale; }
    double py(double y) const { return kMargin + (arena.height / 2.0 - stored(y)) * kScale; }
    std::string at(Vec2 p) const { return num(px(p.x)) + "," + num(py(p.y)); }
};

template <typename Get>
void trajectory(std::ostringstream& svg, const Canvas& c, const std::vector<TraceRecord>& trace,
                Get position, const char* agent, const char* colour, std::size_t rep, const char* dash) {
    std::vector<Vec2> pts;
    for (const auto& r : trace) {
        const Vec2 p = position(r);
        if (pts.empty() || pts.back() != p) pts.push_back(p);
    }
    if (pts.size() <= 1) {
        const Vec2 p = pts.empty() ? Vec2{} : pts.front();
        svg << "  <circle class=\"trajectory " << agent << "\" data-replication=\"" << rep << "\" cx=\""
            << num(c.px(p.x)) << "\" cy=\"" << num(c.py(p.y)) << "\" r=\"4\" fill=\"" << colour
            << "\"/>\n";
        return;
    }
    svg << "  <polyline class=\"trajectory " << agent << "\" data-replication=\"" << rep
        << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"";
    if (dash) svg << " stroke-dasharray=\"" << dash << "\"";
    svg << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) svg << ' ';
        svg << c.at(pts[i]);
    }
    svg << "\"/>\n";
}

}  // namespace

std::string render_svg(std::span<const std::vector<TraceRecord>> traces, const ArenaSpec& arena,
                       std::string_view title) {
    const Canvas c{arena};
    const double w = arena.width * kScale + 2 * kMargin;
    const double h = arena.height * kScale + 2 * kMargin;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
        << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n"
        << "  <title>" << escape(title) << "</title>\n"
        << "  <rect class=\"arena\" x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
        << num(arena.width * kScale) << "\" height=\"" << num(arena.height * kScale)
        << "\" fill=\"#fafafa\" stroke=\"#333\" stroke-width=\"2\"/>\n";

    for (ButtonId b : {ButtonId::L, ButtonId::R}) {
        const Vec2 p = arena.button(b);
        svg << "  <circle class=\"button\" cx=\"" << num(c.px(p.x)) << "\" cy=\"" << num(c.py(p.y))
            << "\" r=\"" << num(arena.press_radius * kScale) << "\" fill=\"#fff\" stroke=\"#888\"/>\n"
            << "  <text class=\"button-label\" x=\"" << num(c.px(p.x)) << "\" y=\"" << num(c.py(p.y) + 5)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << to_string(b)
            << "</text>\n";
    }

    for (std::size_t rep = 0; rep < traces.size(); ++rep) {
        const auto& trace = traces[rep];
        if (trace.empty()) continue;
        svg << "  <g class=\"replication\" data-replication=\"" << rep << "\">\n";
        trajectory(svg, c, trace, [](const TraceRecord& r) { return r.human.position; }, "human",
                   kHumanColour, rep, nullptr);
        trajectory(svg, c, trace, [](const TraceRecord& r) { return r.assistant.position; }, "assistant",
                   kAssistantColour, rep, "6 3");

        for (auto [pos, colour] : {std::pair{trace.front().human.position, kHumanColour},
                                   std::pair{trace.front().assistant.position, kAssistantColour}}) {
            svg << "  <rect class=\"start\" x=\"" << num(c.px(pos.x) - 5) << "\" y=\"" << num(c.py(pos.y) - 5)
                << "\" width=\"10\" height=\"10\" fill=\"none\" stroke=\"" << colour << "\"/>\n";
        }

        std::optional<ButtonId> pointing;
        for (const auto& r : trace) {
            if (r.assistant.pointing && r.assistant.pointing != pointing) {
                const Vec2 from = r.assistant.position;
                const Vec2 to = arena.button(*r.assistant.pointing);
                svg << "  <line class=\"pointing\" x1=\"" << num(c.px(from.x)) << "\" y1=\""
                    << num(c.py(from.y)) << "\" x2=\"" << num(c.px(to.x)) << "\" y2=\"" << num(c.py(to.y))
                    << "\" stroke=\"" << kAssistantColour << "\" stroke-dasharray=\"2 3\"/>\n"
                    << "  <circle class=\"pointing-event\" cx=\"" << num(c.px(from.x)) << "\" cy=\""
                    << num(c.py(from.y)) << "\" r=\"7\" fill=\"none\" stroke=\"" << kAssistantColour
                    << "\" stroke-width=\"2\"/>\n";
            }
            pointing = r.assistant.pointing;
        }
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_svg(const std::filesystem::path& path, std::span<const std::vector<TraceRecord>> traces,
               const ArenaSpec& arena, std::string_view title) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string() + ": " + std::strerror(errno));
    }
    out << render_svg(traces, arena, title);
    if (!out.flush()) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace shellgame
