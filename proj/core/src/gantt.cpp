#include "pltr/gantt.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pltr {

namespace {

constexpr int kCell = 28;
constexpr int kLane = 32;
constexpr int kMarginLeft = 56;
constexpr int kMarginTop = 28;

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                          "#76b7b2", "#edc948", "#b07aa1", "#ff9da7",
                          "#9c755f", "#bab0ac"};

std::string job_color(const std::string& id,
                      std::map<std::string, std::string>& assigned) {
    auto it = assigned.find(id);
    if (it != assigned.end()) return it->second;
    std::string color = kPalette[assigned.size() % std::size(kPalette)];
    assigned.emplace(id, color);
    return color;
}

}  // namespace

std::string render_gantt_svg(const Schedule& schedule, Energy q) {
    auto busy = schedule.busy_slots_by_processor();
    int lanes = busy.empty() ? 1 : busy.rbegin()->first;
    int width = kMarginLeft + std::max(1, schedule.horizon) * kCell + 16;
    int height = kMarginTop + lanes * kLane + 24;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << width << "\" height=\"" << height << "\">\n";
    svg << "  <defs><pattern id=\"powerup\" width=\"6\" height=\"6\" "
           "patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">"
           "<rect width=\"6\" height=\"6\" fill=\"#ffffff\"/>"
           "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#c0392b\" "
           "stroke-width=\"2\"/></pattern></defs>\n";

    auto lane_y = [&](int k) { return kMarginTop + (k - 1) * kLane; };
    auto slot_x = [&](int t) { return kMarginLeft + t * kCell; };

    // Off background per lane.
    for (int k = 1; k <= lanes; ++k) {
        svg << "  <rect x=\"" << slot_x(0) << "\" y=\"" << lane_y(k)
            << "\" width=\"" << std::max(1, schedule.horizon) * kCell
            << "\" height=\"" << kLane - 6
            << "\" fill=\"#f2f2f2\" stroke=\"#d0d0d0\"/>\n";
        svg << "  <text x=\"8\" y=\"" << lane_y(k) + kLane / 2 + 2
            << "\" font-size=\"12\" font-family=\"sans-serif\">p" << k
            << "</text>\n";
    }

    std::map<std::string, std::string> colors;
    for (const auto& [k, slots] : busy) {
        // Power-up marker before the first busy slot and after every gap
        // longer than q; short gaps render as on-idle shading.
        int prev = -1;
        for (int t : slots) {
            bool powerup = prev < 0 || t - prev - 1 > q;
            if (!powerup && t - prev - 1 > 0) {
                svg << "  <rect x=\"" << slot_x(prev + 1) << "\" y=\""
                    << lane_y(k) << "\" width=\"" << (t - prev - 1) * kCell
                    << "\" height=\"" << kLane - 6
                    << "\" fill=\"#fdf6d8\" stroke=\"none\"/>\n";
            }
            if (powerup) {
                svg << "  <rect x=\"" << slot_x(t) - 5 << "\" y=\"" << lane_y(k)
                    << "\" width=\"5\" height=\"" << kLane - 6
                    << "\" fill=\"url(#powerup)\"/>\n";
            }
            prev = t;
        }
    }

    for (int t = 0; t < schedule.horizon; ++t) {
        for (const auto& [k, job] : schedule.slots[static_cast<std::size_t>(t)]) {
            svg << "  <rect x=\"" << slot_x(t) + 1 << "\" y=\"" << lane_y(k) + 2
                << "\" width=\"" << kCell - 2 << "\" height=\"" << kLane - 10
                << "\" fill=\"" << job_color(job, colors)
                << "\" stroke=\"#333333\"/>\n";
            svg << "  <text x=\"" << slot_x(t) + kCell / 2 << "\" y=\""
                << lane_y(k) + kLane / 2 + 2
                << "\" font-size=\"10\" font-family=\"sans-serif\" "
                   "text-anchor=\"middle\" fill=\"#ffffff\">"
                << job << "</text>\n";
        }
    }

    for (int t = 0; t <= schedule.horizon; ++t) {
        svg << "  <text x=\"" << slot_x(t) << "\" y=\"" << kMarginTop - 8
            << "\" font-size=\"10\" font-family=\"sans-serif\" "
               "text-anchor=\"middle\">"
            << t << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace pltr
