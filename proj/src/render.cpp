#include "rectlevel/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "rectlevel/arrangement.hpp"
#include "rectlevel/piercing.hpp"

namespace rectlevel {

namespace {

constexpr std::array<const char*, 8> kDepthPalette = {
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
};

Coord ceil_div(Coord a, Coord b) { return (a + b - 1) / b; }

}  // namespace

std::string render_svg(const Family& f, const RenderOptions& options) {
    Coord min_x = 0, max_x = 100, min_y = 0, max_y = 100;
    if (!f.empty()) {
        min_x = max_x = f[0].x_min;
        min_y = max_y = f[0].y_min;
        for (const Rect& r : f) {
            min_x = std::min(min_x, r.x_min);
            max_x = std::max(max_x, r.x_max);
            min_y = std::min(min_y, r.y_min);
            max_y = std::max(max_y, r.y_max);
        }
    }
    const Coord margin_x = std::max<Coord>(1, ceil_div((max_x - min_x) * 5, 100));
    const Coord margin_y = std::max<Coord>(1, ceil_div((max_y - min_y) * 5, 100));
    const Coord width = (max_x - min_x) + 2 * margin_x;
    const Coord height = (max_y - min_y) + 2 * margin_y;
    const Coord span = std::max(width, height);
    const Coord stroke = std::max<Coord>(1, span / 400);
    const Coord dot = std::max<Coord>(1, span / 250);
    const Coord font = std::max<Coord>(4, span / 50);

    // world -> svg, with y flipped so larger y draws higher
    const auto sx = [&](Coord x) { return x - min_x + margin_x; };
    const auto sy = [&](Coord y) { return (max_y + margin_y) - y; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
        << width << ' ' << height << "\">\n";
    svg << "<style>\n"
        << ".rect{fill:#4682b4;fill-opacity:0.08;stroke:#333333;stroke-width:"
        << stroke << "}\n"
        << ".pierce-h,.pierce-v{stroke-width:" << stroke
        << ";stroke-dasharray:" << 4 * stroke << ' ' << 3 * stroke << "}\n"
        << ".pierce-h{stroke:#b22222}\n"
        << ".pierce-v{stroke:#22649c}\n"
        << ".label{font-family:monospace;font-size:" << font << "px;fill:#222222}\n"
        << "</style>\n";

    for (const Rect& r : f) {
        svg << "<rect class=\"rect\" x=\"" << sx(r.x_min) << "\" y=\"" << sy(r.y_max)
            << "\" width=\"" << r.width() << "\" height=\"" << r.height()
            << "\"/>\n";
    }

    if (options.show_lines && !f.empty()) {
        const PiercingStructure horizontal = greedy_lines(f, Orientation::horizontal);
        const PiercingStructure vertical = greedy_lines(f, Orientation::vertical);
        for (std::size_t i = 0; i < horizontal.lines.size(); ++i) {
            const Coord y = sy(horizontal.lines[i]);
            svg << "<line class=\"pierce-h\" x1=\"0\" y1=\"" << y << "\" x2=\""
                << width << "\" y2=\"" << y << "\"/>\n";
            svg << "<text class=\"label\" x=\"" << stroke << "\" y=\""
                << y - stroke << "\">l" << i + 1 << "</text>\n";
        }
        for (std::size_t j = 0; j < vertical.lines.size(); ++j) {
            const Coord x = sx(vertical.lines[j]);
            svg << "<line class=\"pierce-v\" x1=\"" << x << "\" y1=\"0\" x2=\"" << x
                << "\" y2=\"" << height << "\"/>\n";
            svg << "<text class=\"label\" x=\"" << x + stroke << "\" y=\""
                << height - stroke << "\">h" << j + 1 << "</text>\n";
        }
    }

    if (!f.empty()) {
        const ArrangementProfile profile = analyze_sweep(f);
        for (const Vertex& v : profile.vertices) {
            if (v.depth > options.k) continue;
            svg << "<circle cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y) << "\" r=\""
                << dot << "\" fill=\""
                << kDepthPalette[static_cast<std::size_t>(v.depth) %
                                 kDepthPalette.size()]
                << "\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace rectlevel
