#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mesa/dyck.hpp"
#include "mesa/error.hpp"
#include "mesa/stirling.hpp"

namespace mesa {

// All coordinates are integers (cell is forced even), so output bytes depend
// only on the input and the styling.
struct Styling {
    int cell = 24;
    int margin = 24;
    // Dyck grids only: dashed diagonal from (0,0) to (l,m).
    bool slope_line = true;
    // Minimum canvas size; the drawing's natural size is used when larger.
    int min_width = 0;
    int min_height = 0;
};

enum class RenderKind { PermutationGraph, DyckGrid };

struct RenderSpec {
    RenderKind kind;
    std::variant<StirlingPermutation, RationalDyckPath> payload;
    Styling styling{};
};

namespace detail {

inline int even_cell(const Styling& s) {
    if (s.cell < 2) throw Error("cell size must be at least 2");
    return s.cell - s.cell % 2;
}

class SvgWriter {
public:
    SvgWriter(int width, int height) {
        os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
            << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
            << "\">\n"
            << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
            << "\" fill=\"white\"/>\n";
    }

    void line(int x1, int y1, int x2, int y2, const std::string& attrs) {
        os_ << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" " << attrs << "/>\n";
    }

    void text(int x, int y, const std::string& body, const std::string& attrs) {
        os_ << "  <text x=\"" << x << "\" y=\"" << y << "\" " << attrs << '>' << body
            << "</text>\n";
    }

    void circle(int cx, int cy, int r, const std::string& attrs) {
        os_ << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" " << attrs
            << "/>\n";
    }

    template <class Points>
    void polyline(const Points& pts, const std::string& attrs) {
        os_ << "  <polyline points=\"";
        bool first = true;
        for (const auto& [x, y] : pts) {
            if (!first) os_ << ' ';
            os_ << x << ',' << y;
            first = false;
        }
        os_ << "\" fill=\"none\" " << attrs << "/>\n";
    }

    std::string finish() {
        os_ << "</svg>\n";
        return os_.str();
    }

private:
    std::ostringstream os_;
};

} // namespace detail

// Points (i, w(i)) joined in order, with the two axes and value labels on
// the vertical one.
inline std::string render_permutation(const StirlingPermutation& w, const Styling& style = {}) {
    const int cell = detail::even_cell(style);
    const int half = cell / 2;
    const int n = w.order();
    const int len = static_cast<int>(w.size());
    const int width = std::max(style.min_width, 2 * style.margin + (len + 1) * cell);
    const int height = std::max(style.min_height, 2 * style.margin + (n + 1) * cell);

    auto px = [&](int i) { return style.margin + i * cell; };
    // y axis points up.
    auto py = [&](int v) { return style.margin + (n + 1 - v) * cell; };

    detail::SvgWriter svg(width, height);
    const std::string axis = "stroke=\"black\" stroke-width=\"2\"";
    svg.line(px(0) + half, py(n) - half, px(0) + half, py(0) + half, axis);
    svg.line(px(0) + half, py(0) + half, px(len) + half, py(0) + half, axis);
    for (int v = 1; v <= n; ++v)
        svg.text(px(0) - half / 2, py(v) + half / 2, std::to_string(v),
                 "font-family=\"serif\" font-size=\"" + std::to_string(half) +
                     "\" text-anchor=\"middle\"");

    std::vector<std::pair<int, int>> pts;
    for (int i = 1; i <= len; ++i) pts.emplace_back(px(i), py(w.at(static_cast<std::size_t>(i))));
    svg.polyline(pts, "stroke=\"black\" stroke-width=\"2\"");
    for (const auto& [x, y] : pts) svg.circle(x, y, std::max(2, cell / 6), "class=\"point\" fill=\"black\"");
    return svg.finish();
}

// l x m grid, the path drawn bold, and the dashed line y = (m/l) x.
inline std::string render_dyck(const RationalDyckPath& p, const Styling& style = {}) {
    const int cell = detail::even_cell(style);
    const int l = static_cast<int>(p.width());
    const int m = static_cast<int>(p.height());
    const int width = std::max(style.min_width, 2 * style.margin + l * cell);
    const int height = std::max(style.min_height, 2 * style.margin + m * cell);

    auto px = [&](int a) { return style.margin + a * cell; };
    auto py = [&](int b) { return style.margin + (m - b) * cell; };

    detail::SvgWriter svg(width, height);
    const std::string grid = "class=\"grid\" stroke=\"#808080\" stroke-width=\"1\"";
    for (int a = 0; a <= l; ++a) svg.line(px(a), py(0), px(a), py(m), grid);
    for (int b = 0; b <= m; ++b) svg.line(px(0), py(b), px(l), py(b), grid);
    if (style.slope_line)
        svg.line(px(0), py(0), px(l), py(m),
                 "class=\"slope\" stroke=\"red\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");

    std::vector<std::pair<int, int>> pts{{px(0), py(0)}};
    int a = 0, b = 0;
    for (Step s : p.path().steps()) {
        (s == Step::North ? b : a) += 1;
        pts.emplace_back(px(a), py(b));
    }
    svg.polyline(pts, "class=\"path\" stroke=\"black\" stroke-width=\"4\" stroke-linejoin=\"round\"");
    return svg.finish();
}

inline std::string render(const RenderSpec& spec) {
    switch (spec.kind) {
    case RenderKind::PermutationGraph:
        if (const auto* w = std::get_if<StirlingPermutation>(&spec.payload))
            return render_permutation(*w, spec.styling);
        break;
    case RenderKind::DyckGrid:
        if (const auto* p = std::get_if<RationalDyckPath>(&spec.payload))
            return render_dyck(*p, spec.styling);
        break;
    }
    throw Error("render spec payload does not match its kind");
}

} // namespace mesa
