#include "aborders/svg.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "aborders/lattice.hpp"

namespace aborders {

namespace {

constexpr int kCell = 24;    // pixels per half-unit grid cell (= one step)
constexpr int kMargin = 18;  // pixels outside the grid on every side

constexpr const char* kPrefixColor = "#000000";
constexpr const char* kSuffixColor = "#8c8c8c";
constexpr const char* kGridColor = "#d3d3d3";

struct Panel {
    std::ostringstream svg;
    int width_cells, height_cells;

    Panel(int w, int h) : width_cells(w), height_cells(h) {
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
            << w * kCell + 2 * kMargin << "\" height=\"" << h * kCell + 2 * kMargin
            << "\" viewBox=\"0 0 " << w * kCell + 2 * kMargin << ' '
            << h * kCell + 2 * kMargin << "\">\n";
    }

    int px(int x) const { return kMargin + x * kCell; }
    int py(int y) const { return kMargin + (height_cells - y) * kCell; }

    void grid() {
        svg << "  <g stroke=\"" << kGridColor << "\" stroke-width=\"1\">\n";
        for (int x = 0; x <= width_cells; ++x)
            svg << "    <line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x)
                << "\" y2=\"" << py(height_cells) << "\"/>\n";
        for (int y = 0; y <= height_cells; ++y)
            svg << "    <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\""
                << px(width_cells) << "\" y2=\"" << py(y) << "\"/>\n";
        svg << "  </g>\n";
    }

    void arrow(int x1, int y1, int x2, int y2) {
        svg << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
            << y2 << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        const int dx = x2 > x1 ? 1 : (x2 < x1 ? -1 : 0);
        const int dy = y2 > y1 ? 1 : (y2 < y1 ? -1 : 0);
        // Two short barbs; axis directions only.
        if (dx != 0)
            svg << "  <path d=\"M" << x2 << ' ' << y2 << " l" << -6 * dx << " -4 m" << 6 * dx
                << " 4 l" << -6 * dx << " 4\" stroke=\"#000000\" stroke-width=\"1\" "
                   "fill=\"none\"/>\n";
        else
            svg << "  <path d=\"M" << x2 << ' ' << y2 << " l-4 " << 6 * dy << " m4 "
                << -6 * dy << " l4 " << 6 * dy << "\" stroke=\"#000000\" stroke-width=\"1\" "
                   "fill=\"none\"/>\n";
    }

    void polyline(const std::vector<std::pair<int, int>>& cells, const char* color) {
        svg << "  <polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"4\" stroke-linecap=\"round\" points=\"";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) svg << ' ';
            svg << px(cells[i].first) << ',' << py(cells[i].second);
        }
        svg << "\"/>\n";
    }

    std::string finish() {
        svg << "</svg>\n";
        return svg.str();
    }
};

std::string render_lattice(const PartialWord& w) {
    const LatticeView view = lattice_view(w);
    int max_x = 1, max_y = 1;
    for (const LatticePoint& p : view.prefix_path.points) {
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    Panel panel(max_x + 1, max_y + 1);
    panel.grid();
    panel.arrow(panel.px(0), panel.py(0), panel.px(0), panel.py(max_y + 1) - 8);
    panel.arrow(panel.px(0), panel.py(0), panel.px(max_x + 1) + 8, panel.py(0));

    const auto cells = [](const LatticePath& path) {
        std::vector<std::pair<int, int>> out;
        out.reserve(path.points.size());
        for (const LatticePoint& p : path.points) out.emplace_back(p.x, p.y);
        return out;
    };
    panel.polyline(cells(view.suffix_path), kSuffixColor);
    panel.polyline(cells(view.prefix_path), kPrefixColor);
    return panel.finish();
}

// Shared by the diagonal / y / z panels: one or two integer profiles over
// step index, drawn against a baseline axis.
std::string render_profiles(const std::vector<std::vector<int>>& series,
                            const std::vector<const char*>& colors) {
    int lo = 0, hi = 1, steps = 1;
    for (const auto& s : series) {
        steps = std::max(steps, static_cast<int>(s.size()) - 1);
        for (int v : s) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    Panel panel(steps, hi - lo + 1);
    panel.grid();
    const int base = -lo;  // grid row of value zero
    panel.arrow(panel.px(0), panel.py(base), panel.px(steps) + 8, panel.py(base));
    panel.arrow(panel.px(0), panel.py(base), panel.px(0), panel.py(hi - lo + 1) - 8);

    for (std::size_t s = 0; s < series.size(); ++s) {
        std::vector<std::pair<int, int>> cells;
        cells.reserve(series[s].size());
        for (std::size_t t = 0; t < series[s].size(); ++t)
            cells.emplace_back(static_cast<int>(t), series[s][t] + base);
        panel.polyline(cells, colors[s]);
    }
    return panel.finish();
}

std::vector<int> diagonal_profile(const PartialWord& w, bool from_end) {
    const int n = w.size();
    std::vector<int> profile{0};
    int value = 0;
    for (int t = 0; t < n; ++t) {
        value += (from_end ? w[n - 1 - t] : w[t]) == 0 ? 1 : -1;
        profile.push_back(value);
    }
    return profile;
}

}  // namespace

std::string render_figure(const PartialWord& w, FigureView view) {
    if (!w.total())
        throw std::invalid_argument("figures are defined for total words only");
    if (!w.binary()) throw std::invalid_argument("figures are defined for binary words");
    if (w.size() < 2) throw std::invalid_argument("figures need a word of length >= 2");

    switch (view) {
        case FigureView::lattice:
            return render_lattice(w);
        case FigureView::diagonal:
            return render_profiles({diagonal_profile(w, true), diagonal_profile(w, false)},
                                   {kSuffixColor, kPrefixColor});
        case FigureView::y: {
            std::vector<int> halves;
            for (int v : motzkin_view(w).heights) halves.push_back(v / 2);
            return render_profiles({halves}, {kPrefixColor});
        }
        case FigureView::z: {
            std::vector<int> compressed{0};
            const std::vector<int> heights = motzkin_view(w).heights;
            for (std::size_t t = 1; t < heights.size(); ++t)
                if (heights[t] != heights[t - 1]) compressed.push_back(heights[t] / 2);
            return render_profiles({compressed}, {kPrefixColor});
        }
    }
    throw std::invalid_argument("unknown figure view");
}

FigureView parse_figure_view(const std::string& name) {
    if (name == "lattice") return FigureView::lattice;
    if (name == "diagonal") return FigureView::diagonal;
    if (name == "y") return FigureView::y;
    if (name == "z") return FigureView::z;
    throw std::invalid_argument("unknown view '" + name +
                                "' (expected lattice, diagonal, y, or z)");
}

}  // namespace aborders
