#include "bifc/svg.hpp"

#include <algorithm>
#include <sstream>

namespace bifc {

namespace {

constexpr int kPitch = 24;   // vertical distance between positions
constexpr int kUnit = 12;    // horizontal distance between nesting levels
constexpr int kMargin = 24;
constexpr int kColumns = 4;

struct Shape {
    PosSet points;
    bool translucent = false;
    int label = 0;  // 0: none
    int height = 0;
};

struct Layout {
    std::vector<Shape> shapes;
    int n = 0;
    int levels = 1;  // max height + 1
    int width = 0;
    int depth = 0;   // y of the lowest drawn element, relative to the cell top
};

int y_of(int pos) { return kMargin + kPitch * pos; }

Layout layout(const LabeledBipartition& lp) {
    const Bipartition& pi = lp.base;
    Layout L;
    L.n = pi.type.size();
    for (std::size_t b = 0; b < pi.blocks.size(); ++b) L.shapes.push_back({pi.blocks[b], false, 0, 0});
    for (std::size_t k = 0; k < lp.order.size(); ++k) L.shapes[lp.order[k]].label = static_cast<int>(k) + 1;
    PosSet zero = pi.type.translucent_set();
    if (!zero.empty()) L.shapes.push_back({zero, true, 0, 0});

    // nesting height in the standard order, smallest shapes first
    StdOrder ord(pi.type.alpha);
    int ns = static_cast<int>(L.shapes.size());
    std::vector<std::pair<int, int>> span(ns);
    for (int s = 0; s < ns; ++s)
        span[s] = {ord.rank(ord.min_of(L.shapes[s].points)), ord.rank(ord.max_of(L.shapes[s].points))};
    std::vector<int> idx(ns);
    for (int s = 0; s < ns; ++s) idx[s] = s;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int la = span[a].second - span[a].first, lb = span[b].second - span[b].first;
        return la != lb ? la < lb : a < b;
    });
    for (int a : idx)
        for (int b = 0; b < ns; ++b)
            if (b != a && span[a].first < span[b].first && span[b].second < span[a].second)
                L.shapes[a].height = std::max(L.shapes[a].height, L.shapes[b].height + 1);
    for (const auto& s : L.shapes) L.levels = std::max(L.levels, s.height + 1);
    L.width = 2 * kMargin + 2 * kUnit * (L.levels + 1);
    L.depth = y_of(L.n) + kUnit * (L.levels + 1);
    return L;
}

void draw(std::ostringstream& out, const LabeledBipartition& lp, const Layout& L, int ox, int oy) {
    const TranslucentWord& t = lp.base.type;
    int xl = ox + kMargin, xr = ox + L.width - kMargin;
    out << "<g>\n";
    out << "<text x=\"" << xl << "\" y=\"" << oy + kMargin / 2 << "\" font-size=\"10\">" << t.str() << "</text>\n";
    int bottom = y_of(L.n) + oy;
    out << "<line x1=\"" << xl << "\" y1=\"" << oy + kMargin + kPitch / 2 << "\" x2=\"" << xl << "\" y2=\"" << bottom + kPitch / 2
        << "\" stroke=\"gray\"/>\n";
    out << "<line x1=\"" << xr << "\" y1=\"" << oy + kMargin + kPitch / 2 << "\" x2=\"" << xr << "\" y2=\"" << bottom + kPitch / 2
        << "\" stroke=\"gray\"/>\n";
    for (const auto& s : L.shapes) {
        const char* color = s.translucent ? "red" : "black";
        int off = kUnit * (1 + s.height);
        PosSet left, right;
        for (int p : s.points) (t.alpha.at(p) == Side::L ? left : right).push_back(p);
        int join = oy + y_of(L.n) + kUnit * (1 + s.height);
        auto line = [&](int x1, int y1, int x2, int y2) {
            out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
                << color << "\" stroke-width=\"2\"/>\n";
        };
        bool mixed = !left.empty() && !right.empty();
        int sl = xl + off, sr = xr - off;
        if (!left.empty()) {
            for (int p : left) line(xl, oy + y_of(p), sl, oy + y_of(p));
            line(sl, oy + y_of(left.front()), sl, mixed ? join : oy + y_of(left.back()));
        }
        if (!right.empty()) {
            for (int p : right) line(xr, oy + y_of(p), sr, oy + y_of(p));
            line(sr, oy + y_of(right.front()), sr, mixed ? join : oy + y_of(right.back()));
        }
        if (mixed) line(sl, join, sr, join);
        if (s.translucent) {
            int x = left.empty() ? sr : sl;
            int top = left.empty() ? right.front() : left.front();
            line(x, oy + kMargin / 2 + 4, x, oy + y_of(top));
        }
        if (s.label > 0) {
            int x = left.empty() ? sr + 3 : sl + 3;
            int y = oy + y_of(left.empty() ? right.front() : left.front()) - 3;
            out << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"9\">" << s.label << "</text>\n";
        }
    }
    for (int p = 1; p <= t.size(); ++p) {
        int x = t.alpha.at(p) == Side::L ? xl : xr;
        out << "<circle cx=\"" << x << "\" cy=\"" << oy + y_of(p) << "\" r=\"4\" stroke=\"black\" fill=\""
            << (t.is_opaque(p) ? "black" : "white") << "\"/>\n";
    }
    out << "</g>\n";
}

}  // namespace

std::string render_svg(const std::vector<LabeledBipartition>& diagrams) {
    std::vector<Layout> layouts;
    int cell_w = 0, cell_h = 0;
    for (const auto& d : diagrams) {
        layouts.push_back(layout(d));
        cell_w = std::max(cell_w, layouts.back().width);
        cell_h = std::max(cell_h, layouts.back().depth + kMargin);
    }
    int count = static_cast<int>(diagrams.size());
    int cols = std::min(kColumns, std::max(count, 1));
    int rows = (count + kColumns - 1) / kColumns;
    int width = std::max(cols * cell_w, 2 * kMargin);
    int height = std::max(rows * cell_h, 2 * kMargin);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    for (int k = 0; k < count; ++k)
        draw(out, diagrams[k], layouts[k], (k % kColumns) * cell_w, (k / kColumns) * cell_h);
    out << "</svg>\n";
    return out.str();
}

}  // namespace bifc
