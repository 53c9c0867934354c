#include "spinrep/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace spinrep {

namespace {

const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                               "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

struct Mark {
    Vec3 v;
    bool filled;
    int count;
};

/// Collapse coincident stars so degenerate ones are drawn once with a count.
std::vector<Mark> collect(const SubconstellationClass& cls) {
    std::vector<Mark> marks;
    for (size_t k = 0; k < cls.stars.size(); ++k) {
        const Vec3 v = cls.stars[k].vector();
        const bool filled = k % 2 == 0;
        auto it = std::find_if(marks.begin(), marks.end(), [&](const Mark& m) {
            return m.filled == filled && (m.v - v).norm() < 1e-6;
        });
        if (it == marks.end())
            marks.push_back({v, filled, 1});
        else
            ++it->count;
    }
    return marks;
}

void draw_stars(std::ostringstream& os, const SubconstellationClass& cls, double cx, double cy, double r,
                const char* colour) {
    for (const auto& m : collect(cls)) {
        const double x = cx + r * m.v.x(), y = cy - r * m.v.z();
        const char* opacity = m.v.y() > 1e-9 ? "0.35" : "1";
        os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" stroke=\"" << colour
           << "\" stroke-width=\"1.5\" fill=\"" << (m.filled ? colour : "white") << "\" opacity=\"" << opacity
           << "\"/>\n";
        if (m.count > 1)
            os << "<text x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6) << "\" font-size=\"10\" fill=\"" << colour
               << "\">" << m.count << "</text>\n";
    }
}

std::string parity_text(int p) { return p > 0 ? "+" : "−"; }

} // namespace

std::string render_svg(const TRep& t, const RenderOptions& opts) {
    std::ostringstream os;
    double wmax = 0.0;
    for (const auto& b : t.blocks)
        wmax = std::max(wmax, b.w);

    if (opts.spheres_as_radii) {
        const double size = 360, c = size / 2, rmax = 150;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 20
           << "\" viewBox=\"0 0 " << size << " " << size + 20 << "\">\n";
        os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        int row = 0;
        for (auto it = t.blocks.rbegin(); it != t.blocks.rend(); ++it) {
            const auto& b = *it;
            const char* colour = palette[(b.sigma - 1) % 10];
            const double r = rmax * b.w / wmax;
            os << "<circle cx=\"" << fmt(c) << "\" cy=\"" << fmt(c) << "\" r=\"" << fmt(r)
               << "\" fill=\"none\" stroke=\"" << colour << "\"/>\n";
            draw_stars(os, b.cls, c, c, r, colour);
            os << "<text x=\"4\" y=\"" << 14 + 12 * row++ << "\" font-size=\"10\" fill=\"" << colour
               << "\">σ=" << b.sigma << " w=" << fmt(b.w) << " " << parity_text(b.cls.parity) << "</text>\n";
        }
        os << "<text x=\"4\" y=\"" << size + 14 << "\" font-size=\"10\">s=" << t.spin.to_string() << "</text>\n";
        os << "</svg>\n";
        return os.str();
    }

    const double panel = 170, rmax = 65;
    const size_t count = std::max<size_t>(t.blocks.size(), 1);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << panel * count << "\" height=\"" << panel + 30
       << "\" viewBox=\"0 0 " << panel * count << " " << panel + 30 << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (t.blocks.empty())
        os << "<text x=\"10\" y=\"" << panel / 2 << "\" font-size=\"12\">maximally mixed (no blocks)</text>\n";
    for (size_t k = 0; k < t.blocks.size(); ++k) {
        const auto& b = t.blocks[k];
        const char* colour = palette[(b.sigma - 1) % 10];
        const double cx = panel * (k + 0.5), cy = panel / 2 + 10;
        const double r = 15 + (rmax - 15) * b.w / wmax;
        os << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(r)
           << "\" fill=\"none\" stroke=\"#444\"/>\n";
        os << "<ellipse cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" rx=\"" << fmt(r)
           << "\" ry=\"" << fmt(r * 0.25) << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"3,3\"/>\n";
        draw_stars(os, b.cls, cx, cy, r, colour);
        os << "<text x=\"" << fmt(cx) << "\" y=\"16\" font-size=\"12\" text-anchor=\"middle\">σ=" << b.sigma
           << "  w=" << fmt(b.w) << "</text>\n";
        os << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(panel + 22) << "\" font-size=\"12\" text-anchor=\"middle\">parity "
           << parity_text(b.cls.parity) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace spinrep
