#include "apollonian/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace apollonian::render {

namespace {

struct Shape {
    bool line = false;
    double cx = 0, cy = 0, r = 0;  // unsigned radius
    double nx = 0, ny = 0, m = 0;
    bool negative = false;  // outward-oriented circle
    std::optional<long> label;
};

Shape to_shape(const packing::CircleRecord& rec) {
    Shape s;
    double b = to_double(rec.row[1]);
    if (b != 0.0) {
        s.cx = to_double(rec.row[2]) / b;
        s.cy = to_double(rec.row[3]) / b;
        s.r = std::fabs(1.0 / b);
        s.negative = b < 0;
        if (is_integer(rec.row[1]) && rec.row[1].get_num().fits_slong_p())
            s.label = rec.row[1].get_num().get_si();
    } else {
        s.line = true;
        s.nx = to_double(rec.row[2]);
        s.ny = to_double(rec.row[3]);
        s.m = to_double(rec.row[0]) / 2.0;
    }
    return s;
}

Viewport fit_viewport(const std::vector<Shape>& shapes) {
    Viewport v{-1, -1, 1, 1};
    bool first = true;
    for (const Shape& s : shapes) {
        if (s.line) continue;
        double xmin = s.cx - s.r, xmax = s.cx + s.r;
        double ymin = s.cy - s.r, ymax = s.cy + s.r;
        if (first) {
            v = {xmin, ymin, xmax, ymax};
            first = false;
        } else {
            v.xmin = std::min(v.xmin, xmin);
            v.xmax = std::max(v.xmax, xmax);
            v.ymin = std::min(v.ymin, ymin);
            v.ymax = std::max(v.ymax, ymax);
        }
    }
    double pad = 0.02 * std::max(v.xmax - v.xmin, v.ymax - v.ymin);
    if (pad <= 0) pad = 1;
    return {v.xmin - pad, v.ymin - pad, v.xmax + pad, v.ymax + pad};
}

// Clip the line x.n = m to the viewport box; false if it misses.
bool clip_line(const Shape& s, const Viewport& v, double& x1, double& y1, double& x2,
               double& y2) {
    std::vector<std::pair<double, double>> hits;
    auto try_point = [&](double x, double y) {
        if (x >= v.xmin - 1e-12 && x <= v.xmax + 1e-12 && y >= v.ymin - 1e-12 &&
            y <= v.ymax + 1e-12)
            hits.emplace_back(x, y);
    };
    if (std::fabs(s.ny) > 1e-15) {
        try_point(v.xmin, (s.m - s.nx * v.xmin) / s.ny);
        try_point(v.xmax, (s.m - s.nx * v.xmax) / s.ny);
    }
    if (std::fabs(s.nx) > 1e-15) {
        try_point((s.m - s.ny * v.ymin) / s.nx, v.ymin);
        try_point((s.m - s.ny * v.ymax) / s.nx, v.ymax);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end(),
                           [](auto a, auto b) {
                               return std::fabs(a.first - b.first) < 1e-12 &&
                                      std::fabs(a.second - b.second) < 1e-12;
                           }),
               hits.end());
    if (hits.size() < 2) return false;
    x1 = hits.front().first;
    y1 = hits.front().second;
    x2 = hits.back().first;
    y2 = hits.back().second;
    return true;
}

}  // namespace

std::string packing_to_svg(const packing::Packing& p, const RenderSpec& spec) {
    std::vector<Shape> shapes;
    shapes.reserve(std::min(p.circles.size(), spec.max_circles));
    for (const auto& [key, rec] : p.circles) {
        if (shapes.size() >= spec.max_circles) break;
        shapes.push_back(to_shape(rec));
    }
    Viewport v = spec.viewport ? *spec.viewport : fit_viewport(shapes);
    double w = v.xmax - v.xmin, h = v.ymax - v.ymin;
    double scale = spec.pixels / std::max(w, 1e-12);

    std::ostringstream ss;
    ss.precision(8);
    ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale
       << "\" height=\"" << h * scale << "\" viewBox=\"" << v.xmin << " " << -v.ymax
       << " " << w << " " << h << "\">\n";
    // y axis up: mirror the geometry instead of the text
    ss << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << spec.stroke_width
       << "\">\n";
    for (const Shape& s : shapes) {
        if (s.line) {
            double x1, y1, x2, y2;
            if (clip_line(s, v, x1, y1, x2, y2))
                ss << "<line x1=\"" << x1 << "\" y1=\"" << -y1 << "\" x2=\"" << x2
                   << "\" y2=\"" << -y2 << "\"/>\n";
        } else {
            ss << "<circle cx=\"" << s.cx << "\" cy=\"" << -s.cy << "\" r=\"" << s.r
               << "\"/>\n";
        }
    }
    ss << "</g>\n";
    if (spec.curvature_labels) {
        ss << "<g fill=\"black\" stroke=\"none\" text-anchor=\"middle\">\n";
        for (const Shape& s : shapes) {
            if (s.line || !s.label) continue;
            double size = s.negative ? 0.18 * s.r : 0.7 * s.r;
            if (size * scale < 6) continue;  // unreadable
            double ly = s.negative ? s.cy - 0.85 * s.r : s.cy;
            ss << "<text x=\"" << s.cx << "\" y=\"" << -(ly - 0.35 * size)
               << "\" font-size=\"" << size << "\">" << *s.label << "</text>\n";
        }
        ss << "</g>\n";
    }
    ss << "</svg>\n";
    return ss.str();
}

}  // namespace apollonian::render
