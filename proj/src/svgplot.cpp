#include "svgplot.hpp"

#include "profile.hpp"

#include <cmath>
#include <sstream>

namespace reprlab {

namespace {

constexpr int kWidth = 640, kHeight = 420;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Canvas {
    std::ostringstream os;
    Canvas() {
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
           << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
           << "\">\n";
        os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    }
    std::string finish() {
        os << "</svg>\n";
        return os.str();
    }
};

// Map [-3,3] x [0,3.2] onto the canvas.
double px(double x) { return (x + 3.0) / 6.0 * (kWidth - 40) + 20; }
double py(double y) { return kHeight - 20 - y / 3.2 * (kHeight - 40); }

void polyline(Canvas& c, const std::vector<std::pair<double, double>>& pts,
              const std::string& color, double width) {
    c.os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width
         << "\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) c.os << ' ';
        c.os << fmt(px(pts[i].first)) << ',' << fmt(py(pts[i].second));
    }
    c.os << "\"/>\n";
}

void omega_overlay(Canvas& c) {
    std::vector<std::pair<double, double>> pts;
    for (int i = -300; i <= 300; ++i) {
        double x = i / 100.0;
        pts.emplace_back(x, limit_shape_omega(x));
    }
    polyline(c, pts, "#c02020", 1.5);
}

} // namespace

std::string svg_profile(const Partition& lambda) {
    Canvas c;
    Profile pr(lambda, true);
    std::vector<std::pair<double, double>> pts;
    for (int i = -300; i <= 300; ++i) {
        double x = i / 100.0;
        pts.emplace_back(x, pr(x));
    }
    polyline(c, pts, "#202020", 1.0);
    omega_overlay(c);
    return c.finish();
}

std::string svg_profile(const StrictPartition& lambda) {
    Canvas c;
    DoubleDiagram dd = double_diagram(lambda);
    double rn = std::sqrt(static_cast<double>(std::max(lambda.size(), 1)));
    std::vector<std::pair<double, double>> pts;
    for (int i = -300; i <= 300; ++i) {
        double x = i / 100.0;
        pts.emplace_back(x, dd.value(x * rn) / rn);
    }
    polyline(c, pts, "#202020", 1.0);
    omega_overlay(c);
    return c.finish();
}

std::string svg_arcs(const SetPartition& pi) {
    Canvas c;
    int n = pi.n();
    double base = kHeight - 60.0;
    auto xo = [&](int v) { return 30.0 + (kWidth - 60.0) * (v - 1) / std::max(1, n - 1); };
    for (auto [i, j] : pi.arcs()) {
        double x1 = xo(i), x2 = xo(j);
        double r = (x2 - x1) / 2.0;
        c.os << "<path d=\"M " << fmt(x1) << ' ' << fmt(base) << " A " << fmt(r) << ' '
             << fmt(std::min(r, base - 30.0)) << " 0 0 1 " << fmt(x2) << ' ' << fmt(base)
             << "\" fill=\"none\" stroke=\"#2040c0\" stroke-width=\"1\"/>\n";
    }
    for (int v = 1; v <= n; ++v)
        c.os << "<circle cx=\"" << fmt(xo(v)) << "\" cy=\"" << fmt(base)
             << "\" r=\"2\" fill=\"black\"/>\n";
    return c.finish();
}

std::string svg_heatmap(const SetPartition& pi, int grid) {
    Canvas c;
    int n = pi.n();
    double side = std::min(kWidth, kHeight) - 60.0;
    double x0 = 30.0, y0 = kHeight - 30.0;
    std::vector<std::vector<double>> mass(grid, std::vector<double>(grid, 0.0));
    double peak = 1e-12;
    for (auto [i, j] : pi.arcs()) {
        int gx = std::min(grid - 1, static_cast<int>((i - 0.5) / n * grid));
        int gy = std::min(grid - 1, static_cast<int>((j - 0.5) / n * grid));
        mass[gx][gy] += 1.0;
        peak = std::max(peak, mass[gx][gy]);
    }
    for (int a = 0; a < grid; ++a)
        for (int b = 0; b < grid; ++b) {
            if (mass[a][b] == 0.0) continue;
            int shade = 255 - static_cast<int>(200.0 * mass[a][b] / peak);
            c.os << "<rect x=\"" << fmt(x0 + side * a / grid) << "\" y=\""
                 << fmt(y0 - side * (b + 1) / grid) << "\" width=\"" << fmt(side / grid)
                 << "\" height=\"" << fmt(side / grid) << "\" fill=\"rgb(" << shade << ','
                 << shade << ",255)\"/>\n";
        }
    c.os << "<polyline fill=\"none\" stroke=\"#808080\" stroke-width=\"1\" points=\""
         << fmt(x0) << ',' << fmt(y0) << ' ' << fmt(x0 + side) << ',' << fmt(y0 - side) << ' '
         << fmt(x0) << ',' << fmt(y0 - side) << ' ' << fmt(x0) << ',' << fmt(y0) << "\"/>\n";
    return c.finish();
}

} // namespace reprlab
