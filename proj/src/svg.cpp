#include "svg.hpp"

#include <sstream>

namespace sfreecut {

std::string rat_to_decimal(const Rat& r, unsigned places) {
    Int pow10 = 1;
    for (unsigned i = 0; i < places; ++i) pow10 *= 10;
    bool neg = r < 0;
    Rat mag = rat_abs(r) * Rat(pow10);
    Int q = rat_floor(mag + Rat(1, 2));
    if (q == 0) neg = false;
    Int ip = q / pow10;
    Int fp = q % pow10;
    std::string frac = fp.str();
    frac.insert(frac.begin(), places - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (neg ? "-" : "") + ip.str();
    if (!frac.empty()) out += "." + frac;
    return out;
}

namespace {

constexpr long kCanvas = 800;

const char* kOutlines[] = {"#00008b", "#8b0000", "#006400", "#4b0082", "#8b4513"};

struct Mapper {
    const SearchBox& box;

    Rat px(const Rat& x) const {
        return (x - box.lower[0]) * Rat(kCanvas) / (box.upper[0] - box.lower[0]);
    }
    Rat py(const Rat& y) const {
        return Rat(kCanvas) - (y - box.lower[1]) * Rat(kCanvas) / (box.upper[1] - box.lower[1]);
    }
    std::string point(const RatVec& p) const {
        return rat_to_decimal(px(p[0]), 6) + "," + rat_to_decimal(py(p[1]), 6);
    }
};

std::vector<RatVec> clip_polygon(const HPolyhedron& P, const SearchBox& box) {
    std::vector<RatVec> rows{{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
    RatVec rhs{box.upper[0], -box.lower[0], box.upper[1], -box.lower[1]};
    GeneratorForm g = double_description_anchored(P.with_extra_rows(rows, rhs));
    if (g.is_empty || g.vertices.size() < 3) return {};
    return hull_polygon_2d(g.vertices);
}

void emit_polygon(std::ostringstream& out, const Mapper& m, const std::vector<RatVec>& poly,
                  const std::string& style) {
    if (poly.size() < 3) return;
    out << "  <polygon points=\"";
    for (size_t i = 0; i < poly.size(); ++i) {
        if (i) out << " ";
        out << m.point(poly[i]);
    }
    out << "\" " << style << "/>\n";
}

} // namespace

std::string plot_svg(const PlotScene& scene) {
    if (scene.S.dim() != 2 || scene.box.dim() != 2)
        throw InvalidInput("plot_svg: only 2-dimensional scenes are supported");
    for (const HPolyhedron& b : scene.bodies)
        if (b.dim() != 2) throw InvalidInput("plot_svg: only 2-dimensional bodies are supported");
    if (scene.box.lower[0] == scene.box.upper[0] || scene.box.lower[1] == scene.box.upper[1])
        throw InvalidInput("plot_svg: box must have positive extent");

    Mapper m{scene.box};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" fill=\"#ffffff\"/>\n";

    std::vector<IntVec> s_points = s_points_in_box(scene.S, scene.box);
    if (s_points.size() >= 3) {
        std::vector<RatVec> pts;
        pts.reserve(s_points.size());
        for (const IntVec& p : s_points) pts.push_back(to_ratvec(p));
        emit_polygon(out, m, hull_polygon_2d(pts), "fill=\"#d3d3d3\" stroke=\"none\"");
    }

    size_t color = 0;
    for (const HPolyhedron& b : scene.bodies) {
        std::vector<RatVec> poly = clip_polygon(b, scene.box);
        std::string stroke = kOutlines[color % (sizeof(kOutlines) / sizeof(kOutlines[0]))];
        ++color;
        emit_polygon(out, m, poly,
                     "fill=\"#8c8c8c\" fill-opacity=\"0.55\" stroke=\"" + stroke +
                         "\" stroke-width=\"2\"");
    }

    for (Int x = rat_ceil(scene.box.lower[0]); x <= rat_floor(scene.box.upper[0]); ++x) {
        for (Int y = rat_ceil(scene.box.lower[1]); y <= rat_floor(scene.box.upper[1]); ++y) {
            IntVec p{x, y};
            bool in_s = s_contains(scene.S, p);
            out << "  <circle cx=\"" << rat_to_decimal(m.px(Rat(x)), 6) << "\" cy=\""
                << rat_to_decimal(m.py(Rat(y)), 6) << "\" r=\"4\" fill=\""
                << (in_s ? "#000000" : "#ffffff") << "\" stroke=\"#000000\"/>\n";
        }
    }

    if (scene.f_marker) {
        const RatVec& f = *scene.f_marker;
        std::string cx = rat_to_decimal(m.px(f[0]), 6);
        std::string cy = rat_to_decimal(m.py(f[1]), 6);
        Rat half(8);
        out << "  <line x1=\"" << rat_to_decimal(m.px(f[0]) - half, 6) << "\" y1=\"" << cy
            << "\" x2=\"" << rat_to_decimal(m.px(f[0]) + half, 6) << "\" y2=\"" << cy
            << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
        out << "  <line x1=\"" << cx << "\" y1=\"" << rat_to_decimal(m.py(f[1]) - half, 6)
            << "\" x2=\"" << cx << "\" y2=\"" << rat_to_decimal(m.py(f[1]) + half, 6)
            << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace sfreecut
