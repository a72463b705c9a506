#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "sq/honeycomb.hpp"

namespace sqtool {

using namespace sq;

namespace {

constexpr double kScale = 24.0;

struct P {
    double x, y;
};

P to_svg(Pt3 p) { return {kScale * std::sqrt(3.0) * p.x / 3.0, -kScale * p.y / 3.0}; }

std::string num(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return b;
}

class Svg {
public:
    void line(P a, P b, const std::string& style) {
        grow(a);
        grow(b);
        body_ += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) +
                 "\" " + style + "/>\n";
    }
    void polygon(const std::vector<P>& ps, const std::string& style) {
        std::string pts;
        for (const auto& p : ps) {
            grow(p);
            pts += (pts.empty() ? "" : " ") + num(p.x) + "," + num(p.y);
        }
        body_ += "<polygon points=\"" + pts + "\" " + style + "/>\n";
    }
    std::string str() const {
        double pad = kScale;
        double x0 = lo_.x - pad, y0 = lo_.y - pad, w = hi_.x - lo_.x + 2 * pad, h = hi_.y - lo_.y + 2 * pad;
        if (!any_) x0 = y0 = 0, w = h = 2 * pad;
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
               num(x0) + " " + num(y0) + " " + num(w) + " " + num(h) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
               "\">\n" + body_ + "</svg>\n";
    }

private:
    void grow(P p) {
        if (!any_) lo_ = hi_ = p;
        lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
        hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
        any_ = true;
    }
    bool any_ = false;
    P lo_{0, 0}, hi_{0, 0};
    std::string body_;
};

const char* kThin = "stroke=\"#bbbbbb\" stroke-width=\"1\"";
const char* kBold = "stroke=\"#000000\" stroke-width=\"4\" stroke-linecap=\"round\"";
const char* kLoop = "stroke=\"#c0392b\" stroke-width=\"4\" stroke-linecap=\"round\"";
const char* kDouble = "stroke=\"#000000\" stroke-width=\"2\"";

std::pair<P, P> segment(const HexEdge& e) {
    auto [v, w] = edge_vertices(e);
    return {to_svg(vertex_point3(v)), to_svg(vertex_point3(w))};
}

void hexagon(Svg& s, HexCoord h, const std::string& style) {
    const auto& d = hex_directions();
    std::vector<P> ps;
    for (int k = 0; k < 6; ++k) ps.push_back(to_svg(vertex_point3(make_vertex(h, h + d[k], h + d[(k + 1) % 6]))));
    s.polygon(ps, style);
}

}  // namespace

std::string render_matching(const Matching& m, const std::vector<HexEdge>& region) {
    Svg s;
    for (const auto& e : region) {
        auto [a, b] = segment(e);
        s.line(a, b, kThin);
    }
    for (const auto& e : m) {
        auto [a, b] = segment(e);
        s.line(a, b, kBold);
    }
    return s.str();
}

std::string render_double_dimer(const DoubleDimer& dd) {
    Svg s;
    std::set<HexEdge> bg;
    for (const auto& v : dd.covered_vertices())
        for (const auto& e : vertex_edges(v)) bg.insert(e);
    for (const auto& e : bg) {
        auto [a, b] = segment(e);
        s.line(a, b, kThin);
    }
    for (const auto& [e, k] : dd.entries()) {
        auto [a, b] = segment(e);
        if (k == 1) {
            s.line(a, b, kLoop);
            continue;
        }
        // two parallel strokes
        double dx = b.x - a.x, dy = b.y - a.y, len = std::hypot(dx, dy);
        double ox = -dy / len * 2.5, oy = dx / len * 2.5;
        s.line({a.x + ox, a.y + oy}, {b.x + ox, b.y + oy}, kDouble);
        s.line({a.x - ox, a.y - oy}, {b.x - ox, b.y - oy}, kDouble);
    }
    return s.str();
}

std::string render_loop(const Loop& l, const std::vector<HexCoord>& cells) {
    Svg s;
    for (const auto& h : cells) hexagon(s, h, "fill=\"#f3e5d0\" stroke=\"#bbbbbb\" stroke-width=\"1\"");
    for (const auto& e : l.edges) {
        auto [a, b] = segment(e);
        s.line(a, b, kLoop);
    }
    return s.str();
}

}  // namespace sqtool
