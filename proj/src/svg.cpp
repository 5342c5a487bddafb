#include "homarea/arrangement.hpp"
#include "homarea/errors.hpp"
#include "homarea/io.hpp"
#include "homarea/winding.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace homarea {

namespace {

// Vertices of poly with the given crossing positions spliced in.
std::vector<Point> chain(const Polyline &poly, std::vector<CurvePosition> at) {
    std::sort(at.begin(), at.end());
    std::vector<Point> out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        out.push_back(poly[i]);
        while (k < at.size() && at[k].segment < i) ++k;
        while (k < at.size() && at[k].segment == i) {
            if (at[k].t != 0) out.push_back(poly.point_at(at[k]));
            ++k;
        }
    }
    if (poly.closed()) out.push_back(poly[0]);
    return out;
}

std::string fill_for(int w) {
    if (w == 0) return "#ffffff";
    int k = std::min(std::abs(w), 4);
    int light = 235 - 45 * k;
    char buf[16];
    if (w > 0) std::snprintf(buf, sizeof buf, "#%02x%02x%02x", 250, light, light);
    else std::snprintf(buf, sizeof buf, "#%02x%02x%02x", light, light, 250);
    return buf;
}

class Canvas {
public:
    Canvas(const Point &lo, const Point &hi) {
        double w = to_double(hi.x - lo.x), h = to_double(hi.y - lo.y);
        double span = std::max(w, h);
        if (span <= 0) span = 1;
        scale_ = 900.0 / span;
        ox_ = 50.0 + (900.0 - w * scale_) / 2 - to_double(lo.x) * scale_;
        oy_ = 50.0 + (900.0 - h * scale_) / 2 + to_double(hi.y) * scale_;
    }
    std::string xy(const Point &p) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f,%.2f", ox_ + to_double(p.x) * scale_, oy_ - to_double(p.y) * scale_);
        return buf;
    }
    std::string attr(const Point &p, const char *xname, const char *yname) const {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s=\"%.2f\" %s=\"%.2f\"", xname, ox_ + to_double(p.x) * scale_, yname,
                      oy_ - to_double(p.y) * scale_);
        return buf;
    }

private:
    double scale_, ox_, oy_;
};

} // namespace

std::string render_svg(const CurveFile &file, const std::vector<Point> &anchors) {
    const Polyline &p = file.p, &q = file.q;
    std::vector<CurvePosition> at_p, at_q;
    if (file.kind == CurveKind::paths) {
        validate_inputs(p, q);
        for (const auto &e : compute_intersections(p, q)) {
            at_p.push_back(e.pos_p);
            at_q.push_back(e.pos_q);
        }
    } else {
        validate_simple(p, "P");
        validate_simple(q, "Q");
        for (const auto &c : cycle_crossings(p, q)) {
            at_p.push_back(c.pos_p);
            at_q.push_back(c.pos_q);
        }
    }
    std::vector<Point> cp = chain(p, at_p), cq = chain(q, at_q);

    std::map<Point, int, PointLess> ids;
    std::vector<Point> pts;
    auto id_of = [&](const Point &v) {
        auto [it, fresh] = ids.emplace(v, static_cast<int>(pts.size()));
        if (fresh) pts.push_back(v);
        return it->second;
    };
    std::vector<std::pair<int, int>> constraints;
    for (const auto *c : {&cp, &cq})
        for (std::size_t i = 0; i + 1 < c->size(); ++i) constraints.emplace_back(id_of((*c)[i]), id_of((*c)[i + 1]));
    Triangulation tri(pts, constraints, Rational(2));

    // closed curve whose winding colours the cells
    std::vector<Point> loop(p.vertices().begin(), p.vertices().end());
    if (file.kind == CurveKind::paths)
        for (std::size_t k = q.size() - 1; k-- > 1;) loop.push_back(q[k]);

    const int nt = static_cast<int>(tri.triangle_count());
    std::vector<int> cell(nt, -1);
    std::vector<std::vector<int>> members;
    std::vector<bool> bounded;
    for (int s = 0; s < nt; ++s) {
        if (cell[s] >= 0) continue;
        int id = static_cast<int>(members.size());
        members.emplace_back();
        bool inner = true;
        std::vector<int> stack{s};
        cell[s] = id;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            members[id].push_back(t);
            for (int k = 0; k < 3; ++k) {
                int n = tri.neighbor(t, k);
                if (n < 0) {
                    inner = false;
                    continue;
                }
                if (tri.constrained(t, k) || cell[n] >= 0) continue;
                cell[n] = id;
                stack.push_back(n);
            }
        }
        bounded.push_back(inner);
    }

    Point lo = p[0], hi = p[0];
    for (const auto *poly : {&p, &q})
        for (const Point &v : poly->vertices()) {
            lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
            hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
        }
    Canvas cv(lo, hi);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
          "viewBox=\"0 0 1000 1000\">\n";
    os << "<rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
    std::ostringstream labels;
    for (std::size_t c = 0; c < members.size(); ++c) {
        if (!bounded[c]) continue;
        int best = members[c][0];
        for (int t : members[c])
            if (tri.area(t) > tri.area(best)) best = t;
        Point sample = tri.centroid(best);
        int w = file.kind == CurveKind::paths
                    ? winding_number(sample, loop)
                    : winding_number(sample, p.vertices()) - winding_number(sample, q.vertices());
        std::string fill = fill_for(w);
        os << "<g fill=\"" << fill << "\" stroke=\"" << fill << "\" stroke-width=\"0.5\">\n";
        for (int t : members[c]) {
            const auto &v = tri.vertices(t);
            os << "<polygon points=\"" << cv.xy(tri.point(v[0])) << " " << cv.xy(tri.point(v[1])) << " "
               << cv.xy(tri.point(v[2])) << "\"/>\n";
        }
        os << "</g>\n";
        labels << "<text " << cv.attr(sample, "x", "y")
               << " font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" << (w > 0 ? "+" : "") << w
               << "</text>\n";
    }
    auto stroke = [&](const Polyline &poly, const char *color, const char *name) {
        os << "<polyline id=\"" << name << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"2.5\" stroke-linejoin=\"round\" points=\"";
        for (std::size_t k = 0; k < poly.size(); ++k) os << (k ? " " : "") << cv.xy(poly[k]);
        if (poly.closed()) os << " " << cv.xy(poly[0]);
        os << "\"/>\n";
    };
    stroke(p, "#1a1a1a", "P");
    stroke(q, "#d95f02", "Q");
    os << labels.str();
    for (const Point &a : anchors)
        os << "<circle " << cv.attr(a, "cx", "cy") << " r=\"7\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace homarea
