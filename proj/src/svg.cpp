#include "wpd/svg.hpp"

#include <functional>
#include <sstream>
#include <utility>
#include <vector>

#include "wpd/errors.hpp"
#include "wpd/latticegen.hpp"

namespace wpd {

namespace {

struct Pt {
    double x, y;
};

// Sutherland-Hodgman against an axis-aligned rectangle.
std::vector<Pt> clip(std::vector<Pt> poly, double x0, double y0, double x1, double y1) {
    auto clip_edge = [](const std::vector<Pt>& in, auto inside, auto cross) {
        std::vector<Pt> out;
        for (std::size_t i = 0; i < in.size(); ++i) {
            const Pt& a = in[i];
            const Pt& b = in[(i + 1) % in.size()];
            bool ia = inside(a), ib = inside(b);
            if (ia)
                out.push_back(a);
            if (ia != ib)
                out.push_back(cross(a, b));
        }
        return out;
    };
    auto at_x = [](double x) {
        return [x](const Pt& a, const Pt& b) { return Pt{x, a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)}; };
    };
    auto at_y = [](double y) {
        return [y](const Pt& a, const Pt& b) { return Pt{a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y), y}; };
    };
    poly = clip_edge(poly, [&](const Pt& p) { return p.x >= x0; }, at_x(x0));
    if (!poly.empty())
        poly = clip_edge(poly, [&](const Pt& p) { return p.x <= x1; }, at_x(x1));
    if (!poly.empty())
        poly = clip_edge(poly, [&](const Pt& p) { return p.y >= y0; }, at_y(y0));
    if (!poly.empty())
        poly = clip_edge(poly, [&](const Pt& p) { return p.y <= y1; }, at_y(y1));
    return poly;
}

double to_double(const Rational& r) { return r.gmp().get_d(); }

// Vertex indices in boundary order, following the edge graph.
std::vector<std::size_t> boundary_cycle(const Polytope& P) {
    const std::size_t nv = P.vertices().size();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (const auto& e : P.edges()) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<std::size_t> cycle{0};
    std::size_t prev = 0, cur = adj[0].front();
    while (cur != 0) {
        cycle.push_back(cur);
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    return cycle;
}

class Panel {
  public:
    Panel(const IntBox& box, int unit, double offset_x) : box_(box), unit_(unit), offset_x_(offset_x) {}

    double px(double x) const { return offset_x_ + (x - static_cast<double>(box_.lo[0])) * unit_ + unit_; }
    double py(double y) const { return (static_cast<double>(box_.hi[1]) - y) * unit_ + 2.0 * unit_; }
    double width() const { return static_cast<double>(box_.hi[0] - box_.lo[0] + 2) * unit_; }
    double height() const { return static_cast<double>(box_.hi[1] - box_.lo[1] + 3) * unit_; }

    std::string points(const std::vector<Pt>& poly) const {
        std::ostringstream os;
        for (std::size_t i = 0; i < poly.size(); ++i)
            os << (i ? " " : "") << px(poly[i].x) << ',' << py(poly[i].y);
        return os.str();
    }

  private:
    IntBox box_;
    int unit_;
    double offset_x_;
};

void draw_lattice(std::ostringstream& os, const Panel& panel, const IntBox& box,
                  const std::function<Rational(const QVector&)>& weight) {
    for (std::int64_t x = box.lo[0]; x <= box.hi[0]; ++x) {
        for (std::int64_t y = box.lo[1]; y <= box.hi[1]; ++y) {
            QVector q{Rational(static_cast<long>(x)), Rational(static_cast<long>(y))};
            Rational w = weight(q);
            double cx = panel.px(static_cast<double>(x)), cy = panel.py(static_cast<double>(y));
            if (w.is_zero()) {
                os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"1.5\" fill=\"#bbbbbb\"/>\n";
                continue;
            }
            os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"#000000\"/>\n";
            os << "    <text class=\"weight\" x=\"" << cx + 4 << "\" y=\"" << cy - 4 << "\">" << w.str()
               << "</text>\n";
        }
    }
}

} // namespace

std::string render_decomposition_svg(const Polytope& P, const PolarizingVector& xi, const WeightParam& y,
                                     const SvgOptions& opts) {
    if (P.dim() != 2)
        throw GeometryError("SVG output needs a 2-dimensional polytope, got dimension " + std::to_string(P.dim()));
    const IntBox box = lattice_box(P).inflated(opts.margin);
    const auto cones = polarize_cones(P, xi);
    const double x0 = static_cast<double>(box.lo[0]), x1 = static_cast<double>(box.hi[0]);
    const double y0 = static_cast<double>(box.lo[1]), y1 = static_cast<double>(box.hi[1]);

    std::vector<Pt> polygon;
    for (auto i : boundary_cycle(P))
        polygon.push_back({to_double(P.vertices()[i].point[0]), to_double(P.vertices()[i].point[1])});

    const double gap = opts.unit;
    const Panel probe(box, opts.unit, 0);
    const double panel_w = probe.width() + gap;
    const double total_w = panel_w * static_cast<double>(cones.size() + 1);
    const double total_h = probe.height();

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << total_w << "\" height=\""
       << total_h << "\" viewBox=\"0 0 " << total_w << ' ' << total_h << "\">\n"
       << "  <style>text { font-family: sans-serif; } .weight { font-size: 10px; } "
          ".title { font-size: 14px; font-weight: bold; }</style>\n"
       << "  <desc>polarizing vector " << str(xi.xi) << ", y = " << y.y().str() << "</desc>\n";

    {
        Panel panel(box, opts.unit, 0);
        os << "  <g id=\"polytope\">\n";
        os << "    <polygon points=\"" << panel.points(polygon)
           << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";
        os << "    <text class=\"title\" x=\"" << panel.px(x0) << "\" y=\"" << opts.unit * 0.8
           << "\">polytope, y = " << y.y().str() << "</text>\n";
        draw_lattice(os, panel, box, [&](const QVector& q) { return polytope_weight(P, q, y); });
        os << "  </g>\n";
    }

    for (std::size_t k = 0; k < cones.size(); ++k) {
        const auto& C = cones[k];
        Panel panel(box, opts.unit, panel_w * static_cast<double>(k + 1));
        const double reach = (x1 - x0) + (y1 - y0) + 2.0;
        Pt apex{to_double(C.apex[0]), to_double(C.apex[1])};
        Pt g0{to_double(C.generators[0][0]), to_double(C.generators[0][1])};
        Pt g1{to_double(C.generators[1][0]), to_double(C.generators[1][1])};
        std::vector<Pt> wedge{apex,
                              {apex.x + reach * g0.x, apex.y + reach * g0.y},
                              {apex.x + reach * (g0.x + g1.x), apex.y + reach * (g0.y + g1.y)},
                              {apex.x + reach * g1.x, apex.y + reach * g1.y}};
        auto clipped = clip(wedge, x0 - 0.5, y0 - 0.5, x1 + 0.5, y1 + 0.5);
        const bool positive = C.sign() > 0;
        os << "  <g id=\"cone-" << k << "\" data-vertex=\"" << str(C.apex) << "\" data-sign=\""
           << (positive ? "+" : "-") << "\" data-flips=\"" << C.flip_count << "\">\n";
        os << "    <polygon points=\"" << panel.points(clipped) << "\" fill=\""
           << (positive ? "#a1d99b" : "#fc9272") << "\" fill-opacity=\"0.6\" stroke=\""
           << (positive ? "#006d2c" : "#a50f15") << "\" stroke-width=\"2\"/>\n";
        os << "    <polygon points=\"" << panel.points(polygon)
           << "\" fill=\"none\" stroke=\"#08519c\" stroke-dasharray=\"4 3\"/>\n";
        os << "    <text class=\"title\" x=\"" << panel.px(x0) << "\" y=\"" << opts.unit * 0.8 << "\">"
           << (positive ? "+" : "&#8722;") << " cone at " << str(C.apex) << ", #v = " << C.flip_count
           << "</text>\n";
        draw_lattice(os, panel, box, [&](const QVector& q) { return cone_weight(C, q, y); });
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace wpd
