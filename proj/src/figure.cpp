#include "ekchain/figure.hpp"

#include "ekchain/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ekchain {

namespace {

struct Bounds {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void add(Point2 p)
    {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }

    void add(const Circle& c)
    {
        add(Point2{c.center.x - c.radius, c.center.y - c.radius});
        add(Point2{c.center.x + c.radius, c.center.y + c.radius});
    }
};

// Model-to-viewport mapping shared by all elements of one document.
struct Canvas {
    double x0, y0, w, h;  // viewBox, already y-flipped
    double px;            // model units per pixel

    double pixels(double n) const { return n * px; }
};

Canvas make_canvas(const Bounds& b, const FigureStyle& style)
{
    double w = b.max_x - b.min_x;
    double h = b.max_y - b.min_y;
    const double extent = std::max({w, h, 1e-9});
    const double pad = std::max(style.margin_frac * extent, 0.02 * extent);
    w += 2.0 * pad;
    h += 2.0 * pad;
    const double ppu = std::min(style.width_px / w, style.height_px / h);
    return Canvas{b.min_x - pad, -(b.max_y + pad), w, h, 1.0 / ppu};
}

struct SvgWriter {
    std::ostringstream out;

    void open(const FigureStyle& style, const Canvas& cv)
    {
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
            << style.width_px << "\" height=\"" << style.height_px << "\" viewBox=\""
            << format_fixed6(cv.x0) << ' ' << format_fixed6(cv.y0) << ' ' << format_fixed6(cv.w)
            << ' ' << format_fixed6(cv.h) << "\">\n"
            << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\""
            << format_fixed6(cv.pixels(style.stroke_width)) << "\">\n";
    }

    void axes(const Canvas& cv, const std::string& color)
    {
        const double top = -cv.y0;
        const double bottom = top - cv.h;
        out << "<g id=\"axes\" stroke=\"" << color << "\">\n";
        line({cv.x0, 0.0}, {cv.x0 + cv.w, 0.0});
        line({0.0, bottom}, {0.0, top});
        out << "</g>\n";
    }

    void circle(const Circle& c)
    {
        out << "<circle cx=\"" << format_fixed6(c.center.x) << "\" cy=\""
            << format_fixed6(c.center.y) << "\" r=\"" << format_fixed6(c.radius) << "\"/>\n";
    }

    void line(Point2 a, Point2 b, const char* extra = "")
    {
        out << "<line x1=\"" << format_fixed6(a.x) << "\" y1=\"" << format_fixed6(a.y)
            << "\" x2=\"" << format_fixed6(b.x) << "\" y2=\"" << format_fixed6(b.y) << '"'
            << extra << "/>\n";
    }

    void dot(Point2 p, double r, const std::string& color)
    {
        const std::string rs = format_fixed6(r);
        const std::string ds = format_fixed6(2.0 * r);
        out << "<path fill=\"" << color << "\" d=\"M " << format_fixed6(p.x - r) << ' '
            << format_fixed6(p.y) << " a " << rs << ' ' << rs << " 0 1 0 " << ds << " 0 a " << rs
            << ' ' << rs << " 0 1 0 -" << ds << " 0 Z\"/>\n";
    }

    void label(Point2 p, const Canvas& cv, const std::string& text, const std::string& color)
    {
        out << "<text x=\"" << format_fixed6(p.x + cv.pixels(5.0)) << "\" y=\""
            << format_fixed6(-p.y - cv.pixels(5.0)) << "\" fill=\"" << color << "\">" << text
            << "</text>\n";
    }

    std::string close()
    {
        out << "</svg>\n";
        return out.str();
    }
};

constexpr double kDotPx = 3.0;
constexpr double kFontPx = 12.0;

}  // namespace

void validate(const FigureStyle& style)
{
    if (style.width_px <= 0 || style.height_px <= 0)
        throw std::invalid_argument("figure size must be positive");
    if (!(style.margin_frac >= 0.0 && style.margin_frac < 0.4))
        throw std::invalid_argument("margin fraction must lie in [0, 0.4)");
    if (!(style.stroke_width > 0.0))
        throw std::invalid_argument("stroke width must be positive");
}

std::string format_fixed6(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 6);
    std::string s(buf, res.ptr);
    if (s == "-0.000000")
        s = "0.000000";
    return s;
}

std::string render_chain_svg(const ChainConstruction& chain, const FigureStyle& style)
{
    validate(style);
    if (chain.sums.empty())
        throw Error(ErrorCode::EmptyChain, "chain has no partial sums");

    Bounds b;
    b.add(Point2{});
    for (Point2 p : chain.sums)
        b.add(p);
    for (Point2 p : chain.probes)
        b.add(p);
    for (const Circle& c : chain.circles) {
        b.add(c);
        b.add(c.center);
    }
    const Canvas cv = make_canvas(b, style);
    const bool external = chain.orientation == Orientation::External;
    const char* sum_name = external ? "R" : "Q";
    const char* center_name = external ? "C" : "O";

    SvgWriter svg;
    svg.open(style, cv);
    svg.axes(cv, style.palette.axes);

    svg.out << "<g id=\"circles\" stroke=\"" << style.palette.circles << "\">\n";
    for (std::size_t k = 0; k < chain.circles.size(); ++k)
        if (k == 0 || !chain.coincident[k - 1])
            svg.circle(chain.circles[k]);
    svg.out << "</g>\n";

    svg.out << "<g id=\"segments\" stroke=\"" << style.palette.circles << "\">\n";
    Point2 prev{};
    for (Point2 p : chain.sums) {
        svg.line(prev, p);
        prev = p;
    }
    for (std::size_t k = 0; k < chain.circles.size(); ++k) {
        const Point2 anchor = k == 0 ? Point2{} : chain.sums[k - 1];
        svg.line(chain.circles[k].center, anchor, " stroke-dasharray=\"4 2\"");
    }
    svg.out << "</g>\n";

    const double dot = cv.pixels(kDotPx);
    svg.out << "<g id=\"points\" stroke=\"none\">\n";
    svg.dot(Point2{}, dot, "#000000");
    for (const Circle& c : chain.circles)
        svg.dot(c.center, dot, style.palette.centers);
    for (Point2 p : chain.probes)
        svg.dot(p, dot, style.palette.probes);
    for (Point2 p : chain.sums)
        svg.dot(p, dot, style.palette.sums);
    svg.out << "</g>\n</g>\n";

    if (style.label_toggle) {
        svg.out << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\""
                << format_fixed6(cv.pixels(kFontPx)) << "\">\n";
        svg.label(Point2{}, cv, "O", "#000000");
        for (std::size_t k = 0; k < chain.circles.size(); ++k)
            if (k == 0 || !chain.coincident[k - 1])
                svg.label(chain.circles[k].center, cv, center_name + std::to_string(k),
                          style.palette.centers);
        for (std::size_t k = 0; k < chain.probes.size(); ++k)
            svg.label(chain.probes[k], cv, "S" + std::to_string(k + 1), style.palette.probes);
        for (std::size_t k = 0; k < chain.sums.size(); ++k)
            svg.label(chain.sums[k], cv, sum_name + std::to_string(k), style.palette.sums);
        svg.out << "</g>\n";
    }
    return svg.close();
}

std::string render_annulus_svg(const Annulus& a, const RootSet& roots, const FigureStyle& style)
{
    validate(style);
    const Circle inner{{0.0, 0.0}, a.inner};
    const Circle outer{{0.0, 0.0}, a.outer};

    Bounds b;
    b.add(outer);
    for (const Complex& z : roots.roots)
        b.add(Point2{z.real(), z.imag()});
    const Canvas cv = make_canvas(b, style);

    SvgWriter svg;
    svg.open(style, cv);
    svg.axes(cv, style.palette.axes);
    svg.out << "<g id=\"circles\" stroke=\"" << style.palette.circles << "\">\n";
    if (a.inner > 0.0)
        svg.circle(inner);
    if (!a.degenerate)
        svg.circle(outer);
    svg.out << "</g>\n";

    const double dot = cv.pixels(kDotPx);
    svg.out << "<g id=\"points\" stroke=\"none\">\n";
    for (const Complex& z : roots.roots)
        svg.dot(Point2{z.real(), z.imag()}, dot, style.palette.sums);
    svg.out << "</g>\n</g>\n";

    if (style.label_toggle && !roots.roots.empty()) {
        svg.out << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\""
                << format_fixed6(cv.pixels(kFontPx)) << "\">\n";
        for (std::size_t k = 0; k < roots.roots.size(); ++k)
            svg.label(Point2{roots.roots[k].real(), roots.roots[k].imag()}, cv,
                      "z" + std::to_string(k + 1), style.palette.sums);
        svg.out << "</g>\n";
    }
    return svg.close();
}

}  // namespace ekchain
