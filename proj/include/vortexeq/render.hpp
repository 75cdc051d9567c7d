#ifndef VORTEXEQ_RENDER_HPP
#define VORTEXEQ_RENDER_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "numerics.hpp"

namespace vortexeq
{

struct SvgOptions
{
    int width = 480;
    std::string title;
};

namespace detail
{

inline std::string fmt(const char* pattern, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, a);
    return buf;
}

} // namespace detail

/// Square SVG plot of a configuration. Positive charges are black
/// circles, charges -1 gray squares, and the origin charge an outlined
/// diamond. The viewport covers all points with a 10% margin; every number
/// is printed with fixed precision so equal inputs give equal bytes.
inline std::string render_svg(const Configuration& c, const SvgOptions& opt = {})
{
    const double W = std::max(opt.width, 64);
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool any = false;
    auto include = [&](double x, double y) {
        if (!any)
        {
            xmin = xmax = x;
            ymin = ymax = y;
            any = true;
            return;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& ch : c.charges)
        include(ch.z.real(), ch.z.imag());
    if (c.origin_charge)
        include(0, 0);

    double span = std::max(xmax - xmin, ymax - ymin);
    if (!(span > 0))
        span = 2.0;
    const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
    const double half = span / 2 * 1.25; // span + 10% on each side, with the plot in the central 80%
    const double scale = W / (2 * half);
    auto px = [&](double x) { return (x - cx) * scale + W / 2; };
    auto py = [&](double y) { return W / 2 - (y - cy) * scale; };
    const double r = std::max(2.0, W / 80);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt("%.0f", W) + "\" height=\"" +
           detail::fmt("%.0f", W) + "\" viewBox=\"0 0 " + detail::fmt("%.0f", W) + " " + detail::fmt("%.0f", W) +
           "\">\n";
    if (!opt.title.empty())
        out += "<title>" + opt.title + "</title>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + detail::fmt("%.0f", W) + "\" height=\"" + detail::fmt("%.0f", W) +
           "\" fill=\"white\" stroke=\"none\"/>\n";
    for (const auto& ch : c.charges)
    {
        const double x = px(ch.z.real()), y = py(ch.z.imag());
        if (ch.q.sign() > 0)
            out += "<circle cx=\"" + detail::fmt("%.3f", x) + "\" cy=\"" + detail::fmt("%.3f", y) + "\" r=\"" +
                   detail::fmt("%.3f", r) + "\" fill=\"black\"/>\n";
        else
            out += "<rect x=\"" + detail::fmt("%.3f", x - r) + "\" y=\"" + detail::fmt("%.3f", y - r) +
                   "\" width=\"" + detail::fmt("%.3f", 2 * r) + "\" height=\"" + detail::fmt("%.3f", 2 * r) +
                   "\" fill=\"gray\"/>\n";
    }
    if (c.origin_charge)
    {
        const double x = px(0), y = py(0), d = 1.6 * r;
        out += "<polygon points=\"" + detail::fmt("%.3f", x) + "," + detail::fmt("%.3f", y - d) + " " +
               detail::fmt("%.3f", x + d) + "," + detail::fmt("%.3f", y) + " " + detail::fmt("%.3f", x) + "," +
               detail::fmt("%.3f", y + d) + " " + detail::fmt("%.3f", x - d) + "," + detail::fmt("%.3f", y) +
               "\" fill=\"none\" stroke=\"darkred\" stroke-width=\"1.5\"><title>origin charge " +
               c.origin_charge->to_string() + "</title></polygon>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace vortexeq

#endif
