#ifndef QRM_FIGURE_HPP
#define QRM_FIGURE_HPP

// Two-panel SVG of the unit-fraction triple search: lattice points of R_D in
// the disks Re(1/z) >= 1/3 and Re(1/z) >= 1/4, and their images under 1/z.

#include "qrm/classify.hpp"

#include <algorithm>
#include <complex>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace qrm {

struct FigureInfo {
    std::string svg;
    std::size_t triple_count = 0;
    std::vector<TripleCandidate> highlighted;
};

namespace detail {

struct Box {
    double x0, x1, y0, y1;

    Box padded(double frac) const
    {
        const double px = (x1 - x0) * frac;
        const double py = (y1 - y0) * frac;
        return {x0 - px, x1 + px, y0 - py, y1 + py};
    }
};

inline std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") {
        s = "0.0000";
    }
    return s;
}

/// Maps a complex point into a panel of the given pixel size (y up).
class Panel {
public:
    Panel(Box box, double left, double size) : box_(box), left_(left), size_(size) {}

    double px(double x) const { return left_ + (x - box_.x0) / (box_.x1 - box_.x0) * size_; }
    double py(double y) const { return top_ + (box_.y1 - y) / (box_.y1 - box_.y0) * size_; }
    double scale() const { return size_ / (box_.x1 - box_.x0); }
    const Box& box() const { return box_; }

private:
    Box box_;
    double left_;
    double size_;
    double top_ = 40;
};

inline std::complex<double> embed(const QuadRat& z)
{
    const auto c = to_complex(z);
    return {static_cast<double>(c.real()), static_cast<double>(c.imag())};
}

} // namespace detail

inline FigureInfo make_figure(Discriminant d, std::size_t highlight = 3)
{
    using detail::num;
    FigureInfo info;
    const auto triples = enumerate_unit_fraction_triples(d);
    info.triple_count = triples.size();
    info.highlighted.assign(triples.begin(), triples.begin() + static_cast<std::ptrdiff_t>(std::min(highlight, triples.size())));

    std::vector<std::complex<double>> pts;
    std::vector<bool> inner;
    for (const auto& z : inverse_halfplane_points(d, mpq_class(1, 4))) {
        pts.push_back(detail::embed(QuadRat(z)));
        inner.push_back(detail::inverse_coords(z).first >= mpq_class(1, 3));
    }

    // Left: the larger disk |z - 2| <= 2. Right: the strip 0 <= Re w <= 1.
    const double size = 400;
    const detail::Panel left(detail::Box{0, 4, -2, 2}.padded(0.1), 20, size);
    double wy = 0.5;
    for (const auto& z : pts) {
        wy = std::max(wy, std::abs((1.0 / z).imag()));
    }
    const detail::Panel right(detail::Box{0, 1.2, -std::max(wy, 0.6), std::max(wy, 0.6)}.padded(0.1), 460,
                              size);
    const double width = 880;
    const double height = 480;

    static const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c"};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<text x=\"20\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">D = " << d.value() << ": "
       << info.highlighted.size() << " of the " << info.triple_count << " unordered triples</text>\n";

    // Left panel.
    os << "<g id=\"lattice\">\n";
    os << "<circle cx=\"" << num(left.px(1.5)) << "\" cy=\"" << num(left.py(0)) << "\" r=\""
       << num(1.5 * left.scale()) << "\" fill=\"none\" stroke=\"#444\"/>\n";
    os << "<circle cx=\"" << num(left.px(2)) << "\" cy=\"" << num(left.py(0)) << "\" r=\"" << num(2 * left.scale())
       << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    os << "<line x1=\"" << num(left.px(left.box().x0)) << "\" y1=\"" << num(left.py(0)) << "\" x2=\""
       << num(left.px(left.box().x1)) << "\" y2=\"" << num(left.py(0)) << "\" stroke=\"#ccc\"/>\n";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        os << "<circle cx=\"" << num(left.px(pts[k].real())) << "\" cy=\"" << num(left.py(pts[k].imag()))
           << "\" r=\"2.5\" fill=\"" << (inner[k] ? "#222" : "#888") << "\"/>\n";
    }
    for (std::size_t t = 0; t < info.highlighted.size(); ++t) {
        for (const auto& mu : info.highlighted[t].mu) {
            const auto z = detail::embed(QuadRat(mu));
            os << "<circle cx=\"" << num(left.px(z.real())) << "\" cy=\"" << num(left.py(z.imag())) << "\" r=\""
               << 6 + 3 * static_cast<int>(t) << "\" fill=\"none\" stroke=\"" << colors[t] << "\" stroke-width=\"2\"/>\n";
        }
    }
    os << "</g>\n";

    // Right panel.
    os << "<g id=\"inverse\">\n";
    for (const double re : {1.0 / 3.0, 0.25}) {
        os << "<line x1=\"" << num(right.px(re)) << "\" y1=\"" << num(right.py(right.box().y0)) << "\" x2=\""
           << num(right.px(re)) << "\" y2=\"" << num(right.py(right.box().y1)) << "\" stroke=\""
           << (re > 0.3 ? "#444" : "#999") << "\"" << (re > 0.3 ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
    }
    os << "<line x1=\"" << num(right.px(right.box().x0)) << "\" y1=\"" << num(right.py(0)) << "\" x2=\""
       << num(right.px(right.box().x1)) << "\" y2=\"" << num(right.py(0)) << "\" stroke=\"#ccc\"/>\n";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto w = 1.0 / pts[k];
        os << "<circle cx=\"" << num(right.px(w.real())) << "\" cy=\"" << num(right.py(w.imag()))
           << "\" r=\"2.5\" fill=\"" << (inner[k] ? "#222" : "#888") << "\"/>\n";
    }
    for (std::size_t t = 0; t < info.highlighted.size(); ++t) {
        os << "<polygon points=\"";
        for (std::size_t j = 0; j < 3; ++j) {
            const auto w = 1.0 / detail::embed(QuadRat(info.highlighted[t].mu[j]));
            os << (j ? " " : "") << num(right.px(w.real())) << "," << num(right.py(w.imag()));
        }
        os << "\" fill=\"none\" stroke=\"" << colors[t] << "\" stroke-width=\"2\"/>\n";
    }
    os << "<circle cx=\"" << num(right.px(1.0 / 3.0)) << "\" cy=\"" << num(right.py(0))
       << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(right.px(1.0 / 3.0) + 6) << "\" y=\"" << num(right.py(0) - 6)
       << "\" font-family=\"sans-serif\" font-size=\"12\">1/3</text>\n";
    os << "</g>\n";
    os << "</svg>\n";
    info.svg = os.str();
    return info;
}

} // namespace qrm

#endif // QRM_FIGURE_HPP
