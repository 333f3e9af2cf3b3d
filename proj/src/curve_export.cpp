#include "tieroc/curve_export.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace tieroc {

void write_curve_csv(std::ostream& os, const RocPolyline& pl) {
    std::ostringstream buf;
    buf << std::setprecision(17);
    buf << "fpr,tpr,threshold\n";
    for (const RocPoint& p : pl.points) {
        buf << p.fpr << ',' << p.tpr << ',';
        if (p.threshold) {
            if (std::isinf(*p.threshold)) {
                buf << "+inf";
            } else {
                buf << *p.threshold;
            }
        }
        buf << '\n';
    }
    os << buf.str();
}

void write_curve_svg(std::ostream& os, const RocPolyline& pl) {
    constexpr double size = 600.0;
    constexpr double margin = 50.0;
    constexpr double plot = size - 2 * margin;
    auto x = [&](double fpr) { return margin + fpr * plot; };
    auto y = [&](double tpr) { return size - margin - tpr * plot; };

    std::ostringstream buf;
    buf << std::fixed << std::setprecision(3);
    buf << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    buf << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << plot
        << "\" height=\"" << plot << "\" fill=\"white\" stroke=\"black\"/>\n";
    buf << "  <line x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\"" << x(1) << "\" y2=\""
        << y(1) << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    buf << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pl.points.size(); ++i) {
        buf << (i ? " " : "") << x(pl.points[i].fpr) << ',' << y(pl.points[i].tpr);
    }
    buf << "\"/>\n";
    buf << "  <text x=\"300\" y=\"590\" text-anchor=\"middle\" font-size=\"14\">"
           "False positive rate (1 - specificity)</text>\n";
    buf << "  <text x=\"15\" y=\"300\" text-anchor=\"middle\" font-size=\"14\" "
           "transform=\"rotate(-90 15 300)\">True positive rate (sensitivity)</text>\n";
    buf << "  <text x=\"300\" y=\"30\" text-anchor=\"middle\" font-size=\"14\">ROC, "
        << path_name(pl.convention) << " path</text>\n";
    buf << "</svg>\n";
    os << buf.str();
}

}  // namespace tieroc
