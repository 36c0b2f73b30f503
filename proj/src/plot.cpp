#include "sturm/plot.hpp"

#include <sstream>
#include <vector>

namespace sturm {

namespace {

// Open unit cell [cx, cx+1] x [cy, cy+1] meets the open segment (0,0)-(p,q).
bool segment_crosses_cell(const ChristoffelSpec& spec, std::int64_t cx, std::int64_t cy) {
    const std::int64_t p = spec.p;
    const std::int64_t q = spec.q;
    return q * cx < (cy + 1) * p && q * (cx + 1) > cy * p;
}

}  // namespace

std::string render_svg(const ChristoffelSpec& spec) {
    const auto path = lattice_path(christoffel_word(spec));
    const std::int64_t p = spec.p;
    const std::int64_t q = spec.q;
    const std::int64_t cell = kSvgCellSize;
    const std::int64_t width = (p + 2) * cell;
    const std::int64_t height = (q + 2) * cell;
    auto sx = [&](std::int64_t x) { return (x + 1) * cell; };
    auto sy = [&](std::int64_t y) { return (q - y + 1) * cell; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <title>" << to_string(spec.orientation) << " Christoffel word (" << p << ',' << q
       << ")</title>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";

    os << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (std::int64_t x = 0; x <= p; ++x) {
        os << "    <line x1=\"" << sx(x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(x)
           << "\" y2=\"" << sy(q) << "\"/>\n";
    }
    for (std::int64_t y = 0; y <= q; ++y) {
        os << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(p)
           << "\" y2=\"" << sy(y) << "\"/>\n";
    }
    os << "  </g>\n";

    os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(p) << "\" y2=\""
       << sy(q) << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";

    os << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"3\" points=\"";
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        if (i > 0) os << ' ';
        os << sx(path.points[i].x) << ',' << sy(path.points[i].y);
    }
    os << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_ascii(const ChristoffelSpec& spec) {
    const auto path = lattice_path(christoffel_word(spec));
    const std::int64_t p = spec.p;
    const std::int64_t q = spec.q;
    const auto rows = static_cast<std::size_t>(2 * q + 1);
    const auto cols = static_cast<std::size_t>(2 * p + 1);
    std::vector<std::string> canvas(rows, std::string(cols, ' '));
    auto at = [&](std::int64_t col, std::int64_t row) -> char& {
        return canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    };
    // Lattice point (x, y) sits at column 2x, row 2(q - y).
    for (std::int64_t y = 0; y <= q; ++y) {
        for (std::int64_t x = 0; x <= p; ++x) at(2 * x, 2 * (q - y)) = '.';
    }
    for (std::int64_t cy = 0; cy < q; ++cy) {
        for (std::int64_t cx = 0; cx < p; ++cx) {
            if (segment_crosses_cell(spec, cx, cy)) at(2 * cx + 1, 2 * (q - cy) - 1) = '/';
        }
    }
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        const auto& pt = path.points[i];
        at(2 * pt.x, 2 * (q - pt.y)) = 'o';
        if (i == 0) continue;
        const auto& prev = path.points[i - 1];
        if (pt.x != prev.x) {
            at(2 * prev.x + 1, 2 * (q - pt.y)) = '-';
        } else {
            at(2 * pt.x, 2 * (q - pt.y) + 1) = '|';
        }
    }

    std::string out;
    for (auto& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace sturm
