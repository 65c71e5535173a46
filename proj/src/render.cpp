#include "gridndp/render.hpp"

#include <sstream>

namespace gridndp {

namespace {

void svg_rect(std::ostream& out, const char* cls, const Rect& r) {
    out << "<rect class=\"" << cls << "\" x=\"" << r.c1 - 1 << "\" y=\"" << r.r1 - 1 << "\" width=\"" << r.width()
        << "\" height=\"" << r.height() << "\"/>\n";
}

void svg_marker(std::ostream& out, const char* cls, const Vertex& v) {
    out << "<circle class=\"" << cls << "\" cx=\"" << v.col - 1 << ".5\" cy=\"" << v.row - 1 << ".5\" r=\"0.4\"/>\n";
}

}  // namespace

std::string render_svg(const RoutingInstance& inst, const RoutedSolution* sol, std::int64_t area_limit) {
    const Coord L = inst.host.length, H = inst.host.height;
    const bool full = L * H <= area_limit;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << L << ' ' << H << "\">\n";
    out << "<style>.host{fill:#fff;stroke:#999;stroke-width:0.2}.deleted{fill:#333}.box,.gadget{fill:none;"
           "stroke:#36c;stroke-width:0.3}.gadget{stroke:#c63}.source{fill:#2a2}.destination{fill:#c22}"
           ".path{fill:none;stroke:#e90;stroke-width:0.4}</style>\n";
    svg_rect(out, "host", Rect::rows_cols(1, H, 1, L));
    if (!full) out << "<!-- schematic: area " << L * H << " exceeds " << area_limit << " -->\n";
    if (full)
        for (const auto& r : inst.deleted.rects()) svg_rect(out, "deleted", r);
    for (const auto& b : inst.boxes) svg_rect(out, "box", b.rect);
    for (const auto& g : inst.layout) svg_rect(out, "gadget", g.rect);
    if (full) {
        for (const auto& p : inst.pairs) {
            svg_marker(out, "source", p.s);
            svg_marker(out, "destination", p.t);
        }
        if (sol)
            for (const auto& r : sol->routes) {
                out << "<polyline class=\"path\" points=\"";
                for (std::size_t k = 0; k < r.path.pts.size(); ++k)
                    out << (k ? " " : "") << r.path.pts[k].col - 1 << ".5," << r.path.pts[k].row - 1 << ".5";
                out << "\"/>\n";
            }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_ascii(const RoutingInstance& inst, const RoutedSolution* sol, std::int64_t area_limit) {
    const Coord L = inst.host.length, H = inst.host.height;
    if (L * H > area_limit)
        throw RenderError("ASCII rendering needs area <= " + std::to_string(area_limit) + ", host has " +
                          std::to_string(L * H));
    std::vector<std::string> rows(H, std::string(L, '.'));
    for (const auto& r : inst.deleted.rects())
        for (Coord i = r.r1; i <= r.r2; ++i)
            for (Coord j = r.c1; j <= r.c2; ++j) rows[i - 1][j - 1] = '#';
    if (sol)
        for (const auto& r : sol->routes)
            for (const auto& pc : vertex_pieces(r.path))
                for (Coord i = pc.r1; i <= pc.r2; ++i)
                    for (Coord j = pc.c1; j <= pc.c2; ++j)
                        if (inst.host.contains({i, j})) rows[i - 1][j - 1] = '*';
    for (const auto& p : inst.pairs) {
        rows[p.s.row - 1][p.s.col - 1] = 'S';
        rows[p.t.row - 1][p.t.col - 1] = 'T';
    }
    std::string out;
    for (const auto& r : rows) out += r + '\n';
    return out;
}

}  // namespace gridndp
