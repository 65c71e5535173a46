#include "gridndp/geometry.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

namespace gridndp {

std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

std::string to_string(const Rect& r) {
    return "[" + std::to_string(r.r1) + ".." + std::to_string(r.r2) + "]x[" + std::to_string(r.c1) + ".." +
           std::to_string(r.c2) + "]";
}

namespace {

Coord sgn(Coord x) { return (x > 0) - (x < 0); }

}  // namespace

void Path::push(const Vertex& v) {
    if (!pts.empty() && pts.back() == v) return;
    if (pts.size() >= 2) {
        const Vertex& a = pts[pts.size() - 2];
        const Vertex& b = pts.back();
        bool same_row = a.row == b.row && b.row == v.row;
        bool same_col = a.col == b.col && b.col == v.col;
        if ((same_row && sgn(b.col - a.col) == sgn(v.col - b.col)) ||
            (same_col && sgn(b.row - a.row) == sgn(v.row - b.row))) {
            pts.back() = v;
            return;
        }
    }
    pts.push_back(v);
}

void Path::append(const Path& tail) {
    for (const auto& v : tail.pts) push(v);
}

Path Path::reversed() const {
    Path p;
    p.pts.assign(pts.rbegin(), pts.rend());
    return p;
}

Path Path::translated(Coord dr, Coord dc) const {
    Path p;
    p.pts.reserve(pts.size());
    for (const auto& v : pts) p.pts.push_back({v.row + dr, v.col + dc});
    return p;
}

Coord Path::vertex_count() const {
    Coord n = 0;
    for (const auto& r : vertex_pieces(*this)) n += r.height() * r.width();
    return n;
}

void check_axis_aligned(const Path& p) {
    if (p.pts.empty()) throw std::invalid_argument("empty path");
    for (std::size_t i = 1; i < p.pts.size(); ++i) {
        const auto& a = p.pts[i - 1];
        const auto& b = p.pts[i];
        if (a.row != b.row && a.col != b.col)
            throw std::invalid_argument("non-axis-aligned step " + to_string(a) + " -> " + to_string(b));
    }
}

std::vector<Rect> vertex_pieces(const Path& p) {
    std::vector<Rect> out;
    if (p.pts.empty()) return out;
    if (p.pts.size() == 1) {
        out.push_back(Rect::point(p.pts[0]));
        return out;
    }
    out.push_back(Rect::spanning(p.pts[0], p.pts[1]));
    for (std::size_t i = 1; i + 1 < p.pts.size(); ++i) {
        const auto& a = p.pts[i];
        const auto& b = p.pts[i + 1];
        if (a == b) continue;
        Vertex s = a;
        if (a.row == b.row) s.col += sgn(b.col - a.col);
        else s.row += sgn(b.row - a.row);
        out.push_back(Rect::spanning(s, b));
    }
    return out;
}

namespace {

struct Piece {
    Rect r;
    std::size_t owner;
};

void record(std::map<std::pair<std::size_t, std::size_t>, Vertex>& hits, std::size_t a, std::size_t b,
            const Vertex& w) {
    auto key = std::minmax(a, b);
    auto it = hits.find(key);
    if (it == hits.end()) hits.emplace(key, w);
    else if (w < it->second) it->second = w;
}

DisjointnessReport to_report(const std::map<std::pair<std::size_t, std::size_t>, Vertex>& hits) {
    DisjointnessReport rep;
    for (const auto& [k, w] : hits) rep.conflicts.push_back({k.first, k.second, w});
    return rep;
}

}  // namespace

DisjointnessReport pieces_disjoint(const std::vector<std::vector<Rect>>& owners) {
    // Column sweep. Horizontal pieces (points included) are active over
    // their column range in a row-keyed map; vertical pieces query it.
    // Vertical pieces against each other are checked per column.
    std::vector<Piece> hs, vs;
    for (std::size_t i = 0; i < owners.size(); ++i)
        for (const auto& r : owners[i]) {
            if (r.empty()) continue;
            if (r.height() == 1) hs.push_back({r, i});
            else if (r.width() == 1) vs.push_back({r, i});
            else throw std::invalid_argument("piece " + to_string(r) + " is not a line");
        }
    std::map<std::pair<std::size_t, std::size_t>, Vertex> hits;

    std::sort(vs.begin(), vs.end(), [](const Piece& x, const Piece& y) {
        return std::tie(x.r.c1, x.r.r1, x.owner) < std::tie(y.r.c1, y.r.r1, y.owner);
    });
    for (std::size_t i = 0; i < vs.size();) {
        std::size_t e = i;
        std::vector<std::size_t> active;
        while (e < vs.size() && vs[e].r.c1 == vs[i].r.c1) {
            const Rect& b = vs[e].r;
            std::erase_if(active, [&](std::size_t a) { return vs[a].r.r2 < b.r1; });
            for (std::size_t a : active) record(hits, vs[a].owner, vs[e].owner, {b.r1, b.c1});
            active.push_back(e++);
        }
        i = e;
    }

    std::vector<std::size_t> by_start(hs.size()), by_end(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) by_start[i] = by_end[i] = i;
    std::sort(by_start.begin(), by_start.end(), [&](std::size_t x, std::size_t y) { return hs[x].r.c1 < hs[y].r.c1; });
    std::sort(by_end.begin(), by_end.end(), [&](std::size_t x, std::size_t y) { return hs[x].r.c2 < hs[y].r.c2; });
    std::multimap<Coord, std::size_t> active;
    std::vector<std::multimap<Coord, std::size_t>::iterator> where(hs.size());
    std::size_t si = 0, ei = 0, vi = 0;
    while (si < hs.size() || vi < vs.size()) {
        Coord c = std::numeric_limits<Coord>::max();
        if (si < hs.size()) c = hs[by_start[si]].r.c1;
        if (vi < vs.size()) c = std::min(c, vs[vi].r.c1);
        for (; ei < hs.size() && hs[by_end[ei]].r.c2 < c; ++ei) active.erase(where[by_end[ei]]);
        for (; si < hs.size() && hs[by_start[si]].r.c1 == c; ++si) {
            std::size_t k = by_start[si];
            const Rect& b = hs[k].r;
            auto [lo, hi] = active.equal_range(b.r1);
            for (auto it = lo; it != hi; ++it) {
                const Rect& a = hs[it->second].r;
                record(hits, hs[it->second].owner, hs[k].owner, {b.r1, std::max(a.c1, b.c1)});
            }
            where[k] = active.emplace(b.r1, k);
        }
        for (; vi < vs.size() && vs[vi].r.c1 == c; ++vi) {
            const Rect& b = vs[vi].r;
            for (auto it = active.lower_bound(b.r1); it != active.end() && it->first <= b.r2; ++it)
                record(hits, hs[it->second].owner, vs[vi].owner, {it->first, c});
        }
    }
    return to_report(hits);
}

DisjointnessReport paths_node_disjoint(const std::vector<Path>& paths) {
    std::vector<std::vector<Rect>> owners;
    owners.reserve(paths.size());
    for (const auto& p : paths) owners.push_back(vertex_pieces(p));
    return pieces_disjoint(owners);
}

DisjointnessReport paths_node_disjoint_naive(const std::vector<Path>& paths) {
    std::map<Vertex, std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        if (p.pts.empty()) continue;
        seen[p.pts[0]].push_back(i);
        for (std::size_t k = 1; k < p.pts.size(); ++k) {
            Vertex v = p.pts[k - 1];
            const Vertex& b = p.pts[k];
            while (v != b) {
                if (v.row == b.row) v.col += sgn(b.col - v.col);
                else v.row += sgn(b.row - v.row);
                seen[v].push_back(i);
            }
        }
    }
    std::map<std::pair<std::size_t, std::size_t>, Vertex> hits;
    for (const auto& [v, owners] : seen)
        for (std::size_t x = 0; x < owners.size(); ++x)
            for (std::size_t y = x + 1; y < owners.size(); ++y) record(hits, owners[x], owners[y], v);
    return to_report(hits);
}

bool is_order_preserving(const std::vector<Path>& paths, Coord top, Coord bottom) {
    std::vector<std::pair<Coord, Coord>> ends;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        if (p.first().row == top && p.last().row == bottom) ends.emplace_back(p.first().col, p.last().col);
        else if (p.last().row == top && p.first().row == bottom) ends.emplace_back(p.last().col, p.first().col);
        else
            throw std::invalid_argument("path " + std::to_string(i) + " does not join rows " + std::to_string(top) +
                                        " and " + std::to_string(bottom));
    }
    std::sort(ends.begin(), ends.end());
    for (std::size_t i = 1; i < ends.size(); ++i)
        if (ends[i].second <= ends[i - 1].second) return false;
    return true;
}

bool check_aligned_separated(const std::vector<Rect>& boxes, const Rect& host, Coord N) {
    Coord prev_right = host.c1 - 1 - N;
    bool first = true;
    for (const auto& b : boxes) {
        if (!host.contains(b)) return false;
        if (b.middle_row() != host.middle_row()) return false;
        Coord gap = b.c1 - prev_right - 1;
        if (first) gap = b.c1 - host.c1;
        if (gap < N) return false;
        prev_right = b.c2;
        first = false;
    }
    if (!boxes.empty() && host.c2 - boxes.back().c2 < N) return false;
    return true;
}

std::vector<Rect> path_row_hits(const Path& p, Coord row, Coord c1, Coord c2) {
    std::vector<Rect> out;
    Rect line{row, row, c1, c2};
    for (const auto& r : vertex_pieces(p))
        if (r.intersects(line)) out.push_back(r.intersect(line));
    return out;
}

std::optional<Vertex> first_hit(const Path& p, const Rect& r) {
    if (p.pts.empty()) return std::nullopt;
    if (r.contains(p.pts[0])) return p.pts[0];
    for (std::size_t k = 1; k < p.pts.size(); ++k) {
        const Vertex& a = p.pts[k - 1];
        const Vertex& b = p.pts[k];
        Rect s = Rect::spanning(a, b);
        if (!s.intersects(r)) continue;
        Rect x = s.intersect(r);
        if (a.row == b.row) return Vertex{a.row, b.col >= a.col ? x.c1 : x.c2};
        return Vertex{b.row >= a.row ? x.r1 : x.r2, a.col};
    }
    return std::nullopt;
}

bool path_contains(const Path& p, const Vertex& v) {
    for (const auto& r : vertex_pieces(p))
        if (r.contains(v)) return true;
    return false;
}

}  // namespace gridndp
