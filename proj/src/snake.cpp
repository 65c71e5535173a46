#include "gridndp/snake.hpp"

#include <algorithm>
#include <numeric>

namespace gridndp {

bool on_side(const Rect& r, Side s, const Vertex& v) {
    if (!r.contains(v)) return false;
    switch (s) {
        case Side::top: return v.row == r.r1;
        case Side::bottom: return v.row == r.r2;
        case Side::left: return v.col == r.c1;
        case Side::right: return v.col == r.c2;
    }
    return false;
}

namespace {

Side opposite(Side s) {
    switch (s) {
        case Side::top: return Side::bottom;
        case Side::bottom: return Side::top;
        case Side::left: return Side::right;
        case Side::right: return Side::left;
    }
    return s;
}

// Local frame: u grows inward from the entry side, t runs along it.
struct Frame {
    Rect r;
    Side in;
    Coord U, V;

    Frame(const Rect& rect, Side s) : r(rect), in(s) {
        bool horiz = s == Side::top || s == Side::bottom;
        U = horiz ? r.height() - 1 : r.width() - 1;
        V = horiz ? r.width() - 1 : r.height() - 1;
    }
    std::pair<Coord, Coord> local(const Vertex& v) const {
        switch (in) {
            case Side::top: return {v.row - r.r1, v.col - r.c1};
            case Side::bottom: return {r.r2 - v.row, v.col - r.c1};
            case Side::left: return {v.col - r.c1, v.row - r.r1};
            case Side::right: return {r.c2 - v.col, v.row - r.r1};
        }
        return {0, 0};
    }
    Vertex global(Coord u, Coord t) const {
        switch (in) {
            case Side::top: return {r.r1 + u, r.c1 + t};
            case Side::bottom: return {r.r2 - u, r.c1 + t};
            case Side::left: return {r.r1 + t, r.c1 + u};
            case Side::right: return {r.r1 + t, r.c2 - u};
        }
        return {0, 0};
    }
    Path poly(std::initializer_list<std::pair<Coord, Coord>> pts) const {
        Path p;
        for (const auto& [u, t] : pts) p.push(global(u, t));
        return p;
    }
};

struct Piece {
    Path path;
    Vertex end;
};

// Routes entries[k] (on the entry side) to distinct exits (on exit side).
std::vector<Piece> route_corridor(const Rect& rect, Side in, Side out, const std::vector<Vertex>& entries,
                                  const std::vector<Vertex>& exits, int index) {
    const std::size_t k = entries.size();
    if (exits.size() != k) throw SnakeError("corridor " + std::to_string(index) + ": entry/exit count mismatch");
    Frame F(rect, in);
    std::vector<std::pair<Coord, Coord>> E(k), X(k);
    for (std::size_t a = 0; a < k; ++a) {
        E[a] = F.local(entries[a]);
        X[a] = F.local(exits[a]);
    }
    std::vector<Piece> out_pieces(k);
    std::vector<std::size_t> ei(k), xi(k);
    std::iota(ei.begin(), ei.end(), 0);
    std::iota(xi.begin(), xi.end(), 0);

    if (out == in) {
        // Same side: non-crossing bracket matching along the side.
        struct Ev {
            Coord t;
            int type;  // 0 entry, 1 exit
            std::size_t idx;
        };
        std::vector<Ev> ev;
        for (std::size_t a = 0; a < k; ++a) {
            ev.push_back({E[a].second, 0, a});
            ev.push_back({X[a].second, 1, a});
        }
        std::sort(ev.begin(), ev.end(), [](const Ev& x, const Ev& y) { return std::tie(x.t, x.type) < std::tie(y.t, y.type); });
        struct Open {
            Ev ev;
            Coord inner;
        };
        std::vector<Open> st;
        for (const auto& e : ev) {
            if (!st.empty() && st.back().ev.type != e.type) {
                Open o = st.back();
                st.pop_back();
                const Ev& en = o.ev.type == 0 ? o.ev : e;
                const Ev& ex = o.ev.type == 0 ? e : o.ev;
                Coord height = (o.ev.t == e.t) ? 0 : o.inner + 1;
                if (height > F.U)
                    throw SnakeError("corridor " + std::to_string(index) + ": not enough depth for nested routes");
                Piece pc;
                pc.path = F.poly({{0, en.t}, {height, en.t}, {height, ex.t}, {0, ex.t}});
                pc.end = exits[ex.idx];
                out_pieces[en.idx] = pc;
                if (!st.empty()) st.back().inner = std::max(st.back().inner, height);
            } else {
                st.push_back({e, 0});
            }
        }
        if (!st.empty()) throw SnakeError("corridor " + std::to_string(index) + ": unmatched boundary points");
        return out_pieces;
    }

    if (out == opposite(in)) {
        std::sort(ei.begin(), ei.end(), [&](std::size_t a, std::size_t b) { return E[a].second < E[b].second; });
        std::sort(xi.begin(), xi.end(), [&](std::size_t a, std::size_t b) { return X[a].second < X[b].second; });
        std::vector<Coord> track(k, 0);
        Coord next = 1;
        for (std::size_t p = k; p-- > 0;)
            if (X[xi[p]].second > E[ei[p]].second) track[p] = next++;
        Coord used = next - 1;
        next = 1;
        for (std::size_t p = 0; p < k; ++p)
            if (X[xi[p]].second < E[ei[p]].second) track[p] = next++;
        used = std::max(used, next - 1);
        if (used > 0 && used > F.U - 1)
            throw SnakeError("corridor " + std::to_string(index) + ": width deficit (" + std::to_string(used) +
                             " turning routes, " + std::to_string(std::max<Coord>(F.U - 1, 0)) + " tracks)");
        for (std::size_t p = 0; p < k; ++p) {
            Coord t0 = E[ei[p]].second, t1 = X[xi[p]].second, tr = track[p];
            Piece pc;
            pc.path = F.poly({{0, t0}, {tr, t0}, {tr, t1}, {F.U, t1}});
            pc.end = exits[xi[p]];
            out_pieces[ei[p]] = pc;
        }
        return out_pieces;
    }

    // Adjacent sides: exits lie on t == 0 or t == V.
    bool high = X[0].second == F.V && !(F.V == 0);
    for (std::size_t a = 0; a < k; ++a)
        if ((high && X[a].second != F.V) || (!high && X[a].second != 0))
            throw SnakeError("corridor " + std::to_string(index) + ": exits not on one side");
    std::sort(ei.begin(), ei.end(), [&](std::size_t a, std::size_t b) {
        return high ? E[a].second > E[b].second : E[a].second < E[b].second;
    });
    std::sort(xi.begin(), xi.end(), [&](std::size_t a, std::size_t b) { return X[a].first < X[b].first; });
    for (std::size_t p = 0; p < k; ++p) {
        Coord t0 = E[ei[p]].second, u1 = X[xi[p]].first, t1 = X[xi[p]].second;
        Piece pc;
        pc.path = F.poly({{0, t0}, {u1, t0}, {u1, t1}});
        pc.end = exits[xi[p]];
        out_pieces[ei[p]] = pc;
    }
    return out_pieces;
}

std::vector<Side> sides_containing(const Rect& r, const std::vector<Vertex>& pts) {
    std::vector<Side> out;
    for (Side s : {Side::top, Side::bottom, Side::left, Side::right}) {
        bool all = !pts.empty();
        for (const auto& v : pts)
            if (!on_side(r, s, v)) {
                all = false;
                break;
            }
        if (all) out.push_back(s);
    }
    return out;
}

Side line_side(const Rect& r, const Rect& line, std::size_t j) {
    if (line.height() == 1 && line.width() > 1) {
        if (line.r1 == r.r1) return Side::top;
        if (line.r1 == r.r2) return Side::bottom;
    } else if (line.width() == 1 && line.height() > 1) {
        if (line.c1 == r.c1) return Side::left;
        if (line.c1 == r.c2) return Side::right;
    }
    throw SnakeError("corridors " + std::to_string(j + 1) + " and " + std::to_string(j + 2) +
                     " must meet along a boundary line of length >= 2");
}

}  // namespace

void validate_snake(const std::vector<Rect>& cs) {
    if (cs.empty()) throw SnakeError("empty snake");
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j].empty()) throw SnakeError("empty corridor " + std::to_string(j + 1));
        for (std::size_t l = j + 2; l < cs.size(); ++l)
            if (cs[j].intersects(cs[l]))
                throw SnakeError("corridors " + std::to_string(j + 1) + " and " + std::to_string(l + 1) + " intersect");
    }
    for (std::size_t j = 0; j + 1 < cs.size(); ++j) {
        if (!cs[j].intersects(cs[j + 1]))
            throw SnakeError("corridors " + std::to_string(j + 1) + " and " + std::to_string(j + 2) + " do not meet");
        Rect line = cs[j].intersect(cs[j + 1]);
        Side a = line_side(cs[j], line, j);
        Side b = line_side(cs[j + 1], line, j);
        if (b != opposite(a))
            throw SnakeError("corridors " + std::to_string(j + 1) + " and " + std::to_string(j + 2) + " overlap");
    }
}

Coord snake_width(const std::vector<Rect>& cs) {
    Coord w = std::numeric_limits<Coord>::max();
    for (const auto& r : cs) w = std::min({w, r.height(), r.width()});
    for (std::size_t j = 0; j + 1 < cs.size(); ++j) {
        Rect line = cs[j].intersect(cs[j + 1]);
        w = std::min(w, line.height() * line.width());
    }
    return w;
}

std::vector<Path> route_snake(const std::vector<Rect>& cs, const std::vector<Vertex>& A, const std::vector<Vertex>& Ap,
                              const SnakeOptions& opt) {
    validate_snake(cs);
    const std::size_t k = A.size();
    if (Ap.size() != k) throw SnakeError("|A| != |A'|");
    {
        auto a = A, b = Ap;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end() || std::adjacent_find(b.begin(), b.end()) != b.end())
            throw SnakeError("repeated terminal");
    }
    if (k == 0) return {};
    const Coord w = snake_width(cs);
    if (opt.enforce_width && static_cast<Coord>(k) > w - 2)
        throw SnakeError("width deficit: |A| = " + std::to_string(k) + " but w - 2 = " + std::to_string(w - 2));
    const std::size_t L = cs.size();

    std::vector<Side> in(L), out(L);
    for (std::size_t j = 0; j + 1 < L; ++j) {
        Rect line = cs[j].intersect(cs[j + 1]);
        out[j] = line_side(cs[j], line, j);
        in[j + 1] = opposite(out[j]);
    }
    auto a_sides = sides_containing(cs[0], A);
    if (a_sides.empty()) throw SnakeError("A is not on one side of the first corridor");
    auto b_sides = sides_containing(cs[L - 1], Ap);
    if (b_sides.empty()) throw SnakeError("A' is not on one side of the last corridor");
    if (L > 1) {
        for (const auto& v : A)
            if (cs[1].contains(v)) throw SnakeError("A touches the second corridor");
        for (const auto& v : Ap)
            if (cs[L - 2].contains(v)) throw SnakeError("A' touches the second-to-last corridor");
        in[0] = a_sides[0];
        for (Side s : a_sides)
            if (s != out[0]) {
                in[0] = s;
                break;
            }
        out[L - 1] = b_sides[0];
        for (Side s : b_sides)
            if (s != in[L - 1]) {
                out[L - 1] = s;
                break;
            }
    } else {
        in[0] = a_sides[0];
        out[0] = b_sides[0];
        for (Side s : b_sides)
            if (s != in[0]) {
                out[0] = s;
                break;
            }
    }

    std::vector<Path> paths(k);
    std::vector<Vertex> cur = A;
    for (std::size_t a = 0; a < k; ++a) paths[a].push(A[a]);
    for (std::size_t j = 0; j < L; ++j) {
        std::vector<Vertex> exits;
        if (j + 1 == L) {
            exits = Ap;
        } else {
            Rect line = cs[j].intersect(cs[j + 1]);
            bool projected = false;
            if (opt.project_last && j + 2 == L && out[L - 1] == opposite(in[L - 1])) {
                bool ok = true;
                for (const auto& v : Ap) {
                    Vertex p = (line.height() == 1) ? Vertex{line.r1, v.col} : Vertex{v.row, line.c1};
                    if (!line.contains(p)) {
                        ok = false;
                        break;
                    }
                    exits.push_back(p);
                }
                projected = ok;
                if (!ok) exits.clear();
            }
            if (!projected) {
                Coord len = line.height() * line.width();
                if (len < static_cast<Coord>(k) + 1)
                    throw SnakeError("interface " + std::to_string(j + 1) + " too short");
                for (std::size_t a = 0; a < k; ++a) {
                    Coord off = static_cast<Coord>(a) + 1;
                    exits.push_back(line.height() == 1 ? Vertex{line.r1, line.c1 + off} : Vertex{line.r1 + off, line.c1});
                }
            }
        }
        auto pieces = route_corridor(cs[j], in[j], out[j], cur, exits, static_cast<int>(j + 1));
        for (std::size_t a = 0; a < k; ++a) {
            paths[a].append(pieces[a].path);
            cur[a] = pieces[a].end;
        }
    }
    return paths;
}

}  // namespace gridndp
