#pragma once

#include "gridndp/snake.hpp"
#include "gridndp/solvers.hpp"

#include <map>
#include <random>
#include <vector>

namespace gridndp::testing {

struct RandomSnake {
    std::vector<Rect> corridors;
    std::vector<Vertex> A, Ap;
    Coord width = 0;
};

inline Coord uniform(std::mt19937_64& rng, Coord lo, Coord hi) {
    return std::uniform_int_distribution<Coord>(lo, hi)(rng);
}

// Interior points of side s of r, excluding both corners.
inline std::vector<Vertex> side_points(const Rect& r, Side s) {
    std::vector<Vertex> out;
    switch (s) {
        case Side::top:
        case Side::bottom:
            for (Coord c = r.c1 + 1; c < r.c2; ++c) out.push_back({s == Side::top ? r.r1 : r.r2, c});
            break;
        case Side::left:
        case Side::right:
            for (Coord q = r.r1 + 1; q < r.r2; ++q) out.push_back({q, s == Side::left ? r.c1 : r.c2});
            break;
    }
    return out;
}

inline Side side_of_line(const Rect& r, const Rect& line) {
    if (line.height() == 1) return line.r1 == r.r1 ? Side::top : Side::bottom;
    return line.c1 == r.c1 ? Side::left : Side::right;
}

// Chains of corridors growing right or down, each neighbor sharing a full
// boundary line of length >= w with its predecessor. Terminal sets sit on
// a free side of the first and last corridor.
inline RandomSnake random_snake(std::mt19937_64& rng, Coord max_width, std::size_t max_len) {
    for (;;) {
        RandomSnake s;
        const Coord w = uniform(rng, 3, max_width);
        const std::size_t L = static_cast<std::size_t>(uniform(rng, 1, static_cast<Coord>(max_len)));
        Coord h0 = uniform(rng, w, w + 3), w0 = uniform(rng, w, w + 3);
        s.corridors.push_back(Rect::rows_cols(1, h0, 1, w0));
        for (std::size_t j = 1; j < L; ++j) {
            const Rect& cur = s.corridors.back();
            Coord nh = uniform(rng, w, w + 3), nw = uniform(rng, w, w + 3);
            Rect next;
            if (uniform(rng, 0, 1) == 0) {
                Coord r1 = uniform(rng, cur.r1 - (nh - w), cur.r2 - w + 1);
                next = Rect::rows_cols(r1, r1 + nh - 1, cur.c2, cur.c2 + nw - 1);
            } else {
                Coord c1 = uniform(rng, cur.c1 - (nw - w), cur.c2 - w + 1);
                next = Rect::rows_cols(cur.r2, cur.r2 + nh - 1, c1, c1 + nw - 1);
            }
            s.corridors.push_back(next);
        }
        try {
            validate_snake(s.corridors);
        } catch (const SnakeError&) {
            continue;
        }
        s.width = snake_width(s.corridors);
        if (s.width < 3 || s.width > max_width) continue;
        const Rect& first = s.corridors.front();
        const Rect& last = s.corridors.back();
        std::vector<Side> a_ok, b_ok;
        for (Side sd : {Side::top, Side::bottom, Side::left, Side::right}) {
            auto pa = side_points(first, sd);
            bool ok = L == 1 || (side_of_line(first, first.intersect(s.corridors[1])) != sd);
            if (ok && L > 1)
                for (const auto& v : pa) ok = ok && !s.corridors[1].contains(v);
            if (ok) a_ok.push_back(sd);
            auto pb = side_points(last, sd);
            ok = L == 1 || side_of_line(last, last.intersect(s.corridors[L - 2])) != sd;
            if (ok && L > 1)
                for (const auto& v : pb) ok = ok && !s.corridors[L - 2].contains(v);
            if (ok) b_ok.push_back(sd);
        }
        if (a_ok.empty() || b_ok.empty()) continue;
        Side sa = a_ok[uniform(rng, 0, static_cast<Coord>(a_ok.size()) - 1)];
        Side sb = b_ok[uniform(rng, 0, static_cast<Coord>(b_ok.size()) - 1)];
        auto pa = side_points(first, sa), pb = side_points(last, sb);
        if (L == 1 && sa == sb) continue;
        const Coord k = uniform(rng, 1, std::min<Coord>({s.width - 2, static_cast<Coord>(pa.size()),
                                                        static_cast<Coord>(pb.size())}));
        std::shuffle(pa.begin(), pa.end(), rng);
        std::shuffle(pb.begin(), pb.end(), rng);
        s.A.assign(pa.begin(), pa.begin() + k);
        s.Ap.assign(pb.begin(), pb.begin() + k);
        std::sort(s.A.begin(), s.A.end());
        std::sort(s.Ap.begin(), s.Ap.end());
        return s;
    }
}

// Max-flow count of vertex-disjoint A -> A' paths inside the union of the
// corridors, on an explicitly materialized grid graph.
inline int snake_flow_oracle(const RandomSnake& s) {
    Graph g;
    std::map<Vertex, int> id;
    for (const auto& r : s.corridors)
        for (Coord q = r.r1; q <= r.r2; ++q)
            for (Coord c = r.c1; c <= r.c2; ++c)
                if (!id.count({q, c})) id[{q, c}] = g.add_vertex(std::to_string(q) + "," + std::to_string(c));
    for (const auto& [v, k] : id) {
        auto it = id.find({v.row, v.col + 1});
        if (it != id.end()) g.add_edge(k, it->second);
        it = id.find({v.row + 1, v.col});
        if (it != id.end()) g.add_edge(k, it->second);
    }
    std::vector<int> src, dst;
    for (const auto& v : s.A) src.push_back(id.at(v));
    for (const auto& v : s.Ap) dst.push_back(id.at(v));
    return max_disjoint_paths(g, src, dst);
}

// Every vertex of every path lies in some corridor.
inline bool inside_snake(const std::vector<Path>& paths, const std::vector<Rect>& cs) {
    for (const auto& p : paths)
        for (std::size_t k = 0; k < p.pts.size(); ++k) {
            Vertex a = p.pts[k];
            Vertex b = k + 1 < p.pts.size() ? p.pts[k + 1] : a;
            Coord dr = (b.row > a.row) - (b.row < a.row), dc = (b.col > a.col) - (b.col < a.col);
            for (Vertex v = a;; v = {v.row + dr, v.col + dc}) {
                bool in = false;
                for (const auto& r : cs) in = in || r.contains(v);
                if (!in) return false;
                if (v == b) break;
            }
        }
    return true;
}

}  // namespace gridndp::testing
