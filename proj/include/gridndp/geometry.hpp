#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridndp {

using Coord = std::int64_t;

// Rows run top to bottom, columns left to right, both 1-based.
struct Vertex {
    Coord row = 0;
    Coord col = 0;
    auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v);

struct GridSpec {
    Coord length = 0;  // columns
    Coord height = 0;  // rows
    bool operator==(const GridSpec&) const = default;
    bool contains(const Vertex& v) const {
        return v.row >= 1 && v.row <= height && v.col >= 1 && v.col <= length;
    }
    Coord middle_row() const { return (height + 1) / 2; }
};

struct Rect {
    Coord r1 = 0, r2 = -1, c1 = 0, c2 = -1;

    static Rect rows_cols(Coord r1, Coord r2, Coord c1, Coord c2) { return {r1, r2, c1, c2}; }
    static Rect point(const Vertex& v) { return {v.row, v.row, v.col, v.col}; }
    static Rect spanning(const Vertex& a, const Vertex& b) {
        return {std::min(a.row, b.row), std::max(a.row, b.row), std::min(a.col, b.col), std::max(a.col, b.col)};
    }

    bool empty() const { return r1 > r2 || c1 > c2; }
    Coord height() const { return r2 - r1 + 1; }
    Coord width() const { return c2 - c1 + 1; }
    bool contains(const Vertex& v) const { return v.row >= r1 && v.row <= r2 && v.col >= c1 && v.col <= c2; }
    bool contains(const Rect& o) const {
        return o.r1 >= r1 && o.r2 <= r2 && o.c1 >= c1 && o.c2 <= c2;
    }
    bool intersects(const Rect& o) const {
        return std::max(r1, o.r1) <= std::min(r2, o.r2) && std::max(c1, o.c1) <= std::min(c2, o.c2);
    }
    Rect intersect(const Rect& o) const {
        return {std::max(r1, o.r1), std::min(r2, o.r2), std::max(c1, o.c1), std::min(c2, o.c2)};
    }
    Rect translated(Coord dr, Coord dc) const { return {r1 + dr, r2 + dr, c1 + dc, c2 + dc}; }
    Coord middle_row() const { return r1 + (height() + 1) / 2 - 1; }
    auto operator<=>(const Rect&) const = default;
};

std::string to_string(const Rect& r);

// Axis-aligned polyline. Consecutive waypoints share a row or a column.
// A single waypoint is a one-vertex path.
struct Path {
    std::vector<Vertex> pts;

    bool empty() const { return pts.empty(); }
    const Vertex& first() const { return pts.front(); }
    const Vertex& last() const { return pts.back(); }
    bool operator==(const Path&) const = default;

    void push(const Vertex& v);          // appends, merging collinear runs and skipping repeats
    void append(const Path& tail);       // tail.first() must equal last() or be adjacent to it
    Path reversed() const;
    Path translated(Coord dr, Coord dc) const;
    Coord vertex_count() const;          // counts repeated vertices once per visit
};

// Throws std::invalid_argument if a step is not axis-aligned.
void check_axis_aligned(const Path& p);

// Pieces that partition the vertex visits of a path: the first segment is
// closed, later ones drop their starting waypoint.
std::vector<Rect> vertex_pieces(const Path& p);

struct Conflict {
    std::size_t a = 0;  // a == b means self-intersection
    std::size_t b = 0;
    Vertex witness;     // smallest shared vertex in (row, col) order
    bool operator==(const Conflict&) const = default;
};

struct DisjointnessReport {
    std::vector<Conflict> conflicts;  // sorted by (a, b)
    bool operator==(const DisjointnessReport&) const = default;
    bool ok() const { return conflicts.empty(); }
};

DisjointnessReport paths_node_disjoint(const std::vector<Path>& paths);

// Same sweep over arbitrary vertex sets, one list of rects per owner. Rects
// of one owner must not overlap each other unless self-intersection is meant.
DisjointnessReport pieces_disjoint(const std::vector<std::vector<Rect>>& owners);

// Reference implementation enumerating every vertex; for tests.
DisjointnessReport paths_node_disjoint_naive(const std::vector<Path>& paths);

bool is_order_preserving(const std::vector<Path>& paths, Coord top, Coord bottom);

bool check_aligned_separated(const std::vector<Rect>& boxes, const Rect& host, Coord N);

// Pieces of p lying on row `row` within columns [c1, c2].
std::vector<Rect> path_row_hits(const Path& p, Coord row, Coord c1, Coord c2);

// First vertex of p (in path order) lying in r.
std::optional<Vertex> first_hit(const Path& p, const Rect& r);

bool path_contains(const Path& p, const Vertex& v);

}  // namespace gridndp
