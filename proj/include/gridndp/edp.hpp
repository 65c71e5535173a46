#pragma once

#include "gridndp/builder.hpp"
#include "gridndp/geometry.hpp"
#include "gridndp/router.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridndp {

class WallError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Wall cut from a grid of even length. The vertical edge between rows z and
// z+1 in column j survives iff z = j (mod 2). Cell k of a row holds columns
// 2k-1 and 2k; the wall has length/2 columns of cells.
//
// Wall paths are grid polylines with one extra rule: a step between two
// waypoints on different rows must stay inside one cell and denotes the
// zigzag through that cell. Going down from (ra, xa) to (rb, xb), row ra
// holds xa and the column of the down edge, every row strictly between
// holds both columns, row rb holds the column of the up edge and xb.
// With wall == false paths are plain polylines on the full grid.
struct WallSpec {
    GridSpec grid;
    bool wall = true;
    Coord wall_length() const { return grid.length / 2; }
    Coord wall_height() const { return grid.height; }
    bool operator==(const WallSpec&) const = default;
};

// Column of the down edge from row z inside cell k.
inline Coord down_col(Coord z, Coord k) { return z % 2 != 0 ? 2 * k - 1 : 2 * k; }
// Column of the up edge into row z inside cell k.
inline Coord up_col(Coord z, Coord k) { return down_col(z - 1, k); }
inline Coord cell_of(Coord col) { return (col + 1) / 2; }

struct DegreeAudit {
    int max_degree = 0;
    int max_terminal_degree = 0;
    Vertex max_degree_witness;
    std::vector<Vertex> terminal_violations;  // terminals above degree 2
    std::uint64_t vertices_checked = 0;
    bool exhaustive = false;  // false: one representative per translation class
    bool ok() const { return max_degree <= 3 && terminal_violations.empty(); }
};

struct EdpInstance {
    WallSpec spec;
    RoutingInstance base;           // grid instance, same terminals and boxes
    std::vector<Vertex> dests;      // sorted destinations
    DegreeAudit audit;

    bool alive(const Vertex& v) const;
    int pre_cleanup_degree(const Vertex& v) const;
    bool kept(const Vertex& v) const;
    // Edge between two grid-adjacent vertices after every deletion.
    bool has_edge(const Vertex& a, const Vertex& b) const;
    int degree(const Vertex& v) const;
};

// Areas up to this many vertices are audited vertex by vertex by default.
inline constexpr std::int64_t kExhaustiveAuditArea = 4'000'000;

// exhaustive: every vertex, by a row sweep. classes: one vertex per
// translation class of the radius-2 neighbourhood pattern. automatic picks
// exhaustive up to kExhaustiveAuditArea.
enum class AuditMode { automatic, exhaustive, classes };

EdpInstance to_wall_instance(const RoutingInstance& inst);
// The same instance without wall deletions: the raw grid, max degree 4.
EdpInstance raw_grid_instance(const RoutingInstance& inst);
DegreeAudit audit_degrees(const EdpInstance& e, AuditMode mode = AuditMode::automatic);

template <class T>
std::pair<std::vector<T>, std::vector<T>> parity_split(const std::vector<T>& group) {
    std::pair<std::vector<T>, std::vector<T>> out;
    for (std::size_t i = 0; i < group.size(); ++i) (i % 2 == 0 ? out.first : out.second).push_back(group[i]);
    return out;
}

// No two vertices of row_vertices joined by an edge of the instance.
bool is_well_spread(const EdpInstance& e, const std::vector<Vertex>& row_vertices);

// parity 1 routes the odd-indexed half of M*, parity 2 the even half.
RoutedSolution route_yes_canonical(const EdpInstance& e, const Assignment& a, int parity);

// Throws WallError when the degree preconditions fail. Returns whether the
// (edge-disjoint) paths are also node-disjoint.
bool edge_node_equivalence(const EdpInstance& e, const RoutedSolution& sol);

// Grid vertices visited by a path, as line pieces; the first vertex is kept
// and later repeats of a step's start are dropped.
std::vector<Rect> wall_vertex_pieces(const WallSpec& spec, const Path& p);

// Edges used by a path. Vertical edges are keyed by (upper row, cell) for
// walls and (upper row, column) for raw grids; horizontal edges by (row,
// left column).
struct EdgePieces {
    std::vector<Rect> vertical;
    std::vector<Rect> horizontal;
};
EdgePieces wall_edge_pieces(const WallSpec& spec, const Path& p);

// Throws WallError when a step is neither horizontal nor inside one cell.
void check_wall_path(const WallSpec& spec, const Path& p);

// Certificates from wall paths: per box, the leftmost opening vertex each
// routed path visits.
std::vector<BoxCertificate> collect_wall_certificates(const EdpInstance& e, const RoutedSolution& sol);

}  // namespace gridndp
