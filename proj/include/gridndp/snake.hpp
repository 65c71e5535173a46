#pragma once

#include "gridndp/geometry.hpp"

#include <stdexcept>
#include <vector>

namespace gridndp {

class SnakeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Side { top, bottom, left, right };

struct SnakeOptions {
    // Reject |A| > w - 2. Callers that certify feasibility geometrically
    // (a last corridor reached by straight drops) may turn this off.
    bool enforce_width = true;
    // When the last corridor joins opposite sides, place the last interface
    // points above the final targets so that corridor is crossed straight.
    bool project_last = true;
};

// Minimum over corridor extents and interface lengths.
Coord snake_width(const std::vector<Rect>& corridors);

// Throws SnakeError unless consecutive corridors meet exactly in a boundary
// line of both and non-consecutive corridors are disjoint.
void validate_snake(const std::vector<Rect>& corridors);

// Node-disjoint paths inside the union of the corridors. paths[k] starts at
// A[k] and ends at a distinct vertex of Ap; the matching is the unique
// non-crossing one. A lies on one side of the first corridor, Ap on one side
// of the last.
std::vector<Path> route_snake(const std::vector<Rect>& corridors, const std::vector<Vertex>& A,
                              const std::vector<Vertex>& Ap, const SnakeOptions& opt = {});

bool on_side(const Rect& r, Side s, const Vertex& v);

}  // namespace gridndp
