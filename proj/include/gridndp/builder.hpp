#pragma once

#include "gridndp/geometry.hpp"
#include "gridndp/region_set.hpp"
#include "gridndp/sat.hpp"
#include "gridndp/schedule.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridndp {

class BuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Demand pair of a template: source slot on Z (1-based) and destination in
// box-local coordinates.
struct DemandPair {
    std::string label;
    Coord slot = 0;
    Vertex dest;
    bool operator==(const DemandPair&) const = default;
};

struct NamedRect {
    std::string kind;
    std::string label;
    Rect rect;
    bool operator==(const NamedRect&) const = default;
};

struct InstanceTemplate;
using TemplatePtr = std::shared_ptr<const InstanceTemplate>;

// A child template placed inside a parent box. The child box occupies
// rows row_offset+1.., cols col_offset+1.. of the parent box, and its Z
// interval starts after slot_offset parent slots.
struct Placement {
    std::string label;
    TemplatePtr tmpl;
    Coord slot_offset = 0;
    Coord row_offset = 0;
    Coord col_offset = 0;
    Rect box() const;
};

struct VarGadget {
    int var = 0;  // 0-based
    Rect box, bt, bf, bx;
    // Child indices ordered by gadget index, then copy.
    std::vector<int> t_children, f_children, x_children;
};

struct ClauseGadget {
    int clause = 0;  // 0-based
    Rect box;
    std::vector<Rect> sub;  // B^1 .. B^h
    std::vector<int> lit_children[3];  // ordered by j, then copy
};

struct CompositeLayout {
    Formula formula;
    Coord n = 0, m = 0, h = 0, c = 0;
    Coord N = 0;      // N_{i+1}
    Coord Ni = 0;     // N_i
    Coord Hi = 0, Lpi = 0, Li = 0;
    Coord block = 0;  // length of B^V and B^C
    Rect bv, bc;
    Coord child_top = 0;  // top row of every child box
    std::vector<VarGadget> vars;
    std::vector<ClauseGadget> clauses;
};

struct InstanceTemplate {
    enum class Kind { level0, wide, composite };
    Kind kind = Kind::level0;
    int level = 0;
    Coord L = 0;   // length of Z
    Coord Lp = 0;  // box length
    Coord H = 0;   // box height
    RegionSet deleted;                 // box-local
    std::vector<DemandPair> pairs;     // sorted by slot
    std::vector<Placement> children;
    std::vector<NamedRect> layout;     // gadget rects, box-local
    std::shared_ptr<const CompositeLayout> composite;
    std::string schedule_digest;

    CutOutBox box() const { return {GridSpec{Lp, H}, deleted}; }
    Coord middle_row() const { return (H + 1) / 2; }
};

TemplatePtr build_level0(const Schedule& s);
TemplatePtr widen(const TemplatePtr& t, Coord c);
// Refuses (BuildError) when the ledger for the step fails or a parameter is
// not an integer that fits in 64 bits.
TemplatePtr build_next_level(const TemplatePtr& ti, const Formula& f, const Schedule& s);
TemplatePtr build_level(const Formula& f, const Schedule& s, int level);

struct HostPlacement {
    GridSpec host;
    Coord z_col = 0;    // host column of slot 1 (row 1)
    Vertex box_anchor;  // host position of box-local (1, 1)
    bool operator==(const HostPlacement&) const = default;
};

HostPlacement default_placement(const InstanceTemplate& t);
// Throws BuildError naming the violated bound.
void check_placement(const InstanceTemplate& t, const HostPlacement& p);

struct InstancePair {
    std::string label;
    Vertex s, t;
    bool operator==(const InstancePair&) const = default;
};

// One cut-out box of the placement tree (an instance box at some level).
struct BoxImage {
    std::string label;  // "" for the top box, else child label path
    int level = 0;
    Rect rect;
    std::size_t first_pair = 0;  // pairs [first_pair, last_pair) belong to this box
    std::size_t last_pair = 0;
    bool operator==(const BoxImage&) const = default;
};

struct RoutingInstance {
    GridSpec host;
    HostPlacement placement;
    RegionSet deleted;
    std::vector<InstancePair> pairs;  // sorted by source column
    std::vector<BoxImage> boxes;      // preorder; boxes[0] is B(I)
    std::vector<NamedRect> layout;    // gadget rects, host coordinates
    int level = 0;
    std::string schedule_digest;
    TemplatePtr tmpl;                 // may be null for parsed documents

    // Vertical line from destination k down to the bottom row of its
    // innermost cut-out box (bottom row excluded, it is deleted). Without
    // boxes it ends on the bottom row of the host.
    Rect q_line(std::size_t k) const;
    // Innermost box containing destination k.
    std::size_t innermost_box(std::size_t k) const;
};

RoutingInstance instantiate(const TemplatePtr& t, const HostPlacement& p);

}  // namespace gridndp
