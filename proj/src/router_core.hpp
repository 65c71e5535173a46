#pragma once

// Shared by the grid router and the wall router. Wall routing runs the same
// construction on cells: cell u of a box covers box columns 2u and 2u+1.

#include "gridndp/builder.hpp"
#include "gridndp/router.hpp"

#include <map>
#include <vector>

namespace gridndp::detail {

struct InBoxRouting {
    std::vector<std::size_t> pairs;  // template pair indices, source order
    std::vector<Coord> entry;        // top-row entry coordinate per pair
    std::vector<Path> paths;         // box-local routing coordinates
    std::vector<Vertex> tops;        // gadget top vertex per pair (composite only)
};

class Router {
public:
    Router(RouteMode mode, Assignment a) : mode_(mode), a_(std::move(a)) {}

    // NDP selection M*(t), template pair indices in source order.
    const std::vector<std::size_t>& select(const TemplatePtr& t);
    // parity 0 routes the whole selection; 1 and 2 route its odd/even half.
    const InBoxRouting& route(const TemplatePtr& t, int parity);

    RouteMode mode() const { return mode_; }
    Coord scale() const { return mode_ == RouteMode::edp ? 2 : 1; }

private:
    struct ChildRef {
        int child;
        std::size_t index;  // pair index inside the child template
    };
    const std::vector<ChildRef>& owners(const TemplatePtr& t);
    InBoxRouting route_composite(const TemplatePtr& t, int parity);

    RouteMode mode_;
    Assignment a_;
    std::map<const InstanceTemplate*, std::vector<std::size_t>> sel_;
    std::map<std::pair<const InstanceTemplate*, int>, InBoxRouting> routes_;
    std::map<const InstanceTemplate*, std::vector<ChildRef>> owners_;
};

struct HostRouting {
    std::vector<std::size_t> pairs;  // instance pair indices, source order
    std::vector<Path> paths;         // host routing coordinates
    std::vector<Vertex> tops;        // host routing coordinates
};

// Host routing coordinates: grid columns (NDP) or cells (EDP, cell k covers
// host columns 2k-1 and 2k).
HostRouting route_host(const RoutingInstance& inst, const Assignment& a, RouteMode mode, int parity);

std::vector<std::size_t> parity_half(const std::vector<std::size_t>& v, int parity);

}  // namespace gridndp::detail
