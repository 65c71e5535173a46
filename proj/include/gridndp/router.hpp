#pragma once

#include "gridndp/builder.hpp"
#include "gridndp/geometry.hpp"
#include "gridndp/sat.hpp"

#include <string>
#include <vector>

namespace gridndp {

enum class RouteMode { ndp, edp };

struct RoutedPath {
    std::string label;
    Path path;
    bool operator==(const RoutedPath&) const = default;
};

// Crossings of one cut-out box's opening, in source order. For EDP the
// recorded vertex is the left end of the crossing edge.
struct BoxCertificate {
    std::string box;  // BoxImage label
    std::vector<Vertex> crossings;
    bool operator==(const BoxCertificate&) const = default;
};

struct RoutedSolution {
    RouteMode mode = RouteMode::ndp;
    std::string schedule_digest;
    std::vector<RoutedPath> routes;             // sorted by source column
    std::vector<BoxCertificate> certificates;   // empty: no box-respect claim
    bool operator==(const RoutedSolution&) const = default;
};

class RoutingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Labels of the pairs routed by route_yes, in source order. Throws
// RoutingError naming an unsatisfied clause.
std::vector<std::string> select_demands(const RoutingInstance& inst, const Assignment& a);

// Paths from every selected source to its gadget top vertex: the B(x_j)
// top row for variable pairs, the child opening for clause pairs. Level >= 1.
std::vector<RoutedPath> route_to_box_tops(const RoutingInstance& inst, const Assignment& a);

RoutedSolution route_yes(const RoutingInstance& inst, const Assignment& a);

// Fills certificates from the paths: for every box holding a routed pair,
// the first opening vertex each routed path meets.
std::vector<BoxCertificate> collect_certificates(const RoutingInstance& inst, const RoutedSolution& sol);

}  // namespace gridndp
