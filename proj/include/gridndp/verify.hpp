#pragma once

#include "gridndp/builder.hpp"
#include "gridndp/edp.hpp"
#include "gridndp/router.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gridndp {

// Raised for solutions that cannot be checked at all: a path that is not a
// sequence of contiguous axis-aligned (or in-cell zigzag) steps.
class MalformedSolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VerificationFailure {
    std::string check;  // labels, digest, mode, endpoints, containment, disjointness, box, order, certificates
    std::string message;
};

struct VerificationReport {
    RouteMode mode = RouteMode::ndp;
    std::size_t routed = 0;
    std::vector<std::string> checks;  // names of the checks that ran
    std::vector<VerificationFailure> failures;

    bool ok() const { return failures.empty(); }
    bool failed(const std::string& check) const;
    std::string format() const;
};

// Failures per check are capped at this many messages; the count is kept.
inline constexpr std::size_t kMaxFailuresPerCheck = 20;

VerificationReport verify_solution(const RoutingInstance& inst, const RoutedSolution& sol, RouteMode mode);
VerificationReport verify_solution(const EdpInstance& e, const RoutedSolution& sol);

// Surviving top-row columns of a box in host coordinates.
std::vector<RegionSet::Interval> box_opening(const RoutingInstance& inst, const BoxImage& b);

}  // namespace gridndp
