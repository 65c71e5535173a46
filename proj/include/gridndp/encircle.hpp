#pragma once

#include "gridndp/builder.hpp"
#include "gridndp/router.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridndp {

class SelectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// For every routed pair b, the line Q_b below its destination, and for every
// routed pair a the number of vertices its path shares with each Q_b.
// Pairs are indexed by routed order.
struct EncirclingIndex {
    std::vector<std::string> labels;
    std::vector<Rect> q;                          // may be empty for abstract families
    std::vector<std::map<std::size_t, Coord>> hits;  // hits[a][b] = |P_a on Q_b|, a != b

    std::size_t index(const std::string& label) const;  // throws SelectionError if not routed
    // a encircles b; a pair never encircles itself.
    bool encircles(std::size_t a, std::size_t b) const;
    // Vertices of P_a on the union of the Q lines of bs (lines are disjoint).
    Coord on_lines(std::size_t a, const std::vector<std::size_t>& bs) const;
    // Largest number of pairs encircling a single pair.
    std::size_t max_encirclers() const;
};

EncirclingIndex build_encircling_index(const RoutingInstance& inst, const RoutedSolution& sol);

bool encircles(const RoutingInstance& inst, const RoutedSolution& sol, const std::string& a, const std::string& b);

// Iterative filtering: one pair per group, pairwise non-encircling. Groups
// must be disjoint and hold at least r^2 H / 2 pairs each. Within a group
// pairs are considered in label order.
std::vector<std::string> select_non_encircling(const EncirclingIndex& idx,
                                               const std::vector<std::vector<std::string>>& groups, Coord H);

bool is_non_encircling(const EncirclingIndex& idx, const std::vector<std::string>& selection);

// Every non-encircling selection (one label per group), stopping after limit.
std::vector<std::vector<std::string>> all_non_encircling(const EncirclingIndex& idx,
                                                         const std::vector<std::vector<std::string>>& groups,
                                                         std::size_t limit);

// Routed pairs per box of the placement tree, and whether the count reaches
// 25 times the height of the level the box belongs to.
struct BoxLoad {
    std::string box;
    int level = 0;
    std::size_t routed = 0;
    bool interesting = false;
};
std::vector<BoxLoad> classify_boxes(const RoutingInstance& inst, const RoutedSolution& sol);

}  // namespace gridndp
