#pragma once

#include "gridndp/builder.hpp"
#include "gridndp/solvers.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gridndp {

// Star with leaves v1..v(d+1) around centre v(d+2); every pair of the d+2
// vertices is a demand pair.
GraphInstance star_fixture(int d);

// Terminals t<i>.<j> (group i, index j, both 1..5) hang off hubs a1..a5; the
// hubs form a K5 drawn with one crossing, between a1-a3 and a2-a4, which is
// replaced by the vertex b. No demand pairs.
GraphInstance k5_gadget();
using NamedPairs = std::vector<std::pair<std::string, std::string>>;
GraphInstance with_pairs(GraphInstance gi, const NamedPairs& pairs);
// count pairs, each joining a distinct terminal of group to a distinct
// terminal of another group (restricted: no terminal repeats).
NamedPairs one_group_pairs(int group, int count);
// One pair per K5 edge (i, j): t<i>.<j> to t<j>.<i>.
NamedPairs k5_pattern_pairs();

// Small grid instances without deletions.
RoutingInstance grid_fixture(const std::string& name, Coord length, Coord height,
                             const std::vector<std::pair<Vertex, Vertex>>& pairs);
// Two pairs whose terminals alternate around the boundary of a 5x5 grid.
RoutingInstance crossing_fixture();
// k vertical pairs in alternate columns of a (2k+1) x 5 grid.
RoutingInstance parallel_fixture(int k);
// Random pairs with distinct terminals on a small grid.
RoutingInstance random_grid_fixture(unsigned seed, Coord length, Coord height, int pairs);

}  // namespace gridndp
