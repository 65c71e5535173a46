#pragma once

#include "gridndp/builder.hpp"
#include "gridndp/edp.hpp"
#include "gridndp/router.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridndp {

class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Undirected simple graph with named vertices; adjacency lists are kept
// sorted so that searches are deterministic.
class Graph {
public:
    int add_vertex(const std::string& name);
    int add_vertex();  // unnamed, no duplicate check
    void add_edge(int u, int v);
    int find(const std::string& name) const;  // -1 if absent
    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<int>& adj(int v) const { return adj_[v]; }
    const std::string& name(int v) const { return names_[v]; }
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> adj_;
};

struct GraphPair {
    std::string label;
    int s = 0, t = 0;
};

struct GraphInstance {
    std::string name;
    Graph g;
    std::vector<GraphPair> pairs;
    std::vector<Vertex> coords;  // grid position per vertex; empty for abstract graphs
};

struct GraphSolution {
    std::vector<std::size_t> routed;       // pair indices, increasing
    std::vector<std::vector<int>> paths;   // vertex sequences, parallel to routed
};

struct ExactLimits {
    std::int64_t max_vertices = 10'000;
    std::size_t max_pairs = 12;
    std::uint64_t max_steps = 20'000'000;  // search steps per subset
};

struct OptimalSolution {
    std::size_t optimum = 0;
    GraphSolution witness;
    std::uint64_t subsets_tested = 0;
};

inline constexpr std::int64_t kGreedyAreaLimit = 10'000'000;

// Routes exactly the given pairs, or reports that no disjoint routing exists.
std::optional<GraphSolution> route_subset(const GraphInstance& gi, const std::vector<std::size_t>& subset,
                                          RouteMode mode, std::uint64_t max_steps = ExactLimits{}.max_steps);
OptimalSolution exact_solve(const GraphInstance& gi, RouteMode mode, const ExactLimits& lim = {});
GraphSolution greedy_solve(const GraphInstance& gi);

// Maximum number of vertex-disjoint paths from sources to sinks (any
// matching); sources and sinks may not overlap.
int max_disjoint_paths(const Graph& g, const std::vector<int>& sources, const std::vector<int>& sinks);

// Graph of the surviving vertices of a grid instance (or of its wall),
// vertex names "r,c".
GraphInstance grid_graph(const RoutingInstance& inst, std::int64_t area_limit);
GraphInstance wall_graph(const EdpInstance& e, std::int64_t area_limit);
// Vertex sequence of grid_graph / wall_graph back to a polyline.
Path vertex_path(const GraphInstance& gi, const std::vector<int>& seq);
RoutedSolution to_routed(const RoutingInstance& inst, const GraphInstance& gi, const GraphSolution& s, RouteMode mode);

RoutedSolution greedy_solve(const RoutingInstance& inst, std::int64_t area_limit = kGreedyAreaLimit);

struct GridOptimum {
    std::size_t optimum = 0;
    RoutedSolution witness;
};
GridOptimum exact_solve(const RoutingInstance& inst, RouteMode mode, const ExactLimits& lim = {});

}  // namespace gridndp
