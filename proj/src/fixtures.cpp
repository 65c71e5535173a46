#include "gridndp/fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace gridndp {

GraphInstance star_fixture(int d) {
    if (d < 1) throw std::invalid_argument("star needs d >= 1");
    GraphInstance gi;
    gi.name = "star-d" + std::to_string(d);
    for (int i = 1; i <= d + 2; ++i) gi.g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i <= d; ++i) gi.g.add_edge(i, d + 1);
    for (int i = 0; i < d + 2; ++i)
        for (int j = i + 1; j < d + 2; ++j) gi.pairs.push_back({gi.g.name(i) + "-" + gi.g.name(j), i, j});
    return gi;
}

GraphInstance k5_gadget() {
    GraphInstance gi;
    gi.name = "k5-gadget";
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) gi.g.add_vertex("t" + std::to_string(i) + "." + std::to_string(j));
    for (int i = 1; i <= 5; ++i) gi.g.add_vertex("a" + std::to_string(i));
    const int b = gi.g.add_vertex("b");
    auto hub = [&](int i) { return 25 + i - 1; };
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) gi.g.add_edge((i - 1) * 5 + (j - 1), hub(i));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            if ((i == 1 && j == 3) || (i == 2 && j == 4)) continue;
            gi.g.add_edge(hub(i), hub(j));
        }
    for (int i : {1, 3, 2, 4}) gi.g.add_edge(hub(i), b);
    return gi;
}

GraphInstance with_pairs(GraphInstance gi, const NamedPairs& pairs) {
    gi.pairs.clear();
    for (const auto& [a, b] : pairs) {
        int s = gi.g.find(a), t = gi.g.find(b);
        if (s < 0 || t < 0) throw std::invalid_argument("unknown terminal in pair " + a + "-" + b);
        gi.pairs.push_back({a + "-" + b, s, t});
    }
    return gi;
}

NamedPairs one_group_pairs(int group, int count) {
    if (group < 1 || group > 5 || count < 0 || count > 5) throw std::invalid_argument("group 1..5, count 0..5");
    std::vector<int> others;
    for (int g = 1; g <= 5; ++g)
        if (g != group) others.push_back(g);
    NamedPairs out;
    for (int j = 1; j <= count; ++j) {
        int g = others[(j - 1) % 4];
        out.push_back({"t" + std::to_string(group) + "." + std::to_string(j),
                       "t" + std::to_string(g) + "." + std::to_string(j)});
    }
    return out;
}

NamedPairs k5_pattern_pairs() {
    NamedPairs out;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            out.push_back({"t" + std::to_string(i) + "." + std::to_string(j), "t" + std::to_string(j) + "." + std::to_string(i)});
    return out;
}

RoutingInstance grid_fixture(const std::string& name, Coord length, Coord height,
                             const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    RoutingInstance inst;
    inst.host = {length, height};
    inst.schedule_digest = "fixture:" + name;
    inst.level = 0;
    std::vector<std::pair<Vertex, Vertex>> sorted = pairs;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first.col, a.first.row) < std::tie(b.first.col, b.first.row);
    });
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (!inst.host.contains(sorted[k].first) || !inst.host.contains(sorted[k].second))
            throw std::invalid_argument("fixture terminal outside the grid");
        inst.pairs.push_back({"p" + std::to_string(k + 1), sorted[k].first, sorted[k].second});
    }
    return inst;
}

RoutingInstance crossing_fixture() {
    return grid_fixture("crossing", 5, 5, {{{1, 3}, {5, 3}}, {{3, 1}, {3, 5}}});
}

RoutingInstance parallel_fixture(int k) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int j = 1; j <= k; ++j) pairs.push_back({{1, 2 * j}, {5, 2 * j}});
    return grid_fixture("parallel-" + std::to_string(k), 2 * k + 1, 5, pairs);
}

RoutingInstance random_grid_fixture(unsigned seed, Coord length, Coord height, int pairs) {
    if (2 * pairs > length * height) throw std::invalid_argument("too many pairs for the grid");
    std::mt19937 rng(seed);
    std::set<Vertex> used;
    auto pick = [&]() {
        for (;;) {
            Vertex v{static_cast<Coord>(rng() % height) + 1, static_cast<Coord>(rng() % length) + 1};
            if (used.insert(v).second) return v;
        }
    };
    std::vector<std::pair<Vertex, Vertex>> ps;
    for (int k = 0; k < pairs; ++k) {
        Vertex a = pick();
        Vertex b = pick();
        ps.push_back({a, b});
    }
    return grid_fixture("random-" + std::to_string(seed), length, height, ps);
}

}  // namespace gridndp
