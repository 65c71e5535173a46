#include "gridndp/solvers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace gridndp {

int Graph::add_vertex(const std::string& name) {
    if (find(name) >= 0) throw std::invalid_argument("duplicate vertex " + name);
    names_.push_back(name);
    adj_.emplace_back();
    return size() - 1;
}

int Graph::add_vertex() {
    names_.emplace_back();
    adj_.emplace_back();
    return size() - 1;
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= size() || v >= size()) throw std::invalid_argument("bad edge");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

int Graph::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::size_t Graph::edge_count() const {
    std::size_t n = 0;
    for (const auto& a : adj_) n += a.size();
    return n / 2;
}

bool Graph::has_edge(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

namespace {

// Dinic max flow on a small directed network.
class Flow {
public:
    explicit Flow(int n) : head_(n, -1), level_(n), it_(n) {}
    void arc(int u, int v, int cap) {
        to_.push_back(v), cap_.push_back(cap), next_.push_back(head_[u]), head_[u] = static_cast<int>(to_.size()) - 1;
        to_.push_back(u), cap_.push_back(0), next_.push_back(head_[v]), head_[v] = static_cast<int>(to_.size()) - 1;
    }
    int run(int s, int t, int want) {
        int total = 0;
        while (total < want && bfs(s, t)) {
            it_ = head_;
            while (int f = dfs(s, t, want - total)) total += f;
        }
        return total;
    }

private:
    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<int> q{s};
        level_[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int e = head_[u]; e >= 0; e = next_[e])
                if (cap_[e] > 0 && level_[to_[e]] < 0) {
                    level_[to_[e]] = level_[u] + 1;
                    q.push_back(to_[e]);
                }
        }
        return level_[t] >= 0;
    }
    int dfs(int u, int t, int f) {
        if (u == t) return f;
        for (int& e = it_[u]; e >= 0; e = next_[e]) {
            int v = to_[e];
            if (cap_[e] > 0 && level_[v] == level_[u] + 1)
                if (int d = dfs(v, t, std::min(f, cap_[e]))) {
                    cap_[e] -= d;
                    cap_[e ^ 1] += d;
                    return d;
                }
        }
        return 0;
    }
    std::vector<int> head_, level_, it_, to_, cap_, next_;
};

// Upper bound on the number of pairs routable at once in the residual
// graph, by a single-commodity relaxation. blocked vertices (NDP) or used
// edges (EDP) are excluded.
int flow_bound(const Graph& g, const std::vector<std::pair<int, int>>& pairs, RouteMode mode,
               const std::vector<char>& blocked, const std::set<std::pair<int, int>>& used) {
    const int n = g.size();
    const bool ndp = mode == RouteMode::ndp;
    const int S = ndp ? 2 * n : n, T = S + 1;
    Flow f(T + 1);
    for (int u = 0; u < n; ++u) {
        if (ndp) {
            if (blocked[u]) continue;
            f.arc(2 * u, 2 * u + 1, 1);
            for (int v : g.adj(u))
                if (!blocked[v]) f.arc(2 * u + 1, 2 * v, 1);
        } else {
            for (int v : g.adj(u))
                if (u < v && !used.count({u, v})) {
                    f.arc(u, v, 1);
                    f.arc(v, u, 1);
                }
        }
    }
    for (const auto& [s, t] : pairs) {
        f.arc(S, ndp ? 2 * s : s, 1);
        f.arc(ndp ? 2 * t + 1 : t, T, 1);
    }
    return f.run(S, T, static_cast<int>(pairs.size()));
}

class SubsetRouter {
public:
    SubsetRouter(const GraphInstance& gi, std::vector<std::pair<int, int>> pairs, RouteMode mode,
                 std::uint64_t budget)
        : g_(gi.g), pairs_(std::move(pairs)), mode_(mode), budget_(budget) {}

    std::optional<std::vector<std::vector<int>>> run() {
        const int n = g_.size();
        blocked_.assign(n, 0);
        if (mode_ == RouteMode::ndp) {
            std::set<int> terms;
            for (const auto& [s, t] : pairs_) {
                if (!terms.insert(s).second || (t != s && !terms.insert(t).second)) return std::nullopt;
            }
            for (int v : terms) blocked_[v] = 1;
        }
        paths_.assign(pairs_.size(), {});
        if (!solve(0)) return std::nullopt;
        return paths_;
    }

private:
    bool usable_edge(int u, int v) const {
        return mode_ == RouteMode::ndp || !used_.count(std::minmax(u, v));
    }

    // BFS distances to t in the residual graph.
    std::vector<int> dist_to(int t, int s) const {
        std::vector<int> d(g_.size(), -1);
        std::deque<int> q{t};
        d[t] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g_.adj(u)) {
                if (d[v] >= 0 || on_path_[v] || !usable_edge(u, v)) continue;
                if (mode_ == RouteMode::ndp && blocked_[v] && v != s) continue;
                d[v] = d[u] + 1;
                q.push_back(v);
            }
        }
        return d;
    }

    bool solve(std::size_t i) {
        if (i == pairs_.size()) return true;
        std::vector<std::pair<int, int>> rest(pairs_.begin() + i, pairs_.end());
        if (mode_ == RouteMode::ndp)
            for (const auto& [s, t] : rest) blocked_[s] = blocked_[t] = 0;
        int fb = flow_bound(g_, rest, mode_, blocked_, used_);
        if (mode_ == RouteMode::ndp)
            for (const auto& [s, t] : rest) blocked_[s] = blocked_[t] = 1;
        if (fb < static_cast<int>(rest.size())) return false;
        const auto [s, t] = pairs_[i];
        if (s == t) {
            paths_[i] = {s};
            return solve(i + 1);
        }
        on_path_.assign(g_.size(), 0);
        std::vector<int> path{s};
        on_path_[s] = 1;
        return extend(i, path, t);
    }

    bool extend(std::size_t i, std::vector<int>& path, int t) {
        if (++steps_ > budget_) throw LimitExceeded("exact search exceeded " + std::to_string(budget_) + " steps");
        const int u = path.back();
        if (u == t) {
            paths_[i] = path;
            auto saved_on = on_path_;
            std::vector<std::pair<int, int>> added;
            for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                if (mode_ == RouteMode::ndp) blocked_[path[k]] = 1;
                else added.push_back(std::minmax(path[k], path[k + 1]));
            }
            blocked_[t] = blocked_[t] || mode_ == RouteMode::ndp;
            for (const auto& e : added) used_.insert(e);
            bool ok = solve(i + 1);
            for (const auto& e : added) used_.erase(e);
            if (mode_ == RouteMode::ndp)
                for (std::size_t k = 1; k + 1 < path.size(); ++k) blocked_[path[k]] = 0;
            on_path_ = saved_on;
            return ok;
        }
        auto d = dist_to(t, -1);
        std::vector<int> next;
        for (int v : g_.adj(u)) {
            if (on_path_[v] || !usable_edge(u, v) || d[v] < 0) continue;
            if (mode_ == RouteMode::ndp && blocked_[v] && v != t) continue;
            next.push_back(v);
        }
        std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return d[a] < d[b]; });
        for (int v : next) {
            path.push_back(v);
            on_path_[v] = 1;
            if (mode_ == RouteMode::edp) used_.insert(std::minmax(u, v));
            bool ok = extend(i, path, t);
            if (mode_ == RouteMode::edp) used_.erase(std::minmax(u, v));
            on_path_[v] = 0;
            path.pop_back();
            if (ok) return true;
        }
        return false;
    }

    const Graph& g_;
    std::vector<std::pair<int, int>> pairs_;
    RouteMode mode_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    std::vector<char> blocked_, on_path_;
    std::set<std::pair<int, int>> used_;
    std::vector<std::vector<int>> paths_;
};

}  // namespace

std::optional<GraphSolution> route_subset(const GraphInstance& gi, const std::vector<std::size_t>& subset,
                                          RouteMode mode, std::uint64_t max_steps) {
    std::vector<std::size_t> order = subset;
    std::sort(order.begin(), order.end());
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k : order) pairs.push_back({gi.pairs.at(k).s, gi.pairs.at(k).t});
    SubsetRouter r(gi, pairs, mode, max_steps);
    auto paths = r.run();
    if (!paths) return std::nullopt;
    return GraphSolution{order, *paths};
}

OptimalSolution exact_solve(const GraphInstance& gi, RouteMode mode, const ExactLimits& lim) {
    if (gi.g.size() > lim.max_vertices)
        throw LimitExceeded("exact solver: " + std::to_string(gi.g.size()) + " vertices exceed the limit of " +
                            std::to_string(lim.max_vertices));
    if (gi.pairs.size() > lim.max_pairs)
        throw LimitExceeded("exact solver: " + std::to_string(gi.pairs.size()) + " pairs exceed the limit of " +
                            std::to_string(lim.max_pairs));
    OptimalSolution out;
    // Memo keyed by the terminal multiset of a subset; pairs with the same
    // terminals are interchangeable.
    std::map<std::vector<std::pair<int, int>>, std::optional<GraphSolution>> memo;
    auto key_of = [&](const std::vector<std::size_t>& sub) {
        std::vector<std::pair<int, int>> k;
        for (std::size_t i : sub) k.push_back(std::minmax(gi.pairs[i].s, gi.pairs[i].t));
        std::sort(k.begin(), k.end());
        return k;
    };
    auto test = [&](const std::vector<std::size_t>& sub) -> const std::optional<GraphSolution>& {
        auto key = key_of(sub);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        ++out.subsets_tested;
        return memo.emplace(key, route_subset(gi, sub, mode, lim.max_steps)).first->second;
    };
    const std::size_t k = gi.pairs.size();
    std::vector<std::size_t> alive;
    for (std::size_t i = 0; i < k; ++i)
        if (test({i})) alive.push_back(i);
    std::vector<std::vector<char>> compat(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < alive.size(); ++a)
        for (std::size_t b = a + 1; b < alive.size(); ++b)
            compat[alive[a]][alive[b]] = compat[alive[b]][alive[a]] = test({alive[a], alive[b]}).has_value();
    // Equivalent pairs (same terminals) are only taken as a prefix of their
    // class, in index order.
    std::vector<int> prev_equiv(k, -1);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (std::minmax(gi.pairs[a].s, gi.pairs[a].t) == std::minmax(gi.pairs[b].s, gi.pairs[b].t))
                prev_equiv[a] = static_cast<int>(b);

    for (std::size_t size = alive.size(); size >= 1; --size) {
        std::vector<std::size_t> pick;
        std::optional<GraphSolution> found;
        // Lexicographic combinations of alive, pruned by pairwise compatibility.
        std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
            if (pick.size() == size) {
                if (size <= 2) {
                    found = test(pick);
                    return found.has_value();
                }
                const auto& r = test(pick);
                if (r) found = r;
                return r.has_value();
            }
            for (std::size_t x = from; x + (size - pick.size()) <= alive.size(); ++x) {
                std::size_t c = alive[x];
                bool ok = true;
                for (std::size_t p : pick)
                    if (!compat[p][c]) ok = false;
                if (ok && prev_equiv[c] >= 0 &&
                    std::find(pick.begin(), pick.end(), static_cast<std::size_t>(prev_equiv[c])) == pick.end())
                    ok = false;
                if (!ok) continue;
                pick.push_back(c);
                if (rec(x + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (rec(0)) {
            out.optimum = size;
            out.witness = *found;
            return out;
        }
    }
    return out;
}

GraphSolution greedy_solve(const GraphInstance& gi) {
    const int n = gi.g.size();
    std::vector<char> removed(n, 0), routed(gi.pairs.size(), 0);
    GraphSolution out;
    std::vector<std::pair<std::size_t, std::vector<int>>> chosen;
    for (;;) {
        std::size_t best = gi.pairs.size();
        std::vector<int> best_path;
        for (std::size_t k = 0; k < gi.pairs.size(); ++k) {
            if (routed[k]) continue;
            const int s = gi.pairs[k].s, t = gi.pairs[k].t;
            if (removed[s] || removed[t]) continue;
            std::vector<int> par(n, -2);
            std::deque<int> q{s};
            par[s] = -1;
            while (!q.empty() && par[t] == -2) {
                int u = q.front();
                q.pop_front();
                for (int v : gi.g.adj(u))
                    if (par[v] == -2 && !removed[v]) {
                        par[v] = u;
                        q.push_back(v);
                    }
            }
            if (par[t] == -2) continue;
            std::vector<int> p;
            for (int v = t; v != -1; v = par[v]) p.push_back(v);
            std::reverse(p.begin(), p.end());
            if (best == gi.pairs.size() || p.size() < best_path.size()) {
                best = k;
                best_path = std::move(p);
            }
        }
        if (best == gi.pairs.size()) break;
        routed[best] = 1;
        for (int v : best_path) removed[v] = 1;
        chosen.push_back({best, std::move(best_path)});
    }
    std::sort(chosen.begin(), chosen.end());
    for (auto& [k, p] : chosen) {
        out.routed.push_back(k);
        out.paths.push_back(std::move(p));
    }
    return out;
}

int max_disjoint_paths(const Graph& g, const std::vector<int>& sources, const std::vector<int>& sinks) {
    std::set<int> a(sources.begin(), sources.end()), b(sinks.begin(), sinks.end());
    for (int v : a)
        if (b.count(v)) throw std::invalid_argument("source and sink sets overlap");
    const int n = g.size(), S = 2 * n, T = S + 1;
    Flow f(T + 1);
    for (int u = 0; u < n; ++u) {
        f.arc(2 * u, 2 * u + 1, 1);
        for (int v : g.adj(u)) f.arc(2 * u + 1, 2 * v, 1);
    }
    for (int s : a) f.arc(S, 2 * s, 1);
    for (int t : b) f.arc(2 * t + 1, T, 1);
    return f.run(S, T, std::numeric_limits<int>::max());
}

namespace {

GraphInstance build_grid_graph(const RoutingInstance& inst, std::int64_t area_limit, const EdpInstance* e,
                               std::vector<Vertex>& coords) {
    const Coord L = inst.host.length, H = inst.host.height;
    if (L * H > area_limit)
        throw LimitExceeded("grid area " + std::to_string(L * H) + " exceeds the limit of " + std::to_string(area_limit));
    GraphInstance gi;
    gi.name = "grid";
    std::vector<int> id(static_cast<std::size_t>(L * H), -1);
    auto at = [&](Coord r, Coord c) -> int& { return id[static_cast<std::size_t>((r - 1) * L + (c - 1))]; };
    for (Coord r = 1; r <= H; ++r)
        for (Coord c = 1; c <= L; ++c) {
            bool ok = e ? e->kept({r, c}) : !inst.deleted.contains({r, c});
            if (!ok) continue;
            at(r, c) = gi.g.add_vertex();
            coords.push_back({r, c});
        }
    for (Coord r = 1; r <= H; ++r)
        for (Coord c = 1; c <= L; ++c) {
            int u = at(r, c);
            if (u < 0) continue;
            if (c < L && at(r, c + 1) >= 0 && (!e || e->has_edge({r, c}, {r, c + 1}))) gi.g.add_edge(u, at(r, c + 1));
            if (r < H && at(r + 1, c) >= 0 && (!e || e->has_edge({r, c}, {r + 1, c}))) gi.g.add_edge(u, at(r + 1, c));
        }
    for (const auto& p : inst.pairs) {
        int s = at(p.s.row, p.s.col), t = at(p.t.row, p.t.col);
        if (s < 0 || t < 0) throw std::invalid_argument("terminal of " + p.label + " is not a graph vertex");
        gi.pairs.push_back({p.label, s, t});
    }
    return gi;
}

}  // namespace

GraphInstance grid_graph(const RoutingInstance& inst, std::int64_t area_limit) {
    std::vector<Vertex> coords;
    auto gi = build_grid_graph(inst, area_limit, nullptr, coords);
    gi.coords = std::move(coords);
    return gi;
}

GraphInstance wall_graph(const EdpInstance& e, std::int64_t area_limit) {
    std::vector<Vertex> coords;
    auto gi = build_grid_graph(e.base, area_limit, &e, coords);
    gi.name = "wall";
    gi.coords = std::move(coords);
    return gi;
}

Path vertex_path(const GraphInstance& gi, const std::vector<int>& seq) {
    Path p;
    for (int v : seq) p.push(gi.coords.at(v));
    return p;
}

RoutedSolution to_routed(const RoutingInstance& inst, const GraphInstance& gi, const GraphSolution& s, RouteMode mode) {
    RoutedSolution sol;
    sol.mode = mode;
    sol.schedule_digest = inst.schedule_digest;
    for (std::size_t j = 0; j < s.routed.size(); ++j)
        sol.routes.push_back({gi.pairs[s.routed[j]].label, vertex_path(gi, s.paths[j])});
    return sol;
}

RoutedSolution greedy_solve(const RoutingInstance& inst, std::int64_t area_limit) {
    auto gi = grid_graph(inst, area_limit);
    return to_routed(inst, gi, greedy_solve(gi), RouteMode::ndp);
}

GridOptimum exact_solve(const RoutingInstance& inst, RouteMode mode, const ExactLimits& lim) {
    GraphInstance gi;
    if (mode == RouteMode::edp) gi = wall_graph(to_wall_instance(inst), lim.max_vertices);
    else gi = grid_graph(inst, lim.max_vertices);
    auto opt = exact_solve(gi, mode, lim);
    return {opt.optimum, to_routed(inst, gi, opt.witness, mode)};
}

}  // namespace gridndp
