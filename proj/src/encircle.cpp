#include "gridndp/encircle.hpp"

#include "gridndp/edp.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace gridndp {

std::size_t EncirclingIndex::index(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw SelectionError("pair " + label + " is not routed");
    return static_cast<std::size_t>(it - labels.begin());
}

bool EncirclingIndex::encircles(std::size_t a, std::size_t b) const {
    if (a == b) return false;
    auto it = hits[a].find(b);
    return it != hits[a].end() && it->second > 0;
}

Coord EncirclingIndex::on_lines(std::size_t a, const std::vector<std::size_t>& bs) const {
    Coord n = 0;
    for (std::size_t b : bs) {
        if (b == a) continue;
        auto it = hits[a].find(b);
        if (it != hits[a].end()) n += it->second;
    }
    return n;
}

std::size_t EncirclingIndex::max_encirclers() const {
    std::vector<std::size_t> count(labels.size(), 0);
    for (std::size_t a = 0; a < hits.size(); ++a)
        for (const auto& [b, n] : hits[a])
            if (n > 0 && a != b) ++count[b];
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

EncirclingIndex build_encircling_index(const RoutingInstance& inst, const RoutedSolution& sol) {
    EncirclingIndex idx;
    std::unordered_map<std::string, std::size_t> pair_of;
    for (std::size_t k = 0; k < inst.pairs.size(); ++k) pair_of[inst.pairs[k].label] = k;
    const WallSpec spec{inst.host, sol.mode == RouteMode::edp};
    const std::size_t P = sol.routes.size();
    std::vector<std::vector<Rect>> owners(2 * P);
    for (std::size_t a = 0; a < P; ++a) {
        const auto& r = sol.routes[a];
        auto it = pair_of.find(r.label);
        if (it == pair_of.end()) throw SelectionError("pair " + r.label + " is not in the instance");
        idx.labels.push_back(r.label);
        idx.q.push_back(inst.q_line(it->second));
        owners[a] = wall_vertex_pieces(spec, r.path);
        owners[P + a] = {idx.q.back()};
    }
    idx.hits.resize(P);
    for (const auto& c : pieces_disjoint(owners).conflicts) {
        if (c.a >= P || c.b < P) continue;  // path-path or line-line
        const std::size_t a = c.a, b = c.b - P;
        if (a == b) continue;
        Coord n = 0;
        for (const auto& pc : owners[a])
            if (pc.intersects(idx.q[b])) {
                Rect x = pc.intersect(idx.q[b]);
                n += x.height() * x.width();
            }
        idx.hits[a][b] = n;
    }
    return idx;
}

bool encircles(const RoutingInstance& inst, const RoutedSolution& sol, const std::string& a, const std::string& b) {
    auto idx = build_encircling_index(inst, sol);
    return idx.encircles(idx.index(a), idx.index(b));
}

std::vector<std::string> select_non_encircling(const EncirclingIndex& idx,
                                               const std::vector<std::vector<std::string>>& groups, Coord H) {
    const Coord r = static_cast<Coord>(groups.size());
    if (r == 0) return {};
    // Quota at the start of iteration l (1-based): (r^2 - r(l-1)) H / 2, rounded up.
    auto quota = [&](Coord l) { return ((r * r - r * (l - 1)) * H + 1) / 2; };
    std::set<std::string> seen;
    std::vector<std::vector<std::size_t>> S(r);
    for (Coord j = 0; j < r; ++j) {
        std::vector<std::string> g = groups[j];
        std::sort(g.begin(), g.end());
        for (const auto& l : g)
            if (!seen.insert(l).second) throw SelectionError("pair " + l + " appears in two groups");
        if (2 * static_cast<Coord>(g.size()) < r * r * H)
            throw SelectionError("group S_" + std::to_string(j + 1) + " has " + std::to_string(g.size()) +
                                 " pairs, fewer than r^2 H / 2 = " + std::to_string(r * r * H) + "/2");
        g.resize(static_cast<std::size_t>(quota(1)));
        for (const auto& l : g) S[j].push_back(idx.index(l));
    }
    std::vector<std::string> out;
    for (Coord l = 1; l < r; ++l) {
        std::vector<std::size_t> rest;
        for (Coord j = l; j < r; ++j) rest.insert(rest.end(), S[j].begin(), S[j].end());
        std::size_t chosen = idx.labels.size();
        for (std::size_t a : S[l - 1])
            if (2 * idx.on_lines(a, rest) <= (r - 1) * H) {
                chosen = a;
                break;
            }
        if (chosen == idx.labels.size())
            throw SelectionError("iteration " + std::to_string(l) + ": every candidate meets more than (r-1)H/2 line vertices");
        out.push_back(idx.labels[chosen]);
        for (Coord j = l; j < r; ++j) {
            auto& s = S[j];
            s.erase(std::remove_if(s.begin(), s.end(),
                                   [&](std::size_t b) { return idx.encircles(b, chosen) || idx.encircles(chosen, b); }),
                    s.end());
            const Coord q = quota(l + 1);
            if (static_cast<Coord>(s.size()) < q)
                throw SelectionError("iteration " + std::to_string(l) + ": group S_" + std::to_string(j + 1) +
                                     " drops below " + std::to_string(q) + " pairs");
            s.resize(static_cast<std::size_t>(q));
        }
    }
    if (S[r - 1].empty()) throw SelectionError("last group is empty");
    out.push_back(idx.labels[S[r - 1].front()]);
    return out;
}

bool is_non_encircling(const EncirclingIndex& idx, const std::vector<std::string>& selection) {
    std::vector<std::size_t> ix;
    for (const auto& l : selection) ix.push_back(idx.index(l));
    for (std::size_t a : ix)
        for (std::size_t b : ix)
            if (idx.encircles(a, b)) return false;
    return true;
}

std::vector<std::vector<std::string>> all_non_encircling(const EncirclingIndex& idx,
                                                         const std::vector<std::vector<std::string>>& groups,
                                                         std::size_t limit) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::size_t> pick;
    std::vector<std::vector<std::size_t>> g(groups.size());
    for (std::size_t j = 0; j < groups.size(); ++j)
        for (const auto& l : groups[j]) g[j].push_back(idx.index(l));
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (out.size() >= limit) return;
        if (j == g.size()) {
            std::vector<std::string> sel;
            for (std::size_t a : pick) sel.push_back(idx.labels[a]);
            out.push_back(std::move(sel));
            return;
        }
        for (std::size_t c : g[j]) {
            bool ok = true;
            for (std::size_t a : pick)
                if (idx.encircles(a, c) || idx.encircles(c, a)) ok = false;
            if (!ok) continue;
            pick.push_back(c);
            self(self, j + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<BoxLoad> classify_boxes(const RoutingInstance& inst, const RoutedSolution& sol) {
    std::unordered_map<std::string, std::size_t> pair_of;
    for (std::size_t k = 0; k < inst.pairs.size(); ++k) pair_of[inst.pairs[k].label] = k;
    std::vector<char> routed(inst.pairs.size(), 0);
    for (const auto& r : sol.routes) {
        auto it = pair_of.find(r.label);
        if (it != pair_of.end()) routed[it->second] = 1;
    }
    std::vector<std::size_t> prefix(inst.pairs.size() + 1, 0);
    for (std::size_t k = 0; k < inst.pairs.size(); ++k) prefix[k + 1] = prefix[k] + routed[k];
    std::vector<BoxLoad> out;
    for (const auto& b : inst.boxes) {
        BoxLoad l;
        l.box = b.label;
        l.level = b.level;
        l.routed = prefix[b.last_pair] - prefix[b.first_pair];
        l.interesting = static_cast<Coord>(l.routed) >= 25 * b.rect.height();
        out.push_back(l);
    }
    return out;
}

}  // namespace gridndp
