#include "gridndp/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace gridndp {

bool VerificationReport::failed(const std::string& check) const {
    return std::any_of(failures.begin(), failures.end(), [&](const auto& f) { return f.check == check; });
}

std::string VerificationReport::format() const {
    std::ostringstream os;
    os << "mode " << (mode == RouteMode::ndp ? "ndp" : "edp") << ", " << routed << " routed paths\n";
    for (const auto& c : checks) {
        std::size_t n = std::count_if(failures.begin(), failures.end(), [&](const auto& f) { return f.check == c; });
        os << "  " << c << std::string(c.size() < 14 ? 14 - c.size() : 1, ' ') << (n == 0 ? "pass" : "FAIL") << "\n";
    }
    for (const auto& f : failures) os << "  [" << f.check << "] " << f.message << "\n";
    os << (ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

namespace {

const std::vector<RegionSet::Interval>* row_intervals(const RegionSet& rs, Coord row) {
    const auto& bands = rs.bands();
    auto it = std::upper_bound(bands.begin(), bands.end(), row,
                               [](Coord r, const RegionSet::Band& b) { return r < b.r1; });
    if (it == bands.begin()) return nullptr;
    --it;
    return row <= it->r2 ? &it->cols : nullptr;
}

class Reporter {
public:
    explicit Reporter(VerificationReport& r) : r_(r) {}
    void start(const std::string& check) { r_.checks.push_back(check); }
    void fail(const std::string& check, const std::string& msg) {
        std::size_t& n = counts_[check];
        if (++n <= kMaxFailuresPerCheck) r_.failures.push_back({check, msg});
        else if (n == kMaxFailuresPerCheck + 1) r_.failures.push_back({check, "further failures omitted"});
    }

private:
    VerificationReport& r_;
    std::map<std::string, std::size_t> counts_;
};

struct TopSpan {
    Coord c1, c2;
    std::size_t box;
};

struct Hit {
    std::size_t box;
    Rect r;
};

Coord opening_col(const std::vector<RegionSet::Interval>& op, Coord j) {
    for (const auto& iv : op) {
        Coord w = iv.c2 - iv.c1 + 1;
        if (j <= w) return iv.c1 + j - 1;
        j -= w;
    }
    return 0;
}

std::string pts_string(const std::vector<Vertex>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + to_string(x);
    return s.empty() ? "none" : s;
}

VerificationReport verify_impl(const RoutingInstance& inst, const EdpInstance* e, const RoutedSolution& sol,
                               RouteMode mode) {
    VerificationReport rep;
    rep.mode = mode;
    rep.routed = sol.routes.size();
    Reporter rr(rep);
    const bool wall = mode == RouteMode::edp;
    const WallSpec spec{inst.host, wall};

    rr.start("mode");
    if (sol.mode != mode) rr.fail("mode", "solution was produced for the other mode");
    rr.start("digest");
    if (sol.schedule_digest != inst.schedule_digest)
        rr.fail("digest", "solution digest " + sol.schedule_digest + " differs from instance digest " +
                              inst.schedule_digest);

    rr.start("labels");
    std::unordered_map<std::string, std::size_t> pair_of;
    for (std::size_t k = 0; k < inst.pairs.size(); ++k) pair_of[inst.pairs[k].label] = k;
    std::vector<std::size_t> route_pair(sol.routes.size(), inst.pairs.size());
    std::vector<std::size_t> owner(inst.pairs.size(), sol.routes.size());  // pair -> route
    for (std::size_t i = 0; i < sol.routes.size(); ++i) {
        const auto& r = sol.routes[i];
        auto it = pair_of.find(r.label);
        if (it == pair_of.end()) {
            rr.fail("labels", "unknown demand pair " + r.label);
            continue;
        }
        if (owner[it->second] != sol.routes.size()) {
            rr.fail("labels", "demand pair " + r.label + " routed twice");
            continue;
        }
        owner[it->second] = i;
        route_pair[i] = it->second;
        try {
            if (wall) check_wall_path(spec, r.path);
            else check_axis_aligned(r.path);
        } catch (const std::exception& ex) {
            throw MalformedSolution("path of " + r.label + ": " + ex.what());
        }
    }

    rr.start("endpoints");
    for (std::size_t i = 0; i < sol.routes.size(); ++i) {
        if (route_pair[i] == inst.pairs.size()) continue;
        const auto& p = sol.routes[i].path;
        const auto& d = inst.pairs[route_pair[i]];
        if (p.first() != d.s || p.last() != d.t)
            rr.fail("endpoints", d.label + " runs " + to_string(p.first()) + " -> " + to_string(p.last()) +
                                     ", expected " + to_string(d.s) + " -> " + to_string(d.t));
    }

    std::vector<std::vector<Rect>> nodes(sol.routes.size());
    for (std::size_t i = 0; i < sol.routes.size(); ++i)
        if (route_pair[i] != inst.pairs.size()) nodes[i] = wall_vertex_pieces(spec, sol.routes[i].path);

    rr.start("containment");
    const Rect host{1, inst.host.height, 1, inst.host.length};
    std::vector<Vertex> by_col;
    if (wall) {
        by_col = e->dests;
        std::sort(by_col.begin(), by_col.end(),
                  [](const Vertex& a, const Vertex& b) { return std::tie(a.col, a.row) < std::tie(b.col, b.row); });
    }
    auto dest_in = [&](const Rect& r) {
        // Any destination inside r (r is a line).
        if (r.height() == 1) {
            auto it = std::lower_bound(e->dests.begin(), e->dests.end(), Vertex{r.r1, r.c1});
            return it != e->dests.end() && it->row == r.r1 && it->col <= r.c2;
        }
        auto it = std::lower_bound(by_col.begin(), by_col.end(), Vertex{r.r1, r.c1},
                                   [](const Vertex& a, const Vertex& b) {
                                       return std::tie(a.col, a.row) < std::tie(b.col, b.row);
                                   });
        return it != by_col.end() && it->col == r.c1 && it->row <= r.r2;
    };
    for (std::size_t i = 0; i < sol.routes.size(); ++i) {
        if (route_pair[i] == inst.pairs.size()) continue;
        const std::string& lab = sol.routes[i].label;
        for (const auto& pc : nodes[i]) {
            if (!host.contains(pc)) {
                rr.fail("containment", lab + " leaves the grid at " + to_string(pc));
                break;
            }
            if (auto v = inst.deleted.first_in(pc)) {
                rr.fail("containment", lab + " uses deleted vertex " + to_string(*v));
                break;
            }
        }
        if (!wall) continue;
        const auto& d = inst.pairs[route_pair[i]];
        for (const Vertex& v : {d.s, d.t})
            if (!e->kept(v)) rr.fail("containment", lab + " ends at removed terminal " + to_string(v));
        for (const auto& h : wall_edge_pieces(spec, sol.routes[i].path).horizontal) {
            // h holds left columns x of edges (row, x)-(row, x+1).
            if (h.r1 == 1 && h.height() == 1 && (h.c1 % 2 == 0 || h.c2 > h.c1)) {
                rr.fail("containment", lab + " uses a deleted top-row edge in " + to_string(h));
                break;
            }
            if (dest_in({h.r1, h.r2, h.c1, h.c2 + (h.height() == 1 ? 1 : 0)}) ||
                (h.height() > 1 && dest_in({h.r1, h.r2, h.c1 + 1, h.c1 + 1}))) {
                rr.fail("containment", lab + " uses a horizontal edge at a destination in " + to_string(h));
                break;
            }
        }
    }

    rr.start("disjointness");
    if (!wall) {
        auto d = pieces_disjoint(nodes);
        for (const auto& c : d.conflicts)
            rr.fail("disjointness", sol.routes[c.a].label + " and " + sol.routes[c.b].label + " share vertex " +
                                        to_string(c.witness));
    } else {
        std::vector<std::vector<Rect>> vs(sol.routes.size()), hs(sol.routes.size());
        for (std::size_t i = 0; i < sol.routes.size(); ++i) {
            if (route_pair[i] == inst.pairs.size()) continue;
            auto ep = wall_edge_pieces(spec, sol.routes[i].path);
            vs[i] = std::move(ep.vertical);
            hs[i] = std::move(ep.horizontal);
        }
        for (const auto& c : pieces_disjoint(vs).conflicts)
            rr.fail("disjointness", sol.routes[c.a].label + " and " + sol.routes[c.b].label +
                                        " share the vertical edge below row " + std::to_string(c.witness.row) +
                                        " in cell " + std::to_string(c.witness.col));
        for (const auto& c : pieces_disjoint(hs).conflicts)
            rr.fail("disjointness", sol.routes[c.a].label + " and " + sol.routes[c.b].label +
                                        " share the edge right of " + to_string(c.witness));
    }

    if (sol.certificates.empty()) return rep;

    // Box openings: every box must be crossed canonically by the routed
    // paths it holds and avoided by all others.
    rr.start("box");
    std::map<Coord, std::vector<TopSpan>> tops;
    for (std::size_t b = 0; b < inst.boxes.size(); ++b) {
        const Rect& r = inst.boxes[b].rect;
        tops[r.r1].push_back({r.c1, r.c2, b});
    }
    for (auto& [row, v] : tops)
        std::sort(v.begin(), v.end(), [](const TopSpan& a, const TopSpan& b) { return a.c1 < b.c1; });
    std::vector<std::vector<Hit>> hits(sol.routes.size());
    for (std::size_t i = 0; i < sol.routes.size(); ++i)
        for (const auto& pc : nodes[i])
            for (auto it = tops.lower_bound(pc.r1); it != tops.end() && it->first <= pc.r2; ++it) {
                const auto& v = it->second;
                auto s = std::upper_bound(v.begin(), v.end(), pc.c2,
                                          [](Coord c, const TopSpan& t) { return c < t.c1; });
                while (s != v.begin()) {
                    --s;
                    if (s->c2 < pc.c1) break;
                    hits[i].push_back({s->box, Rect{it->first, it->first, std::max(pc.c1, s->c1),
                                                    std::min(pc.c2, s->c2)}});
                }
            }
    std::vector<std::vector<std::pair<std::size_t, Rect>>> per_box(inst.boxes.size());
    for (std::size_t i = 0; i < sol.routes.size(); ++i)
        for (const auto& h : hits[i]) per_box[h.box].push_back({i, h.r});
    for (std::size_t b = 0; b < inst.boxes.size(); ++b) {
        const BoxImage& box = inst.boxes[b];
        const std::string bname = box.label.empty() ? "B(I)" : box.label;
        std::map<std::size_t, std::vector<Vertex>> seen;  // route -> top-row vertices
        for (const auto& [i, r] : per_box[b])
            for (Coord c = r.c1; c <= r.c2; ++c) seen[i].push_back({r.r1, c});
        std::vector<RegionSet::Interval> op;
        Coord j = 0;
        for (std::size_t k = box.first_pair; k < box.last_pair; ++k) {
            std::size_t i = owner[k];
            if (i == sol.routes.size()) continue;
            ++j;
            if (op.empty()) op = box_opening(inst, box);
            auto& got = seen[i];
            std::sort(got.begin(), got.end());
            std::vector<Vertex> want;
            if (!wall) {
                want.push_back({box.rect.r1, opening_col(op, j)});
            } else {
                Coord a = opening_col(op, 2 * j), c = opening_col(op, 2 * j + 1);
                if (a != 0 && c == a + 1) want = {{box.rect.r1, a}, {box.rect.r1, c}};
            }
            if (got != want)
                rr.fail("box", sol.routes[i].label + " meets the opening of " + bname + " at " + pts_string(got) +
                                   (wall ? ", canonical edge " : ", opening vertex ") + std::to_string(wall ? 2 * j : j) +
                                   " is " + pts_string(want));
            seen.erase(i);
        }
        for (const auto& [i, v] : seen)
            rr.fail("box", sol.routes[i].label + " enters the opening of foreign box " + bname + " at " + to_string(v.front()));
    }

    rr.start("order");
    for (const auto& g : inst.layout) {
        if (g.kind != "Bx" && g.kind != "BCq") continue;
        const Rect top{g.rect.r1, g.rect.r1, g.rect.c1, g.rect.c2};
        Coord prev = 0;
        std::string prev_label;
        for (std::size_t k = 0; k < inst.pairs.size(); ++k) {
            std::size_t i = owner[k];
            if (i == sol.routes.size() || !g.rect.contains(inst.pairs[k].t)) continue;
            std::optional<Coord> col;
            for (const auto& pc : nodes[i])
                if (pc.intersects(top)) {
                    col = pc.intersect(top).c1;
                    break;
                }
            if (!col) {
                rr.fail("order", inst.pairs[k].label + " reaches " + g.label + " without crossing its top row");
                continue;
            }
            if (*col <= prev)
                rr.fail("order", inst.pairs[k].label + " crosses the top of " + g.label + " at column " +
                                     std::to_string(*col) + ", left of " + prev_label);
            prev = *col;
            prev_label = inst.pairs[k].label;
        }
    }

    rr.start("certificates");
    auto fresh = wall ? collect_wall_certificates(*e, sol) : collect_certificates(inst, sol);
    if (fresh != sol.certificates) {
        std::string where = "count differs";
        for (std::size_t b = 0; b < std::min(fresh.size(), sol.certificates.size()); ++b)
            if (!(fresh[b] == sol.certificates[b])) {
                where = "box " + (fresh[b].box.empty() ? std::string("B(I)") : fresh[b].box);
                break;
            }
        rr.fail("certificates", "claimed certificates do not match the paths (" + where + ")");
    }
    return rep;
}

}  // namespace

std::vector<RegionSet::Interval> box_opening(const RoutingInstance& inst, const BoxImage& b) {
    std::vector<RegionSet::Interval> out;
    Coord c = b.rect.c1;
    if (const auto* del = row_intervals(inst.deleted, b.rect.r1)) {
        auto it = std::lower_bound(del->begin(), del->end(), c,
                                   [](const RegionSet::Interval& iv, Coord x) { return iv.c2 < x; });
        for (; it != del->end() && it->c1 <= b.rect.c2; ++it) {
            if (it->c1 > c) out.push_back({c, it->c1 - 1});
            c = std::max(c, it->c2 + 1);
        }
    }
    if (c <= b.rect.c2) out.push_back({c, b.rect.c2});
    return out;
}

VerificationReport verify_solution(const RoutingInstance& inst, const RoutedSolution& sol, RouteMode mode) {
    if (mode == RouteMode::edp) {
        EdpInstance e = to_wall_instance(inst);
        return verify_impl(inst, &e, sol, mode);
    }
    return verify_impl(inst, nullptr, sol, mode);
}

VerificationReport verify_solution(const EdpInstance& e, const RoutedSolution& sol) {
    return verify_impl(e.base, &e, sol, e.spec.wall ? RouteMode::edp : RouteMode::ndp);
}

}  // namespace gridndp
