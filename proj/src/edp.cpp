#include "gridndp/edp.hpp"

#include "router_core.hpp"

#include <algorithm>
#include <unordered_map>

namespace gridndp {

namespace {

bool vertical_allowed(const WallSpec& s, Coord z, Coord col) { return !s.wall || (z - col) % 2 == 0; }

Coord sgn(Coord v) { return (v > 0) - (v < 0); }

}  // namespace

bool EdpInstance::alive(const Vertex& v) const { return spec.grid.contains(v) && !base.deleted.contains(v); }

int EdpInstance::pre_cleanup_degree(const Vertex& v) const {
    if (!alive(v)) return 0;
    int d = 0;
    if (alive({v.row, v.col - 1})) ++d;
    if (alive({v.row, v.col + 1})) ++d;
    if (vertical_allowed(spec, v.row - 1, v.col) && alive({v.row - 1, v.col})) ++d;
    if (vertical_allowed(spec, v.row, v.col) && alive({v.row + 1, v.col})) ++d;
    return d;
}

bool EdpInstance::kept(const Vertex& v) const {
    if (!alive(v)) return false;
    return !spec.wall || pre_cleanup_degree(v) != 1;
}

bool EdpInstance::has_edge(const Vertex& a, const Vertex& b) const {
    const Coord dr = b.row - a.row, dc = b.col - a.col;
    if (std::abs(dr) + std::abs(dc) != 1) return false;
    if (!kept(a) || !kept(b)) return false;
    if (dr != 0) return vertical_allowed(spec, std::min(a.row, b.row), a.col);
    if (!spec.wall) return true;
    if (a.row == 1 && std::min(a.col, b.col) % 2 == 0) return false;
    return !std::binary_search(dests.begin(), dests.end(), a) && !std::binary_search(dests.begin(), dests.end(), b);
}

int EdpInstance::degree(const Vertex& v) const {
    if (!kept(v)) return 0;
    int d = 0;
    for (Vertex u : {Vertex{v.row - 1, v.col}, Vertex{v.row + 1, v.col}, Vertex{v.row, v.col - 1}, Vertex{v.row, v.col + 1}})
        if (has_edge(v, u)) ++d;
    return d;
}

namespace {

// Coordinates whose radius-2 neighbourhood differs from both neighbours'
// plus two representatives (one per parity) of every remaining gap.
std::vector<Coord> critical(std::vector<Coord> base, Coord hi) {
    std::vector<Coord> near;
    base.push_back(1);
    base.push_back(hi);
    for (Coord b : base)
        for (Coord d = -3; d <= 3; ++d)
            if (b + d >= 1 && b + d <= hi) near.push_back(b + d);
    std::sort(near.begin(), near.end());
    near.erase(std::unique(near.begin(), near.end()), near.end());
    std::vector<Coord> out;
    for (std::size_t i = 0; i < near.size(); ++i) {
        out.push_back(near[i]);
        if (i + 1 < near.size())
            for (Coord c = near[i] + 1; c < near[i + 1] && c <= near[i] + 2; ++c) out.push_back(c);
    }
    return out;
}

}  // namespace

namespace {

// Same predicates as EdpInstance, on byte rows indexed by column (0 and
// length+1 are padding).
class RowSweep {
public:
    explicit RowSweep(const EdpInstance& e) : e_(e), L_(e.spec.grid.length), H_(e.spec.grid.height) {
        for (const auto& t : e.dests) dest_rows_[t.row].push_back(t.col);
    }

    void run(DegreeAudit& au) {
        using Row = std::vector<std::uint8_t>;
        Row a0, a1, a2, k0, k1, k2;
        alive(0, a0);
        alive(1, a1);
        alive(2, a2);
        kept_row(0, a0, a0, a1, k0);  // row 0 is all dead
        kept_row(1, a0, a1, a2, k1);
        Row a3, dest;
        for (Coord r = 1; r <= H_; ++r) {
            alive(r + 2, a3);
            kept_row(r + 1, a1, a2, a3, k2);
            dests(r, dest);
            for (Coord c = 1; c <= L_; ++c) {
                ++au.vertices_checked;
                if (!k1[c]) continue;
                int d = 0;
                if (k0[c] && vertical(r - 1, c)) ++d;
                if (k2[c] && vertical(r, c)) ++d;
                if (k1[c - 1] && horizontal(r, c - 1, dest)) ++d;
                if (k1[c + 1] && horizontal(r, c, dest)) ++d;
                if (d > au.max_degree) {
                    au.max_degree = d;
                    au.max_degree_witness = {r, c};
                }
            }
            std::swap(a0, a1);
            std::swap(a1, a2);
            std::swap(a2, a3);
            std::swap(k0, k1);
            std::swap(k1, k2);
        }
    }

private:
    bool vertical(Coord z, Coord c) const { return vertical_allowed(e_.spec, z, c); }
    bool horizontal(Coord r, Coord left, const std::vector<std::uint8_t>& dest) const {
        if (!e_.spec.wall) return true;
        if (r == 1 && left % 2 == 0) return false;
        return !dest[left] && !dest[left + 1];
    }

    void alive(Coord r, std::vector<std::uint8_t>& row) {
        row.assign(static_cast<std::size_t>(L_ + 2), 0);
        if (r < 1 || r > H_) return;
        std::fill(row.begin() + 1, row.end() - 1, 1);
        const auto& bands = e_.base.deleted.bands();
        auto it = std::lower_bound(bands.begin(), bands.end(), r,
                                   [](const RegionSet::Band& b, Coord q) { return b.r2 < q; });
        if (it == bands.end() || it->r1 > r) return;
        for (const auto& iv : it->cols)
            for (Coord c = std::max<Coord>(iv.c1, 1); c <= std::min(iv.c2, L_); ++c) row[c] = 0;
    }

    void kept_row(Coord r, const std::vector<std::uint8_t>& up, const std::vector<std::uint8_t>& mid,
                  const std::vector<std::uint8_t>& down, std::vector<std::uint8_t>& out) {
        out.assign(mid.size(), 0);
        for (Coord c = 1; c <= L_; ++c) {
            if (!mid[c]) continue;
            if (!e_.spec.wall) {
                out[c] = 1;
                continue;
            }
            int d = mid[c - 1] + mid[c + 1] + (vertical(r - 1, c) && up[c]) + (vertical(r, c) && down[c]);
            out[c] = d != 1;
        }
    }

    void dests(Coord r, std::vector<std::uint8_t>& row) {
        row.assign(static_cast<std::size_t>(L_ + 2), 0);
        auto it = dest_rows_.find(r);
        if (it != dest_rows_.end())
            for (Coord c : it->second) row[c] = 1;
    }

    const EdpInstance& e_;
    Coord L_, H_;
    std::unordered_map<Coord, std::vector<Coord>> dest_rows_;
};

}  // namespace

DegreeAudit audit_degrees(const EdpInstance& e, AuditMode mode) {
    DegreeAudit au;
    const GridSpec& g = e.spec.grid;
    if (mode == AuditMode::automatic)
        mode = g.length * g.height <= kExhaustiveAuditArea ? AuditMode::exhaustive : AuditMode::classes;
    au.exhaustive = mode == AuditMode::exhaustive;
    if (au.exhaustive) {
        RowSweep(e).run(au);
    } else {
        auto visit = [&](const Vertex& v) {
            ++au.vertices_checked;
            int d = e.degree(v);
            if (d > au.max_degree) {
                au.max_degree = d;
                au.max_degree_witness = v;
            }
        };
        std::vector<Coord> rows, cols;
        for (const auto& band : e.base.deleted.bands()) {
            rows.push_back(band.r1);
            rows.push_back(band.r2);
            for (const auto& iv : band.cols) {
                cols.push_back(iv.c1);
                cols.push_back(iv.c2);
            }
        }
        for (const auto& t : e.dests) {
            rows.push_back(t.row);
            cols.push_back(t.col);
        }
        for (Coord r : critical(rows, g.height))
            for (Coord c : critical(cols, g.length)) visit({r, c});
    }
    for (const auto& p : e.base.pairs)
        for (const Vertex& v : {p.s, p.t}) {
            int d = e.degree(v);
            au.max_terminal_degree = std::max(au.max_terminal_degree, d);
            if (d > 2) au.terminal_violations.push_back(v);
        }
    return au;
}

namespace {

EdpInstance make_instance(const RoutingInstance& inst, bool wall) {
    EdpInstance e;
    e.spec = {inst.host, wall};
    e.base = inst;
    for (const auto& p : inst.pairs) e.dests.push_back(p.t);
    std::sort(e.dests.begin(), e.dests.end());
    return e;
}

}  // namespace

EdpInstance to_wall_instance(const RoutingInstance& inst) {
    if (inst.host.length % 2 != 0)
        throw WallError("host length " + std::to_string(inst.host.length) + " is odd; a wall needs even length");
    EdpInstance e = make_instance(inst, true);
    for (const auto& p : inst.pairs)
        for (const Vertex& v : {p.s, p.t})
            if (!e.kept(v))
                throw WallError("terminal " + to_string(v) + " of " + p.label + " would be deleted");
    e.audit = audit_degrees(e);
    return e;
}

EdpInstance raw_grid_instance(const RoutingInstance& inst) {
    EdpInstance e = make_instance(inst, false);
    e.audit = audit_degrees(e);
    return e;
}

bool is_well_spread(const EdpInstance& e, const std::vector<Vertex>& row_vertices) {
    if (row_vertices.empty()) return true;
    std::vector<Vertex> v = row_vertices;
    std::sort(v.begin(), v.end());
    if (v.front().row != v.back().row) throw std::invalid_argument("well-spread sets lie on one row");
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].col == v[i - 1].col) return false;
        if (e.has_edge(v[i - 1], v[i])) return false;
    }
    return true;
}

void check_wall_path(const WallSpec& spec, const Path& p) {
    if (p.pts.empty()) throw WallError("empty path");
    for (const auto& v : p.pts)
        if (!spec.grid.contains(v)) throw WallError("waypoint " + to_string(v) + " outside the grid");
    for (std::size_t i = 1; i < p.pts.size(); ++i) {
        const auto& a = p.pts[i - 1];
        const auto& b = p.pts[i];
        if (a.row == b.row) continue;
        if (spec.wall ? cell_of(a.col) != cell_of(b.col) : a.col != b.col)
            throw WallError("step " + to_string(a) + " -> " + to_string(b) +
                            (spec.wall ? " changes row and cell" : " is not axis-aligned"));
    }
}

std::vector<Rect> wall_vertex_pieces(const WallSpec& spec, const Path& p) {
    if (!spec.wall) return vertex_pieces(p);
    std::vector<Rect> out;
    if (p.pts.empty()) return out;
    out.push_back(Rect::point(p.pts[0]));
    auto row_part = [&](Coord r, Coord from, Coord to, bool drop_from) {
        if (from == to) {
            if (!drop_from) out.push_back(Rect::point({r, from}));
            return;
        }
        Coord s = drop_from ? from + sgn(to - from) : from;
        out.push_back(Rect::spanning({r, s}, {r, to}));
    };
    for (std::size_t i = 1; i < p.pts.size(); ++i) {
        const Vertex a = p.pts[i - 1], b = p.pts[i];
        if (a == b) continue;
        if (a.row == b.row) {
            row_part(a.row, a.col, b.col, true);
            continue;
        }
        const Coord k = cell_of(a.col);
        const bool down = b.row > a.row;
        const Coord leave = down ? down_col(a.row, k) : up_col(a.row, k);
        const Coord arrive = down ? up_col(b.row, k) : down_col(b.row, k);
        row_part(a.row, a.col, leave, true);
        const Coord m1 = std::min(a.row, b.row) + 1, m2 = std::max(a.row, b.row) - 1;
        if (m1 <= m2) {
            out.push_back({m1, m2, 2 * k - 1, 2 * k - 1});
            out.push_back({m1, m2, 2 * k, 2 * k});
        }
        row_part(b.row, arrive, b.col, false);
    }
    return out;
}

EdgePieces wall_edge_pieces(const WallSpec& spec, const Path& p) {
    EdgePieces out;
    for (std::size_t i = 1; i < p.pts.size(); ++i) {
        const Vertex a = p.pts[i - 1], b = p.pts[i];
        if (a == b) continue;
        if (a.row == b.row) {
            out.horizontal.push_back({a.row, a.row, std::min(a.col, b.col), std::max(a.col, b.col) - 1});
            continue;
        }
        const Coord z1 = std::min(a.row, b.row), z2 = std::max(a.row, b.row) - 1;
        if (!spec.wall) {
            out.vertical.push_back({z1, z2, a.col, a.col});
            continue;
        }
        const Coord k = cell_of(a.col);
        const bool down = b.row > a.row;
        out.vertical.push_back({z1, z2, k, k});
        const Coord leave = down ? down_col(a.row, k) : up_col(a.row, k);
        const Coord arrive = down ? up_col(b.row, k) : down_col(b.row, k);
        if (a.col != leave) out.horizontal.push_back({a.row, a.row, 2 * k - 1, 2 * k - 1});
        if (z1 + 1 <= z2) out.horizontal.push_back({z1 + 1, z2, 2 * k - 1, 2 * k - 1});
        if (arrive != b.col) out.horizontal.push_back({b.row, b.row, 2 * k - 1, 2 * k - 1});
    }
    return out;
}

namespace {

Path coarse_to_wall(const Path& coarse, const Vertex& s, const Vertex& t) {
    if (coarse.first() != Vertex{s.row, cell_of(s.col)})
        throw RoutingError("internal inconsistency: wall path does not start in the source cell");
    Path w;
    w.push(s);
    Vertex cur = s;
    for (std::size_t i = 1; i < coarse.pts.size(); ++i) {
        const Vertex n = coarse.pts[i];
        const Coord k = cell_of(cur.col);
        Vertex next;
        if (n.row == cur.row) {
            if (n.col == k) continue;
            next = {n.row, n.col > k ? 2 * n.col - 1 : 2 * n.col};
        } else {
            if (n.col != k) throw RoutingError("internal inconsistency: diagonal step in a cell path");
            next = {n.row, n.row > cur.row ? up_col(n.row, k) : down_col(n.row, k)};
        }
        w.push(next);
        cur = next;
    }
    if (cur != t) {
        if (cur.row != t.row || cell_of(cur.col) != cell_of(t.col))
            throw RoutingError("internal inconsistency: wall path ends at " + to_string(cur) + ", not in the cell of " +
                               to_string(t));
        w.push(t);
    }
    return w;
}

}  // namespace

std::vector<BoxCertificate> collect_wall_certificates(const EdpInstance& e, const RoutedSolution& sol) {
    std::unordered_map<std::string, std::size_t> by_label;
    for (std::size_t j = 0; j < sol.routes.size(); ++j) by_label[sol.routes[j].label] = j;
    std::vector<std::vector<Rect>> pieces(sol.routes.size());
    for (std::size_t j = 0; j < sol.routes.size(); ++j) pieces[j] = wall_vertex_pieces(e.spec, sol.routes[j].path);
    std::vector<BoxCertificate> out;
    for (const auto& b : e.base.boxes) {
        BoxCertificate c;
        c.box = b.label;
        const Rect top{b.rect.r1, b.rect.r1, b.rect.c1, b.rect.c2};
        for (std::size_t p = b.first_pair; p < b.last_pair; ++p) {
            auto it = by_label.find(e.base.pairs[p].label);
            if (it == by_label.end()) continue;
            Vertex best{0, 0};
            for (const auto& r : pieces[it->second])
                if (r.intersects(top)) {
                    Rect x = r.intersect(top);
                    if (best.row == 0 || x.c1 < best.col) best = {x.r1, x.c1};
                }
            c.crossings.push_back(best);
        }
        if (!c.crossings.empty()) out.push_back(std::move(c));
    }
    return out;
}

RoutedSolution route_yes_canonical(const EdpInstance& e, const Assignment& a, int parity) {
    if (!e.spec.wall) throw WallError("canonical routing needs a wall instance");
    if (parity != 1 && parity != 2) throw std::invalid_argument("parity must be 1 or 2");
    auto hr = detail::route_host(e.base, a, RouteMode::edp, parity);
    RoutedSolution sol;
    sol.mode = RouteMode::edp;
    sol.schedule_digest = e.base.schedule_digest;
    for (std::size_t j = 0; j < hr.pairs.size(); ++j) {
        const auto& pr = e.base.pairs[hr.pairs[j]];
        sol.routes.push_back({pr.label, coarse_to_wall(hr.paths[j], pr.s, pr.t)});
    }
    sol.certificates = collect_wall_certificates(e, sol);
    return sol;
}

bool edge_node_equivalence(const EdpInstance& e, const RoutedSolution& sol) {
    if (e.audit.max_degree > 3)
        throw WallError("degree precondition unmet: vertex " + to_string(e.audit.max_degree_witness) + " has degree " +
                        std::to_string(e.audit.max_degree));
    if (!e.audit.terminal_violations.empty())
        throw WallError("degree precondition unmet: terminal " + to_string(e.audit.terminal_violations.front()) +
                        " has degree above 2");
    std::vector<std::vector<Rect>> vs, hs, nodes;
    for (const auto& r : sol.routes) {
        auto ep = wall_edge_pieces(e.spec, r.path);
        vs.push_back(std::move(ep.vertical));
        hs.push_back(std::move(ep.horizontal));
        nodes.push_back(wall_vertex_pieces(e.spec, r.path));
    }
    if (!pieces_disjoint(vs).ok() || !pieces_disjoint(hs).ok())
        throw WallError("paths are not edge-disjoint");
    return pieces_disjoint(nodes).ok();
}

}  // namespace gridndp
