#include "gridndp/router.hpp"

#include "gridndp/snake.hpp"
#include "router_core.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace gridndp {

namespace detail {

namespace {

std::string num(Coord v) { return std::to_string(v); }

[[noreturn]] void internal(const std::string& msg) { throw RoutingError("internal inconsistency: " + msg); }

void expect_ends(const std::vector<Path>& ps, const std::vector<Vertex>& targets, const std::string& what) {
    for (std::size_t a = 0; a < ps.size(); ++a)
        if (ps[a].last() != targets[a])
            internal(what + ": path " + num(static_cast<Coord>(a)) + " ends at " + to_string(ps[a].last()) +
                     " instead of " + to_string(targets[a]));
}

void require_satisfying(const RoutingInstance& inst, const Assignment& a) {
    if (!inst.tmpl->composite) return;
    const Formula& f = inst.tmpl->composite->formula;
    if (a.values.size() != static_cast<std::size_t>(f.var_count))
        throw RoutingError("assignment has " + num(static_cast<Coord>(a.values.size())) + " values, formula has " +
                           num(f.var_count) + " variables");
    if (!satisfies(f, a))
        throw RoutingError("assignment does not satisfy clause C" + std::to_string(first_unsatisfied(f, a).value_or(0) + 1));
}

}  // namespace

std::vector<std::size_t> parity_half(const std::vector<std::size_t>& v, int parity) {
    if (parity == 0) return v;
    std::vector<std::size_t> out;
    for (std::size_t i = (parity == 1 ? 0 : 1); i < v.size(); i += 2) out.push_back(v[i]);
    return out;
}

const std::vector<Router::ChildRef>& Router::owners(const TemplatePtr& t) {
    auto it = owners_.find(t.get());
    if (it != owners_.end()) return it->second;
    std::vector<ChildRef> own(t->pairs.size(), ChildRef{-1, 0});
    for (std::size_t ci = 0; ci < t->children.size(); ++ci) {
        const auto& ch = t->children[ci];
        for (std::size_t p = 0; p < ch.tmpl->pairs.size(); ++p) {
            Coord slot = ch.slot_offset + ch.tmpl->pairs[p].slot;
            auto pos = std::lower_bound(t->pairs.begin(), t->pairs.end(), slot,
                                        [](const DemandPair& d, Coord s) { return d.slot < s; });
            if (pos == t->pairs.end() || pos->slot != slot) internal("child pair missing from parent");
            own[pos - t->pairs.begin()] = {static_cast<int>(ci), p};
        }
    }
    return owners_.emplace(t.get(), std::move(own)).first->second;
}

const std::vector<std::size_t>& Router::select(const TemplatePtr& t) {
    auto it = sel_.find(t.get());
    if (it != sel_.end()) return it->second;
    std::vector<std::size_t> out;
    if (t->kind == InstanceTemplate::Kind::level0) {
        out.push_back(0);
    } else {
        std::vector<int> chosen;
        if (t->kind == InstanceTemplate::Kind::wide) {
            for (std::size_t ci = 0; ci < t->children.size(); ++ci) chosen.push_back(static_cast<int>(ci));
        } else {
            const CompositeLayout& lay = *t->composite;
            const Formula& f = lay.formula;
            if (a_.values.size() != static_cast<std::size_t>(f.var_count))
                throw RoutingError("assignment has " + num(static_cast<Coord>(a_.values.size())) +
                                   " values, formula has " + num(f.var_count) + " variables");
            for (const auto& g : lay.vars) {
                const auto& first = a_.values[g.var] ? g.t_children : g.f_children;
                chosen.insert(chosen.end(), first.begin(), first.end());
                chosen.insert(chosen.end(), g.x_children.begin(), g.x_children.end());
            }
            for (const auto& g : lay.clauses) {
                int z = 0;
                for (int k = 0; k < 3 && z == 0; ++k)
                    if (literal_value(f.clauses[g.clause][k], a_)) z = k + 1;
                if (z == 0)
                    throw RoutingError("assignment does not satisfy clause C" + num(g.clause + 1));
                chosen.insert(chosen.end(), g.lit_children[z - 1].begin(), g.lit_children[z - 1].end());
            }
        }
        const auto& own = owners(t);
        std::vector<std::vector<std::size_t>> back(t->children.size());
        for (std::size_t p = 0; p < own.size(); ++p) {
            auto& b = back[own[p].child];
            if (b.size() <= own[p].index) b.resize(own[p].index + 1);
            b[own[p].index] = p;
        }
        for (int ci : chosen)
            for (std::size_t cp : select(t->children[ci].tmpl)) out.push_back(back[ci][cp]);
        std::sort(out.begin(), out.end());
    }
    return sel_.emplace(t.get(), std::move(out)).first->second;
}

const InBoxRouting& Router::route(const TemplatePtr& t, int parity) {
    auto key = std::make_pair(t.get(), parity);
    auto it = routes_.find(key);
    if (it != routes_.end()) return it->second;
    InBoxRouting r;
    if (t->kind == InstanceTemplate::Kind::level0) {
        const auto pairs = parity_half(select(t), parity);
        if (!pairs.empty()) {
            const Vertex d = t->pairs[0].dest;
            r.pairs = pairs;
            Path p;
            if (mode_ == RouteMode::ndp) {
                r.entry.push_back(d.col);
                p.push({1, d.col});
                p.push(d);
            } else {
                // Canonical crossing: enter cell 1, step to cell 2 on the
                // opening row, come back to the destination cell below it.
                Coord u = d.col / 2;
                r.entry.push_back(u);
                p.push({1, u});
                p.push({1, u + 1});
                p.push({2, u + 1});
                p.push({2, u});
                p.push({d.row, u});
            }
            r.paths.push_back(p);
            r.tops.push_back({1, r.entry.back()});
        }
    } else if (t->kind == InstanceTemplate::Kind::wide) {
        throw RoutingError("wide templates are routed through their parent");
    } else {
        r = route_composite(t, parity);
    }
    return routes_.emplace(key, std::move(r)).first->second;
}

InBoxRouting Router::route_composite(const TemplatePtr& t, int parity) {
    const CompositeLayout& lay = *t->composite;
    const Coord S = scale();
    auto X = [&](Coord x) { return x / S; };
    const Coord N = lay.N, H = t->H, Lp = t->Lp, blk = lay.block;
    const Coord ctop = lay.child_top;
    const Coord rc = ctop, rb = ctop + lay.Hi - 1;

    const auto routed = parity_half(select(t), parity);
    const std::size_t k = routed.size();
    const auto& own = owners(t);

    // Child routings and their parities.
    std::vector<int> child_parity(t->children.size(), -1);
    std::vector<std::vector<std::size_t>> in_child(t->children.size());
    for (std::size_t a = 0; a < k; ++a) in_child[own[routed[a]].child].push_back(a);
    for (std::size_t ci = 0; ci < t->children.size(); ++ci) {
        if (in_child[ci].empty()) continue;
        const auto& csel = select(t->children[ci].tmpl);
        std::vector<std::size_t> got;
        for (std::size_t a : in_child[ci]) got.push_back(own[routed[a]].index);
        int cp = 0;
        if (parity != 0) cp = (got.front() == csel.front()) ? 1 : 2;
        if (got != parity_half(csel, cp))
            internal("routed subset of child " + t->children[ci].label + " is not M*_" + num(cp) + " of the child");
        child_parity[ci] = cp;
    }

    // Per routed pair: parent-frame entry coordinate into its child box and
    // the child path translated into the parent frame.
    std::vector<Coord> child_entry(k);
    std::vector<Path> child_path(k);
    for (std::size_t ci = 0; ci < t->children.size(); ++ci) {
        if (in_child[ci].empty()) continue;
        const auto& ch = t->children[ci];
        const InBoxRouting& cr = route(ch.tmpl, child_parity[ci]);
        const Coord off = ch.col_offset / S;
        for (std::size_t j = 0; j < in_child[ci].size(); ++j) {
            std::size_t a = in_child[ci][j];
            child_entry[a] = off + cr.entry[j];
            child_path[a] = cr.paths[j].translated(ch.row_offset, off);
        }
    }

    // Classify pairs.
    const Coord n = lay.n, m = lay.m;
    std::vector<int> child_var(t->children.size(), -1), child_clause(t->children.size(), -1);
    std::vector<char> child_kind(t->children.size(), 0);
    for (const auto& g : lay.vars) {
        for (int ci : g.t_children) child_var[ci] = g.var, child_kind[ci] = 'T';
        for (int ci : g.f_children) child_var[ci] = g.var, child_kind[ci] = 'F';
        for (int ci : g.x_children) child_var[ci] = g.var, child_kind[ci] = 'X';
    }
    for (const auto& g : lay.clauses)
        for (int z = 0; z < 3; ++z)
            for (int ci : g.lit_children[z]) child_clause[ci] = g.clause;

    InBoxRouting out;
    out.pairs = routed;
    out.paths.resize(k);
    out.tops.resize(k);
    std::vector<Vertex> start(k);
    for (std::size_t a = 0; a < k; ++a) {
        Coord j = static_cast<Coord>(a) + 1;
        if (S == 1) {
            out.entry.push_back(1 + j);
            out.paths[a].push({1, 1 + j});
        } else {
            out.entry.push_back(j);
            out.paths[a].push({1, j});
            out.paths[a].push({1, j + 1});
        }
        start[a] = {1, 1 + j};
    }
    if (k == 0) return out;
    if (start.back().col > X(Lp - 1)) internal("opening too short for " + num(static_cast<Coord>(k)) + " pairs");

    // Gamma on the top row of B^V.
    const Coord top_v = lay.bv.r1, bot_v = lay.bv.r2;
    std::vector<Coord> gamma(k, 0);
    std::vector<int> var_of(k, -1), clause_of(k, -1);
    std::vector<char> kind_of(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        int ci = own[routed[a]].child;
        var_of[a] = child_var[ci];
        clause_of[a] = child_clause[ci];
        kind_of[a] = child_kind[ci];
    }
    // FALSE-variable switch: X pairs take the leftmost columns of B(x).
    std::vector<std::vector<std::size_t>> x_pairs(n);
    for (std::size_t a = 0; a < k; ++a)
        if (var_of[a] >= 0 && kind_of[a] == 'X' && !a_.values[var_of[a]]) x_pairs[var_of[a]].push_back(a);
    std::vector<Coord> a_col(k, 0);
    for (std::size_t a = 0; a < k; ++a)
        if (var_of[a] >= 0) a_col[a] = child_entry[a];
    for (Coord j = 0; j < n; ++j)
        for (std::size_t idx = 0; idx < x_pairs[j].size(); ++idx)
            a_col[x_pairs[j][idx]] = X(lay.vars[j].box.c1) + static_cast<Coord>(idx);

    auto gap = [&](Coord g) -> std::pair<Coord, Coord> {
        Coord lo = g == 0 ? lay.bv.c1 : lay.vars[g - 1].box.c2 + 1;
        Coord hi = g == n ? lay.bv.c2 : lay.vars[g].box.c1 - 1;
        return {X(lo) + 1, X(hi) - 1};
    };
    {
        Coord g = 0;
        int cur_var = -1;
        bool var_closed = false;
        std::vector<Coord> used(n + 1, 0);
        for (std::size_t a = 0; a < k; ++a) {
            if (var_of[a] >= 0) {
                if (var_of[a] != cur_var) {
                    if (var_of[a] < cur_var) internal("variable sources out of order");
                    cur_var = var_of[a];
                    var_closed = false;
                } else if (var_closed) {
                    internal("sources of x" + num(cur_var + 1) + " are not consecutive");
                }
                g = cur_var + 1;
                gamma[a] = a_col[a];
            } else {
                var_closed = true;
                auto [lo, hi] = gap(g);
                Coord c = lo + used[g]++;
                if (c > hi) internal("gap W_" + num(g) + " too narrow");
                gamma[a] = c;
            }
        }
        for (std::size_t a = 1; a < k; ++a)
            if (gamma[a] <= gamma[a - 1]) internal("Gamma is not increasing");
    }

    // P_1: snake Y^1 from the opening to Gamma.
    {
        std::vector<Rect> y1 = {{1, N + 2, X(2), X(Lp - 1)}, {N + 2, top_v, X(lay.bv.c1), X(lay.bv.c2)}};
        std::vector<Vertex> tgt(k);
        for (std::size_t a = 0; a < k; ++a) tgt[a] = {top_v, gamma[a]};
        SnakeOptions opt;
        opt.enforce_width = false;
        auto ps = route_snake(y1, start, tgt, opt);
        expect_ends(ps, tgt, "Y^1");
        for (std::size_t a = 0; a < k; ++a) out.paths[a].append(ps[a]);
    }

    // P_2 and the in-gadget parts for variable pairs.
    const Coord rx = ctop - N;
    for (std::size_t a = 0; a < k; ++a) {
        if (var_of[a] < 0) continue;
        out.tops[a] = {rx, a_col[a]};
        out.paths[a].push({rx, a_col[a]});
    }
    for (Coord j = 0; j < n; ++j) {
        const auto& xs = x_pairs[j];
        if (xs.empty()) continue;
        const VarGadget& g = lay.vars[j];
        const Coord lx = g.box.c1, right = g.box.c2, HV = g.box.height();
        const Coord W2 = right - N + 1;
        std::vector<Rect> sn = {
            {rx, rx + HV - 1, X(lx), X(lx + N - 1)},
            {rx + HV - N, rx + HV - 1, X(lx + N - 1), X(W2)},
            {rx, rx + HV - 1, X(W2), X(right)},
            {rx, rx + N - 1, X(g.bx.c1), X(W2)},
        };
        std::vector<Vertex> A, B;
        for (std::size_t a : xs) {
            A.push_back({rx, a_col[a]});
            B.push_back({ctop - 1, child_entry[a]});
        }
        auto ps = route_snake(sn, A, B);
        expect_ends(ps, B, "switch snake of x" + num(j + 1));
        for (std::size_t idx = 0; idx < xs.size(); ++idx) out.paths[xs[idx]].append(ps[idx]);
    }
    for (std::size_t a = 0; a < k; ++a) {
        if (var_of[a] < 0) continue;
        out.paths[a].push({ctop, child_entry[a]});
        out.paths[a].append(child_path[a]);
    }

    // Clause pairs: P_2 drops, snake Y^2, then the clause chain.
    std::vector<std::size_t> cl;
    for (std::size_t a = 0; a < k; ++a)
        if (clause_of[a] >= 0) cl.push_back(a);
    if (!cl.empty()) {
        std::vector<Vertex> A, B;
        for (std::size_t idx = 0; idx < cl.size(); ++idx) {
            std::size_t a = cl[idx];
            out.paths[a].push({bot_v, gamma[a]});
            A.push_back({bot_v, gamma[a]});
            B.push_back({top_v, X(lay.bc.c1) + static_cast<Coord>(idx)});
        }
        std::vector<Rect> y2 = {
            {bot_v, H - N - 3, X(2), X(blk + 2)},
            {N + 4, H - N - 3, X(blk + 2), X(Lp - blk - 1)},
            {N + 4, top_v, X(Lp - blk - 1), X(Lp - 1)},
        };
        auto ps = route_snake(y2, A, B);
        expect_ends(ps, B, "Y^2");
        for (std::size_t idx = 0; idx < cl.size(); ++idx) out.paths[cl[idx]].append(ps[idx]);

        // Ordering O' of the clauses by their position on B^C.
        std::vector<std::vector<std::size_t>> of_clause(m);
        std::vector<Coord> pos(m, -1);
        for (std::size_t idx = 0; idx < cl.size(); ++idx) {
            int q = clause_of[cl[idx]];
            if (pos[q] < 0) pos[q] = static_cast<Coord>(idx);
            of_clause[q].push_back(cl[idx]);
        }
        std::vector<Vertex> cur = B;  // current end of every clause path, indexed like cl
        std::unordered_map<std::size_t, std::size_t> cl_index;
        for (std::size_t idx = 0; idx < cl.size(); ++idx) cl_index[cl[idx]] = idx;

        auto bprime = [&](Coord q) {
            const Rect& b = lay.clauses[q].box;
            return std::make_pair(b.c1 - N, b.c2 + N);
        };
        std::vector<std::size_t> carried;  // pairs entering the next snake, in row order
        for (std::size_t idx = 0; idx < cl.size(); ++idx) carried.push_back(cl[idx]);
        for (Coord q = 0; q < m; ++q) {
            if (carried.empty()) break;
            const Rect& box = lay.clauses[q].box;
            const Coord lc = box.c1;
            auto [bl, br] = bprime(q);
            // Gamma(C_q) on row rc - 1: left bypass, own pairs, right bypass.
            std::vector<std::size_t> left, mine, rightv;
            std::vector<Coord> qs;
            for (Coord q2 = q + 1; q2 < m; ++q2)
                if (!of_clause[q2].empty()) qs.push_back(q2);
            std::sort(qs.begin(), qs.end(), [&](Coord x, Coord y) { return pos[x] < pos[y]; });
            for (Coord q2 : qs)
                for (std::size_t a : of_clause[q2]) (pos[q2] < pos[q] ? left : rightv).push_back(a);
            mine = of_clause[q];
            std::vector<std::size_t> order = left;
            order.insert(order.end(), mine.begin(), mine.end());
            order.insert(order.end(), rightv.begin(), rightv.end());
            std::vector<Vertex> tgt;
            for (std::size_t t2 = 0; t2 < left.size(); ++t2) tgt.push_back({rc - 1, X(bl) + static_cast<Coord>(t2)});
            for (std::size_t a : mine) tgt.push_back({rc - 1, child_entry[a]});
            for (std::size_t t2 = 0; t2 < rightv.size(); ++t2)
                tgt.push_back({rc - 1, X(box.c2 + 1) + 1 + static_cast<Coord>(t2)});
            if (!left.empty() && tgt[left.size() - 1].col >= X(lc)) internal("left bypass of C" + num(q + 1) + " too wide");
            if (!rightv.empty() && tgt.back().col > X(br)) internal("right bypass of C" + num(q + 1) + " too wide");
            if (order.size() != carried.size()) internal("clause chain lost paths");

            std::vector<Rect> sn;
            if (q == 0) {
                const Coord c0 = lay.bc.c1;
                sn = {{top_v, rc - 1, X(c0), X(c0 + N - 1)}, {rc - N, rc - 1, X(c0 + N - 1), X(br)}};
            } else {
                auto [pl, pr] = bprime(q - 1);
                sn = {{rb + 1, rb + N, X(pl), X(pr) + 1},
                      {rc - N, rb + N, X(pr) + 1, X(bl) - 1},
                      {rc - N, rc - 1, X(bl) - 1, X(br)}};
            }
            std::vector<Vertex> A2;
            for (std::size_t a : carried) A2.push_back(cur[cl_index[a]]);
            auto ps2 = route_snake(sn, A2, tgt);
            if (carried != order) internal("clause ordering mismatch at C" + num(q + 1));
            expect_ends(ps2, tgt, "clause snake " + num(q + 1));
            for (std::size_t t2 = 0; t2 < carried.size(); ++t2) out.paths[carried[t2]].append(ps2[t2]);

            std::vector<std::size_t> next;
            for (std::size_t t2 = 0; t2 < order.size(); ++t2) {
                std::size_t a = order[t2];
                Coord col = tgt[t2].col;
                if (clause_of[a] == q) {
                    out.tops[a] = {rc, col};
                    out.paths[a].push({rc, col});
                    out.paths[a].append(child_path[a]);
                } else {
                    out.paths[a].push({rb + 1, col});
                    cur[cl_index[a]] = {rb + 1, col};
                    next.push_back(a);
                }
            }
            carried = next;
        }
    }
    for (std::size_t a = 0; a < k; ++a)
        if (out.paths[a].last() != t->pairs[routed[a]].dest && S == 1)
            internal("path of " + t->pairs[routed[a]].label + " misses its destination");
    return out;
}

HostRouting route_host(const RoutingInstance& inst, const Assignment& a, RouteMode mode, int parity) {
    if (!inst.tmpl) throw RoutingError("instance has no template; rebuild it from its formula and profile");
    Router router(mode, a);
    require_satisfying(inst, a);
    const InBoxRouting& r = router.route(inst.tmpl, parity);
    HostRouting out;
    out.pairs = r.pairs;
    const Coord br = inst.placement.box_anchor.row;
    const Coord bc = inst.placement.box_anchor.col;
    const bool wall = mode == RouteMode::edp;
    const Coord off = wall ? bc / 2 : bc - 1;
    auto host_coord = [&](Coord col) { return wall ? (col + 1) / 2 : col; };
    const std::size_t k = r.pairs.size();
    if (k == 0) return out;
    std::vector<Vertex> A(k), B(k);
    Coord lo = std::numeric_limits<Coord>::max(), hi = 0;
    for (std::size_t j = 0; j < k; ++j) {
        A[j] = {1, host_coord(inst.pairs[r.pairs[j]].s.col)};
        B[j] = {br - 1, off + r.entry[j]};
        lo = std::min({lo, A[j].col, B[j].col});
        hi = std::max({hi, A[j].col, B[j].col});
    }
    for (std::size_t j = 1; j < k; ++j)
        if (A[j].col <= A[j - 1].col) throw RoutingError("two routed sources share a wall cell");
    std::vector<Rect> corridor = {{1, br - 1, lo, hi}};
    auto ps = route_snake(corridor, A, B);
    out.paths.resize(k);
    out.tops.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (ps[j].last() != B[j]) internal("P_0 is not order-preserving");
        out.paths[j] = ps[j];
        out.paths[j].append(r.paths[j].translated(br - 1, off));
        out.tops[j] = {r.tops[j].row + br - 1, r.tops[j].col + off};
    }
    return out;
}

}  // namespace detail

std::vector<std::string> select_demands(const RoutingInstance& inst, const Assignment& a) {
    if (!inst.tmpl) throw RoutingError("instance has no template");
    detail::require_satisfying(inst, a);
    detail::Router router(RouteMode::ndp, a);
    std::vector<std::string> out;
    for (std::size_t p : router.select(inst.tmpl)) out.push_back(inst.pairs[p].label);
    return out;
}

std::vector<RoutedPath> route_to_box_tops(const RoutingInstance& inst, const Assignment& a) {
    if (!inst.tmpl || !inst.tmpl->composite) throw RoutingError("route_to_box_tops needs a level >= 1 instance");
    auto hr = detail::route_host(inst, a, RouteMode::ndp, 0);
    std::vector<RoutedPath> out;
    for (std::size_t j = 0; j < hr.pairs.size(); ++j) {
        Path cut;
        const Path& p = hr.paths[j];
        const Vertex& top = hr.tops[j];
        bool done = false;
        cut.push(p.pts[0]);
        for (std::size_t i = 1; i < p.pts.size() && !done; ++i) {
            if (Rect::spanning(p.pts[i - 1], p.pts[i]).contains(top)) {
                cut.push(top);
                done = true;
            } else {
                cut.push(p.pts[i]);
            }
        }
        if (!done && p.pts[0] != top) throw RoutingError("path misses its gadget top");
        out.push_back({inst.pairs[hr.pairs[j]].label, cut});
    }
    return out;
}

std::vector<BoxCertificate> collect_certificates(const RoutingInstance& inst, const RoutedSolution& sol) {
    std::unordered_map<std::string, std::size_t> by_label;
    for (std::size_t j = 0; j < sol.routes.size(); ++j) by_label[sol.routes[j].label] = j;
    std::vector<BoxCertificate> out;
    for (const auto& b : inst.boxes) {
        BoxCertificate c;
        c.box = b.label;
        Rect top{b.rect.r1, b.rect.r1, b.rect.c1, b.rect.c2};
        for (std::size_t p = b.first_pair; p < b.last_pair; ++p) {
            auto it = by_label.find(inst.pairs[p].label);
            if (it == by_label.end()) continue;
            auto v = first_hit(sol.routes[it->second].path, top);
            c.crossings.push_back(v.value_or(Vertex{0, 0}));
        }
        if (!c.crossings.empty()) out.push_back(std::move(c));
    }
    return out;
}

RoutedSolution route_yes(const RoutingInstance& inst, const Assignment& a) {
    auto hr = detail::route_host(inst, a, RouteMode::ndp, 0);
    RoutedSolution sol;
    sol.mode = RouteMode::ndp;
    sol.schedule_digest = inst.schedule_digest;
    for (std::size_t j = 0; j < hr.pairs.size(); ++j) {
        const auto& pr = inst.pairs[hr.pairs[j]];
        if (hr.paths[j].first() != pr.s || hr.paths[j].last() != pr.t)
            throw RoutingError("internal inconsistency: path of " + pr.label + " has wrong endpoints");
        sol.routes.push_back({pr.label, hr.paths[j]});
    }
    sol.certificates = collect_certificates(inst, sol);
    return sol;
}

}  // namespace gridndp
