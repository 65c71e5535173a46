#include "gridndp/builder.hpp"

#include <algorithm>

namespace gridndp {

Rect Placement::box() const {
    return {row_offset + 1, row_offset + tmpl->H, col_offset + 1, col_offset + tmpl->Lp};
}

namespace {

Coord as_coord(const Rational& r, const char* what) {
    if (!is_integral(r)) throw BuildError(std::string(what) + " is not an integer");
    try {
        return to_i64(r, what);
    } catch (const std::exception& e) {
        throw BuildError(e.what());
    }
}

std::vector<Rect> boundary_rects(Coord Lp, Coord H) {
    return {{1, H, 1, 1}, {1, H, Lp, Lp}, {H, H, 1, Lp}};
}

// Fills pairs and deletions from the children.
void flatten(InstanceTemplate& t, std::vector<Rect> del) {
    for (const auto& ch : t.children) {
        for (const auto& r : ch.tmpl->deleted.rects()) del.push_back(r.translated(ch.row_offset, ch.col_offset));
        for (const auto& p : ch.tmpl->pairs)
            t.pairs.push_back({ch.label + "/" + p.label, ch.slot_offset + p.slot,
                               {p.dest.row + ch.row_offset, p.dest.col + ch.col_offset}});
    }
    std::sort(t.pairs.begin(), t.pairs.end(), [](const DemandPair& a, const DemandPair& b) { return a.slot < b.slot; });
    t.deleted = RegionSet(del);
}

std::string num(Coord v) { return std::to_string(v); }

}  // namespace

TemplatePtr build_level0(const Schedule& s) {
    auto t = std::make_shared<InstanceTemplate>();
    t->kind = InstanceTemplate::Kind::level0;
    t->level = 0;
    t->L = as_coord(s.at(0).L, "L_0");
    t->Lp = as_coord(s.at(0).Lp, "L'_0");
    t->H = as_coord(s.at(0).H, "H_0");
    t->deleted = RegionSet(boundary_rects(t->Lp, t->H));
    t->pairs.push_back({"s", 1, {t->middle_row(), 2}});
    t->schedule_digest = s.digest();
    return t;
}

TemplatePtr widen(const TemplatePtr& base, Coord c) {
    if (c < 1) throw BuildError("widen: c must be positive");
    auto t = std::make_shared<InstanceTemplate>();
    t->kind = InstanceTemplate::Kind::wide;
    t->level = base->level;
    t->L = c * base->L;
    t->Lp = c * base->Lp;
    t->H = base->H;
    t->schedule_digest = base->schedule_digest;
    for (Coord r = 1; r <= c; ++r)
        t->children.push_back({"w" + num(r), base, (r - 1) * base->L, 0, (r - 1) * base->Lp});
    flatten(*t, {});
    return t;
}

TemplatePtr build_next_level(const TemplatePtr& ti, const Formula& f, const Schedule& s) {
    const int i = ti->level;
    if (ti->kind == InstanceTemplate::Kind::wide) throw BuildError("child template must not be a wide instance");
    if (s.max_level() < i + 1) throw BuildError("schedule does not reach level " + std::to_string(i + 1));
    auto rep = validate_3sat5(f);
    if (!rep.ok()) throw InvalidFormula(rep);
    if (f.var_count != s.n) throw BuildError("formula has n = " + num(f.var_count) + ", schedule n = " + num(s.n));
    auto ledger = check_ledger(s, i);
    for (const auto& e : ledger.entries)
        if (e.gating && !e.holds)
            throw BuildError("ledger entry " + std::to_string(e.id) + " (" + e.name + ") fails for level " +
                             std::to_string(i + 1));
    const Level& a = s.at(i);
    const Level& b = s.at(i + 1);
    if (ti->L != as_coord(a.L, "L_i") || ti->Lp != as_coord(a.Lp, "L'_i") || ti->H != as_coord(a.H, "H_i"))
        throw BuildError("child template does not match the schedule at level " + std::to_string(i));

    auto lay = std::make_shared<CompositeLayout>();
    lay->formula = f;
    const Coord n = f.var_count;
    const Coord m = f.clause_count();
    const Coord h = as_coord(Rational(s.profile.h), "h");
    const Coord c = as_coord(b.c, "c_{i+1}");
    const Coord N = as_coord(b.N, "N_{i+1}");
    const Coord Ni = as_coord(a.N, "N_i");
    const Coord Hi = ti->H, Lpi = ti->Lp, Li = ti->L;
    const Coord H = as_coord(b.H, "H_{i+1}");
    const Coord Lp = as_coord(b.Lp, "L'_{i+1}");
    const Coord L = as_coord(b.L, "L_{i+1}");
    const Coord blk = as_coord(s.block_length(i + 1), "block length");
    lay->n = n;
    lay->m = m;
    lay->h = h;
    lay->c = c;
    lay->N = N;
    lay->Ni = Ni;
    lay->Hi = Hi;
    lay->Lpi = Lpi;
    lay->Li = Li;
    lay->block = blk;

    if (Lp - 2 * blk - 2 < 3) throw BuildError("no room between B^V and B^C");
    if (Lpi % 2 != 0 || Lp % 2 != 0) throw BuildError("box lengths must be even");
    const Coord mid = (H + 1) / 2;
    lay->bv = {2 * N + 1, H - 2 * N, 2, blk + 1};
    lay->bc = {2 * N + 1, H - 2 * N, Lp - blk, Lp - 1};
    lay->child_top = mid - (Hi + 1) / 2 + 1;
    const Coord WV = 4 * N + (70 * h + 2) * c * Lpi;
    const Coord HV = Hi + 2 * N;
    const Coord rx = lay->child_top - N;
    if (rx - N <= lay->bv.r1 || rx + HV - 1 + N >= lay->bv.r2) throw BuildError("variable boxes do not fit in B^V");
    const Coord WC = 3 * c * h * Lpi;

    auto margin_for = [&](Coord total, Coord sep, Coord c1) {
        Coord slack = blk - total;
        Coord margin = slack / 2;
        if ((c1 + margin) % 2 == 0) --margin;
        if (margin < sep || slack - margin < sep) throw BuildError("gadget boxes do not fit in their block");
        return margin;
    };
    const Coord mv = margin_for(n * WV + (n - 1) * 2 * N, 2 * N, lay->bv.c1);
    const Coord mc = margin_for(m * WC + (m - 1) * 4 * N, 4 * N, lay->bc.c1);

    auto t = std::make_shared<InstanceTemplate>();
    t->kind = InstanceTemplate::Kind::composite;
    t->level = i + 1;
    t->L = L;
    t->Lp = Lp;
    t->H = H;
    t->schedule_digest = s.digest();
    t->layout.push_back({"BV", "", lay->bv});
    t->layout.push_back({"BC", "", lay->bc});

    const Coord per_var = 80 * h + 2;
    auto slot_of = [&](Coord interval, Coord r) { return interval * c * Li + (r - 1) * Li; };
    auto place = [&](const std::string& label, Coord slot_offset, Coord col) {
        t->children.push_back({label, ti, slot_offset, lay->child_top - 1, col - 1});
        return static_cast<int>(t->children.size()) - 1;
    };

    for (Coord j = 0; j < n; ++j) {
        VarGadget g;
        g.var = static_cast<int>(j);
        Coord lx = lay->bv.c1 + mv + j * (WV + 2 * N);
        g.box = {rx, rx + HV - 1, lx, lx + WV - 1};
        Coord wtf = (5 * h + 1) * c * Lpi;
        g.bt = {lay->child_top, lay->child_top + Hi - 1, lx + 2 * N, lx + 2 * N + wtf - 1};
        g.bf = {g.bt.r1, g.bt.r2, g.bt.c2 + 1, g.bt.c2 + wtf};
        g.bx = {g.bt.r1, g.bt.r2, g.bf.c2 + 1, g.bf.c2 + 60 * h * c * Lpi};
        const std::string xl = "x" + num(j + 1);
        const Coord base = j * per_var;
        for (Coord k = 1; k <= 5 * h + 1; ++k)
            for (Coord r = 1; r <= c; ++r)
                g.t_children.push_back(place(xl + ".T" + num(k) + ".w" + num(r), slot_of(base + 2 * (k - 1), r),
                                             g.bt.c1 + ((k - 1) * c + (r - 1)) * Lpi));
        for (Coord k = 1; k <= 5 * h + 1; ++k)
            for (Coord r = 1; r <= c; ++r)
                g.f_children.push_back(place(xl + ".F" + num(k) + ".w" + num(r),
                                             slot_of(base + 70 * h + 1 + 2 * (k - 1), r),
                                             g.bf.c1 + ((k - 1) * c + (r - 1)) * Lpi));
        for (Coord k = 1; k <= 60 * h; ++k)
            for (Coord r = 1; r <= c; ++r)
                g.x_children.push_back(place(xl + ".X" + num(k) + ".w" + num(r), slot_of(base + 10 * h + k, r),
                                             g.bx.c1 + ((k - 1) * c + (r - 1)) * Lpi));
        t->layout.push_back({"Bx", xl, g.box});
        t->layout.push_back({"BT", xl, g.bt});
        t->layout.push_back({"BF", xl, g.bf});
        t->layout.push_back({"BX", xl, g.bx});
        lay->vars.push_back(std::move(g));
    }

    for (Coord q = 0; q < m; ++q) {
        ClauseGadget g;
        g.clause = static_cast<int>(q);
        Coord lc = lay->bc.c1 + mc + q * (WC + 4 * N);
        g.box = {lay->child_top, lay->child_top + Hi - 1, lc, lc + WC - 1};
        const std::string cl = "C" + num(q + 1);
        t->layout.push_back({"BCq", cl, g.box});
        for (Coord j = 1; j <= h; ++j) {
            Rect sub{g.box.r1, g.box.r2, lc + (j - 1) * 3 * c * Lpi, lc + j * 3 * c * Lpi - 1};
            g.sub.push_back(sub);
            t->layout.push_back({"Bj", cl + ".j" + num(j), sub});
        }
        const Clause& cls = f.clauses[q];
        for (int z = 1; z <= 3; ++z) {
            const Literal& lit = cls[z - 1];
            Coord rank = clause_rank_for_var(f, lit.var, static_cast<int>(q));
            const Coord base = lit.var * per_var;
            for (Coord j = 1; j <= h; ++j) {
                Coord y = (rank - 1) * h + j;
                Coord interval = base + (lit.positive ? 70 * h + 2 * y : 2 * y - 1);
                for (Coord r = 1; r <= c; ++r)
                    g.lit_children[z - 1].push_back(
                        place(cl + ".z" + num(z) + ".j" + num(j) + ".w" + num(r), slot_of(interval, r),
                              lc + ((j - 1) * 3 + (z - 1)) * c * Lpi + (r - 1) * Lpi));
            }
        }
        lay->clauses.push_back(std::move(g));
    }

    flatten(*t, boundary_rects(Lp, H));
    if (!t->pairs.empty() && t->pairs.back().slot > L) throw BuildError("source slot beyond Z");
    t->composite = lay;
    return t;
}

TemplatePtr build_level(const Formula& f, const Schedule& s, int level) {
    TemplatePtr t = build_level0(s);
    for (int i = 0; i < level; ++i) t = build_next_level(t, f, s);
    return t;
}

HostPlacement default_placement(const InstanceTemplate& t) {
    HostPlacement p;
    Coord Q = 2 * t.L + 2 * t.Lp + 4 * t.H;
    p.z_col = t.H + 1;
    Coord bc = p.z_col + t.L + t.H;
    if (bc % 2 != 0) ++bc;
    Coord br = t.H + 1;
    if (br % 2 == 0) ++br;
    p.box_anchor = {br, bc};
    p.host = {Q, std::max(3 * t.H, br + 2 * t.H - 1)};
    if (p.host.length % 2 != 0) ++p.host.length;
    return p;
}

void check_placement(const InstanceTemplate& t, const HostPlacement& p) {
    auto fail = [](const std::string& m) { throw BuildError("placement: " + m); };
    if (p.host.length < 2 * t.L + 2 * t.Lp + 4 * t.H) fail("host length below 2L + 2L' + 4H");
    if (p.host.height < 3 * t.H) fail("host height below 3H");
    const Coord r1 = p.box_anchor.row, c1 = p.box_anchor.col;
    const Coord r2 = r1 + t.H - 1, c2 = c1 + t.Lp - 1;
    if (r1 - 1 < t.H) fail("box closer than H to the top boundary");
    if (p.host.height - r2 < t.H) fail("box closer than H to the bottom boundary");
    if (c1 - 1 < t.H) fail("box closer than H to the left boundary");
    if (p.host.length - c2 < t.H) fail("box closer than H to the right boundary");
    if (p.z_col < 1 || p.z_col + t.L - 1 > p.host.length) fail("Z does not fit on row 1");
}

namespace {

void collect_boxes(const InstanceTemplate& t, const std::string& label, Coord dr, Coord dc, Coord slot_base,
                   const std::vector<InstancePair>& pairs, const std::vector<Coord>& slots,
                   std::vector<BoxImage>& out) {
    if (t.kind != InstanceTemplate::Kind::wide) {
        auto lo = std::lower_bound(slots.begin(), slots.end(), slot_base + 1);
        auto hi = std::upper_bound(slots.begin(), slots.end(), slot_base + t.L);
        out.push_back({label, t.level, {dr + 1, dr + t.H, dc + 1, dc + t.Lp},
                       static_cast<std::size_t>(lo - slots.begin()), static_cast<std::size_t>(hi - slots.begin())});
    }
    for (const auto& ch : t.children) {
        std::string cl = label.empty() ? ch.label : label + "/" + ch.label;
        collect_boxes(*ch.tmpl, cl, dr + ch.row_offset, dc + ch.col_offset, slot_base + ch.slot_offset, pairs, slots,
                      out);
    }
}

}  // namespace

RoutingInstance instantiate(const TemplatePtr& t, const HostPlacement& p) {
    check_placement(*t, p);
    RoutingInstance inst;
    inst.host = p.host;
    inst.placement = p;
    inst.level = t->level;
    inst.schedule_digest = t->schedule_digest;
    inst.tmpl = t;
    const Coord dr = p.box_anchor.row - 1, dc = p.box_anchor.col - 1;
    inst.deleted = t->deleted.translated(dr, dc);
    std::vector<Coord> slots;
    for (const auto& d : t->pairs) {
        inst.pairs.push_back({d.label, {1, p.z_col + d.slot - 1}, {d.dest.row + dr, d.dest.col + dc}});
        slots.push_back(d.slot);
    }
    collect_boxes(*t, "", dr, dc, 0, inst.pairs, slots, inst.boxes);
    for (const auto& nr : t->layout) inst.layout.push_back({nr.kind, nr.label, nr.rect.translated(dr, dc)});
    return inst;
}

std::size_t RoutingInstance::innermost_box(std::size_t k) const {
    std::size_t best = boxes.size();
    for (std::size_t b = 0; b < boxes.size(); ++b)
        if (k >= boxes[b].first_pair && k < boxes[b].last_pair && boxes[b].rect.contains(pairs[k].t)) best = b;
    if (best == boxes.size()) throw std::logic_error("destination outside every box");
    return best;
}

Rect RoutingInstance::q_line(std::size_t k) const {
    const Vertex& t = pairs[k].t;
    // Box-free fixtures: the line runs to the bottom row of the host.
    if (boxes.empty()) return {t.row, host.height, t.col, t.col};
    const auto& b = boxes[innermost_box(k)];
    return {t.row, b.rect.r2 - 1, t.col, t.col};
}

}  // namespace gridndp
