// Acceptance run: one PASS/FAIL line per criterion with its time budget.

#include "gridndp/encircle.hpp"
#include "gridndp/fixtures.hpp"
#include "gridndp/io.hpp"
#include "gridndp/verify.hpp"
#include "snake_gen.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace gridndp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

const Schedule& compact_schedule() {
    static const Schedule s = compute_schedule(Profile::compact(Rational(1, 10), 3, 1), 3, 1);
    return s;
}

RoutingInstance build_instance(int level) {
    auto t = build_level(search_n3_formula(), compact_schedule(), level);
    return instantiate(t, default_placement(*t));
}

const RoutingInstance& level1() {
    static const RoutingInstance inst = build_instance(1);
    return inst;
}

std::string str(const Rational& q) {
    std::ostringstream o;
    o << q;
    return o.str();
}

Outcome schedule_identities() {
    Outcome o;
    for (Rational eps : {Rational(1, 10), Rational(1, 100)})
        for (int n : {3, 300}) {
            Profile p = Profile::paper(eps);
            auto s = compute_schedule(p, n, 4);
            const std::string where = "eps " + str(eps) + " n " + std::to_string(n);
            o.require(s.at(0).N == 1 && s.at(0).Np == 1, where + ": N_0 or N'_0 differs from 1");
            for (int i = 0; i <= 3; ++i) {
                o.require(s.at(i + 1).g == s.at(i).g / (1 - p.delta), where + ": g recurrence at i = " + std::to_string(i));
                o.require(s.at(i).H == 2 * s.at(i + 1).c * eps * eps * s.at(i).Np / Rational(BigInt(10000000000000LL)),
                          where + ": height identity at i = " + std::to_string(i));
            }
        }
    if (o.pass) o.detail = "2 epsilons x 2 n x levels 0-3, exact";
    return o;
}

Outcome ledger() {
    Outcome o;
    int held = 0;
    for (Rational eps : {Rational(1, 10), Rational(1, 100)})
        for (int n : {3, 300})
            for (int i = 0; i <= 3; ++i) {
                auto r = check_ledger(compute_schedule(Profile::paper(eps), n, i + 1), i);
                o.require(r.entries.size() == 12, "ledger does not have 12 entries");
                for (const auto& e : r.entries) {
                    o.require(e.holds, "entry " + std::to_string(e.id) + " fails at i = " + std::to_string(i));
                    held += e.holds;
                }
            }
    auto broken = [](const std::string& extra, int level) {
        return compute_schedule(parse_profile("mode = compact\nepsilon = 1/10\n" + extra), 3, level);
    };
    auto narrow = check_ledger(broken("lp_mult = 1/100\n", 1), 0);
    o.require(!narrow.entry(1).holds && !narrow.entry(2).holds, "lp_mult = 1/100 should fail entries 1 and 2");
    auto tall = check_ledger(broken("h_mult = 5000\n", 2), 1);
    o.require(!tall.entry(3).holds, "h_mult = 5000 should fail entry 3");
    if (o.pass) o.detail = std::to_string(held) + "/192 entries hold; broken profiles fail entries 1, 2, 3";
    return o;
}

Outcome level0_end_to_end() {
    Outcome o;
    auto t = build_level0(compact_schedule());
    HostPlacement p = default_placement(*t);
    HostPlacement q = p;
    q.host.length += 10;
    q.host.height += 6;
    q.z_col += 5;
    q.box_anchor.row += 3;
    q.box_anchor.col += 2;
    for (const auto& pl : {p, q}) {
        auto inst = instantiate(t, pl);
        auto sol = route_yes(inst, parse_assignment("101"));
        auto rep = verify_solution(inst, sol, RouteMode::ndp);
        o.require(rep.ok(), "verification failed: " + rep.format());
        o.require(sol.routes.size() == 1, "route_yes did not route exactly 1 pair");
        o.require(exact_solve(inst, RouteMode::ndp).optimum == 1, "exact optimum differs from 1");
    }
    if (o.pass) o.detail = "2 placements: routed 1, verified, exact optimum 1";
    return o;
}

Outcome snakes() {
    Outcome o;
    std::mt19937_64 rng(20261016);
    int routed = 0;
    for (int k = 0; k < 1000; ++k) {
        auto s = testing::random_snake(rng, 12, 5);
        const std::string where = "snake " + std::to_string(k);
        std::vector<Path> paths;
        try {
            paths = route_snake(s.corridors, s.A, s.Ap);
        } catch (const SnakeError& e) {
            o.require(false, where + ": " + e.what());
            continue;
        }
        std::set<Vertex> ends;
        for (const auto& p : paths) ends.insert(p.last());
        bool ok = paths.size() == s.A.size() && ends == std::set<Vertex>(s.Ap.begin(), s.Ap.end());
        for (std::size_t a = 0; a < paths.size() && ok; ++a) ok = paths[a].first() == s.A[a];
        o.require(ok, where + ": wrong endpoints");
        o.require(paths_node_disjoint(paths).ok(), where + ": paths intersect");
        o.require(testing::inside_snake(paths, s.corridors), where + ": path leaves the snake");
        o.require(testing::snake_flow_oracle(s) == static_cast<int>(paths.size()), where + ": max-flow count differs");
        routed += ok;
    }
    if (o.pass) o.detail = std::to_string(routed) + "/1000 routed, disjoint, contained, flow counts agree";
    return o;
}

Outcome level1_yes() {
    Outcome o;
    const auto& inst = level1();
    o.require(check_ledger(compact_schedule(), 0).ok(), "compact ledger fails");
    const auto sats = all_satisfying(search_n3_formula());
    bool false_var = false;
    for (const auto& a : sats) {
        for (bool v : a.values) false_var = false_var || !v;
        auto sol = route_yes(inst, a);
        const std::string where = "assignment " + format_assignment(a).substr(0, 3);
        o.require(sol.routes.size() == 603, where + ": routed " + std::to_string(sol.routes.size()));
        auto rep = verify_solution(inst, sol, RouteMode::ndp);
        o.require(rep.ok(), where + ": " + rep.format());
        std::set<std::string> certified;
        for (const auto& c : sol.certificates) certified.insert(c.box);
        o.require(certified.count("") == 1, where + ": no certificate for the top box");
        std::set<std::string> routed;
        for (const auto& r : sol.routes) routed.insert(r.label);
        for (std::size_t b = 1; b < inst.boxes.size(); ++b) {
            const auto& bi = inst.boxes[b];
            bool used = false;
            for (std::size_t k = bi.first_pair; k < bi.last_pair && !used; ++k) used = routed.count(inst.pairs[k].label);
            if (used) o.require(certified.count(bi.label) == 1, where + ": no certificate for child " + bi.label);
        }
    }
    o.require(sats.size() >= 2 && false_var, "need two satisfying assignments, one with a FALSE variable");
    if (o.pass) o.detail = std::to_string(sats.size()) + " assignments x 603 routed, all checks pass";
    return o;
}

Outcome edp_wall() {
    Outcome o;
    auto check_audit = [&](const EdpInstance& e, const std::string& name) {
        auto au = audit_degrees(e, AuditMode::exhaustive);
        o.require(au.exhaustive && au.max_degree <= 3 && au.max_terminal_degree <= 2,
                  name + ": degree audit failed at " + to_string(au.max_degree_witness));
        return au.vertices_checked;
    };
    auto w0 = to_wall_instance(build_instance(0));
    auto w1 = to_wall_instance(level1());
    std::uint64_t n = check_audit(w0, "level 0") + check_audit(w1, "level 1");
    const auto a = parse_assignment("011");
    for (int parity : {1, 2}) {
        auto sol = route_yes_canonical(w1, a, parity);
        const std::size_t want = parity == 1 ? 302 : 301;
        o.require(sol.routes.size() == want, "parity " + std::to_string(parity) + " routed " +
                                                 std::to_string(sol.routes.size()));
        auto rep = verify_solution(w1, sol);
        o.require(rep.ok(), rep.format());
        o.require(edge_node_equivalence(w1, sol), "edge-disjoint paths share a vertex");
    }
    auto s0 = route_yes_canonical(w0, a, 1);
    o.require(s0.routes.size() == 1 && verify_solution(w0, s0).ok() && edge_node_equivalence(w0, s0),
              "level-0 canonical routing failed");
    if (o.pass)
        o.detail = "max degree 3, terminals <= 2 over " + std::to_string(n) + " vertices; parity 1 routes 302, canonical";
    return o;
}

Outcome gadget_fixtures() {
    Outcome o;
    for (int g = 1; g <= 5; ++g) {
        auto gi = with_pairs(k5_gadget(), one_group_pairs(g, 5));
        for (std::size_t k = 1; k <= 5; ++k) {
            std::vector<std::size_t> sub(k);
            for (std::size_t j = 0; j < k; ++j) sub[j] = j;
            bool routable = route_subset(gi, sub, RouteMode::edp).has_value();
            o.require(routable == (k <= 4), "group " + std::to_string(g) + ", " + std::to_string(k) + " pairs: routable = " +
                                                (routable ? "yes" : "no"));
        }
        o.require(exact_solve(gi, RouteMode::edp).optimum == 4, "group optimum differs from 4");
    }
    auto pattern = with_pairs(k5_gadget(), k5_pattern_pairs());
    std::vector<std::size_t> all(pattern.pairs.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    o.require(route_subset(pattern, all, RouteMode::edp).has_value(), "K5 pattern not routable");
    auto star = star_fixture(5);
    ExactLimits lim;
    lim.max_pairs = star.pairs.size();
    o.require(exact_solve(star, RouteMode::ndp, lim).optimum == 1, "star optimum differs from 1");
    for (std::size_t p = 0; p < star.pairs.size(); ++p)
        o.require(route_subset(star, {p}, RouteMode::ndp).has_value(), "star pair not routable alone");
    if (o.pass) o.detail = "gadget routable iff <= 4 per group; K5 pattern routable; star optimum 1 of 21";
    return o;
}

Outcome selector() {
    Outcome o;
    std::mt19937_64 rng(64);
    int families = 0, exhaustive = 0;
    for (int r = 1; r <= 3; ++r)
        for (Coord H : {2, 4, 10, 20, 40})
            for (int seed = 0; seed < 4; ++seed) {
                const std::size_t per = static_cast<std::size_t>(r * r * H / 2);
                EncirclingIndex idx;
                for (std::size_t k = 0; k < per * r; ++k) {
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "p%05zu", k);
                    idx.labels.push_back(buf);
                }
                idx.hits.resize(idx.labels.size());
                // Each Q line has H/2 vertices; each is on at most one path.
                for (std::size_t b = 0; b < idx.labels.size(); ++b) {
                    const Coord on = static_cast<Coord>(rng() % (H / 2 + 1));
                    for (Coord v = 0; v < on; ++v) {
                        std::size_t a = rng() % idx.labels.size();
                        if (a != b) ++idx.hits[a][b];
                    }
                }
                std::vector<std::vector<std::string>> groups(r);
                for (std::size_t k = 0; k < idx.labels.size(); ++k) groups[k / per].push_back(idx.labels[k]);
                std::vector<std::string> sel;
                try {
                    sel = select_non_encircling(idx, groups, H);
                } catch (const SelectionError& e) {
                    o.require(false, std::string("selector failed: ") + e.what());
                    continue;
                }
                bool valid = sel.size() == static_cast<std::size_t>(r);
                for (std::size_t i = 0; i < sel.size() && valid; ++i) {
                    valid = std::find(groups[i].begin(), groups[i].end(), sel[i]) != groups[i].end();
                    for (std::size_t j = 0; j < sel.size() && valid; ++j) {
                        if (i == j) continue;
                        auto a = idx.index(sel[i]), b = idx.index(sel[j]);
                        valid = !(idx.hits[a].count(b) && idx.hits[a].at(b) > 0);
                    }
                }
                o.require(valid, "selection is not pairwise non-encircling");
                double space = 1;
                for (const auto& g : groups) space *= static_cast<double>(g.size());
                if (space <= 1e6) {
                    auto all = all_non_encircling(idx, groups, static_cast<std::size_t>(space) + 1);
                    o.require(std::find(all.begin(), all.end(), sel) != all.end(), "selection not found by exhaustive search");
                    ++exhaustive;
                } else {
                    o.require(!all_non_encircling(idx, groups, 1).empty(), "exhaustive search found no selection");
                }
                ++families;
            }
    if (o.pass)
        o.detail = std::to_string(families) + " families (r <= 3, H <= 40), " + std::to_string(exhaustive) +
                   " fully enumerated";
    return o;
}

Outcome greedy() {
    Outcome o;
    auto check = [&](const RoutingInstance& inst, bool independent, const std::string& name) {
        auto g = greedy_solve(inst);
        o.require(verify_solution(inst, g, RouteMode::ndp).ok(), name + ": greedy output fails verification");
        auto opt = exact_solve(inst, RouteMode::ndp).optimum;
        o.require(g.routes.size() <= opt, name + ": greedy above the optimum");
        if (independent) o.require(g.routes.size() == opt, name + ": greedy below optimum on independent pairs");
    };
    check(build_instance(0), true, "level 0");
    check(crossing_fixture(), false, "crossing");
    for (int k = 1; k <= 6; ++k) check(parallel_fixture(k), true, "parallel " + std::to_string(k));
    for (unsigned seed = 1; seed <= 20; ++seed)
        check(random_grid_fixture(seed, 6, 6, 2 + static_cast<int>(seed % 5)), false, "random " + std::to_string(seed));
    if (o.pass) o.detail = "28 fixtures: greedy verifies, <= exact, equal on independent pairs";
    return o;
}

Outcome determinism() {
    Outcome o;
    auto run = [] {
        std::vector<std::string> out;
        for (int level : {0, 1}) {
            InstanceDocument d;
            d.instance = build_instance(level);
            d.recipe = Recipe{compact_schedule().profile, 3, search_n3_formula(), level};
            out.push_back(format_instance(d));
            for (const auto& a : all_satisfying(search_n3_formula()))
                out.push_back(format_solution(route_yes(d.instance, a)));
            auto w = to_wall_instance(d.instance);
            for (int parity : {1, 2})
                out.push_back(format_solution(route_yes_canonical(w, parse_assignment("101"), parity)));
        }
        out.push_back(format_solution(greedy_solve(crossing_fixture())));
        return out;
    };
    auto a = run(), b = run();
    o.require(a == b, "outputs differ between runs");
    if (o.pass) o.detail = std::to_string(a.size()) + " documents byte-identical across two runs";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "schedule identities", 1, schedule_identities},
        {2, "parameter ledger", 1, ledger},
        {3, "level-0 end to end", 1, level0_end_to_end},
        {4, "snake routing", 60, snakes},
        {5, "level-1 YES routing", 120, level1_yes},
        {6, "EDP wall", 180, edp_wall},
        {7, "gadget fixtures", 60, gadget_fixtures},
        {8, "non-encircling selector", 30, selector},
        {9, "greedy baseline", 30, greedy},
        {10, "determinism", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget > 0 && secs >= c.budget) {
            o.pass = false;
            o.detail += " (over the time budget)";
        }
        failed += !o.pass;
        char timing[64];
        if (c.budget > 0)
            std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.budget);
        else
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " [" << timing << "] " << c.name << ": "
                  << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
