#include "gridndp/edp.hpp"
#include "gridndp/fixtures.hpp"
#include "gridndp/io.hpp"
#include "gridndp/render.hpp"
#include "gridndp/schedule.hpp"
#include "gridndp/solvers.hpp"
#include "gridndp/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace gridndp;

namespace {

// Bad input: exit 2. Failed check: exit 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string profile = "compact";
    std::string epsilon = "1/10";
    int n = 3;
    int level = 0;
    std::string formula_path;
    std::string assignment;
    std::string mode = "ndp";
    std::string out;
    std::string render = "svg";
    std::string limits;
    std::string instance_path, solution_path, graph_path, placement;
    int parity = 1;
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") std::cout << text;
    else write_file(out, text);
}

Profile load_profile(const Common& o) {
    if (o.profile == "paper" || o.profile == "compact")
        return parse_profile("mode = " + o.profile + "\nepsilon = " + o.epsilon + "\n");
    return parse_profile(read_file(o.profile));
}

Formula load_formula(const Common& o) {
    if (o.formula_path.empty()) return search_n3_formula();
    return parse_formula(read_file(o.formula_path));
}

Assignment load_assignment(const std::string& arg) {
    if (arg.empty()) throw InputError("--assignment is required");
    if (arg.find_first_not_of("01") == std::string::npos) return parse_assignment(arg + "\n");
    return parse_assignment(read_file(arg));
}

RouteMode load_mode(const std::string& m) {
    if (m == "ndp") return RouteMode::ndp;
    if (m == "edp") return RouteMode::edp;
    throw InputError("--mode must be ndp or edp");
}

struct Limits {
    std::int64_t area;
    std::int64_t pairs;
};

// Comma-separated key=value list; keys area and pairs.
Limits parse_limits(const std::string& limits, std::int64_t area, std::int64_t pairs = 0) {
    Limits l{area, pairs};
    if (limits.empty()) return l;
    std::istringstream in(limits);
    std::string kv;
    while (std::getline(in, kv, ',')) {
        auto eq = kv.find('=');
        const std::string key = eq == std::string::npos ? kv : kv.substr(0, eq);
        if (eq == std::string::npos || (key != "area" && key != "pairs"))
            throw InputError("--limits expects area=<vertices>,pairs=<count>");
        std::int64_t v = 0;
        try {
            v = std::stoll(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw InputError("--limits: bad value '" + kv.substr(eq + 1) + "'");
        }
        (key == "area" ? l.area : l.pairs) = v;
    }
    return l;
}

std::int64_t area_limit(const std::string& limits, std::int64_t fallback) { return parse_limits(limits, fallback).area; }

InstanceDocument load_instance(const Common& o) {
    if (o.instance_path.empty()) throw InputError("--instance is required");
    return parse_instance(read_file(o.instance_path));
}

int cmd_gen(const Common& o) {
    Recipe r{load_profile(o), o.n, load_formula(o), o.level};
    Schedule s = compute_schedule(r.profile, r.n, r.level);
    TemplatePtr t = build_level(r.formula, s, r.level);
    InstanceDocument doc{instantiate(t, default_placement(*t)), false, r};
    emit(o.out, format_instance(doc));
    return 0;
}

int cmd_instantiate(const Common& o) {
    InstanceDocument doc = load_instance(o);
    if (!doc.recipe) throw InputError("instance has no recipe");
    const Recipe& r = *doc.recipe;
    TemplatePtr t = build_level(r.formula, compute_schedule(r.profile, r.n, r.level), r.level);
    HostPlacement p = default_placement(*t);
    if (!o.placement.empty()) {
        std::istringstream in(o.placement);
        char c1 = 0, c2 = 0, c3 = 0, c4 = 0;
        if (!(in >> p.host.length >> c1 >> p.host.height >> c2 >> p.z_col >> c3 >> p.box_anchor.row >> c4 >>
              p.box_anchor.col) ||
            c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',')
            throw InputError("--placement expects length,height,zcol,anchor_row,anchor_col");
    }
    doc.instance = instantiate(t, p);
    emit(o.out, format_instance(doc));
    return 0;
}

int cmd_route_yes(const Common& o) {
    InstanceDocument doc = load_instance(o);
    RoutingInstance inst = realize(doc);
    Assignment a = load_assignment(o.assignment);
    RoutedSolution sol = load_mode(o.mode) == RouteMode::edp
                             ? route_yes_canonical(to_wall_instance(inst), a, o.parity)
                             : route_yes(inst, a);
    emit(o.out, format_solution(sol));
    return 0;
}

int cmd_to_edp(const Common& o) {
    InstanceDocument doc = load_instance(o);
    EdpInstance e = to_wall_instance(doc.instance);
    const DegreeAudit& d = e.audit;
    std::cerr << "wall " << e.spec.wall_length() << " x " << e.spec.wall_height() << ": max degree " << d.max_degree
              << ", max terminal degree " << d.max_terminal_degree << ", " << d.vertices_checked
              << " vertices checked" << (d.exhaustive ? "" : " (one per translation class)") << '\n';
    doc.wall = true;
    emit(o.out, format_instance(doc));
    return d.ok() ? 0 : 1;
}

int cmd_verify(const Common& o) {
    InstanceDocument doc = load_instance(o);
    if (o.solution_path.empty()) throw InputError("--solution is required");
    RoutedSolution sol = parse_solution(read_file(o.solution_path));
    check_digest(doc.instance, sol);
    RouteMode mode = o.mode.empty() ? sol.mode : load_mode(o.mode);
    VerificationReport rep = verify_solution(doc.instance, sol, mode);
    emit(o.out, rep.format());
    return rep.ok() ? 0 : 1;
}

int cmd_solve_greedy(const Common& o) {
    if (!o.graph_path.empty()) {
        GraphInstance gi = parse_graph(read_file(o.graph_path));
        GraphSolution s = greedy_solve(gi);
        std::ostringstream out;
        out << "routed " << s.routed.size() << '\n';
        for (std::size_t k = 0; k < s.routed.size(); ++k) {
            out << gi.pairs[s.routed[k]].label << ':';
            for (int v : s.paths[k]) out << ' ' << gi.g.name(v);
            out << '\n';
        }
        emit(o.out, out.str());
        return 0;
    }
    InstanceDocument doc = load_instance(o);
    emit(o.out, format_solution(greedy_solve(doc.instance, area_limit(o.limits, kGreedyAreaLimit))));
    return 0;
}

int cmd_solve_exact(const Common& o) {
    RouteMode mode = load_mode(o.mode);
    ExactLimits lim;
    Limits l = parse_limits(o.limits, lim.max_vertices, static_cast<std::int64_t>(lim.max_pairs));
    lim.max_vertices = l.area;
    lim.max_pairs = static_cast<std::size_t>(l.pairs);
    if (!o.graph_path.empty()) {
        GraphInstance gi = parse_graph(read_file(o.graph_path));
        OptimalSolution s = exact_solve(gi, mode, lim);
        std::ostringstream out;
        out << "optimum " << s.optimum << '\n';
        for (std::size_t k = 0; k < s.witness.routed.size(); ++k) {
            out << gi.pairs[s.witness.routed[k]].label << ':';
            for (int v : s.witness.paths[k]) out << ' ' << gi.g.name(v);
            out << '\n';
        }
        emit(o.out, out.str());
        return 0;
    }
    InstanceDocument doc = load_instance(o);
    GridOptimum g = exact_solve(doc.instance, mode, lim);
    std::cerr << "optimum " << g.optimum << '\n';
    emit(o.out, format_solution(g.witness));
    return 0;
}

int cmd_check_params(const Common& o) {
    Schedule s = compute_schedule(load_profile(o), o.n, o.level + 1);
    LedgerReport r = check_ledger(s, o.level);
    emit(o.out, format_ledger(r));
    return r.ok() ? 0 : 1;
}

int cmd_render(const Common& o) {
    InstanceDocument doc = load_instance(o);
    std::optional<RoutedSolution> sol;
    if (!o.solution_path.empty()) {
        sol = parse_solution(read_file(o.solution_path));
        check_digest(doc.instance, *sol);
    }
    const RoutedSolution* sp = sol ? &*sol : nullptr;
    if (o.render == "svg") emit(o.out, render_svg(doc.instance, sp, area_limit(o.limits, kSvgAreaLimit)));
    else if (o.render == "ascii") emit(o.out, render_ascii(doc.instance, sp, area_limit(o.limits, kAsciiAreaLimit)));
    else throw InputError("--render must be svg or ascii");
    return 0;
}

int cmd_fixtures(const Common& o) {
    if (o.out.empty()) throw InputError("--out <directory> is required");
    namespace fs = std::filesystem;
    fs::create_directories(o.out);
    auto put = [&](const std::string& name, const std::string& text) { write_file((fs::path(o.out) / name).string(), text); };
    put("star-d5.graph", format_graph(star_fixture(5)));
    put("k5-gadget.graph", format_graph(k5_gadget()));
    put("k5-pattern.graph", format_graph(with_pairs(k5_gadget(), k5_pattern_pairs())));
    put("k5-group4.graph", format_graph(with_pairs(k5_gadget(), one_group_pairs(1, 4))));
    put("k5-group5.graph", format_graph(with_pairs(k5_gadget(), one_group_pairs(1, 5))));
    Formula f = search_n3_formula();
    put("n3.cnf", format_formula(f));
    std::string sat;
    for (const auto& a : all_satisfying(f)) sat += format_assignment(a);
    put("n3.assignments", sat);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grid routing instance generator, router and verifier"};
    app.require_subcommand(1);
    Common o;

    auto add = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };
    auto profile_opts = [&](CLI::App* c) {
        c->add_option("--profile", o.profile, "paper, compact, or a profile file");
        c->add_option("--epsilon", o.epsilon, "epsilon for a named profile");
        c->add_option("--n", o.n, "number of variables (multiple of 3)");
        c->add_option("--level", o.level, "construction level");
    };
    auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "output path (default stdout)"); };
    auto inst_opt = [&](CLI::App* c) { c->add_option("--instance", o.instance_path, "instance document"); };

    auto* gen = add("gen", "build an instance at the default placement");
    profile_opts(gen);
    gen->add_option("--seed-formula", o.formula_path, "3SAT(5) formula file (default: the n=3 fixture)");
    out_opt(gen);

    auto* inst = add("instantiate", "re-place an instance from its recipe");
    inst_opt(inst);
    inst->add_option("--placement", o.placement, "length,height,zcol,anchor_row,anchor_col");
    out_opt(inst);

    auto* ry = add("route-yes", "route the pairs selected by a satisfying assignment");
    inst_opt(ry);
    ry->add_option("--assignment", o.assignment, "assignment file or 0/1 string");
    ry->add_option("--mode", o.mode, "ndp or edp");
    ry->add_option("--parity", o.parity, "EDP parity class (1 or 2)");
    out_opt(ry);

    auto* te = add("to-edp", "derive the wall instance and audit its degrees");
    inst_opt(te);
    out_opt(te);

    auto* ve = add("verify", "check a solution; exit 0 pass, 1 fail, 2 malformed");
    inst_opt(ve);
    ve->add_option("--solution", o.solution_path, "solution document");
    ve->add_option("--mode", o.mode, "ndp or edp (default: the solution's mode)");
    out_opt(ve);

    auto* sg = add("solve-greedy", "shortest-path greedy baseline");
    inst_opt(sg);
    sg->add_option("--graph", o.graph_path, "graph document instead of an instance");
    sg->add_option("--limits", o.limits, "area=<vertices>");
    out_opt(sg);

    auto* se = add("solve-exact", "exhaustive optimum for small instances");
    inst_opt(se);
    se->add_option("--graph", o.graph_path, "graph document instead of an instance");
    se->add_option("--mode", o.mode, "ndp or edp");
    se->add_option("--limits", o.limits, "area=<vertices>,pairs=<count>");
    out_opt(se);

    auto* cp = add("check-params", "print the parameter ledger for one level step");
    profile_opts(cp);
    out_opt(cp);

    auto* re = add("render", "draw an instance and optional solution");
    inst_opt(re);
    re->add_option("--solution", o.solution_path, "solution document");
    re->add_option("--render", o.render, "svg or ascii");
    re->add_option("--limits", o.limits, "area=<vertices>");
    out_opt(re);

    auto* fx = add("fixtures", "write the graph fixtures and the n=3 formula");
    out_opt(fx);

    // verify takes its mode from the solution unless given.
    ve->preparse_callback([&](std::size_t) { o.mode.clear(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(o);
        if (inst->parsed()) return cmd_instantiate(o);
        if (ry->parsed()) return cmd_route_yes(o);
        if (te->parsed()) return cmd_to_edp(o);
        if (ve->parsed()) return cmd_verify(o);
        if (sg->parsed()) return cmd_solve_greedy(o);
        if (se->parsed()) return cmd_solve_exact(o);
        if (cp->parsed()) return cmd_check_params(o);
        if (re->parsed()) return cmd_render(o);
        if (fx->parsed()) return cmd_fixtures(o);
    } catch (const std::exception& e) {
        std::cerr << "gridndp: error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
