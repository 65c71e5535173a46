#include "gridndp/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace gridndp {

DocumentError::DocumentError(const std::string& doc, int line, const std::string& msg)
    : std::runtime_error(doc + (line > 0 ? ", line " + std::to_string(line) : std::string()) + ": " + msg),
      doc_(doc), line_(line) {}

namespace {

// Line reader over a document; every accessor reports its line on failure.
class Reader {
public:
    Reader(std::string doc, const std::string& text) : doc_(std::move(doc)) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines_.push_back(line);
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw DocumentError(doc_, lineno_, msg); }

    // Next non-blank line split into tokens.
    std::vector<std::string> next() {
        while (pos_ < lines_.size()) {
            lineno_ = static_cast<int>(++pos_);
            std::istringstream in(lines_[pos_ - 1]);
            std::vector<std::string> toks;
            std::string t;
            while (in >> t) toks.push_back(t);
            if (!toks.empty()) return toks;
        }
        lineno_ = static_cast<int>(lines_.size()) + 1;
        fail("unexpected end of document");
    }

    // Next line, which must start with key and hold exactly count more tokens.
    std::vector<std::string> expect(const std::string& key, std::size_t count) {
        auto t = next();
        if (t[0] != key) fail("expected '" + key + "', found '" + t[0] + "'");
        if (t.size() != count + 1) fail("'" + key + "' takes " + std::to_string(count) + " fields");
        return t;
    }

    Coord num(const std::string& s) const {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            fail("'" + s + "' is not an integer");
        }
        if (used != s.size()) fail("'" + s + "' is not an integer");
        return v;
    }

    Coord count(const std::string& key) { return nonneg(expect(key, 1)[1]); }

    Coord nonneg(const std::string& s) const {
        Coord v = num(s);
        if (v < 0) fail("count must be non-negative");
        return v;
    }

    void end() {
        expect("end", 0);
        while (pos_ < lines_.size())
            if (lines_[pos_++].find_first_not_of(" \t") != std::string::npos) {
                lineno_ = static_cast<int>(pos_);
                fail("content after 'end'");
            }
    }

    void header(const std::string& magic) {
        auto t = expect(magic, 1);
        if (num(t[1]) != kDocumentVersion)
            fail("unsupported version " + t[1] + " (expected " + std::to_string(kDocumentVersion) + ")");
    }

private:
    std::string doc_;
    std::vector<std::string> lines_;
    std::size_t pos_ = 0;
    int lineno_ = 0;
};

std::string label_out(const std::string& s) { return s.empty() ? "-" : s; }
std::string label_in(const std::string& s) { return s == "-" ? "" : s; }

void put_rect(std::ostream& out, const Rect& r) { out << r.r1 << ' ' << r.r2 << ' ' << r.c1 << ' ' << r.c2; }

Rect get_rect(const Reader& rd, const std::vector<std::string>& t, std::size_t at) {
    return {rd.num(t[at]), rd.num(t[at + 1]), rd.num(t[at + 2]), rd.num(t[at + 3])};
}

void check_label(const Reader& rd, const std::string& s) {
    if (s.empty()) rd.fail("empty label");
}

std::string profile_tokens(const Profile& p) {
    std::istringstream in(format_profile(p));
    std::string line, out;
    while (std::getline(in, line)) {
        auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        out += ' ' + line.substr(0, eq) + '=' + line.substr(eq + 3);
    }
    return out;
}

}  // namespace

std::string format_instance(const InstanceDocument& doc) {
    const RoutingInstance& in = doc.instance;
    std::ostringstream out;
    out << "gridndp-instance " << kDocumentVersion << '\n';
    out << "digest " << label_out(in.schedule_digest) << '\n';
    out << "level " << in.level << '\n';
    out << "graph " << (doc.wall ? "wall" : "grid") << '\n';
    if (doc.recipe) {
        const Recipe& r = *doc.recipe;
        out << "recipe " << r.n << ' ' << r.level << '\n';
        out << "profile" << profile_tokens(r.profile) << '\n';
        out << "formula " << r.formula.var_count << ' ' << r.formula.clause_count() << '\n';
        for (const auto& c : r.formula.clauses) {
            out << "clause " << c.size();
            for (const auto& l : c) out << ' ' << (l.positive ? "" : "-") << (l.var + 1);
            out << '\n';
        }
    } else {
        out << "recipe none\n";
    }
    out << "host " << in.host.length << ' ' << in.host.height << '\n';
    out << "placement " << in.placement.z_col << ' ' << in.placement.box_anchor.row << ' '
        << in.placement.box_anchor.col << '\n';
    const auto rects = in.deleted.rects();
    out << "deleted " << rects.size() << '\n';
    for (const auto& r : rects) {
        out << "rect ";
        put_rect(out, r);
        out << '\n';
    }
    out << "boxes " << in.boxes.size() << '\n';
    for (const auto& b : in.boxes) {
        out << "box " << label_out(b.label) << ' ' << b.level << ' ';
        put_rect(out, b.rect);
        out << ' ' << b.first_pair << ' ' << b.last_pair << '\n';
    }
    out << "layout " << in.layout.size() << '\n';
    for (const auto& g : in.layout) {
        out << "gadget " << g.kind << ' ' << label_out(g.label) << ' ';
        put_rect(out, g.rect);
        out << '\n';
    }
    out << "pairs " << in.pairs.size() << '\n';
    for (const auto& p : in.pairs)
        out << "pair " << p.label << ' ' << p.s.row << ' ' << p.s.col << ' ' << p.t.row << ' ' << p.t.col << '\n';
    out << "end\n";
    return out.str();
}

InstanceDocument parse_instance(const std::string& text) {
    Reader rd("instance document", text);
    InstanceDocument doc;
    RoutingInstance& in = doc.instance;
    rd.header("gridndp-instance");
    in.schedule_digest = label_in(rd.expect("digest", 1)[1]);
    in.level = static_cast<int>(rd.nonneg(rd.expect("level", 1)[1]));
    {
        auto g = rd.expect("graph", 1)[1];
        if (g != "grid" && g != "wall") rd.fail("graph must be 'grid' or 'wall'");
        doc.wall = g == "wall";
    }
    auto rt = rd.next();
    if (rt[0] != "recipe") rd.fail("expected 'recipe'");
    if (rt.size() == 2 && rt[1] == "none") {
        // no recipe
    } else if (rt.size() == 3) {
        Recipe r;
        r.n = static_cast<int>(rd.nonneg(rt[1]));
        r.level = static_cast<int>(rd.nonneg(rt[2]));
        auto pt = rd.next();
        if (pt[0] != "profile") rd.fail("expected 'profile'");
        std::string ptext;
        for (std::size_t k = 1; k < pt.size(); ++k) {
            auto eq = pt[k].find('=');
            if (eq == std::string::npos) rd.fail("profile field '" + pt[k] + "' is not key=value");
            ptext += pt[k].substr(0, eq) + " = " + pt[k].substr(eq + 1) + '\n';
        }
        try {
            r.profile = parse_profile(ptext);
        } catch (const std::exception& e) {
            rd.fail(e.what());
        }
        auto ft = rd.expect("formula", 2);
        r.formula.var_count = static_cast<int>(rd.nonneg(ft[1]));
        const Coord m = rd.nonneg(ft[2]);
        for (Coord q = 0; q < m; ++q) {
            auto ct = rd.next();
            if (ct[0] != "clause" || ct.size() < 2) rd.fail("expected 'clause'");
            const Coord w = rd.nonneg(ct[1]);
            if (ct.size() != static_cast<std::size_t>(w) + 2) rd.fail("clause width does not match its literals");
            Clause c;
            for (Coord k = 0; k < w; ++k) {
                Coord v = rd.num(ct[2 + k]);
                if (v == 0 || std::abs(v) > r.formula.var_count) rd.fail("literal out of range");
                c.push_back({static_cast<int>(std::abs(v) - 1), v > 0});
            }
            r.formula.clauses.push_back(c);
        }
        doc.recipe = r;
    } else {
        rd.fail("'recipe' takes 'none' or n and level");
    }
    auto ht = rd.expect("host", 2);
    in.host = {rd.nonneg(ht[1]), rd.nonneg(ht[2])};
    auto pl = rd.expect("placement", 3);
    in.placement.host = in.host;
    in.placement.z_col = rd.num(pl[1]);
    in.placement.box_anchor = {rd.num(pl[2]), rd.num(pl[3])};
    std::vector<Rect> rects;
    for (Coord k = rd.count("deleted"); k > 0; --k) {
        auto t = rd.expect("rect", 4);
        Rect r = get_rect(rd, t, 1);
        if (r.empty()) rd.fail("empty rect");
        rects.push_back(r);
    }
    in.deleted = RegionSet(rects);
    for (Coord k = rd.count("boxes"); k > 0; --k) {
        auto t = rd.expect("box", 8);
        BoxImage b;
        b.label = label_in(t[1]);
        b.level = static_cast<int>(rd.nonneg(t[2]));
        b.rect = get_rect(rd, t, 3);
        b.first_pair = static_cast<std::size_t>(rd.nonneg(t[7]));
        b.last_pair = static_cast<std::size_t>(rd.nonneg(t[8]));
        if (b.first_pair > b.last_pair) rd.fail("box pair range is reversed");
        in.boxes.push_back(b);
    }
    for (Coord k = rd.count("layout"); k > 0; --k) {
        auto t = rd.expect("gadget", 6);
        in.layout.push_back({t[1], label_in(t[2]), get_rect(rd, t, 3)});
    }
    for (Coord k = rd.count("pairs"); k > 0; --k) {
        auto t = rd.expect("pair", 5);
        check_label(rd, t[1]);
        InstancePair p{t[1], {rd.num(t[2]), rd.num(t[3])}, {rd.num(t[4]), rd.num(t[5])}};
        if (!in.host.contains(p.s) || !in.host.contains(p.t)) rd.fail("terminal of " + p.label + " lies outside the host");
        in.pairs.push_back(p);
    }
    for (const auto& b : in.boxes)
        if (b.last_pair > in.pairs.size()) throw DocumentError("instance document", 0, "box pair range exceeds the pair list");
    rd.end();
    return doc;
}

std::string format_solution(const RoutedSolution& sol) {
    std::ostringstream out;
    out << "gridndp-solution " << kDocumentVersion << '\n';
    out << "digest " << label_out(sol.schedule_digest) << '\n';
    out << "mode " << (sol.mode == RouteMode::edp ? "edp" : "ndp") << '\n';
    out << "routes " << sol.routes.size() << '\n';
    for (const auto& r : sol.routes) {
        out << "route " << r.label << ' ' << r.path.pts.size();
        for (const auto& v : r.path.pts) out << ' ' << v.row << ' ' << v.col;
        out << '\n';
    }
    out << "certificates " << sol.certificates.size() << '\n';
    for (const auto& c : sol.certificates) {
        out << "cert " << label_out(c.box) << ' ' << c.crossings.size();
        for (const auto& v : c.crossings) out << ' ' << v.row << ' ' << v.col;
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

RoutedSolution parse_solution(const std::string& text) {
    Reader rd("solution document", text);
    RoutedSolution sol;
    rd.header("gridndp-solution");
    sol.schedule_digest = label_in(rd.expect("digest", 1)[1]);
    auto m = rd.expect("mode", 1)[1];
    if (m != "ndp" && m != "edp") rd.fail("mode must be 'ndp' or 'edp'");
    sol.mode = m == "edp" ? RouteMode::edp : RouteMode::ndp;
    auto points = [&](const std::vector<std::string>& t, std::size_t at) {
        const Coord k = rd.nonneg(t[at]);
        if (t.size() != at + 1 + 2 * static_cast<std::size_t>(k)) rd.fail("point count does not match its coordinates");
        std::vector<Vertex> pts;
        for (Coord i = 0; i < k; ++i) pts.push_back({rd.num(t[at + 1 + 2 * i]), rd.num(t[at + 2 + 2 * i])});
        return pts;
    };
    for (Coord k = rd.count("routes"); k > 0; --k) {
        auto t = rd.next();
        if (t[0] != "route" || t.size() < 3) rd.fail("expected 'route'");
        RoutedPath r;
        r.label = t[1];
        r.path.pts = points(t, 2);
        if (r.path.pts.empty()) rd.fail("route " + r.label + " has no points");
        sol.routes.push_back(std::move(r));
    }
    for (Coord k = rd.count("certificates"); k > 0; --k) {
        auto t = rd.next();
        if (t[0] != "cert" || t.size() < 3) rd.fail("expected 'cert'");
        sol.certificates.push_back({label_in(t[1]), points(t, 2)});
    }
    rd.end();
    return sol;
}

bool same_instance(const RoutingInstance& a, const RoutingInstance& b) {
    return a.host == b.host && a.placement == b.placement && a.deleted == b.deleted && a.pairs == b.pairs &&
           a.boxes == b.boxes && a.layout == b.layout && a.level == b.level && a.schedule_digest == b.schedule_digest;
}

RoutingInstance realize(const InstanceDocument& doc) {
    if (!doc.recipe) throw DocumentError("instance document", 0, "no recipe; the instance cannot be rebuilt");
    const Recipe& r = *doc.recipe;
    Schedule s = compute_schedule(r.profile, r.n, r.level);
    TemplatePtr t = build_level(r.formula, s, r.level);
    RoutingInstance inst = instantiate(t, doc.instance.placement);
    if (!same_instance(inst, doc.instance))
        throw DocumentError("instance document", 0, "listed geometry differs from the one its recipe builds");
    return inst;
}

void check_digest(const RoutingInstance& inst, const RoutedSolution& sol) {
    if (inst.schedule_digest != sol.schedule_digest)
        throw DocumentError("solution document", 0,
                            "schedule digest " + label_out(sol.schedule_digest) + " does not match instance digest " +
                                label_out(inst.schedule_digest));
}

std::string format_graph(const GraphInstance& gi) {
    std::ostringstream out;
    out << "gridndp-graph " << kDocumentVersion << '\n';
    out << "name " << label_out(gi.name) << '\n';
    out << "vertices " << gi.g.size() << '\n';
    for (int v = 0; v < gi.g.size(); ++v) out << "v " << gi.g.name(v) << '\n';
    out << "edges " << gi.g.edge_count() << '\n';
    for (int u = 0; u < gi.g.size(); ++u)
        for (int v : gi.g.adj(u))
            if (u < v) out << "e " << gi.g.name(u) << ' ' << gi.g.name(v) << '\n';
    out << "pairs " << gi.pairs.size() << '\n';
    for (const auto& p : gi.pairs) out << "pair " << p.label << ' ' << gi.g.name(p.s) << ' ' << gi.g.name(p.t) << '\n';
    out << "end\n";
    return out.str();
}

GraphInstance parse_graph(const std::string& text) {
    Reader rd("graph document", text);
    GraphInstance gi;
    rd.header("gridndp-graph");
    gi.name = label_in(rd.expect("name", 1)[1]);
    for (Coord k = rd.count("vertices"); k > 0; --k) {
        auto t = rd.expect("v", 1);
        if (gi.g.find(t[1]) >= 0) rd.fail("duplicate vertex " + t[1]);
        gi.g.add_vertex(t[1]);
    }
    auto vertex = [&](const std::string& n) {
        int v = gi.g.find(n);
        if (v < 0) rd.fail("unknown vertex " + n);
        return v;
    };
    for (Coord k = rd.count("edges"); k > 0; --k) {
        auto t = rd.expect("e", 2);
        int u = vertex(t[1]), v = vertex(t[2]);
        if (u == v) rd.fail("self-loop at " + t[1]);
        if (gi.g.has_edge(u, v)) rd.fail("duplicate edge " + t[1] + " " + t[2]);
        gi.g.add_edge(u, v);
    }
    for (Coord k = rd.count("pairs"); k > 0; --k) {
        auto t = rd.expect("pair", 3);
        gi.pairs.push_back({t[1], vertex(t[2]), vertex(t[3])});
    }
    rd.end();
    return gi;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace gridndp
