#include "gridndp/schedule.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gridndp {

Profile Profile::paper(const Rational& epsilon) {
    Profile p;
    p.mode = Mode::paper;
    p.epsilon = epsilon;
    Rational h = Rational(1000) / epsilon;
    if (!is_integral(h)) throw std::invalid_argument("1000/epsilon must be an integer");
    p.h = boost::multiprecision::numerator(h);
    p.delta = Rational(8) * epsilon * epsilon / Rational(BigInt(1000000000000LL));
    p.lp_mult = 20;
    p.lp_pow = 3;
    p.h_mult = 20;
    p.kappa = 0;
    return p;
}

Profile Profile::compact(const Rational& epsilon, const BigInt& h, const Rational& kappa) {
    Profile p;
    p.mode = Mode::compact;
    p.epsilon = epsilon;
    p.h = h;
    p.kappa = kappa;
    p.delta = Rational(8) * epsilon * epsilon / Rational(BigInt(1000000000000LL));
    return p;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

Rational pow_r(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

BigInt round_up_even(const BigInt& v) { return v % 2 == 0 ? v : v + 1; }

}  // namespace

Profile parse_profile(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::string mode = "compact";
    Rational eps{1, 10};
    bool have_h = false, have_delta = false;
    Profile p;
    std::vector<std::pair<std::string, std::string>> kv;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("profile line " + std::to_string(lineno) + ": expected key = value");
        kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    for (const auto& [k, v] : kv) {
        if (k == "mode") mode = v;
        else if (k == "epsilon") eps = parse_rational(v);
    }
    if (mode == "paper") p = Profile::paper(eps);
    else if (mode == "compact") p = Profile::compact(eps, 3, 1);
    else throw std::invalid_argument("profile: unknown mode '" + mode + "'");
    for (const auto& [k, v] : kv) {
        try {
            if (k == "mode" || k == "epsilon") continue;
            if (k == "h") {
                p.h = BigInt(v);
                have_h = true;
            } else if (k == "delta") {
                p.delta = parse_rational(v);
                have_delta = true;
            } else if (k == "kappa") p.kappa = parse_rational(v);
            else if (k == "lp_mult") p.lp_mult = parse_rational(v);
            else if (k == "lp_pow") p.lp_pow = std::stoi(v);
            else if (k == "h_mult") p.h_mult = BigInt(v);
            else throw std::invalid_argument("profile: unknown key '" + k + "'");
        } catch (const std::runtime_error& e) {
            throw std::invalid_argument("profile: bad value for '" + k + "': " + e.what());
        }
    }
    if (p.mode == Mode::paper && (have_h || have_delta))
        throw std::invalid_argument("profile: paper mode fixes h and delta");
    return p;
}

std::string format_profile(const Profile& p) {
    std::ostringstream out;
    out << "mode = " << (p.mode == Mode::paper ? "paper" : "compact") << '\n';
    out << "epsilon = " << to_string(p.epsilon) << '\n';
    if (p.mode == Mode::compact) {
        out << "h = " << p.h << '\n';
        out << "delta = " << to_string(p.delta) << '\n';
        out << "kappa = " << to_string(p.kappa) << '\n';
        out << "lp_mult = " << to_string(p.lp_mult) << '\n';
        out << "lp_pow = " << p.lp_pow << '\n';
        out << "h_mult = " << p.h_mult << '\n';
    }
    return out.str();
}

Schedule compute_schedule(const Profile& p, int n, int levels) {
    if (n <= 0 || n % 3 != 0) throw std::invalid_argument("n must be a positive multiple of 3");
    if (levels < 0) throw std::invalid_argument("levels must be non-negative");
    if (p.epsilon <= 0 || p.epsilon >= Rational(1, 2)) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
    if (p.h <= 0) throw std::invalid_argument("h must be positive");
    if (p.delta < 0 || p.delta >= 1) throw std::invalid_argument("delta must lie in [0, 1)");
    if (p.mode == Mode::compact) {
        if (p.h % 3 != 0) throw std::invalid_argument("compact mode requires h divisible by 3");
        if (p.kappa <= 0) throw std::invalid_argument("kappa must be positive");
        if (p.lp_mult <= 0 || p.lp_pow < 1) throw std::invalid_argument("bad L' rule");
        if (p.h_mult <= 0) throw std::invalid_argument("bad H rule");
    }
    Schedule s;
    s.profile = p;
    s.n = n;
    const Rational h(p.h);
    const Rational growth = Rational(200) * h / 3 + 1;
    Level l0;
    l0.N = 1;
    l0.Np = 1;
    l0.g = 1;
    l0.c = 0;
    l0.H = 20;
    l0.L = 1;
    l0.Lp = 20;
    s.levels.push_back(l0);
    for (int i = 0; i < levels; ++i) {
        const Level& prev = s.levels.back();
        Level nx;
        if (p.mode == Mode::paper) nx.c = Rational(100000000) * h * h * prev.g;
        else nx.c = Rational(ceil_rational(p.kappa * prev.g));
        nx.N = Rational(n) * nx.c * growth * prev.N;
        nx.Np = (1 - p.delta) * Rational(n) * nx.c * growth * prev.Np;
        nx.g = prev.g / (1 - p.delta);
        nx.L = (Rational(80) * h + 2) * nx.c * prev.L * Rational(n);
        if (p.mode == Mode::paper) {
            nx.H = 20 * nx.N;
            nx.Lp = 20 * nx.N * nx.N * nx.N;
        } else {
            nx.H = Rational(p.h_mult) * nx.N;
            nx.Lp = Rational(round_up_even(ceil_rational(p.lp_mult * pow_r(nx.N, p.lp_pow))));
        }
        s.levels.push_back(nx);
    }
    return s;
}

Rational Schedule::block_length(int i) const {
    const Level& l = at(i);
    if (profile.mode == Mode::paper) return 9 * l.N * l.N * l.N;
    return Rational(floor_rational(Rational(9) * l.Lp / 20));
}

std::string Schedule::canonical_text() const {
    std::ostringstream out;
    out << format_profile(profile) << "n = " << n << '\n';
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto& l = levels[i];
        out << "level " << i << " N=" << to_string(l.N) << " Np=" << to_string(l.Np) << " g=" << to_string(l.g)
            << " c=" << to_string(l.c) << " H=" << to_string(l.H) << " L=" << to_string(l.L)
            << " Lp=" << to_string(l.Lp) << '\n';
    }
    return out.str();
}

std::string Schedule::digest() const {
    std::uint64_t hsh = 1469598103934665603ULL;
    for (unsigned char ch : canonical_text()) {
        hsh ^= ch;
        hsh *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hsh));
    return buf;
}

bool LedgerReport::ok() const {
    for (const auto& e : entries)
        if (e.gating && !e.holds) return false;
    return true;
}

LedgerReport check_ledger(const Schedule& s, int i) {
    if (i < 0 || i + 1 > s.max_level()) throw std::invalid_argument("schedule does not reach level i+1");
    const Profile& p = s.profile;
    const bool paper = p.mode == Mode::paper;
    const Level& a = s.at(i);
    const Level& b = s.at(i + 1);
    const Rational h(p.h);
    const Rational n(s.n);
    const Rational m = Rational(5) * n / 3;
    const Rational c = b.c;
    const Rational N = b.N;
    const Rational blk = s.block_length(i + 1);
    const Rational growth = Rational(200) * h / 3 + 1;
    LedgerReport r;
    r.level = i;
    auto add = [&](int id, std::string name, Rational lhs, Rational rhs, bool holds, bool gating, std::string anchor) {
        r.entries.push_back({id, std::move(name), std::move(lhs), std::move(rhs), holds, gating, std::move(anchor)});
    };

    {
        Rational LV = 4 * N + (70 * h + 2) * c * a.Lp;
        Rational lhs = n * LV + (n + 1) * 2 * N;
        add(1, "variable block fit", lhs, blk, lhs < blk, true, "n*L^V + (n+1)*2N < |B^V|");
    }
    {
        Rational LC = 3 * c * h * a.Lp;
        Rational lhs = m * LC + (m + 1) * 4 * N;
        add(2, "clause block fit", lhs, blk, lhs < blk, true, "m*L^C + (m+1)*4N < |B^C|");
    }
    {
        Rational lhs = a.H + 2 * N;
        add(3, "variable box height", lhs, 3 * N, lhs < 3 * N, true, "H_i + 2N_{i+1} < 3N_{i+1}");
    }
    {
        Rational rhs = 2 * c * p.epsilon * p.epsilon * a.Np / Rational(BigInt(10000000000000LL));
        add(4, "height identity", a.H, rhs, a.H == rhs, paper, "H_i = 2c_{i+1}eps^2 N'_i / 10^13");
    }
    {
        Rational lhs = (75 * n * h + 2 * n) * 25 * a.H;
        Rational rhs = p.delta * growth * n * c * a.Np;
        add(5, "excess demand pairs", lhs, rhs, lhs <= rhs, paper, "(75nh+2n)*25H_i <= delta*(200h/3+1)*n*c*N'_i");
    }
    {
        Rational lhs = m * h * c * a.N;
        add(6, "clause sources fit", lhs, N - 2, lhs < N - 2, true, "mhcN_i < N_{i+1} - 2");
    }
    {
        Rational lhs = 10 * h * a.N * c;
        add(7, "between-gadget clause sources", lhs, N, lhs < N, true, "10hN_ic < N_{i+1}");
    }
    add(8, "final count", Rational(123, 5000), Rational(1), Rational(123, 5000) < 1, paper,
        "(1 - 123eps/5000)hm > (1 - eps)hm");
    {
        Rational lhs = (65 * h + 1) + (5 * h / 3 - 2);
        Rational mid = 200 * h / 3 - 1;
        Rational rhs = (1 - 2 * p.delta) * growth;
        add(9, "variable gadget count", lhs, rhs, lhs <= mid && mid < rhs, paper,
            "(65h+1) + (5h/3-2) <= 200h/3 - 1 < (1-2delta)(200h/3+1)");
    }
    {
        Rational lhs = 12 * n + 24 * n + 3 * m;
        Rational rhs = Rational(123) * m / 5;
        bool second = 3 * m < p.epsilon * m * h / 4;
        add(10, "cheating clause count", lhs, rhs, lhs <= rhs && second, paper,
            "12n + 24n + 3m <= 123m/5 and 3m < eps*m*h/4");
    }
    {
        Rational Q = 2 * b.L + 2 * b.Lp + 4 * b.H;
        add(11, "host size", Q, Q, true, true, "Q = 2L + 2L' + 4H");
    }
    {
        Rational rhs = 20 * b.N * b.N * b.N;
        add(12, "source path length", b.L, rhs, b.L <= rhs, paper, "L_i <= 20N_i^3");
    }
    return r;
}

std::string format_ledger(const LedgerReport& r) {
    std::ostringstream out;
    out << "ledger for building level " << (r.level + 1) << " from level " << r.level << '\n';
    out << "id  holds  gating  name | lhs | rhs | relation\n";
    int held = 0;
    for (const auto& e : r.entries) {
        if (e.holds) ++held;
        out << (e.id < 10 ? " " : "") << e.id << "  " << (e.holds ? "yes  " : "NO   ") << "  "
            << (e.gating ? "yes   " : "info  ") << "  " << e.name << " | " << to_string(e.lhs) << " | "
            << to_string(e.rhs) << " | " << e.anchor << '\n';
    }
    out << held << "/" << r.entries.size() << " entries hold; " << (r.ok() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace gridndp
