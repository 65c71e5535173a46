#include "gridndp/sat.hpp"
#include "gridndp/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace gridndp {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string frac = text.substr(dot + 1);
    std::string whole = text.substr(0, dot);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    BigInt num = BigInt(whole) * den + (frac.empty() ? BigInt(0) : BigInt(frac));
    Rational r(num, den);
    return neg ? -r : r;
}

std::string InvalidFormula::summary(const ValidationReport& r) {
    std::string s = "invalid 3SAT(5) formula";
    for (const auto& v : r.violations) s += "; " + v.rule + ": " + v.message;
    return s;
}

ValidationReport validate_3sat5(const Formula& f) {
    ValidationReport rep;
    const int n = f.var_count;
    const int m = f.clause_count();
    if (n <= 0 || n % 3 != 0) {
        rep.violations.push_back({"n divisible by 3", "n = " + std::to_string(n)});
    } else if (m != 5 * n / 3) {
        rep.violations.push_back({"clause count", "expected m = " + std::to_string(5 * n / 3) +
                                                      ", found " + std::to_string(m)});
    }
    std::vector<int> occ(std::max(n, 0), 0);
    for (int q = 0; q < m; ++q) {
        const Clause& c = f.clauses[q];
        std::string cname = "clause " + std::to_string(q + 1);
        if (c.size() != 3) {
            rep.violations.push_back({"clause width", cname + " has " + std::to_string(c.size()) + " literals"});
        }
        std::set<int> seen;
        bool dup = false, range = false;
        for (const auto& l : c) {
            if (l.var < 0 || l.var >= n) {
                range = true;
                continue;
            }
            if (!seen.insert(l.var).second) dup = true;
        }
        if (range) rep.violations.push_back({"variable range", cname + " references a variable outside 1.." + std::to_string(n)});
        if (dup) rep.violations.push_back({"distinct variables", cname + " repeats a variable"});
        for (int v : seen) ++occ[v];
    }
    for (int v = 0; v < n; ++v) {
        if (occ[v] != 5)
            rep.violations.push_back({"occurrences", "variable " + std::to_string(v + 1) + " occurs in " +
                                                         std::to_string(occ[v]) + " clauses"});
    }
    return rep;
}

namespace {

struct Tok {
    std::string text;
    int column;
};

std::vector<Tok> tokenize(const std::string& line) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

bool parse_int(const std::string& s, long long& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    try {
        out = std::stoll(s);
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

Formula parse_formula(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    Formula f;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0].text == "c") continue;
        if (toks[0].text[0] == 'c' && toks[0].text.size() > 1 && !std::isdigit(static_cast<unsigned char>(toks[0].text[1]))) continue;
        if (toks[0].text == "p") {
            if (have_header) throw ParseError(lineno, toks[0].column, "duplicate header");
            if (toks.size() != 4) throw ParseError(lineno, toks[0].column, "header must be 'p sat5 <n> <m>'");
            if (toks[1].text != "sat5") throw ParseError(lineno, toks[1].column, "expected format 'sat5'");
            if (!parse_int(toks[2].text, n) || n <= 0) throw ParseError(lineno, toks[2].column, "bad variable count");
            if (!parse_int(toks[3].text, m) || m < 0) throw ParseError(lineno, toks[3].column, "bad clause count");
            have_header = true;
            f.var_count = static_cast<int>(n);
            continue;
        }
        if (!have_header) throw ParseError(lineno, toks[0].column, "clause before header");
        if (static_cast<long long>(f.clauses.size()) >= m)
            throw ParseError(lineno, toks[0].column, "more clauses than declared");
        // Optional DIMACS terminator.
        if (toks.size() == 4 && toks[3].text == "0") toks.pop_back();
        if (toks.size() != 3)
            throw ParseError(lineno, toks[0].column, "expected 3 literals, found " + std::to_string(toks.size()));
        Clause c;
        for (const auto& t : toks) {
            long long v = 0;
            if (!parse_int(t.text, v) || v == 0) throw ParseError(lineno, t.column, "bad literal '" + t.text + "'");
            if (std::llabs(v) > n) throw ParseError(lineno, t.column, "variable out of range");
            c.push_back({static_cast<int>(std::llabs(v) - 1), v > 0});
        }
        f.clauses.push_back(std::move(c));
    }
    if (!have_header) throw ParseError(lineno + 1, 1, "missing header 'p sat5 <n> <m>'");
    if (static_cast<long long>(f.clauses.size()) != m)
        throw ParseError(lineno + 1, 1, "declared " + std::to_string(m) + " clauses, found " + std::to_string(f.clauses.size()));
    auto rep = validate_3sat5(f);
    if (!rep.ok()) throw InvalidFormula(rep);
    return f;
}

std::string format_formula(const Formula& f) {
    std::ostringstream out;
    out << "p sat5 " << f.var_count << ' ' << f.clause_count() << '\n';
    for (const auto& c : f.clauses) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) out << ' ';
            out << (c[k].positive ? "" : "-") << (c[k].var + 1);
        }
        out << '\n';
    }
    return out.str();
}

Assignment parse_assignment(const std::string& text) {
    Assignment a;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool done = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0].text[0] == 'c') continue;
        if (done || toks.size() != 1) throw ParseError(lineno, toks[0].column, "assignment must be a single line of 0/1");
        for (std::size_t i = 0; i < toks[0].text.size(); ++i) {
            char ch = toks[0].text[i];
            if (ch != '0' && ch != '1') throw ParseError(lineno, toks[0].column + static_cast<int>(i), "expected 0 or 1");
            a.values.push_back(ch == '1');
        }
        done = true;
    }
    if (!done) throw ParseError(lineno + 1, 1, "empty assignment");
    return a;
}

std::string format_assignment(const Assignment& a) {
    std::string s;
    for (bool b : a.values) s += b ? '1' : '0';
    return s + "\n";
}

bool literal_value(const Literal& l, const Assignment& a) {
    return a.values.at(l.var) == l.positive;
}

bool clause_satisfied(const Clause& c, const Assignment& a) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return literal_value(l, a); });
}

std::optional<int> first_unsatisfied(const Formula& f, const Assignment& a) {
    if (static_cast<int>(a.values.size()) != f.var_count)
        throw std::invalid_argument("assignment length " + std::to_string(a.values.size()) +
                                    " does not match n = " + std::to_string(f.var_count));
    for (int q = 0; q < f.clause_count(); ++q)
        if (!clause_satisfied(f.clauses[q], a)) return q;
    return std::nullopt;
}

bool satisfies(const Formula& f, const Assignment& a) { return !first_unsatisfied(f, a).has_value(); }

SatisfactionCount evaluate(const Formula& f, const Assignment& a, std::int64_t h) {
    if (static_cast<int>(a.values.size()) != f.var_count)
        throw std::invalid_argument("assignment length " + std::to_string(a.values.size()) +
                                    " does not match n = " + std::to_string(f.var_count));
    if (h <= 0) throw std::invalid_argument("h must be positive");
    SatisfactionCount sc;
    for (const auto& c : f.clauses)
        if (clause_satisfied(c, a)) ++sc.original;
    sc.expanded = sc.original * h;
    return sc;
}

std::vector<ExpandedClause> expand_clauses(const Formula& f, int h) {
    std::vector<ExpandedClause> out;
    out.reserve(static_cast<std::size_t>(f.clause_count()) * h);
    for (int q = 0; q < f.clause_count(); ++q)
        for (int j = 1; j <= h; ++j) out.push_back({q, j});
    return out;
}

std::vector<int> clauses_of_var(const Formula& f, int var) {
    std::vector<int> out;
    for (int q = 0; q < f.clause_count(); ++q)
        for (const auto& l : f.clauses[q])
            if (l.var == var) {
                out.push_back(q);
                break;
            }
    return out;
}

int clause_rank_for_var(const Formula& f, int var, int clause) {
    auto cs = clauses_of_var(f, var);
    auto it = std::find(cs.begin(), cs.end(), clause);
    if (it == cs.end()) throw std::invalid_argument("variable does not occur in clause");
    return static_cast<int>(it - cs.begin()) + 1;
}

std::vector<Assignment> all_satisfying(const Formula& f) {
    if (f.var_count > 24) throw std::invalid_argument("too many variables for enumeration");
    std::vector<Assignment> out;
    for (std::uint32_t bits = 0; bits < (1u << f.var_count); ++bits) {
        Assignment a;
        for (int v = 0; v < f.var_count; ++v) a.values.push_back((bits >> v) & 1u);
        if (satisfies(f, a)) out.push_back(a);
    }
    return out;
}

Formula search_n3_formula() {
    // Every clause on 3 variables uses all three; clauses differ only by sign pattern.
    std::vector<Clause> patterns;
    for (int p = 0; p < 8; ++p) {
        Clause c;
        for (int v = 0; v < 3; ++v) c.push_back({v, ((p >> v) & 1) == 0});
        patterns.push_back(c);
    }
    std::vector<int> idx{0, 1, 2, 3, 4};
    while (true) {
        Formula f;
        f.var_count = 3;
        for (int i : idx) f.clauses.push_back(patterns[i]);
        if (validate_3sat5(f).ok()) {
            auto sat = all_satisfying(f);
            bool has_false = std::any_of(sat.begin(), sat.end(), [](const Assignment& a) {
                return std::find(a.values.begin(), a.values.end(), false) != a.values.end();
            });
            if (!sat.empty() && has_false) return f;
        }
        int k = 4;
        while (k >= 0 && idx[k] == 8 - 5 + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
    }
    throw std::logic_error("no 3-variable 3SAT(5) formula found");
}

}  // namespace gridndp
