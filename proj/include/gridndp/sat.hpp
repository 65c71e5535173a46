#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridndp {

struct Literal {
    int var = 0;  // 0-based
    bool positive = true;
    bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

struct Formula {
    int var_count = 0;
    std::vector<Clause> clauses;
    int clause_count() const { return static_cast<int>(clauses.size()); }
    bool operator==(const Formula&) const = default;
};

struct Assignment {
    std::vector<bool> values;
    bool operator==(const Assignment&) const = default;
};

struct Violation {
    std::string rule;     // "n divisible by 3", "clause count", "clause width", "distinct variables", "occurrences", "variable range"
    std::string message;  // 1-based indices
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

struct SatisfactionCount {
    std::int64_t original = 0;
    std::int64_t expanded = 0;
    bool operator==(const SatisfactionCount&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class InvalidFormula : public std::runtime_error {
public:
    explicit InvalidFormula(ValidationReport r)
        : std::runtime_error(summary(r)), report_(std::move(r)) {}
    const ValidationReport& report() const { return report_; }

private:
    static std::string summary(const ValidationReport& r);
    ValidationReport report_;
};

ValidationReport validate_3sat5(const Formula& f);

// Throws ParseError on syntax, InvalidFormula on a 3SAT(5) rule violation.
Formula parse_formula(const std::string& text);
std::string format_formula(const Formula& f);

Assignment parse_assignment(const std::string& text);
std::string format_assignment(const Assignment& a);

bool literal_value(const Literal& l, const Assignment& a);
bool clause_satisfied(const Clause& c, const Assignment& a);
bool satisfies(const Formula& f, const Assignment& a);
// Index of the first unsatisfied clause, if any.
std::optional<int> first_unsatisfied(const Formula& f, const Assignment& a);

// Clause copies C_q^j, j = 1..h, inherit satisfaction from C_q.
SatisfactionCount evaluate(const Formula& f, const Assignment& a, std::int64_t h);

struct ExpandedClause {
    int clause = 0;  // 0-based q
    int copy = 0;    // 1-based j
};
std::vector<ExpandedClause> expand_clauses(const Formula& f, int h);

// Rank (1-based) of clause q among the clauses containing variable v, in index order.
int clause_rank_for_var(const Formula& f, int var, int clause);
std::vector<int> clauses_of_var(const Formula& f, int var);

// Exhaustive search for a satisfiable 3SAT(5) formula on 3 variables.
// Enumerates clause multisets in lexicographic order and returns the first
// valid one together with its satisfying assignments.
Formula search_n3_formula();
std::vector<Assignment> all_satisfying(const Formula& f);

}  // namespace gridndp
