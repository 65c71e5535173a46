#pragma once

#include "gridndp/builder.hpp"
#include "gridndp/router.hpp"
#include "gridndp/solvers.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace gridndp {

// Parse failure in a textual document. line is 1-based, 0 for whole-document
// problems.
class DocumentError : public std::runtime_error {
public:
    DocumentError(const std::string& doc, int line, const std::string& msg);
    const std::string& document() const { return doc_; }
    int line() const { return line_; }

private:
    std::string doc_;
    int line_;
};

// How an instance was generated; enough to rebuild its template.
struct Recipe {
    Profile profile;
    int n = 0;
    Formula formula;
    int level = 0;
    bool operator==(const Recipe&) const = default;
};

struct InstanceDocument {
    RoutingInstance instance;
    bool wall = false;  // EDP wall derived from the grid
    std::optional<Recipe> recipe;
};

inline constexpr int kDocumentVersion = 1;

std::string format_instance(const InstanceDocument& doc);
InstanceDocument parse_instance(const std::string& text);

std::string format_solution(const RoutedSolution& sol);
RoutedSolution parse_solution(const std::string& text);

// Geometry, pairs, boxes, layout, level and digest agree.
bool same_instance(const RoutingInstance& a, const RoutingInstance& b);

// Rebuilds the template from the recipe and checks it reproduces the listed
// geometry. Throws DocumentError without a recipe or on mismatch.
RoutingInstance realize(const InstanceDocument& doc);

// Throws DocumentError when the solution was produced for another schedule.
void check_digest(const RoutingInstance& inst, const RoutedSolution& sol);

std::string format_graph(const GraphInstance& gi);
GraphInstance parse_graph(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gridndp
