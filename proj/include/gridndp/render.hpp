#pragma once

#include "gridndp/builder.hpp"
#include "gridndp/router.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridndp {

class RenderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kSvgAreaLimit = 10'000'000;
inline constexpr std::int64_t kAsciiAreaLimit = 10'000;

// One unit per vertex. Elements carry classes: "host", "deleted" (one rect
// per deletion strip), "box", "gadget", "source", "destination", "path".
// Above area_limit only boxes and gadgets are drawn.
std::string render_svg(const RoutingInstance& inst, const RoutedSolution* sol, std::int64_t area_limit = kSvgAreaLimit);

// '#' deleted, '.' free, 'S' source, 'T' destination, '*' path vertex.
// Throws RenderError above area_limit.
std::string render_ascii(const RoutingInstance& inst, const RoutedSolution* sol,
                         std::int64_t area_limit = kAsciiAreaLimit);

}  // namespace gridndp
