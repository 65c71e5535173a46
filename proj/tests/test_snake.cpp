#include "gridndp/snake.hpp"
#include "snake_gen.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gridndp;
using namespace gridndp::testing;

namespace {

void expect_routes(const std::vector<Path>& paths, const std::vector<Vertex>& A, const std::vector<Vertex>& Ap) {
    ASSERT_EQ(paths.size(), A.size());
    std::set<Vertex> ends;
    for (std::size_t k = 0; k < paths.size(); ++k) {
        EXPECT_EQ(paths[k].first(), A[k]);
        ends.insert(paths[k].last());
        check_axis_aligned(paths[k]);
    }
    EXPECT_EQ(ends, std::set<Vertex>(Ap.begin(), Ap.end()));
    EXPECT_TRUE(paths_node_disjoint(paths).ok());
}

std::string error_of(const std::vector<Rect>& cs, const std::vector<Vertex>& A, const std::vector<Vertex>& Ap) {
    try {
        route_snake(cs, A, Ap);
    } catch (const SnakeError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Snake, SingleCorridorTopToBottomIsOrderPreserving) {
    std::vector<Rect> cs{Rect::rows_cols(1, 10, 1, 10)};
    std::vector<Vertex> A{{1, 2}, {1, 5}, {1, 8}}, Ap{{10, 3}, {10, 4}, {10, 9}};
    auto paths = route_snake(cs, A, Ap);
    expect_routes(paths, A, Ap);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(paths[k].last(), Ap[k]);
    EXPECT_TRUE(is_order_preserving(paths, 1, 10));
    EXPECT_TRUE(inside_snake(paths, cs));
}

TEST(Snake, LShapedTwoCorridorsAgreesWithFlow) {
    RandomSnake s;
    s.corridors = {Rect::rows_cols(1, 6, 1, 12), Rect::rows_cols(6, 14, 7, 12)};
    s.A = {{2, 1}, {3, 1}, {4, 1}, {5, 1}};
    s.Ap = {{14, 8}, {14, 9}, {14, 10}, {14, 11}};
    EXPECT_EQ(snake_width(s.corridors), 6);
    auto paths = route_snake(s.corridors, s.A, s.Ap);
    expect_routes(paths, s.A, s.Ap);
    EXPECT_TRUE(inside_snake(paths, s.corridors));
    EXPECT_EQ(snake_flow_oracle(s), 4);
}

TEST(Snake, WidthDeficitIsReported) {
    std::vector<Rect> cs{Rect::rows_cols(1, 6, 1, 12), Rect::rows_cols(6, 14, 7, 12)};
    std::vector<Vertex> A{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}};
    std::vector<Vertex> Ap{{14, 8}, {14, 9}, {14, 10}, {14, 11}, {14, 12}};
    auto msg = error_of(cs, A, Ap);
    EXPECT_NE(msg.find("width deficit"), std::string::npos) << msg;
}

TEST(Snake, TerminalsOffTheBoundaryAreRejected) {
    std::vector<Rect> cs{Rect::rows_cols(1, 10, 1, 10)};
    auto msg = error_of(cs, {{1, 2}, {2, 3}}, {{10, 2}, {10, 3}});
    EXPECT_NE(msg.find("A is not on one side"), std::string::npos) << msg;
    msg = error_of(cs, {{1, 2}, {1, 3}}, {{10, 2}, {9, 3}});
    EXPECT_NE(msg.find("A' is not on one side"), std::string::npos) << msg;
}

TEST(Snake, MalformedChainsAreRejected) {
    EXPECT_THROW(validate_snake({}), SnakeError);
    EXPECT_THROW(validate_snake({Rect::rows_cols(1, 5, 1, 5), Rect::rows_cols(7, 9, 1, 5)}), SnakeError);
    EXPECT_THROW(validate_snake({Rect::rows_cols(1, 5, 1, 5), Rect::rows_cols(3, 9, 1, 5)}), SnakeError);
    // Corridors 1 and 3 overlap.
    EXPECT_THROW(validate_snake({Rect::rows_cols(1, 5, 1, 5), Rect::rows_cols(1, 5, 5, 9),
                                 Rect::rows_cols(5, 9, 3, 9)}),
                 SnakeError);
    EXPECT_NO_THROW(validate_snake({Rect::rows_cols(1, 5, 1, 5), Rect::rows_cols(1, 5, 5, 9)}));
}

TEST(Snake, RepeatedTerminalIsRejected) {
    std::vector<Rect> cs{Rect::rows_cols(1, 10, 1, 10)};
    auto msg = error_of(cs, {{1, 2}, {1, 2}}, {{10, 2}, {10, 3}});
    EXPECT_NE(msg.find("repeated terminal"), std::string::npos) << msg;
}

TEST(Snake, RandomSnakesRouteInsideAndMatchFlow) {
    std::mt19937_64 rng(20261016);
    for (int t = 0; t < 200; ++t) {
        RandomSnake s = random_snake(rng, 10, 5);
        std::vector<Path> paths;
        ASSERT_NO_THROW(paths = route_snake(s.corridors, s.A, s.Ap)) << "trial " << t;
        expect_routes(paths, s.A, s.Ap);
        EXPECT_TRUE(inside_snake(paths, s.corridors)) << "trial " << t;
        EXPECT_EQ(snake_flow_oracle(s), static_cast<int>(s.A.size())) << "trial " << t;
    }
}
