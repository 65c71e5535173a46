#include "gridndp/geometry.hpp"
#include "gridndp/region_set.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace gridndp;

namespace {

Rect random_rect(std::mt19937& rng, Coord L, Coord H) {
    Coord r1 = rng() % H + 1, r2 = rng() % H + 1, c1 = rng() % L + 1, c2 = rng() % L + 1;
    return Rect::rows_cols(std::min(r1, r2), std::max(r1, r2), std::min(c1, c2), std::max(c1, c2));
}

std::vector<std::vector<char>> bitmap(const std::vector<Rect>& rects, Coord L, Coord H) {
    std::vector<std::vector<char>> bm(H + 1, std::vector<char>(L + 1, 0));
    for (const auto& r : rects)
        for (Coord i = r.r1; i <= r.r2; ++i)
            for (Coord j = r.c1; j <= r.c2; ++j) bm[i][j] = 1;
    return bm;
}

// Random axis-aligned walk clipped to the grid.
Path random_path(std::mt19937& rng, Coord L, Coord H, int segments) {
    Path p;
    Vertex v{static_cast<Coord>(rng() % H) + 1, static_cast<Coord>(rng() % L) + 1};
    p.push(v);
    for (int s = 0; s < segments; ++s) {
        if (rng() % 2) v.row = rng() % H + 1;
        else v.col = rng() % L + 1;
        p.push(v);
    }
    return p;
}

std::set<Vertex> vertices_of(const Path& p) {
    std::set<Vertex> out;
    for (const auto& r : vertex_pieces(p))
        for (Coord i = r.r1; i <= r.r2; ++i)
            for (Coord j = r.c1; j <= r.c2; ++j) out.insert({i, j});
    return out;
}

}  // namespace

TEST(RegionSet, EmptySetContainsNothing) {
    RegionSet rs;
    EXPECT_TRUE(rs.empty());
    EXPECT_FALSE(rs.contains({1, 1}));
    EXPECT_FALSE(rs.contains({7, 3}));
}

TEST(RegionSet, WholeGridContainsEverything) {
    RegionSet rs({Rect::rows_cols(1, 10, 1, 12)});
    for (Coord i = 1; i <= 10; ++i)
        for (Coord j = 1; j <= 12; ++j) EXPECT_TRUE(rs.contains({i, j}));
    EXPECT_EQ(rs.area(), 120);
}

TEST(RegionSet, OverlapCountedOnceAndMatchesBitmap) {
    RegionSet rs({Rect::rows_cols(5, 20, 5, 20), Rect::rows_cols(10, 30, 10, 30)});
    EXPECT_TRUE(rs.contains({15, 15}));
    auto bm = bitmap({Rect::rows_cols(5, 20, 5, 20), Rect::rows_cols(10, 30, 10, 30)}, 50, 50);
    Coord count = 0;
    for (Coord i = 1; i <= 50; ++i)
        for (Coord j = 1; j <= 50; ++j) {
            EXPECT_EQ(rs.contains({i, j}), bool(bm[i][j]));
            count += bm[i][j];
        }
    EXPECT_EQ(rs.area(), count);
    // Pieces of the normal form never overlap.
    Coord sum = 0;
    for (const auto& r : rs.rects()) sum += r.height() * r.width();
    EXPECT_EQ(sum, count);
}

TEST(RegionSet, RandomUnionsMatchBitmapAndAreOrderIndependent) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Coord L = 64, H = 64;
        std::vector<Rect> rects;
        for (int k = 0; k < 1 + trial % 9; ++k) rects.push_back(random_rect(rng, L, H));
        RegionSet rs(rects);
        auto shuffled = rects;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_EQ(RegionSet(shuffled), rs);
        auto bm = bitmap(rects, L, H);
        for (Coord i = 1; i <= H; ++i)
            for (Coord j = 1; j <= L; ++j) ASSERT_EQ(rs.contains({i, j}), bool(bm[i][j])) << i << "," << j;
        Rect q = random_rect(rng, L, H);
        std::optional<Vertex> first;
        for (Coord i = q.r1; i <= q.r2 && !first; ++i)
            for (Coord j = q.c1; j <= q.c2 && !first; ++j)
                if (bm[i][j]) first = Vertex{i, j};
        EXPECT_EQ(rs.first_in(q), first);
        bool all = true;
        for (Coord i = q.r1; i <= q.r2; ++i)
            for (Coord j = q.c1; j <= q.c2; ++j) all = all && bm[i][j];
        EXPECT_EQ(rs.covers(q), all);
    }
}

TEST(RegionSet, SetAlgebraMatchesBitmap) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rect> a, b;
        for (int k = 0; k < 4; ++k) a.push_back(random_rect(rng, 40, 40));
        for (int k = 0; k < 4; ++k) b.push_back(random_rect(rng, 40, 40));
        RegionSet ra(a), rb(b);
        auto u = ra.united(rb), x = ra.intersected(rb), t = ra.translated(3, -2);
        auto ba = bitmap(a, 40, 40), bb = bitmap(b, 40, 40);
        for (Coord i = 1; i <= 40; ++i)
            for (Coord j = 1; j <= 40; ++j) {
                EXPECT_EQ(u.contains({i, j}), ba[i][j] || bb[i][j]);
                EXPECT_EQ(x.contains({i, j}), ba[i][j] && bb[i][j]);
                EXPECT_EQ(t.contains({i + 3, j - 2}), bool(ba[i][j]));
            }
    }
}

TEST(CutOutBox, OpeningMatchesBitmapRecomputation) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Coord L = 30, H = 12;
        std::vector<Rect> rects{Rect::rows_cols(1, H, 1, 1), Rect::rows_cols(1, H, L, L), Rect::rows_cols(H, H, 1, L)};
        for (int k = 0; k < 3; ++k) rects.push_back(random_rect(rng, L, H));
        CutOutBox box{{L, H}, RegionSet(rects)};
        EXPECT_TRUE(box.is_cut_out());
        auto bm = bitmap(rects, L, H);
        std::vector<Coord> cols;
        for (Coord j = 1; j <= L; ++j)
            if (!bm[1][j]) cols.push_back(j);
        ASSERT_EQ(box.opening_size(), static_cast<Coord>(cols.size()));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            EXPECT_EQ(box.opening_col(static_cast<Coord>(k) + 1), cols[k]);
            EXPECT_EQ(box.opening_rank(cols[k]), static_cast<Coord>(k) + 1);
        }
    }
    CutOutBox plain{{10, 5}, RegionSet({Rect::rows_cols(1, 5, 1, 1)})};
    EXPECT_FALSE(plain.is_cut_out());
}

TEST(Disjointness, ParallelColumnsAreDisjoint) {
    Path a, b;
    a.push({1, 3});
    a.push({20, 3});
    b.push({1, 4});
    b.push({20, 4});
    EXPECT_TRUE(paths_node_disjoint({a, b}).ok());
}

TEST(Disjointness, CrossingReportsWitness) {
    Path a, b;
    a.push({1, 5});
    a.push({10, 5});
    b.push({5, 1});
    b.push({5, 10});
    auto rep = paths_node_disjoint({a, b});
    ASSERT_EQ(rep.conflicts.size(), 1u);
    EXPECT_EQ(rep.conflicts[0].a, 0u);
    EXPECT_EQ(rep.conflicts[0].b, 1u);
    EXPECT_EQ(rep.conflicts[0].witness, (Vertex{5, 5}));
}

TEST(Disjointness, RandomFamiliesMatchVertexSetOracle) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Path> paths;
        for (int k = 0; k < 20; ++k) paths.push_back(random_path(rng, 30, 30, 1 + rng() % 3));
        auto rep = paths_node_disjoint(paths);
        EXPECT_EQ(rep, paths_node_disjoint_naive(paths));
        // Independent oracle on vertex sets, pairs only.
        std::vector<std::set<Vertex>> vs;
        for (const auto& p : paths) vs.push_back(vertices_of(p));
        std::set<std::pair<std::size_t, std::size_t>> expect, got;
        std::map<std::pair<std::size_t, std::size_t>, Vertex> wit;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                for (const auto& v : vs[i])
                    if (vs[j].count(v)) {
                        expect.insert({i, j});
                        wit[{i, j}] = v;
                        break;
                    }
        for (const auto& c : rep.conflicts)
            if (c.a != c.b) {
                got.insert({c.a, c.b});
                EXPECT_EQ(c.witness, wit[std::make_pair(c.a, c.b)]);
            }
        EXPECT_EQ(got, expect);
    }
}

TEST(Disjointness, LongSegmentsAreNotMaterialised) {
    const Coord big = 1'000'000'000'000;
    Path a, b;
    a.push({1, 1});
    a.push({1, big});
    b.push({2, 1});
    b.push({2, big});
    b.push({1, big});
    auto rep = paths_node_disjoint({a, b});
    ASSERT_EQ(rep.conflicts.size(), 1u);
    EXPECT_EQ(rep.conflicts[0].witness, (Vertex{1, big}));
}

TEST(Disjointness, PiecesMustBeLines) {
    EXPECT_THROW(pieces_disjoint({{Rect::rows_cols(1, 2, 1, 2)}}), std::invalid_argument);
}

TEST(Paths, VertexCountAndPieces) {
    Path p;
    p.push({1, 1});
    p.push({1, 5});
    p.push({4, 5});
    EXPECT_EQ(p.vertex_count(), 8);
    EXPECT_EQ(vertices_of(p).size(), 8u);
    EXPECT_TRUE(path_contains(p, {3, 5}));
    EXPECT_FALSE(path_contains(p, {3, 4}));
    EXPECT_EQ(first_hit(p, Rect::rows_cols(1, 4, 3, 5)), (Vertex{1, 3}));
    Path bad;
    bad.pts = {{1, 1}, {2, 2}};
    EXPECT_THROW(check_axis_aligned(bad), std::invalid_argument);
}

TEST(OrderPreserving, StraightVerticalPathsPreserveOrder) {
    std::vector<Path> ps;
    for (Coord c : {2, 5, 9}) {
        Path p;
        p.push({1, c});
        p.push({10, c});
        ps.push_back(p);
    }
    EXPECT_TRUE(is_order_preserving(ps, 1, 10));
}

TEST(OrderPreserving, SwappedBottomEndpointsBreakOrder) {
    Path a, b;
    a.push({1, 2});
    a.push({5, 2});
    a.push({5, 8});
    a.push({10, 8});
    b.push({1, 5});
    b.push({3, 5});
    b.push({3, 6});
    b.push({10, 6});
    EXPECT_FALSE(is_order_preserving({a, b}, 1, 10));
}

TEST(OrderPreserving, EndpointOffRowThrows) {
    Path a;
    a.push({2, 2});
    a.push({10, 2});
    EXPECT_THROW(is_order_preserving({a}, 1, 10), std::invalid_argument);
}

TEST(AlignedSeparated, SingleCentredBoxWithMargin) {
    Rect host = Rect::rows_cols(1, 21, 1, 40);
    Rect box = Rect::rows_cols(6, 16, 11, 30);
    EXPECT_TRUE(check_aligned_separated({box}, host, 10));
    EXPECT_FALSE(check_aligned_separated({box}, host, 11));
}

TEST(AlignedSeparated, GapOneShortFails) {
    Rect host = Rect::rows_cols(1, 21, 1, 100);
    Rect a = Rect::rows_cols(6, 16, 11, 30);
    Rect b = Rect::rows_cols(6, 16, 30 + 10, 60);  // 9 columns between
    EXPECT_FALSE(check_aligned_separated({a, b}, host, 10));
    EXPECT_TRUE(check_aligned_separated({a, b.translated(0, 1)}, host, 10));
}
