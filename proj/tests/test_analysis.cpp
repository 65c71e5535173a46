#include "gridndp/encircle.hpp"
#include "gridndp/fixtures.hpp"
#include "gridndp/verify.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace gridndp;

namespace {

const Schedule& compact_schedule() {
    static const Schedule s = compute_schedule(Profile::compact(Rational(1, 10), 3, 1), 3, 1);
    return s;
}

RoutingInstance level0() {
    auto t = build_level0(compact_schedule());
    return instantiate(t, default_placement(*t));
}

Path poly(std::initializer_list<Vertex> pts) {
    Path p;
    for (const auto& v : pts) p.push(v);
    return p;
}

// Abstract index: hits[a] lists the pairs a encircles, with one vertex each.
EncirclingIndex synthetic(const std::vector<std::string>& labels,
                          const std::vector<std::pair<std::size_t, std::size_t>>& encircle) {
    EncirclingIndex idx;
    idx.labels = labels;
    idx.hits.resize(labels.size());
    for (const auto& [a, b] : encircle) idx.hits[a][b] = 1;
    return idx;
}

std::string label(int k) {
    std::string s = std::to_string(k);
    return "p" + std::string(3 - s.size(), '0') + s;
}

// Every one-per-group choice, checked pair by pair against the raw index.
std::vector<std::vector<std::string>> brute_selections(const EncirclingIndex& idx,
                                                       const std::vector<std::vector<std::string>>& groups) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur;
    auto rec = [&](auto&& self, std::size_t g) -> void {
        if (g == groups.size()) {
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = 0; j < cur.size(); ++j) {
                    if (i == j) continue;
                    auto a = idx.index(cur[i]), b = idx.index(cur[j]);
                    if (idx.hits[a].count(b) && idx.hits[a].at(b) > 0) return;
                }
            out.push_back(cur);
            return;
        }
        for (const auto& l : groups[g]) {
            cur.push_back(l);
            self(self, g + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST(Verify, LevelZeroRouteYesPasses) {
    auto inst = level0();
    auto rep = verify_solution(inst, route_yes(inst, parse_assignment("000")), RouteMode::ndp);
    EXPECT_TRUE(rep.ok()) << rep.format();
    EXPECT_EQ(rep.routed, 1u);
}

TEST(Verify, CrossingPathsReportWitness) {
    auto inst = grid_fixture("cross", 9, 9, {{{5, 1}, {5, 9}}, {{1, 5}, {9, 5}}});
    RoutedSolution sol;
    sol.routes = {{inst.pairs[0].label, poly({{5, 1}, {5, 9}})}, {inst.pairs[1].label, poly({{1, 5}, {9, 5}})}};
    std::sort(sol.routes.begin(), sol.routes.end(),
              [&](const RoutedPath& a, const RoutedPath& b) { return a.path.first().col < b.path.first().col; });
    sol.schedule_digest = inst.schedule_digest;
    auto rep = verify_solution(inst, sol, RouteMode::ndp);
    ASSERT_TRUE(rep.failed("disjointness")) << rep.format();
    bool witness = false;
    for (const auto& f : rep.failures)
        witness = witness || (f.check == "disjointness" && f.message.find("(5,5)") != std::string::npos);
    EXPECT_TRUE(witness) << rep.format();
}

TEST(Verify, PathMeetingTheOpeningTwiceFailsBoxCheck) {
    auto inst = level0();
    // The opening is row 21, columns 43..60. This path walks along it.
    RoutedSolution sol;
    sol.schedule_digest = inst.schedule_digest;
    sol.routes = {{inst.pairs[0].label, poly({{1, 21}, {1, 44}, {21, 44}, {21, 45}, {30, 45}, {30, 43}})}};
    sol.certificates = collect_certificates(inst, sol);
    auto rep = verify_solution(inst, sol, RouteMode::ndp);
    EXPECT_FALSE(rep.failed("endpoints"));
    EXPECT_FALSE(rep.failed("containment"));
    ASSERT_TRUE(rep.failed("box")) << rep.format();
    bool named = false;
    for (const auto& f : rep.failures)
        if (f.check == "box")
            named = named || (f.message.find("(21,44)") != std::string::npos &&
                              f.message.find("(21,45)") != std::string::npos);
    EXPECT_TRUE(named) << rep.format();
}

TEST(Verify, PathThroughDeletedVertexFailsContainment) {
    auto inst = level0();
    RoutedSolution sol;
    sol.schedule_digest = inst.schedule_digest;
    sol.routes = {{inst.pairs[0].label, poly({{1, 21}, {30, 21}, {30, 43}})}};
    auto rep = verify_solution(inst, sol, RouteMode::ndp);
    EXPECT_TRUE(rep.failed("containment")) << rep.format();
}

TEST(Verify, NonAxisAlignedStepIsMalformed) {
    auto inst = level0();
    RoutedSolution sol;
    sol.schedule_digest = inst.schedule_digest;
    RoutedPath r{inst.pairs[0].label, {}};
    r.path.pts = {{1, 21}, {30, 43}};
    sol.routes = {r};
    EXPECT_THROW(verify_solution(inst, sol, RouteMode::ndp), MalformedSolution);
}

TEST(Encircle, StraightPathsInDistinctColumnsDoNotEncircle) {
    auto inst = parallel_fixture(3);
    auto sol = greedy_solve(inst);
    ASSERT_EQ(sol.routes.size(), 3u);
    auto idx = build_encircling_index(inst, sol);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) EXPECT_FALSE(idx.encircles(a, b));
    EXPECT_EQ(idx.max_encirclers(), 0u);
}

TEST(Encircle, DetourThroughQLineEncircles) {
    // Box rows 1..12 of a 12-column host; the bottom row is deleted so Q
    // lines end just above it.
    auto inst = grid_fixture("enc", 12, 12, {{{1, 3}, {4, 3}}, {{1, 8}, {4, 10}}});
    inst.deleted = RegionSet::from_rects({Rect::rows_cols(12, 12, 1, 12)});
    inst.boxes = {{"", 0, Rect::rows_cols(1, 12, 1, 12), 0, 2}};
    RoutedSolution sol;
    sol.schedule_digest = inst.schedule_digest;
    sol.routes = {{inst.pairs[0].label, poly({{1, 3}, {4, 3}})},
                  {inst.pairs[1].label, poly({{1, 8}, {1, 6}, {8, 6}, {8, 1}, {10, 1}, {10, 10}, {4, 10}})}};
    ASSERT_TRUE(verify_solution(inst, sol, RouteMode::ndp).ok());
    EXPECT_EQ(inst.q_line(0), Rect::rows_cols(4, 11, 3, 3));
    EXPECT_TRUE(encircles(inst, sol, inst.pairs[1].label, inst.pairs[0].label));
    EXPECT_FALSE(encircles(inst, sol, inst.pairs[0].label, inst.pairs[1].label));
    EXPECT_FALSE(encircles(inst, sol, inst.pairs[0].label, inst.pairs[0].label));
    auto idx = build_encircling_index(inst, sol);
    EXPECT_EQ(idx.on_lines(1, {0}), 2);
    EXPECT_EQ(idx.max_encirclers(), 1u);
}

TEST(Encircle, UnroutedPairIsAnError) {
    auto inst = parallel_fixture(2);
    auto sol = greedy_solve(inst);
    EXPECT_THROW(encircles(inst, sol, inst.pairs[0].label, "nosuch"), SelectionError);
}

TEST(Encircle, QLinesRespectHalfHeightBound) {
    auto t = build_level(search_n3_formula(), compact_schedule(), 1);
    auto inst = instantiate(t, default_placement(*t));
    auto sol = route_yes(inst, parse_assignment("111"));
    auto idx = build_encircling_index(inst, sol);
    // Every destination sits in a level-0 child of height H_0 = 20.
    ASSERT_EQ(compact_schedule().at(0).H, 20);
    EXPECT_LE(idx.max_encirclers(), 10u);
    for (const auto& q : idx.q) EXPECT_LE(q.height(), 10);
}

TEST(Select, SingleGroupTakesSmallestLabel) {
    std::vector<std::string> labels;
    for (int k = 1; k <= 12; ++k) labels.push_back(label(k));
    auto idx = synthetic(labels, {});
    std::vector<std::string> g(labels.rbegin(), labels.rend());
    EXPECT_EQ(select_non_encircling(idx, {g}, 2), (std::vector<std::string>{"p001"}));
}

TEST(Select, AvoidsAPairThatEncirclesEverything) {
    // r = 2, H = 4: groups need 8 pairs. p009 (smallest of S_2) encircles
    // every pair of S_1.
    std::vector<std::string> labels;
    for (int k = 1; k <= 16; ++k) labels.push_back(label(k));
    std::vector<std::pair<std::size_t, std::size_t>> enc;
    for (std::size_t b = 0; b < 8; ++b) enc.push_back({8, b});
    auto idx = synthetic(labels, enc);
    std::vector<std::vector<std::string>> groups{{labels.begin(), labels.begin() + 8}, {labels.begin() + 8, labels.end()}};
    auto sel = select_non_encircling(idx, groups, 4);
    ASSERT_EQ(sel.size(), 2u);
    EXPECT_NE(sel[1], "p009");
    EXPECT_TRUE(is_non_encircling(idx, sel));
    auto all = brute_selections(idx, groups);
    EXPECT_EQ(all.size(), 8u * 7u);
    EXPECT_NE(std::find(all.begin(), all.end(), sel), all.end());
}

TEST(Select, RandomFamiliesAgreeWithExhaustiveSearch) {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = 1 + trial % 3;
        const Coord H = 2;
        const int per = r * r * static_cast<int>(H) / 2 + static_cast<int>(rng() % 3);
        std::vector<std::string> labels;
        for (int k = 0; k < r * per; ++k) labels.push_back(label(k + 1));
        // Each path meets at most (r-1)H/2 foreign Q lines in expectation.
        std::vector<std::pair<std::size_t, std::size_t>> enc;
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = 0; b < labels.size(); ++b)
                if (a != b && rng() % 10 == 0) enc.push_back({a, b});
        auto idx = synthetic(labels, enc);
        std::vector<std::vector<std::string>> groups;
        for (int g = 0; g < r; ++g) groups.emplace_back(labels.begin() + g * per, labels.begin() + (g + 1) * per);
        auto all = brute_selections(idx, groups);
        EXPECT_EQ(all_non_encircling(idx, groups, 1u << 20).size(), all.size()) << "trial " << trial;
        try {
            auto sel = select_non_encircling(idx, groups, H);
            EXPECT_TRUE(is_non_encircling(idx, sel));
            EXPECT_NE(std::find(all.begin(), all.end(), sel), all.end()) << "trial " << trial;
        } catch (const SelectionError&) {
            // The filter may run dry when the density assumption is violated;
            // it must never return an invalid selection.
        }
    }
}

TEST(Select, DeficientGroupIsNamed) {
    std::vector<std::string> labels;
    for (int k = 1; k <= 12; ++k) labels.push_back(label(k));
    auto idx = synthetic(labels, {});
    std::vector<std::vector<std::string>> groups{{labels.begin(), labels.begin() + 8}, {labels.begin() + 8, labels.end()}};
    try {
        select_non_encircling(idx, groups, 4);
        FAIL() << "expected SelectionError";
    } catch (const SelectionError& e) {
        EXPECT_NE(std::string(e.what()).find("group S_2"), std::string::npos) << e.what();
    }
}

TEST(Select, OverlappingGroupsAreRejected) {
    std::vector<std::string> labels{"a", "b", "c"};
    auto idx = synthetic(labels, {});
    EXPECT_THROW(select_non_encircling(idx, {{"a", "b"}, {"b", "c"}}, 1), SelectionError);
}

TEST(Classify, LevelZeroBoxIsNotInteresting) {
    auto inst = level0();
    auto loads = classify_boxes(inst, route_yes(inst, parse_assignment("000")));
    ASSERT_EQ(loads.size(), 1u);
    EXPECT_EQ(loads[0].routed, 1u);
    EXPECT_FALSE(loads[0].interesting);
}

TEST(Greedy, LevelZeroRoutesTheSinglePair) {
    auto inst = level0();
    auto sol = greedy_solve(inst);
    EXPECT_EQ(sol.routes.size(), 1u);
    EXPECT_TRUE(verify_solution(inst, sol, RouteMode::ndp).ok());
}

TEST(Greedy, CrossingFixtureRoutesOneAndExactAgrees) {
    auto inst = crossing_fixture();
    auto g = greedy_solve(inst);
    EXPECT_EQ(g.routes.size(), 1u);
    EXPECT_TRUE(verify_solution(inst, g, RouteMode::ndp).ok());
    EXPECT_EQ(exact_solve(inst, RouteMode::ndp).optimum, 1u);
}

TEST(Greedy, ParallelPairsAllRouted) {
    for (int k : {1, 4, 7}) {
        auto inst = parallel_fixture(k);
        auto g = greedy_solve(inst);
        EXPECT_EQ(g.routes.size(), static_cast<std::size_t>(k));
        EXPECT_EQ(exact_solve(inst, RouteMode::ndp).optimum, static_cast<std::size_t>(k));
    }
}

TEST(Greedy, AreaLimitIsEnforced) {
    auto inst = parallel_fixture(3);
    EXPECT_THROW(greedy_solve(inst, 10), LimitExceeded);
}

TEST(Exact, StarIsOneAndEverySingletonRoutes) {
    auto star = star_fixture(5);
    ExactLimits lim;
    lim.max_pairs = 21;
    auto opt = exact_solve(star, RouteMode::ndp, lim);
    EXPECT_EQ(opt.optimum, 1u);
    for (std::size_t p = 0; p < star.pairs.size(); ++p)
        EXPECT_TRUE(route_subset(star, {p}, RouteMode::ndp).has_value()) << p;
}

TEST(Exact, K5GadgetOneGroupFourRoutableFiveNot) {
    auto four = with_pairs(k5_gadget(), one_group_pairs(1, 4));
    auto five = with_pairs(k5_gadget(), one_group_pairs(1, 5));
    std::vector<std::size_t> all4{0, 1, 2, 3}, all5{0, 1, 2, 3, 4};
    EXPECT_TRUE(route_subset(four, all4, RouteMode::edp).has_value());
    EXPECT_FALSE(route_subset(five, all5, RouteMode::edp).has_value());
    EXPECT_EQ(exact_solve(five, RouteMode::edp).optimum, 4u);
}

TEST(Exact, K5PatternIsRoutable) {
    auto gi = with_pairs(k5_gadget(), k5_pattern_pairs());
    ASSERT_EQ(gi.pairs.size(), 10u);
    std::vector<std::size_t> all(10);
    for (std::size_t k = 0; k < 10; ++k) all[k] = k;
    auto sol = route_subset(gi, all, RouteMode::edp);
    ASSERT_TRUE(sol.has_value());
    std::set<std::pair<int, int>> used;
    for (const auto& p : sol->paths)
        for (std::size_t k = 1; k < p.size(); ++k) {
            EXPECT_TRUE(gi.g.has_edge(p[k - 1], p[k]));
            EXPECT_TRUE(used.insert(std::minmax(p[k - 1], p[k])).second) << "edge reused";
        }
}

TEST(Exact, LimitsAreEnforced) {
    ExactLimits lim;
    lim.max_pairs = 3;
    EXPECT_THROW(exact_solve(star_fixture(5), RouteMode::ndp, lim), LimitExceeded);
    EXPECT_THROW(exact_solve(grid_fixture("big", 200, 60, {{{1, 1}, {60, 200}}}), RouteMode::ndp), LimitExceeded);
}

TEST(Exact, NeverBelowGreedyOnRandomFixtures) {
    for (unsigned seed = 1; seed <= 25; ++seed) {
        auto inst = random_grid_fixture(seed, 6, 6, 2 + static_cast<int>(seed % 5));
        auto g = greedy_solve(inst);
        auto opt = exact_solve(inst, RouteMode::ndp);
        EXPECT_GE(opt.optimum, g.routes.size()) << "seed " << seed;
        EXPECT_TRUE(verify_solution(inst, opt.witness, RouteMode::ndp).ok()) << "seed " << seed;
        EXPECT_EQ(opt.witness.routes.size(), opt.optimum);
    }
}
