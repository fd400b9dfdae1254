#include <gtest/gtest.h>

#include "starcolor/constructions.hpp"
#include "starcolor/exact.hpp"
#include "starcolor/verifier.hpp"
#include "support.hpp"

using namespace starcolor;
namespace t = starcolor::testing;

TEST(HasStarK, CycleDecisions) {
    EXPECT_EQ(has_star_k_coloring(t::cycle_graph(5), 3).verdict, Verdict::No);
    const auto yes = has_star_k_coloring(t::cycle_graph(5), 4);
    ASSERT_EQ(yes.verdict, Verdict::Yes);
    EXPECT_TRUE(verify_star_coloring(t::cycle_graph(5), *yes.witness).valid);
    EXPECT_EQ(has_star_k_coloring(t::cycle_graph(4), 2).verdict, Verdict::No);
    EXPECT_EQ(has_star_k_coloring(t::cycle_graph(4), 3).verdict, Verdict::Yes);
    EXPECT_THROW(has_star_k_coloring(t::cycle_graph(4), 0), InvalidInput);
}

TEST(HasStarK, WitnessPatternForCFive) {
    // (1,2,4,3,4) is a star coloring of C5 according to the walk oracle
    EXPECT_TRUE(t::naive_is_star(t::cycle_graph(5), {1, 2, 4, 3, 4}));
}

TEST(HasStarK, BudgetGivesUnknown) {
    ExactOptions o;
    o.budget.max_nodes = 1;
    const auto r = has_star_k_coloring(gen_semiregular_tree(4, 3), 5, o);
    EXPECT_NE(r.verdict, Verdict::No);
    ExactOptions z;
    z.budget.max_seconds = 0.0;
    EXPECT_EQ(has_star_k_coloring(gen_figure5(), 9, z).verdict, Verdict::Unknown);
}

TEST(StarIndex, Examples) {
    EXPECT_EQ(star_chromatic_index(t::star_graph(4)).index, 4);
    EXPECT_EQ(star_chromatic_index(t::path_graph(4)).index, 3);
    EXPECT_EQ(star_chromatic_index(t::cycle_graph(6)).index, 3);
    EXPECT_EQ(star_chromatic_index(Graph(2)).index, 0);
    // K_{1,3} with one leg subdivided: 3 by brute force
    EXPECT_EQ(star_chromatic_index(t::spider_graph({1, 1, 2})).index, 3);
    EXPECT_EQ(naive_star_index(t::spider_graph({1, 1, 2})), 3);
}

TEST(StarIndex, NonCactusSearchesUpward) {
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    const auto r = star_chromatic_index(k4);
    ASSERT_TRUE(r.index);
    EXPECT_EQ(*r.index, naive_star_index(k4));
}

TEST(Enumerate, Counts) {
    auto count = [](const Graph& g, int k) {
        return enumerate_star_colorings(g, k, [](const EdgeColoring&) { return true; }).count;
    };
    // values from brute force over all k^m assignments
    EXPECT_EQ(count(t::path_graph(1), 2), 2u);
    EXPECT_EQ(count(t::cycle_graph(3), 3), 6u);
    EXPECT_EQ(count(t::cycle_graph(4), 2), 0u);
    EXPECT_EQ(count(t::cycle_graph(4), 3), 12u);
    EXPECT_EQ(count(t::cycle_graph(5), 4), 120u);
    EXPECT_EQ(count(gen_semiregular_tree(3, 2), 4), 384u);
}

TEST(Enumerate, VisitorCanStopAndEveryColoringIsValid) {
    int seen = 0;
    const Graph g = t::cycle_graph(6);
    const auto r = enumerate_star_colorings(g, 3, [&](const EdgeColoring& c) {
        EXPECT_TRUE(t::naive_is_star(g, t::raw_colors(c)));
        return ++seen < 5;
    });
    EXPECT_FALSE(r.complete);
    EXPECT_EQ(seen, 5);
}

TEST(Naive, GuardsAndValues) {
    EXPECT_EQ(naive_star_index(t::cycle_graph(3)), 3);
    EXPECT_EQ(naive_star_index(t::cycle_graph(5)), 4);
    EXPECT_THROW(naive_star_index(t::path_graph(11)), InvalidInput);
    EXPECT_THROW(naive_star_k_coloring(t::path_graph(3), 6), InvalidInput);
    EXPECT_THROW(naive_star_index(t::star_graph(6)), InvalidInput);
}

TEST(ExactProperty, SymmetryBreakingAndMonotonicity) {
    std::vector<Graph> corpus;
    for (int n = 3; n <= 7; ++n) corpus.push_back(t::cycle_graph(n));
    for (int a : {3, 4, 5})
        for (int b : {1, 3}) corpus.push_back(t::two_block_cactus(a, b));
    corpus.push_back(t::spider_graph({2, 2, 2}));
    for (const Graph& g : corpus) {
        bool prev_yes = false;
        for (int k = 1; k <= 5; ++k) {
            ExactOptions plain;
            plain.symmetry_breaking = false;
            const auto a = has_star_k_coloring(g, k);
            const auto b = has_star_k_coloring(g, k, plain);
            EXPECT_EQ(a.verdict, b.verdict);
            if (prev_yes) EXPECT_EQ(a.verdict, Verdict::Yes);
            prev_yes = a.verdict == Verdict::Yes;
            if (a.witness) EXPECT_TRUE(t::naive_is_star(g, t::raw_colors(*a.witness)));
        }
    }
}

TEST(ExactProperty, ThreadsAgree) {
    const Graph g = gen_tight_odd(3);
    for (int k : {4, 5}) {
        ExactOptions one, four;
        four.threads = 4;
        const auto a = has_star_k_coloring(g, k, one);
        const auto b = has_star_k_coloring(g, k, four);
        EXPECT_EQ(a.verdict, b.verdict);
        EXPECT_EQ(b.verdict == Verdict::Yes, b.witness.has_value());
        EXPECT_EQ(has_star_k_coloring(g, k, four).witness, b.witness);
    }
}
