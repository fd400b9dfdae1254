#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcolor/exact.hpp"
#include "starcolor/graph.hpp"

namespace starcolor {

/// C_n with edge i = (i, i+1 mod n). Throws InvalidInput for n < 3.
Graph gen_cycle(int n);

/// Rooted tree, root 0, vertices numbered in BFS order. The root has `delta`
/// children and every other internal vertex delta-1, down to depth `height`.
Graph gen_semiregular_tree(int delta, int height);

/// Height-3 semiregular tree plus an edge between the root's first two
/// children x, y, with the last child of x and of y removed along with their
/// subtrees. Odd delta >= 3 only.
Graph gen_tight_odd(int delta);

/// The fixed 88-vertex, degree-6 cactus built on a triangle and a 4-cycle
/// sharing one vertex.
Graph gen_figure5();

struct RandomCactusParams {
    std::uint64_t seed = 0;
    int n_blocks = 1;
    double cycle_prob = 0.5;
    int cycle_len_min = 3;
    int cycle_len_max = 8;
    int delta_cap = 4;
    int max_edges = 0;  // 0: no limit; otherwise stop adding blocks before exceeding it
};

/// Grows a block tree: each new block is a cycle (probability cycle_prob,
/// length uniform in range) or an edge, hung at a uniformly chosen vertex with
/// enough degree head-room. A cycle that fits nowhere becomes an edge.
/// Not a uniform sampler over cacti. Identical params give identical graphs
/// on every platform.
Graph gen_random_cactus(const RandomCactusParams& params);

struct AuditCounterexample {
    char fact = '?';  // 'a', 'b' or 'c'
    Vertex x = -1;
    Vertex y = -1;
    Color color = 0;  // offending color for fact (b)
    EdgeColoring coloring;
};

struct AuditReport {
    int delta = 0;
    int palette = 0;
    std::uint64_t colorings = 0;
    bool complete = false;
    std::vector<AuditCounterexample> counterexamples;  // first few only
    std::uint64_t counterexample_count = 0;
};

/// Checks the three facts on one coloring of gen_semiregular_tree(delta, 2).
/// Returns the first failing fact. Throws InvalidInput when `col` is not a
/// total star coloring of `tree`.
std::optional<AuditCounterexample> audit_coloring(const Graph& tree, const EdgeColoring& col, int delta);

/// Runs audit_coloring over every star coloring of the height-2 tree with
/// floor(3*delta/2) colors. Odd delta only.
AuditReport audit_lemma_facts(int delta, const Budget& budget = {});

}  // namespace starcolor
