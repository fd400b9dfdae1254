#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "starcolor/graph.hpp"

namespace starcolor {

/// Search limits. Unset fields mean unlimited.
struct Budget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
};

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

struct ExactResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<EdgeColoring> witness;  // set iff Yes
    std::uint64_t nodes = 0;
    double seconds = 0;
};

struct ExactOptions {
    Budget budget;
    /// A color may be used for the first time only as 1 + the largest color so far.
    bool symmetry_breaking = true;
    /// Worker threads; 0 means hardware concurrency.
    int threads = 1;
};

/// Decides whether g has a star edge coloring with colors 1..k.
/// Throws InvalidInput for k < 1.
ExactResult has_star_k_coloring(const Graph& g, int k, const ExactOptions& opts = {});

struct IndexResult {
    std::optional<int> index;  // unset when some decision ran out of budget
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes = 0;
};

/// Smallest k with a star k-edge-coloring, searched upward from max_degree.
/// For a cactus the search stops at floor(3*D/2)+1 and throws
/// std::logic_error if even that is refuted.
IndexResult star_chromatic_index(const Graph& g, const ExactOptions& opts = {});

struct EnumerationResult {
    std::uint64_t count = 0;
    bool complete = false;  // false when the budget ran out or the visitor stopped
};

/// Visits every total star coloring over colors 1..k (no symmetry quotient).
/// The visitor returns false to stop early.
EnumerationResult enumerate_star_colorings(const Graph& g, int k,
                                           const std::function<bool(const EdgeColoring&)>& visit,
                                           const Budget& budget = {});

/// Tries all k^m assignments and keeps the first that verifies.
/// Guarded to m <= 10 edges and k <= 5.
std::optional<EdgeColoring> naive_star_k_coloring(const Graph& g, int k);

/// Smallest k <= 5 found by naive_star_k_coloring; throws InvalidInput when
/// the graph is over the guard or needs more than 5 colors.
int naive_star_index(const Graph& g);

}  // namespace starcolor
