#pragma once

#include <array>
#include <optional>
#include <vector>

#include "starcolor/graph.hpp"

namespace starcolor {

/// A path with four edges (five distinct vertices) or a cycle with four
/// edges, listed in traversal order. Each segment is stored in the
/// orientation whose edge tuple is lexicographically smallest.
struct Segment {
    std::array<EdgeId, 4> edges;
    bool is_cycle = false;

    bool operator==(const Segment&) const = default;
    auto operator<=>(const Segment&) const = default;
};

/// All 4-edge segments of g, each once up to reversal (and rotation for
/// 4-cycles), sorted ascending by edge tuple.
std::vector<Segment> enumerate_4edge_segments(const Graph& g);

struct Violation {
    enum class Kind { ImproperPair, BicoloredSegment };
    Kind kind;
    std::vector<EdgeId> edges;  // 2 edges, or 4 in path order
    std::vector<Color> colors;

    bool operator==(const Violation&) const = default;
};

struct ColoringReport {
    bool valid = true;
    int colors_used = 0;
    int palette = 0;
    int max_degree = 0;
    int bound = 0;  // floor(3*max_degree/2)+1
    std::optional<Violation> violation;
};

/// Star-condition checker with the segment list precomputed once per graph.
class StarChecker {
public:
    explicit StarChecker(const Graph& g);

    /// First violation in scan order: improper pairs (ascending edge pair),
    /// then bicolored segments (ascending segment tuple). Uncolored edges
    /// impose no constraint.
    std::optional<Violation> first_violation(const EdgeColoring& col) const;
    bool is_star(const EdgeColoring& col) const { return !first_violation(col); }

    const std::vector<Segment>& segments() const { return segments_; }

private:
    const Graph* graph_;
    std::vector<Segment> segments_;
};

/// Throws InvalidInput when the coloring does not match the graph or a
/// color lies outside 1..palette_size.
ColoringReport verify_star_coloring(const Graph& g, const EdgeColoring& col);

/// Same check restricted to a subset of edges (others treated as uncolored).
bool is_star_on_edges(const Graph& g, const EdgeColoring& col, const std::vector<EdgeId>& edges);

}  // namespace starcolor
