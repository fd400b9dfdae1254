#pragma once

#include <set>
#include <vector>

#include "starcolor/cactus.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/verifier.hpp"

namespace starcolor {

/// An uncolored cycle D hanging off block vertex x, read as
/// e1 = x x1, e2 = x x2, e3 leaving x2, ..., en entering x1.
/// e1 is the earlier of the two in E2 processing order.
struct AttachedCycleTask {
    Vertex x = -1;
    std::vector<EdgeId> cycle;  // e1..en
    Color c1 = 0;               // color of e1
    Color c2 = 0;               // color of e2
    std::set<Color> first_e3;   // colors the surrogate put on E3(e1)
    std::set<Color> second_e3;  // colors the surrogate put on E3(e2)
    std::set<Color> at_x;       // C(x)
    int palette = 0;
    int delta = 0;
};

struct AttachedCyclePlan {
    std::vector<Color> colors;  // e1..en; the first two equal c1, c2
    Color pendant_e = 0;        // color of the selected pendant in E3(e1), 0 if none
    Color pendant_e_prime = 0;  // color of the selected pendant in E3(e2), 0 if none
    Color extra = 0;            // c' when the pattern introduces one
};

/// Pattern for D by n mod 3. Throws std::logic_error when a required
/// pendant color is missing from the surrogate.
AttachedCyclePlan color_attached_cycle(const AttachedCycleTask& task);

struct CactusOptions {
    /// Verify the whole partial coloring after every round (slow).
    bool check_rounds = false;
    /// Verify C_i + T_x + D_x after every attached cycle.
    bool check_locality = false;
};

struct CactusColoring {
    EdgeColoring coloring;  // on the input graph
    ColoringReport report;  // verifier verdict on the input graph
    int delta = 0;          // degree the palette was sized for
    int rounds = 0;
};

/// Star edge coloring of a connected cactus over the palette
/// floor(3*D/2)+1, D = max(delta, 3). Paths and cycles (delta <= 2) get the
/// block patterns directly and use at most floor(3*delta/2)+1 colors;
/// otherwise the graph is padded to D-semiregular and colored block by block.
/// Throws InvalidInput on non-cactus or disconnected input and when
/// delta < max_degree(g).
CactusColoring color_cactus(const Graph& g, int delta, const CactusOptions& opts = {});

}  // namespace starcolor
