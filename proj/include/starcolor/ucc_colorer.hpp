#pragma once

#include <vector>

#include "starcolor/cactus.hpp"
#include "starcolor/graph.hpp"

namespace starcolor {

/// Canonical star coloring of a block: n = 1 is an Edge block, n >= 3 a
/// cycle of length n in its stored cyclic order. Uses at most 4 colors.
/// Throws InvalidInput for n = 0 or n = 2.
std::vector<Color> color_cycle_star(int n);

/// Sibling positions (1-based) whose colors may complete E3(e_i) when E2 at a
/// vertex has `count` edges: for even i the odd j < i and the even j > i, for
/// odd i the even j < i and the odd j > i.
std::vector<int> parity_siblings(int i, int count);

/// E2 edges at a block vertex in processing order: attached-cycle pairs
/// first (each pair on consecutive positions 2t-1, 2t), then the rest by
/// ascending edge index.
std::vector<EdgeId> e2_order(const UccSurrogate& s, Vertex x);

/// Star edge coloring of a delta-semiregular UCC with floor(3*delta/2)+1
/// colors, starting from nothing.
EdgeColoring color_ucc(const UccSurrogate& s, int delta);

/// Completes a partial coloring that already colors the block: uncolored E2
/// edges at a vertex receive the shared set S, uncolored E3 edges the missing
/// colors of their block vertex and then parity-rule sibling colors.
/// Existing colors are never changed. Throws InvalidInput when the partial
/// coloring is not a star coloring or leaves the block uncolored.
EdgeColoring extend_ucc_partial(const UccSurrogate& s, const EdgeColoring& partial, int delta);

}  // namespace starcolor
