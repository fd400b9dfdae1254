#pragma once

#include <map>
#include <optional>
#include <vector>

#include "starcolor/graph.hpp"

namespace starcolor {

/// A block of a graph. In a cactus every block is an Edge or a Cycle;
/// Other marks a 2-connected block containing more than one cycle.
struct Block {
    enum class Kind { Edge, Cycle, Other };
    Kind kind = Kind::Edge;
    /// Cycle: cyclic order starting at the lowest vertex and heading to its
    /// lower-indexed neighbor; edges[i] joins vertices[i] and vertices[i+1].
    /// Edge: vertices = {min, max}. Other: ascending.
    std::vector<EdgeId> edges;
    std::vector<Vertex> vertices;

    bool contains(Vertex v) const;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;             // ascending
    std::vector<std::vector<int>> block_adjacency;  // ascending, blocks sharing a vertex
    std::vector<int> sigma;                       // BFS order, empty until block_bfs_order
    std::vector<int> block_of_edge;               // edge -> block index
    std::vector<std::vector<int>> blocks_of_vertex;

    int root_block_for(Vertex v) const;
};

/// Throws InvalidInput on a disconnected graph.
BlockDecomposition block_decompose(const Graph& g);

bool is_cactus(const Graph& g);
bool is_cactus(const BlockDecomposition& bd);

/// Fills sigma layer by layer from root_block; each layer is sorted by
/// ascending block index.
BlockDecomposition block_bfs_order(BlockDecomposition bd, int root_block);

/// E1/E2/E3 relative to one block. A chord-free cactus can put an edge in
/// E3(e) for two E2 edges e (a triangle through a block vertex); it is then
/// listed under both.
struct EdgeClasses {
    std::vector<EdgeId> e1;
    std::map<Vertex, std::vector<EdgeId>> e2;  // block vertex -> ascending edges
    std::map<EdgeId, std::vector<EdgeId>> e3;  // e2 edge -> ascending edges

    std::vector<EdgeId> all_e2() const;
    std::vector<EdgeId> all_e3() const;
};

EdgeClasses classify_edges(const Graph& g, const Block& block);

struct AugmentedGraph {
    Graph graph;
    /// Original edge i keeps index i; only leaves and their edges are added.
    int original_edge_count = 0;
    int original_vertex_count = 0;
};

/// Pads every vertex of degree >= 2 with new leaves up to degree delta.
AugmentedGraph semiregular_augment(const Graph& g, int delta);

/// A pendant edge of the surrogate standing in for an edge removed from a
/// short attached cycle.
struct SlotInfo {
    int cycle_block = -1;      // block index of the attached cycle in the host graph
    EdgeId original_edge = -1;  // removed host edge
};

/// Two E2 edges at the same block vertex belonging to one attached cycle.
/// `first` < `second` in surrogate edge index.
struct CyclePair {
    Vertex at = -1;  // surrogate block vertex
    EdgeId first = -1;
    EdgeId second = -1;
    int cycle_block = -1;  // host block index
};

/// The unicyclic cactus built from E1 u E2 u E3 of one block, with attached
/// 3- and 4-cycles opened into pendant edges.
struct UccSurrogate {
    Graph graph;
    Block block;  // in surrogate indices
    EdgeClasses classes;  // in surrogate indices
    std::map<EdgeId, SlotInfo> slot_map;  // pendant -> removed host edge
    std::vector<EdgeId> origin_map;  // surrogate edge -> host edge, -1 for pendants
    std::vector<Vertex> vertex_origin;  // surrogate vertex -> host vertex, -1 for new leaves
    std::vector<CyclePair> cycle_pairs;
    EdgeColoring partial;  // host colors carried onto the surrogate
    int host_block = -1;
};

/// Builds the surrogate for bd.blocks[block_index]; g must be a cactus.
UccSurrogate build_ucc_surrogate(const Graph& g, const EdgeColoring& col, const BlockDecomposition& bd,
                                 int block_index);

/// Convenience overload that decomposes g itself. `block` must be a block of g.
UccSurrogate build_ucc_surrogate(const Graph& g, const EdgeColoring& col, const Block& block);

/// Structural UCC check: one Edge/Cycle block carrying the surrogate's
/// classes, every other vertex within distance 2 of it, cactus.
bool is_ucc_shape(const UccSurrogate& s);

}  // namespace starcolor
