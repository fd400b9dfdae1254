#include "starcolor/cactus.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace starcolor {

bool Block::contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

int BlockDecomposition::root_block_for(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= blocks_of_vertex.size() ||
        blocks_of_vertex[static_cast<std::size_t>(v)].empty())
        return blocks.empty() ? -1 : 0;
    return blocks_of_vertex[static_cast<std::size_t>(v)].front();
}

namespace {

Block make_block(const Graph& g, std::vector<EdgeId> edges) {
    Block b;
    std::sort(edges.begin(), edges.end());
    std::vector<Vertex> verts;
    for (EdgeId e : edges) {
        verts.push_back(g.edge(e).u);
        verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    if (edges.size() == 1) {
        b.kind = Block::Kind::Edge;
        b.edges = edges;
        b.vertices = verts;
        return b;
    }

    // local degree inside the block
    std::unordered_map<Vertex, std::vector<std::pair<Vertex, EdgeId>>> local;
    for (EdgeId e : edges) {
        local[g.edge(e).u].push_back({g.edge(e).v, e});
        local[g.edge(e).v].push_back({g.edge(e).u, e});
    }
    const bool simple_cycle =
        edges.size() == verts.size() &&
        std::all_of(verts.begin(), verts.end(), [&](Vertex v) { return local[v].size() == 2; });
    if (!simple_cycle) {
        b.kind = Block::Kind::Other;
        b.edges = edges;
        b.vertices = verts;
        return b;
    }

    b.kind = Block::Kind::Cycle;
    const Vertex start = verts.front();
    auto nbrs = local[start];
    std::sort(nbrs.begin(), nbrs.end());
    Vertex prev = start;
    Vertex cur = nbrs.front().first;
    b.vertices.push_back(start);
    b.edges.push_back(nbrs.front().second);
    while (cur != start) {
        b.vertices.push_back(cur);
        const auto& ln = local[cur];
        const auto& step = ln[0].first == prev ? ln[1] : ln[0];
        b.edges.push_back(step.second);
        prev = cur;
        cur = step.first;
    }
    return b;
}

}  // namespace

BlockDecomposition block_decompose(const Graph& g) {
    if (!g.is_connected()) throw InvalidInput("graph is not connected");
    BlockDecomposition bd;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    bd.blocks_of_vertex.assign(n, {});
    bd.block_of_edge.assign(static_cast<std::size_t>(g.edge_count()), -1);
    if (g.edge_count() == 0) return bd;

    std::vector<int> disc(n, -1), low(n, 0);
    struct Frame {
        Vertex v;
        EdgeId parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::vector<EdgeId> edge_stack;
    std::vector<std::vector<EdgeId>> components;
    int timer = 0;

    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& inc = g.incident(f.v);
        if (f.next < inc.size()) {
            const auto [w, e] = inc[f.next++];
            if (e == f.parent_edge) continue;
            const auto wi = static_cast<std::size_t>(w);
            const auto vi = static_cast<std::size_t>(f.v);
            if (disc[wi] < 0) {
                edge_stack.push_back(e);
                disc[wi] = low[wi] = timer++;
                stack.push_back({w, e, 0});
            } else if (disc[wi] < disc[vi]) {
                edge_stack.push_back(e);
                low[vi] = std::min(low[vi], disc[wi]);
            }
            continue;
        }
        const Frame done = f;
        stack.pop_back();
        if (stack.empty()) break;
        const auto ui = static_cast<std::size_t>(stack.back().v);
        const auto vi = static_cast<std::size_t>(done.v);
        low[ui] = std::min(low[ui], low[vi]);
        if (low[vi] >= disc[ui]) {
            std::vector<EdgeId> comp;
            while (true) {
                const EdgeId e = edge_stack.back();
                edge_stack.pop_back();
                comp.push_back(e);
                if (e == done.parent_edge) break;
            }
            components.push_back(std::move(comp));
        }
    }

    for (auto& comp : components) bd.blocks.push_back(make_block(g, std::move(comp)));
    std::sort(bd.blocks.begin(), bd.blocks.end(), [](const Block& a, const Block& b) {
        return *std::min_element(a.edges.begin(), a.edges.end()) <
               *std::min_element(b.edges.begin(), b.edges.end());
    });

    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        for (EdgeId e : bd.blocks[i].edges) bd.block_of_edge[static_cast<std::size_t>(e)] = static_cast<int>(i);
        for (Vertex v : bd.blocks[i].vertices)
            bd.blocks_of_vertex[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    bd.block_adjacency.assign(bd.blocks.size(), {});
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& bs = bd.blocks_of_vertex[static_cast<std::size_t>(v)];
        if (bs.size() < 2) continue;
        bd.cut_vertices.push_back(v);
        for (int a : bs)
            for (int b : bs)
                if (a != b) bd.block_adjacency[static_cast<std::size_t>(a)].push_back(b);
    }
    for (auto& adj : bd.block_adjacency) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return bd;
}

bool is_cactus(const BlockDecomposition& bd) {
    return std::none_of(bd.blocks.begin(), bd.blocks.end(),
                        [](const Block& b) { return b.kind == Block::Kind::Other; });
}

bool is_cactus(const Graph& g) { return is_cactus(block_decompose(g)); }

BlockDecomposition block_bfs_order(BlockDecomposition bd, int root_block) {
    bd.sigma.clear();
    if (bd.blocks.empty()) return bd;
    if (root_block < 0 || static_cast<std::size_t>(root_block) >= bd.blocks.size())
        throw InvalidInput("root block " + std::to_string(root_block) + " out of range");
    std::vector<char> seen(bd.blocks.size(), 0);
    std::vector<int> layer{root_block};
    seen[static_cast<std::size_t>(root_block)] = 1;
    while (!layer.empty()) {
        bd.sigma.insert(bd.sigma.end(), layer.begin(), layer.end());
        std::vector<int> next;
        for (int b : layer) {
            for (int nb : bd.block_adjacency[static_cast<std::size_t>(b)]) {
                if (!seen[static_cast<std::size_t>(nb)]) {
                    seen[static_cast<std::size_t>(nb)] = 1;
                    next.push_back(nb);
                }
            }
        }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    return bd;
}

std::vector<EdgeId> EdgeClasses::all_e2() const {
    std::vector<EdgeId> out;
    for (const auto& [x, es] : e2) out.insert(out.end(), es.begin(), es.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeId> EdgeClasses::all_e3() const {
    std::vector<EdgeId> out;
    for (const auto& [e, es] : e3) out.insert(out.end(), es.begin(), es.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EdgeClasses classify_edges(const Graph& g, const Block& block) {
    EdgeClasses cls;
    cls.e1 = block.edges;
    std::vector<EdgeId> in_e1_e2 = block.edges;
    for (Vertex x : block.vertices) {
        auto& list = cls.e2[x];
        for (const auto& inc : g.incident(x))
            if (!block.contains(inc.neighbor)) list.push_back(inc.edge);
        std::sort(list.begin(), list.end());
        in_e1_e2.insert(in_e1_e2.end(), list.begin(), list.end());
    }
    std::sort(in_e1_e2.begin(), in_e1_e2.end());
    auto excluded = [&](EdgeId e) { return std::binary_search(in_e1_e2.begin(), in_e1_e2.end(), e); };
    for (const auto& [x, list] : cls.e2) {
        for (EdgeId e : list) {
            auto& out = cls.e3[e];
            for (Vertex end : {g.edge(e).u, g.edge(e).v})
                for (const auto& inc : g.incident(end))
                    if (inc.edge != e && !excluded(inc.edge)) out.push_back(inc.edge);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
    }
    return cls;
}

AugmentedGraph semiregular_augment(const Graph& g, int delta) {
    if (!g.is_connected()) throw InvalidInput("graph is not connected");
    const int dmax = max_degree(g);
    if (delta < dmax)
        throw InvalidInput("delta " + std::to_string(delta) + " is below the maximum degree " + std::to_string(dmax));
    AugmentedGraph out{g, g.edge_count(), g.vertex_count()};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) continue;
        for (int d = g.degree(v); d < delta; ++d) out.graph.add_edge(v, out.graph.add_vertex());
    }
    return out;
}

UccSurrogate build_ucc_surrogate(const Graph& g, const EdgeColoring& col, const BlockDecomposition& bd,
                                 int block_index) {
    if (!is_cactus(bd)) throw InvalidInput("graph is not a cactus");
    const Block& host = bd.blocks.at(static_cast<std::size_t>(block_index));
    const EdgeClasses cls = classify_edges(g, host);

    UccSurrogate s;
    s.host_block = block_index;
    std::unordered_map<Vertex, Vertex> local;
    auto vertex_for = [&](Vertex hv) {
        auto it = local.find(hv);
        if (it != local.end()) return it->second;
        const Vertex lv = s.graph.add_vertex();
        s.vertex_origin.push_back(hv);
        local.emplace(hv, lv);
        return lv;
    };
    auto copy_edge = [&](EdgeId he) {
        const EdgeId le = s.graph.add_edge(vertex_for(g.edge(he).u), vertex_for(g.edge(he).v));
        s.origin_map.push_back(he);
        return le;
    };

    for (Vertex v : host.vertices) vertex_for(v);
    s.block.kind = host.kind;
    for (Vertex v : host.vertices) s.block.vertices.push_back(local.at(v));
    for (EdgeId e : host.edges) {
        const EdgeId le = copy_edge(e);
        s.block.edges.push_back(le);
        s.classes.e1.push_back(le);
    }

    auto short_cycle = [&](EdgeId e) {
        const int b = bd.block_of_edge[static_cast<std::size_t>(e)];
        const Block& blk = bd.blocks[static_cast<std::size_t>(b)];
        return blk.kind == Block::Kind::Cycle && blk.edges.size() <= 4 ? b : -1;
    };

    std::map<EdgeId, EdgeId> e2_local;  // host e2 edge -> surrogate edge
    for (Vertex x : host.vertices) {
        auto& list = s.classes.e2[local.at(x)];
        for (EdgeId e : cls.e2.at(x)) {
            const EdgeId le = copy_edge(e);
            list.push_back(le);
            e2_local[e] = le;
        }
    }

    for (Vertex x : host.vertices) {
        for (EdgeId e : cls.e2.at(x)) {
            const EdgeId le = e2_local.at(e);
            const int cyc = short_cycle(e);
            const Vertex far = g.edge(e).other(x);
            auto& out = s.classes.e3[le];
            for (EdgeId f : cls.e3.at(e)) {
                if (cyc >= 0 && bd.block_of_edge[static_cast<std::size_t>(f)] == cyc) {
                    // opened: a fresh pendant at the far endpoint replaces f
                    const Vertex leaf = s.graph.add_vertex();
                    s.vertex_origin.push_back(-1);
                    const EdgeId pe = s.graph.add_edge(local.at(far), leaf);
                    s.origin_map.push_back(-1);
                    s.slot_map[pe] = SlotInfo{cyc, f};
                    out.push_back(pe);
                } else {
                    out.push_back(copy_edge(f));
                }
            }
        }
    }

    for (Vertex x : host.vertices) {
        std::map<int, std::vector<EdgeId>> by_block;
        for (EdgeId e : cls.e2.at(x)) {
            const int b = bd.block_of_edge[static_cast<std::size_t>(e)];
            if (bd.blocks[static_cast<std::size_t>(b)].kind == Block::Kind::Cycle)
                by_block[b].push_back(e2_local.at(e));
        }
        for (auto& [b, es] : by_block) {
            if (es.size() != 2) continue;
            std::sort(es.begin(), es.end());
            s.cycle_pairs.push_back(CyclePair{local.at(x), es[0], es[1], b});
        }
    }

    s.partial = EdgeColoring(s.graph.edge_count(), col.palette_size());
    for (EdgeId le = 0; le < s.graph.edge_count(); ++le) {
        const EdgeId he = s.origin_map[static_cast<std::size_t>(le)];
        const EdgeId src = he >= 0 ? he : s.slot_map.at(le).original_edge;
        if (auto c = col.get(src)) s.partial.set(le, *c);
    }
    return s;
}

UccSurrogate build_ucc_surrogate(const Graph& g, const EdgeColoring& col, const Block& block) {
    const BlockDecomposition bd = block_decompose(g);
    if (block.edges.empty()) throw InvalidInput("empty block");
    const int idx = bd.block_of_edge.at(static_cast<std::size_t>(block.edges.front()));
    auto mine = bd.blocks[static_cast<std::size_t>(idx)].edges;
    auto theirs = block.edges;
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    if (mine != theirs) throw InvalidInput("block is not a block of the graph");
    return build_ucc_surrogate(g, col, bd, idx);
}

bool is_ucc_shape(const UccSurrogate& s) {
    const Graph& g = s.graph;
    if (!g.is_connected()) return false;
    const BlockDecomposition bd = block_decompose(g);
    if (!is_cactus(bd)) return false;
    int cycles = 0;
    for (const auto& b : bd.blocks) cycles += b.kind == Block::Kind::Cycle;
    if (cycles != (s.block.kind == Block::Kind::Cycle ? 1 : 0)) return false;

    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<Vertex> q;
    for (Vertex v : s.block.vertices) {
        dist[static_cast<std::size_t>(v)] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (const auto& inc : g.incident(v)) {
            auto& d = dist[static_cast<std::size_t>(inc.neighbor)];
            if (d < 0) {
                d = dist[static_cast<std::size_t>(v)] + 1;
                q.push(inc.neighbor);
            }
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = dist[static_cast<std::size_t>(v)];
        if (d > 2) return false;
        if (d == 2 && g.degree(v) != 1) return false;
    }
    return true;
}

}  // namespace starcolor
