#include "starcolor/cactus_colorer.hpp"

#include <algorithm>
#include <map>

#include "starcolor/ucc_colorer.hpp"

namespace starcolor {

namespace {

Color lowest_in(const std::set<Color>& a, const std::set<Color>& b, Color skip = 0) {
    for (Color c : a)
        if (b.count(c) && c != skip) return c;
    return 0;
}

}  // namespace

AttachedCyclePlan color_attached_cycle(const AttachedCycleTask& task) {
    const int n = static_cast<int>(task.cycle.size());
    if (n < 3) throw InvalidInput("attached cycle shorter than 3");
    const Color a = task.c1;
    const Color b = task.c2;
    std::set<Color> missing;  // C'(x)
    for (Color c = 1; c <= task.palette; ++c)
        if (!task.at_x.count(c)) missing.insert(c);

    AttachedCyclePlan plan;
    auto& out = plan.colors;
    out = {a, b};

    if (n % 3 == 0) {
        const std::set<Color> both = [&] {
            std::set<Color> s;
            for (Color c : task.first_e3)
                if (task.second_e3.count(c)) s.insert(c);
            return s;
        }();
        const Color shared = lowest_in(missing, both);
        if (!shared) throw std::logic_error("no pendant pair shares a missing color at vertex " + std::to_string(task.x));
        plan.pendant_e = plan.pendant_e_prime = plan.extra = shared;
        for (int i = 2; i < n; ++i) out.push_back(std::array{a, b, shared}[static_cast<std::size_t>(i % 3)]);
        return plan;
    }

    if (n % 3 == 1) {
        const Color ep = lowest_in(missing, task.second_e3);
        if (!ep) throw std::logic_error("no pendant of e2 carries a missing color at vertex " + std::to_string(task.x));
        plan.pendant_e_prime = ep;
        const Color e = n == 4 && task.delta != 4 ? lowest_in(task.at_x, task.first_e3) : 0;
        if (e) {
            plan.pendant_e = e;
            out.insert(out.end(), {ep, e});
            return plan;
        }
        for (int i = 2; i < n; ++i) out.push_back(std::array{b, a, ep}[static_cast<std::size_t>((i - 1) % 3)]);
        return plan;
    }

    const Color e = lowest_in(missing, task.first_e3);
    if (!e) throw std::logic_error("no pendant of e1 carries a missing color at vertex " + std::to_string(task.x));
    plan.pendant_e = e;
    // a pendant of e2 repeating c(e1) exists only when the parity rule had room for it
    plan.pendant_e_prime = task.second_e3.count(a) ? a : 0;
    if (n == 5) {
        Color other = 0;
        for (Color c : missing)
            if (c != e && c != a) {
                other = c;
                break;
            }
        if (!other) throw std::logic_error("no second missing color at vertex " + std::to_string(task.x));
        plan.extra = other;
        out.insert(out.end(), {a, other, e});
        return plan;
    }
    for (int t = 0; t < (n - 5) / 3; ++t) out.insert(out.end(), {a, e, b});
    out.insert(out.end(), {a, b, e});
    return plan;
}

namespace {

class CactusRun {
public:
    CactusRun(const Graph& host, int delta, const CactusOptions& opts)
        : host_(host),
          delta_(delta),
          opts_(opts),
          palette_(star_palette_bound(delta)),
          col_(host.edge_count(), palette_) {}

    void run() {
        bd_ = block_decompose(host_);
        if (!is_cactus(bd_)) throw InvalidInput("graph is not a cactus");
        if (bd_.blocks.empty()) return;
        const int root = bd_.root_block_for(0);
        bd_ = block_bfs_order(std::move(bd_), root);
        for (std::size_t r = 0; r < bd_.sigma.size(); ++r) {
            round(bd_.sigma[r], r == 0);
            if (opts_.check_rounds) check_round(r);
        }
        if (!col_.is_total()) throw std::logic_error("cactus coloring left edges uncolored");
        if (auto v = StarChecker(host_).first_violation(col_))
            throw std::logic_error("cactus coloring failed verification at edges " + describe(*v));
    }

    const EdgeColoring& coloring() const { return col_; }
    int rounds() const { return static_cast<int>(bd_.sigma.size()); }

private:
    static std::string describe(const Violation& v) {
        std::string s;
        for (EdgeId e : v.edges) s += (s.empty() ? "" : ",") + std::to_string(e);
        return s;
    }

    void assign(EdgeId e, Color c) {
        if (auto old = col_.get(e)) {
            if (*old != c)
                throw std::logic_error("edge " + std::to_string(e) + " recolored from " + std::to_string(*old) + " to " +
                                       std::to_string(c));
            return;
        }
        col_.set(e, c);
    }

    void round(int block, bool first) {
        s_ = build_ucc_surrogate(host_, col_, bd_, block);
        sc_ = first ? color_ucc(s_, delta_) : extend_ucc_partial(s_, s_.partial, delta_);

        for (EdgeId le : s_.classes.e1) assign(origin(le), sc_.at(le));
        for (EdgeId le : s_.classes.all_e2()) assign(origin(le), sc_.at(le));

        for (const auto& pair : s_.cycle_pairs) {
            const Block& d = bd_.blocks[static_cast<std::size_t>(pair.cycle_block)];
            const bool done = std::all_of(d.edges.begin(), d.edges.end(), [&](EdgeId e) { return col_.is_colored(e); });
            if (!done) attached_cycle(pair, d);
        }

        for (const auto& [le2, list] : s_.classes.e3)
            for (EdgeId le : list)
                if (origin(le) >= 0 && !col_.is_colored(origin(le))) assign(origin(le), sc_.at(le));
    }

    EdgeId origin(EdgeId le) const { return s_.origin_map[static_cast<std::size_t>(le)]; }

    std::set<Color> surrogate_e3_colors(EdgeId le2) const {
        std::set<Color> out;
        for (EdgeId f : s_.classes.e3.at(le2)) out.insert(sc_.at(f));
        return out;
    }

    std::vector<EdgeId> walk_cycle(const Block& d, Vertex x, EdgeId e1, EdgeId e2) const {
        const auto n = d.edges.size();
        const auto px = static_cast<std::size_t>(std::find(d.vertices.begin(), d.vertices.end(), x) - d.vertices.begin());
        std::vector<EdgeId> out{e1};
        if (d.edges[px] == e2) {
            for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(d.edges[(px + i) % n]);
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(d.edges[(px + n - 1 - i) % n]);
        }
        if (out[1] != e2) throw std::logic_error("attached cycle traversal lost its second edge");
        return out;
    }

    void attached_cycle(const CyclePair& pair, const Block& d) {
        const Vertex x = s_.vertex_origin[static_cast<std::size_t>(pair.at)];
        const EdgeId e1 = origin(pair.first);
        const EdgeId e2 = origin(pair.second);

        AttachedCycleTask task;
        task.x = x;
        task.cycle = walk_cycle(d, x, e1, e2);
        task.c1 = col_.at(e1);
        task.c2 = col_.at(e2);
        task.first_e3 = surrogate_e3_colors(pair.first);
        task.second_e3 = surrogate_e3_colors(pair.second);
        task.at_x = incident_colors(host_, col_, x);
        task.palette = palette_;
        task.delta = delta_;
        const AttachedCyclePlan plan = color_attached_cycle(task);

        const auto& cyc = task.cycle;
        const auto n = cyc.size();
        const auto& pc = plan.colors;
        for (std::size_t i = 2; i < n; ++i) assign(cyc[i], pc[i]);

        // Colors that would close a bicolored path through the far endpoint.
        std::vector<Color> bad_at_x2, bad_at_x1;
        if (n >= 4) {
            if (pc[2] == pc[4 % n]) bad_at_x2.push_back(pc[3]);
            if (pc[1] == pc[n - 1]) bad_at_x2.push_back(pc[0]);
            if (pc[n - 1] == pc[n - 3]) bad_at_x1.push_back(pc[n - 2]);
            if (pc[0] == pc[2]) bad_at_x1.push_back(pc[1]);
        }
        const Vertex x1 = host_.edge(e1).other(x);
        const Vertex x2 = host_.edge(e2).other(x);
        settle_far_end(pair.second, x2, cyc[2], pc[2], bad_at_x2);
        settle_far_end(pair.first, x1, cyc[n - 1], pc[n - 1], bad_at_x1);

        if (opts_.check_locality) check_locality(x, d);
    }

    /// The surrogate fixed a color set for E3(e) at `far`; the cycle edge takes
    /// its pattern color and the other host edges share out the rest.
    void settle_far_end(EdgeId le2, Vertex far, EdgeId cycle_edge, Color want, const std::vector<Color>& bad) {
        Color slot = 0;
        std::map<EdgeId, Color> others;
        for (EdgeId f : s_.classes.e3.at(le2)) {
            const EdgeId he = origin(f);
            const EdgeId stands_for = he >= 0 ? he : s_.slot_map.at(f).original_edge;
            if (stands_for == cycle_edge) {
                slot = sc_.at(f);
            } else if (he >= 0) {
                others[he] = sc_.at(f);
            }
        }
        if (!slot) throw std::logic_error("no surrogate slot for cycle edge " + std::to_string(cycle_edge));

        Color unused = 0;
        if (want != slot) {
            unused = slot;
            for (auto& [e, c] : others)
                if (c == want) {
                    c = slot;
                    unused = 0;
                }
        }
        if (unused) {
            for (auto& [e, c] : others)
                if (std::find(bad.begin(), bad.end(), c) != bad.end()) {
                    std::swap(c, unused);
                    break;
                }
        }
        for (const auto& [e, c] : others) {
            if (host_.edge(e).u != far && host_.edge(e).v != far)
                throw std::logic_error("E3 edge " + std::to_string(e) + " not at the cycle vertex");
            assign(e, c);
        }
    }

    void check_locality(Vertex x, const Block& d) const {
        std::vector<EdgeId> edges = bd_.blocks[static_cast<std::size_t>(s_.host_block)].edges;
        edges.insert(edges.end(), d.edges.begin(), d.edges.end());
        for (const auto& inc : host_.incident(x)) {
            edges.push_back(inc.edge);
            for (const auto& inc2 : host_.incident(inc.neighbor)) edges.push_back(inc2.edge);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        if (!is_star_on_edges(host_, col_, edges))
            throw std::logic_error("attached cycle at vertex " + std::to_string(x) + " broke the star condition");
    }

    void check_round(std::size_t r) const {
        for (std::size_t i = 0; i <= r; ++i)
            for (EdgeId e : bd_.blocks[static_cast<std::size_t>(bd_.sigma[i])].edges)
                if (!col_.is_colored(e)) throw std::logic_error("block edge uncolored after its round");
        if (auto v = StarChecker(host_).first_violation(col_))
            throw std::logic_error("round " + std::to_string(r) + " broke the star condition at edges " + describe(*v));
    }

    const Graph& host_;
    int delta_;
    CactusOptions opts_;
    int palette_;
    EdgeColoring col_;
    BlockDecomposition bd_;
    UccSurrogate s_;
    EdgeColoring sc_;
};

}  // namespace

CactusColoring color_cactus(const Graph& g, int delta, const CactusOptions& opts) {
    if (!g.is_connected()) throw InvalidInput("graph is not connected");
    const int dmax = max_degree(g);
    if (delta < dmax)
        throw InvalidInput("delta " + std::to_string(delta) + " is below the maximum degree " + std::to_string(dmax));
    const BlockDecomposition bd = block_decompose(g);
    if (!is_cactus(bd)) throw InvalidInput("graph is not a cactus");

    CactusColoring out;
    if (delta <= 2) {
        // paths and cycles: the block patterns stay within floor(3*delta/2)+1 colors
        out.delta = 3;
        out.coloring = EdgeColoring(g.edge_count(), star_palette_bound(3));
        out.rounds = g.edge_count() ? 1 : 0;
        if (g.edge_count() == g.vertex_count()) {
            const Block& c = bd.blocks.front();
            const auto pattern = color_cycle_star(static_cast<int>(c.edges.size()));
            for (std::size_t i = 0; i < pattern.size(); ++i) out.coloring.set(c.edges[i], pattern[i]);
        } else if (g.edge_count() > 0) {
            Vertex v = 0;
            while (g.degree(v) != 1) ++v;
            EdgeId prev = -1;
            for (int i = 0; i < g.edge_count(); ++i) {
                const auto& inc = g.incident(v);
                const Incidence& next = inc.front().edge != prev ? inc.front() : inc.back();
                out.coloring.set(next.edge, i % 3 + 1);
                prev = next.edge;
                v = next.neighbor;
            }
        }
        out.report = verify_star_coloring(g, out.coloring);
        if (!out.report.valid) throw std::logic_error("path or cycle pattern is not a star coloring");
        return out;
    }
    out.delta = std::max(delta, 3);
    const int palette = star_palette_bound(out.delta);
    const AugmentedGraph aug = semiregular_augment(g, out.delta);

    CactusRun run(aug.graph, out.delta, opts);
    run.run();
    out.rounds = run.rounds();
    out.coloring = EdgeColoring(g.edge_count(), palette);
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.coloring.set(e, run.coloring().at(e));
    out.report = verify_star_coloring(g, out.coloring);
    if (!out.report.valid) throw std::logic_error("cactus coloring restricted to the input is not a star coloring");
    return out;
}

}  // namespace starcolor
