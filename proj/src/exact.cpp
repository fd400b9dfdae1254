#include "starcolor/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <deque>
#include <mutex>
#include <thread>

#include "starcolor/cactus.hpp"
#include "starcolor/verifier.hpp"

namespace starcolor {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

/// Edge order and constraint lists shared by all workers.
struct Prep {
    const Graph* g;
    std::vector<EdgeId> order;
    std::vector<Segment> segments;
    std::vector<std::vector<int>> segs_of_edge;
    std::vector<std::vector<EdgeId>> adjacent;

    explicit Prep(const Graph& graph) : g(&graph), segments(enumerate_4edge_segments(graph)) {
        const int m = graph.edge_count();
        segs_of_edge.resize(static_cast<std::size_t>(m));
        for (std::size_t s = 0; s < segments.size(); ++s)
            for (EdgeId e : segments[s].edges) segs_of_edge[static_cast<std::size_t>(e)].push_back(static_cast<int>(s));
        adjacent.resize(static_cast<std::size_t>(m));
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            for (const auto& a : graph.incident(v))
                for (const auto& b : graph.incident(v))
                    if (a.edge != b.edge) adjacent[static_cast<std::size_t>(a.edge)].push_back(b.edge);

        // BFS from the lowest-index vertex of maximum degree; edges at each
        // dequeued vertex in ascending index
        if (m == 0) return;
        Vertex start = 0;
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            if (graph.degree(v) > graph.degree(start)) start = v;
        std::vector<char> seen_v(static_cast<std::size_t>(graph.vertex_count()), 0);
        std::vector<char> seen_e(static_cast<std::size_t>(m), 0);
        auto bfs = [&](Vertex root) {
            std::deque<Vertex> q{root};
            seen_v[static_cast<std::size_t>(root)] = 1;
            while (!q.empty()) {
                const Vertex v = q.front();
                q.pop_front();
                std::vector<Incidence> inc = graph.incident(v);
                std::sort(inc.begin(), inc.end(), [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
                for (const auto& i : inc) {
                    if (!seen_e[static_cast<std::size_t>(i.edge)]) {
                        seen_e[static_cast<std::size_t>(i.edge)] = 1;
                        order.push_back(i.edge);
                    }
                    if (!seen_v[static_cast<std::size_t>(i.neighbor)]) {
                        seen_v[static_cast<std::size_t>(i.neighbor)] = 1;
                        q.push_back(i.neighbor);
                    }
                }
            }
        };
        bfs(start);
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            if (!seen_v[static_cast<std::size_t>(v)] && graph.degree(v) > 0) bfs(v);
    }
};

struct Shared {
    Budget budget;
    Clock::time_point start = Clock::now();
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    std::atomic<int> best_yes{INT_MAX};
};

class Search {
public:
    Search(const Prep& p, int k, bool sym, Shared& shared)
        : p_(p),
          k_(k),
          sym_(sym),
          shared_(shared),
          m_(static_cast<int>(p.order.size())),
          color_(static_cast<std::size_t>(p.g->edge_count()), 0),
          forb_(static_cast<std::size_t>(p.g->edge_count()) * static_cast<std::size_t>(k), 0),
          avail_(static_cast<std::size_t>(p.g->edge_count()), k) {
        seg_open_.reserve(p.segments.size());
        for (std::size_t s = 0; s < p.segments.size(); ++s) seg_open_.push_back(4);
    }

    /// Replays a prefix produced by collect_prefixes; false if it dies.
    bool apply(const std::vector<Color>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const EdgeId e = p_.order[i];
            if (forbidden(e, prefix[i])) return false;
            maxc_ = std::max(maxc_, prefix[i]);
            if (!assign(e, prefix[i])) return false;
        }
        depth0_ = static_cast<int>(prefix.size());
        return true;
    }

    /// Stops at the first total coloring unless `visit` is set.
    /// Returns true when the subtree was fully explored (or a coloring found in
    /// decision mode).
    bool run(int task, const std::function<bool(const std::vector<int>&)>* visit) {
        task_ = task;
        visit_ = visit;
        dfs(depth0_);
        flush();
        return !aborted_;
    }

    bool found() const { return found_; }
    const std::vector<int>& witness() const { return witness_; }

    void collect(int depth, std::vector<std::vector<Color>>& out, std::vector<Color>& cur) {
        if (static_cast<int>(cur.size()) == depth || static_cast<int>(cur.size()) == m_) {
            out.push_back(cur);
            return;
        }
        const EdgeId e = p_.order[cur.size()];
        const int limit = sym_ ? std::min(k_, maxc_ + 1) : k_;
        for (Color c = 1; c <= limit; ++c) {
            if (forbidden(e, c)) continue;
            const int saved = maxc_;
            maxc_ = std::max(maxc_, c);
            const std::size_t mark = trail_.size();
            cur.push_back(c);
            if (assign(e, c)) collect(depth, out, cur);
            cur.pop_back();
            undo(e, mark);
            maxc_ = saved;
        }
    }

private:
    bool forbidden(EdgeId e, Color c) const {
        return forb_[static_cast<std::size_t>(e) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c - 1)] > 0;
    }

    void forbid(EdgeId f, Color c) {
        int& slot = forb_[static_cast<std::size_t>(f) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c - 1)];
        if (slot++ == 0 && --avail_[static_cast<std::size_t>(f)] == 0) wiped_ = true;
        trail_.emplace_back(f, c);
    }

    bool assign(EdgeId e, Color c) {
        wiped_ = false;
        color_[static_cast<std::size_t>(e)] = c;
        for (EdgeId f : p_.adjacent[static_cast<std::size_t>(e)])
            if (!color_[static_cast<std::size_t>(f)]) forbid(f, c);
        for (int s : p_.segs_of_edge[static_cast<std::size_t>(e)]) {
            if (--seg_open_[static_cast<std::size_t>(s)] != 1) continue;
            const auto& edges = p_.segments[static_cast<std::size_t>(s)].edges;
            int open = 0;
            while (color_[static_cast<std::size_t>(edges[static_cast<std::size_t>(open)])]) ++open;
            auto col = [&](int i) { return color_[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)])]; };
            const int partner = open ^ 2;
            const int a = open ^ 1;
            const int b = a ^ 2;
            if (col(a) == col(b)) {
                const EdgeId f = edges[static_cast<std::size_t>(open)];
                forbid(f, col(partner));
            }
        }
        return !wiped_;
    }

    void undo(EdgeId e, std::size_t mark) {
        while (trail_.size() > mark) {
            const auto [f, c] = trail_.back();
            trail_.pop_back();
            int& slot = forb_[static_cast<std::size_t>(f) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c - 1)];
            if (--slot == 0) ++avail_[static_cast<std::size_t>(f)];
        }
        for (int s : p_.segs_of_edge[static_cast<std::size_t>(e)]) ++seg_open_[static_cast<std::size_t>(s)];
        color_[static_cast<std::size_t>(e)] = 0;
    }

    void flush() {
        shared_.nodes += local_nodes_;
        local_nodes_ = 0;
    }

    bool should_stop() {
        if (aborted_) return true;
        if (shared_.best_yes.load(std::memory_order_relaxed) < task_) return aborted_ = true;
        if (shared_.exhausted.load(std::memory_order_relaxed)) return aborted_ = true;
        if ((++local_nodes_ & 1023) != 0) return false;
        flush();
        const auto& b = shared_.budget;
        bool out = b.max_nodes && shared_.nodes.load() >= *b.max_nodes;
        if (b.max_seconds && std::chrono::duration<double>(Clock::now() - shared_.start).count() >= *b.max_seconds)
            out = true;
        if (out) {
            shared_.exhausted = true;
            aborted_ = true;
        }
        return out;
    }

    void dfs(int depth) {
        if (should_stop()) return;
        if (depth == m_) {
            if (visit_) {
                if (!(*visit_)(color_)) {
                    aborted_ = true;
                    stopped_by_visitor_ = true;
                }
                return;
            }
            found_ = true;
            witness_ = color_;
            return;
        }
        const EdgeId e = p_.order[static_cast<std::size_t>(depth)];
        const int limit = sym_ ? std::min(k_, maxc_ + 1) : k_;
        for (Color c = 1; c <= limit; ++c) {
            if (forbidden(e, c)) continue;
            const int saved = maxc_;
            maxc_ = std::max(maxc_, c);
            const std::size_t mark = trail_.size();
            if (assign(e, c)) dfs(depth + 1);
            undo(e, mark);
            maxc_ = saved;
            if (found_ || aborted_) return;
        }
    }

    const Prep& p_;
    int k_;
    bool sym_;
    Shared& shared_;
    int m_;
    std::vector<int> color_;
    std::vector<int> forb_;
    std::vector<int> avail_;
    std::vector<int> seg_open_;
    std::vector<std::pair<EdgeId, Color>> trail_;
    int maxc_ = 0;
    int depth0_ = 0;
    bool wiped_ = false;
    bool found_ = false;
    bool aborted_ = false;
    bool stopped_by_visitor_ = false;
    int task_ = 0;
    std::uint64_t local_nodes_ = 0;
    std::vector<int> witness_;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;

public:
    bool stopped_by_visitor() const { return stopped_by_visitor_; }
};

int resolve_threads(int t) {
    if (t > 0) return t;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

ExactResult has_star_k_coloring(const Graph& g, int k, const ExactOptions& opts) {
    if (k < 1) throw InvalidInput("k must be at least 1, got " + std::to_string(k));
    ExactResult res;
    const auto t0 = Clock::now();
    if (g.edge_count() == 0) {
        res.verdict = Verdict::Yes;
        res.witness = EdgeColoring(0, k);
        return res;
    }
    if (max_degree(g) > k) {
        res.verdict = Verdict::No;
        return res;
    }

    const Prep prep(g);
    Shared shared;
    shared.budget = opts.budget;

    const int threads = resolve_threads(opts.threads);
    std::vector<std::vector<Color>> prefixes;
    if (threads == 1) {
        prefixes.emplace_back();
    } else {
        for (int depth = 1;; ++depth) {
            prefixes.clear();
            Search s(prep, k, opts.symmetry_breaking, shared);
            std::vector<Color> cur;
            s.collect(depth, prefixes, cur);
            if (prefixes.size() >= static_cast<std::size_t>(4 * threads) || depth >= g.edge_count()) break;
        }
    }

    std::vector<std::vector<int>> witnesses(prefixes.size());
    std::vector<char> complete(prefixes.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < prefixes.size();) {
            if (shared.best_yes.load() < static_cast<int>(i)) continue;
            Search s(prep, k, opts.symmetry_breaking, shared);
            if (!s.apply(prefixes[i])) {
                complete[i] = 1;
                continue;
            }
            complete[i] = s.run(static_cast<int>(i), nullptr) ? 1 : 0;
            if (s.found()) {
                witnesses[i] = s.witness();
                int cur = shared.best_yes.load();
                while (static_cast<int>(i) < cur && !shared.best_yes.compare_exchange_weak(cur, static_cast<int>(i))) {
                }
            }
        }
    };
    if (threads == 1 || prefixes.size() == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    res.nodes = shared.nodes.load();
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const int best = shared.best_yes.load();
    if (best != INT_MAX) {
        res.verdict = Verdict::Yes;
        EdgeColoring w(g.edge_count(), k);
        for (EdgeId e = 0; e < g.edge_count(); ++e) w.set(e, witnesses[static_cast<std::size_t>(best)][static_cast<std::size_t>(e)]);
        if (!verify_star_coloring(g, w).valid) throw std::logic_error("exact solver produced an invalid witness");
        res.witness = std::move(w);
    } else if (std::all_of(complete.begin(), complete.end(), [](char c) { return c != 0; })) {
        res.verdict = Verdict::No;
    } else {
        res.verdict = Verdict::Unknown;
    }
    return res;
}

IndexResult star_chromatic_index(const Graph& g, const ExactOptions& opts) {
    IndexResult out;
    if (g.edge_count() == 0) {
        out.index = 0;
        out.witness = EdgeColoring(0, 1);
        return out;
    }
    const int delta = max_degree(g);
    const bool cactus = g.is_connected() && is_cactus(g);
    const int cap = cactus ? star_palette_bound(delta) : g.edge_count();
    for (int k = delta; k <= cap; ++k) {
        ExactResult r = has_star_k_coloring(g, k, opts);
        out.nodes += r.nodes;
        if (r.verdict == Verdict::Unknown) return out;
        if (r.verdict == Verdict::Yes) {
            out.index = k;
            out.witness = std::move(r.witness);
            return out;
        }
    }
    throw std::logic_error("no star coloring within " + std::to_string(cap) + " colors");
}

EnumerationResult enumerate_star_colorings(const Graph& g, int k,
                                           const std::function<bool(const EdgeColoring&)>& visit,
                                           const Budget& budget) {
    if (k < 1) throw InvalidInput("k must be at least 1, got " + std::to_string(k));
    EnumerationResult res;
    if (g.edge_count() == 0) {
        res.count = 1;
        res.complete = visit(EdgeColoring(0, k));
        return res;
    }
    const Prep prep(g);
    Shared shared;
    shared.budget = budget;
    EdgeColoring col(g.edge_count(), k);
    const std::function<bool(const std::vector<int>&)> adapter = [&](const std::vector<int>& raw) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) col.set(e, raw[static_cast<std::size_t>(e)]);
        ++res.count;
        return visit(col);
    };
    Search s(prep, k, false, shared);
    res.complete = s.run(0, &adapter);
    return res;
}

std::optional<EdgeColoring> naive_star_k_coloring(const Graph& g, int k) {
    const int m = g.edge_count();
    if (m > 10) throw InvalidInput("naive oracle takes at most 10 edges, got " + std::to_string(m));
    if (k < 1 || k > 5) throw InvalidInput("naive oracle takes 1 <= k <= 5, got " + std::to_string(k));
    const StarChecker checker(g);
    EdgeColoring col(m, k);
    std::vector<int> digits(static_cast<std::size_t>(m), 1);
    for (;;) {
        for (EdgeId e = 0; e < m; ++e) col.set(e, digits[static_cast<std::size_t>(e)]);
        if (checker.is_star(col)) return col;
        int i = 0;
        while (i < m && digits[static_cast<std::size_t>(i)] == k) digits[static_cast<std::size_t>(i++)] = 1;
        if (i == m) return std::nullopt;
        ++digits[static_cast<std::size_t>(i)];
    }
}

int naive_star_index(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    for (int k = 1; k <= 5; ++k)
        if (naive_star_k_coloring(g, k)) return k;
    throw InvalidInput("graph needs more than 5 colors");
}

}  // namespace starcolor
