// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "starcolor/cactus.hpp"
#include "starcolor/cactus_colorer.hpp"
#include "starcolor/constructions.hpp"
#include "starcolor/exact.hpp"
#include "starcolor/ucc_colorer.hpp"
#include "starcolor/verifier.hpp"
#include "support.hpp"

using namespace starcolor;
namespace t = starcolor::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= limit_s) {
        o.pass = false;
        o.detail += " (over time limit)";
    }
    if (!o.pass) ++failures;
    std::printf("%s %d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
}

Outcome random_cacti() {
    int ok = 0;
    std::set<int> deltas;
    int max_m = 0;
    for (int i = 0; i < 200; ++i) {
        RandomCactusParams p;
        p.seed = 1000 + static_cast<std::uint64_t>(i);
        p.n_blocks = 400;
        p.delta_cap = 3 + i % 6;
        p.max_edges = 600;
        const Graph g = gen_random_cactus(p);
        const int d = max_degree(g);
        deltas.insert(d);
        max_m = std::max(max_m, g.edge_count());
        const auto r = color_cactus(g, d);
        const auto rep = verify_star_coloring(g, r.coloring);
        if (rep.valid && rep.colors_used <= star_palette_bound(d)) ++ok;
    }
    std::ostringstream s;
    s << ok << "/200 valid within bound, delta " << *deltas.begin() << ".." << *deltas.rbegin() << ", max "
      << max_m << " edges";
    const bool covered = deltas == std::set<int>{3, 4, 5, 6, 7, 8};
    if (!covered) s << ", delta range not covered";
    return {ok == 200 && covered && max_m <= 600, s.str()};
}

Outcome ucc_bound() {
    int ok = 0, total = 0;
    for (int delta = 3; delta <= 8; ++delta)
        for (int n : {1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}) {
            ++total;
            const Graph g = t::semiregular_ucc(delta, n);
            const auto bd = block_decompose(g);
            const auto s = build_ucc_surrogate(g, EdgeColoring(g.edge_count(), 1), bd, bd.block_of_edge[0]);
            const EdgeColoring col = color_ucc(s, delta);
            const auto rep = verify_star_coloring(s.graph, col);
            if (rep.valid && col.is_total() && rep.colors_used <= star_palette_bound(delta)) ++ok;
        }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " instances"};
}

Outcome cycle_optima() {
    // exhaustive table for C3..C12
    const std::vector<int> table{3, 3, 4, 3, 3, 3, 3, 3, 3, 3};
    bool pass = true;
    std::ostringstream s;
    for (int n = 3; n <= 12; ++n) {
        const auto r = star_chromatic_index(gen_cycle(n));
        const int want = table[static_cast<std::size_t>(n - 3)];
        const int got = r.index.value_or(-1);
        s << got;
        if (got != want) pass = false;
        if (n <= 10 && naive_star_index(gen_cycle(n)) != got) {
            pass = false;
            s << "(naive disagrees)";
        }
        s << (n < 12 ? "," : "");
    }
    return {pass, "index C3..C12 = " + s.str()};
}

Outcome tightness() {
    ExactOptions o;
    o.budget.max_seconds = 600;
    const Graph g = gen_tight_odd(3);
    const auto k4 = has_star_k_coloring(g, 4, o);
    const auto k5 = has_star_k_coloring(g, 5, o);
    const auto idx = star_chromatic_index(g, o);
    std::ostringstream s;
    s << g.edge_count() << " edges, k=4 " << to_string(k4.verdict) << " (" << k4.nodes << " nodes), k=5 "
      << to_string(k5.verdict) << ", index " << idx.index.value_or(-1);
    return {g.edge_count() == 16 && k4.verdict == Verdict::No && k5.verdict == Verdict::Yes && idx.index == 5,
            s.str()};
}

Outcome audit() {
    Budget b;
    b.max_seconds = 60;
    const AuditReport r = audit_lemma_facts(3, b);
    std::ostringstream s;
    s << r.colorings << " colorings, " << r.counterexample_count << " counterexamples"
      << (r.complete ? "" : ", incomplete");
    return {r.complete && r.counterexample_count == 0 && r.colorings > 0, s.str()};
}

Outcome figure5() {
    const Graph g = gen_figure5();
    std::ostringstream s;
    const bool shape = g.vertex_count() == 88 && g.edge_count() == 89 && max_degree(g) == 6 && is_cactus(g);
    s << g.vertex_count() << "/" << g.edge_count() << "/delta " << max_degree(g);
    const auto r = color_cactus(g, 6);
    s << ", heuristic " << r.report.colors_used << " colors" << (r.report.valid ? "" : " INVALID");
    ExactOptions o;
    o.budget.max_seconds = 300;
    const auto k9 = has_star_k_coloring(g, 9, o);
    s << ", k=9 " << to_string(k9.verdict) << " after " << k9.nodes << " nodes";
    if (k9.witness) s << (verify_star_coloring(g, *k9.witness).valid ? " (witness verifies)" : " (witness invalid)");
    return {shape && r.report.valid && r.report.colors_used <= 10 && k9.verdict != Verdict::Yes, s.str()};
}

std::vector<Graph> small_corpus() {
    std::vector<Graph> out;
    for (int m = 1; m <= 8; ++m) out.push_back(t::path_graph(m));
    for (int n = 3; n <= 8; ++n) out.push_back(t::cycle_graph(n));
    for (int l = 1; l <= 8; ++l) out.push_back(t::star_graph(l));
    // spiders: every partition of up to 8 edges into >= 3 legs
    std::function<void(std::vector<int>&, int, int)> legs = [&](std::vector<int>& cur, int left, int max_leg) {
        if (cur.size() >= 3) out.push_back(t::spider_graph(cur));
        for (int len = std::min(left, max_leg); len >= 1; --len) {
            cur.push_back(len);
            legs(cur, left - len, len);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    legs(cur, 8, 8);
    for (int a = 3; a <= 7; ++a)
        for (int b : {1, 3, 4, 5})
            if (a + b <= 8 && (b == 1 || b <= a)) out.push_back(t::two_block_cactus(a, b));
    return out;
}

Outcome oracle_equivalence() {
    const auto corpus = small_corpus();
    int checks = 0, bad = 0;
    for (const Graph& g : corpus)
        for (int k = 1; k <= 5; ++k) {
            const bool naive = naive_star_k_coloring(g, k).has_value();
            const auto r = has_star_k_coloring(g, k);
            ++checks;
            if (r.verdict == Verdict::Unknown || (r.verdict == Verdict::Yes) != naive) ++bad;
        }
    return {bad == 0, std::to_string(corpus.size()) + " graphs, " + std::to_string(checks) + " verdicts, " +
                          std::to_string(bad) + " disagreements"};
}

Outcome verifier_properties() {
    std::mt19937_64 rng(20261016);
    int bad = 0, valid_seen = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const int m = std::min(10, n - 1 + static_cast<int>(rng() % 5));
        const Graph g = t::random_connected_graph(rng, n, m);
        const int k = 2 + static_cast<int>(rng() % 4);
        const EdgeColoring col = t::random_coloring(rng, g, k, 0.15);
        const bool v = verify_star_coloring(g, col).valid;
        valid_seen += v;
        if (v != t::naive_is_star(g, t::raw_colors(col))) ++bad;

        std::vector<Color> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        EdgeColoring p(g.edge_count(), k);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (col.is_colored(e)) p.set(e, perm[static_cast<std::size_t>(col.at(e) - 1)]);
        if (verify_star_coloring(g, p).valid != v) ++bad;

        if (v && g.edge_count() > 0) {
            EdgeColoring u = col;
            u.clear(static_cast<EdgeId>(rng() % static_cast<std::uint64_t>(g.edge_count())));
            if (!verify_star_coloring(g, u).valid) ++bad;
        }
    }
    return {bad == 0, "1000 pairs, " + std::to_string(valid_seen) + " valid, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
    criterion(1, "random cacti within floor(3D/2)+1", 60, random_cacti);
    criterion(2, "UCC bound over delta 3..8", 5, ucc_bound);
    criterion(3, "cycle optima", 10, cycle_optima);
    criterion(4, "tightness at delta 3", 600, tightness);
    criterion(5, "height-2 tree audit at delta 3", 60, audit);
    criterion(6, "figure-5 cactus, k=9 never Yes", 400, figure5);
    criterion(7, "solver vs naive oracle", 300, oracle_equivalence);
    criterion(8, "verifier properties", 30, verifier_properties);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
