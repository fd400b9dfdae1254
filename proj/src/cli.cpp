#include "starcolor/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "starcolor/cactus_colorer.hpp"
#include "starcolor/constructions.hpp"
#include "starcolor/exact.hpp"
#include "starcolor/io.hpp"
#include "starcolor/ucc_colorer.hpp"

namespace starcolor {

EdgeColoring color_ucc_graph(const Graph& g, int delta) {
    if (delta < max_degree(g))
        throw InvalidInput("delta " + std::to_string(delta) + " is below the maximum degree " + std::to_string(max_degree(g)));
    const int d = std::max(delta, 3);
    const AugmentedGraph aug = semiregular_augment(g, d);
    const BlockDecomposition bd = block_decompose(aug.graph);
    std::vector<int> candidates;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b)
        if (bd.blocks[b].kind == Block::Kind::Cycle) candidates.push_back(static_cast<int>(b));
    if (candidates.size() > 1) throw InvalidInput("graph has more than one cycle");
    if (candidates.empty())
        for (std::size_t b = 0; b < bd.blocks.size(); ++b) candidates.push_back(static_cast<int>(b));

    const EdgeColoring none(aug.graph.edge_count(), star_palette_bound(d));
    for (int b : candidates) {
        const UccSurrogate s = build_ucc_surrogate(aug.graph, none, bd, b);
        if (!is_ucc_shape(s) || !s.slot_map.empty()) continue;
        const EdgeColoring sc = color_ucc(s, d);
        EdgeColoring out(g.edge_count(), star_palette_bound(d));
        for (EdgeId le = 0; le < s.graph.edge_count(); ++le) {
            const EdgeId he = s.origin_map[static_cast<std::size_t>(le)];
            if (he >= 0 && he < g.edge_count()) out.set(he, sc.at(le));
        }
        return out;
    }
    throw InvalidInput("no block reaches every vertex within distance 2");
}

namespace {

class Usage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return read_file(path);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

ExactOptions exact_options(std::optional<std::uint64_t> nodes, std::optional<double> secs, int threads) {
    ExactOptions o;
    o.budget.max_nodes = nodes;
    o.budget.max_seconds = secs;
    o.threads = threads;
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Star edge coloring toolkit for cactus graphs", "starcolor"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads for the exact solver (0 = all cores)")->check(CLI::NonNegativeNumber);

    std::string mode = "cactus";
    std::optional<int> delta_opt;
    std::string dot_path, color_in;
    auto* color = app.add_subcommand("color", "Color a cactus and report the verdict");
    color->add_option("--mode", mode, "cactus or ucc")->check(CLI::IsMember({"cactus", "ucc"}));
    color->add_option("--delta", delta_opt, "Palette degree (may only raise the maximum degree)");
    color->add_option("--dot", dot_path, "Also write the colored graph as DOT");
    color->add_option("graph", color_in, "Graph JSON (default: stdin)");

    std::string verify_graph, verify_col;
    auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
    verify->add_option("graph", verify_graph, "Graph JSON")->required();
    verify->add_option("coloring", verify_col, "Coloring JSON (default: stdin)");

    std::optional<int> exact_k;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_secs;
    std::string exact_in;
    bool no_symmetry = false;
    auto* exact = app.add_subcommand("exact", "Decide k-colorability or compute the star chromatic index");
    exact->add_option("--k", exact_k, "Decide this k only");
    exact->add_option("--budget-nodes", budget_nodes, "Search node limit");
    exact->add_option("--budget-secs", budget_secs, "Wall time limit");
    exact->add_flag("--no-symmetry-breaking", no_symmetry, "Disable the first-use color rule");
    exact->add_option("graph", exact_in, "Graph JSON (default: stdin)");

    std::string family, format = "json";
    int gen_n = 5, gen_delta = 3, gen_height = 2;
    RandomCactusParams rp;
    rp.n_blocks = 20;
    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("--family", family, "cycle, tree, tight-odd, figure5 or random")
        ->required()
        ->check(CLI::IsMember({"cycle", "tree", "tight-odd", "figure5", "random"}));
    gen->add_option("--n", gen_n, "Cycle length");
    gen->add_option("--delta", gen_delta, "Degree for tree and tight-odd");
    gen->add_option("--height", gen_height, "Tree height");
    gen->add_option("--seed", rp.seed, "Random seed");
    gen->add_option("--blocks", rp.n_blocks, "Random: number of blocks");
    gen->add_option("--cycle-prob", rp.cycle_prob, "Random: probability a block is a cycle");
    gen->add_option("--len-min", rp.cycle_len_min, "Random: shortest cycle");
    gen->add_option("--len-max", rp.cycle_len_max, "Random: longest cycle");
    gen->add_option("--delta-cap", rp.delta_cap, "Random: maximum degree");
    gen->add_option("--max-edges", rp.max_edges, "Random: edge limit (0 = none)");
    gen->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    int audit_delta = 3;
    std::optional<double> audit_secs;
    auto* audit = app.add_subcommand("audit", "Check the height-2 tree facts over all colorings");
    audit->add_option("--delta", audit_delta, "Odd degree")->required();
    audit->add_option("--budget-secs", audit_secs, "Wall time limit");

    std::string corpus;
    auto* bench = app.add_subcommand("bench", "Color and verify every graph in a directory, CSV out");
    bench->add_option("--corpus", corpus, "Directory of graph JSON files")->required();

    std::string blocks_in;
    auto* blocks = app.add_subcommand("blocks", "Print the block decomposition");
    blocks->add_option("graph", blocks_in, "Graph JSON (default: stdin)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "starcolor: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (color->parsed()) {
            const Graph g = graph_from_json(parse_json(slurp(color_in, in), "graph"));
            const int dmax = max_degree(g);
            const int delta = delta_opt.value_or(dmax);
            if (delta < dmax) throw Usage("--delta " + std::to_string(delta) + " is below the maximum degree " + std::to_string(dmax));
            EdgeColoring col;
            if (mode == "ucc") {
                col = color_ucc_graph(g, delta);
            } else {
                col = color_cactus(g, delta).coloring;
            }
            const ColoringReport rep = verify_star_coloring(g, col);
            json j = coloring_to_json(col);
            j["report"] = report_to_json(rep);
            emit(out, j);
            if (!dot_path.empty()) {
                std::ofstream f(dot_path);
                if (!f) throw Usage("cannot write " + dot_path);
                f << to_dot(g, &col);
            }
            return rep.valid ? kOk : kInvalid;
        }
        if (verify->parsed()) {
            const Graph g = graph_from_json(parse_json(read_file(verify_graph), "graph"));
            const EdgeColoring col = coloring_from_json(parse_json(slurp(verify_col, in), "coloring"));
            const ColoringReport rep = verify_star_coloring(g, col);
            emit(out, report_to_json(rep));
            return rep.valid ? kOk : kInvalid;
        }
        if (exact->parsed()) {
            const Graph g = graph_from_json(parse_json(slurp(exact_in, in), "graph"));
            ExactOptions opts = exact_options(budget_nodes, budget_secs, threads);
            opts.symmetry_breaking = !no_symmetry;
            if (exact_k) {
                const ExactResult r = has_star_k_coloring(g, *exact_k, opts);
                emit(out, exact_to_json(r, *exact_k));
                return r.verdict == Verdict::Yes ? kOk : r.verdict == Verdict::No ? kInvalid : kUnknown;
            }
            const IndexResult r = star_chromatic_index(g, opts);
            json j = {{"index", r.index ? json(*r.index) : json(nullptr)}, {"nodes", r.nodes}};
            j["witness"] = r.witness ? coloring_to_json(*r.witness) : json(nullptr);
            emit(out, j);
            return r.index ? kOk : kUnknown;
        }
        if (gen->parsed()) {
            Graph g;
            if (family == "cycle") g = gen_cycle(gen_n);
            else if (family == "tree") g = gen_semiregular_tree(gen_delta, gen_height);
            else if (family == "tight-odd") g = gen_tight_odd(gen_delta);
            else if (family == "figure5") g = gen_figure5();
            else g = gen_random_cactus(rp);
            if (format == "dot") out << to_dot(g);
            else emit(out, graph_to_json(g));
            return kOk;
        }
        if (audit->parsed()) {
            Budget b;
            b.max_seconds = audit_secs;
            const AuditReport r = audit_lemma_facts(audit_delta, b);
            emit(out, audit_to_json(r));
            if (r.counterexample_count) return kInvalid;
            return r.complete ? kOk : kUnknown;
        }
        if (bench->parsed()) {
            namespace fs = std::filesystem;
            if (!fs::is_directory(corpus)) throw Usage("not a directory: " + corpus);
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(corpus))
                if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            out << "file,edges,delta,colors_used,bound,valid,runtime_ms\n";
            bool all_valid = true;
            for (const auto& f : files) {
                const Graph g = graph_from_json(parse_json(read_file(f.string()), f.filename().string()));
                const auto t0 = std::chrono::steady_clock::now();
                const CactusColoring cc = color_cactus(g, max_degree(g));
                const ColoringReport rep = verify_star_coloring(g, cc.coloring);
                const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                all_valid = all_valid && rep.valid;
                out << f.filename().string() << ',' << g.edge_count() << ',' << rep.max_degree << ',' << rep.colors_used << ','
                    << star_palette_bound(std::max(rep.max_degree, 3)) << ',' << (rep.valid ? "true" : "false") << ','
                    << ms << '\n';
            }
            return all_valid ? kOk : kInvalid;
        }
        if (blocks->parsed()) {
            const Graph g = graph_from_json(parse_json(slurp(blocks_in, in), "graph"));
            BlockDecomposition bd = block_decompose(g);
            if (!bd.blocks.empty()) {
                const int root = bd.root_block_for(0);
                bd = block_bfs_order(std::move(bd), root);
            }
            emit(out, decomposition_to_json(bd));
            return kOk;
        }
    } catch (const Usage& e) {
        err << "starcolor: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidInput& e) {
        err << "starcolor: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace starcolor
