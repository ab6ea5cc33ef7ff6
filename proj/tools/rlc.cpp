// rlc: generate graphs and workloads, build and query RLC indexes, run
// benchmarks and the randomized equivalence check.
//
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rlc/rlc.hpp"

namespace {

using rlc::Errc;
using rlc::Error;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

rlc::Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::not_found, "cannot open graph file '" + path + "'");
    return rlc::load_edge_list(in);
}

rlc::RlcIndex read_index_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::not_found, "cannot open index file '" + path + "'");
    return rlc::read_index(in);
}

// Writes to `path`, or to stdout when path is "-" or empty.
template <class Fn>
void with_output(const std::string& path, bool binary, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!out) throw Error(Errc::not_found, "cannot write '" + path + "'");
    fn(out);
    if (!out) throw Error(Errc::not_found, "write to '" + path + "' failed");
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct GenGraph {
    std::string model = "er";
    std::uint32_t n = 1000;
    double deg = 5;
    std::uint32_t attach = 5;
    std::uint32_t labels = 8;
    double zipf = 2.0;
    std::uint64_t seed = 1;
    std::string out;

    void add(CLI::App& app) {
        auto* c = app.add_subcommand("gen-graph", "Generate a synthetic edge-labeled graph");
        c->add_option("--model", model, "er or ba")->check(CLI::IsMember({"er", "ba"}))->capture_default_str();
        c->add_option("--n", n, "Vertex count")->capture_default_str();
        c->add_option("--deg", deg, "Average out-degree (er)")->capture_default_str();
        c->add_option("--m", attach, "Edges per new vertex (ba)")->capture_default_str();
        c->add_option("--labels", labels, "Label alphabet size")->capture_default_str();
        c->add_option("--zipf", zipf, "Zipf exponent of the label distribution")->capture_default_str();
        c->add_option("--seed", seed, "Random seed")->capture_default_str();
        c->add_option("--out", out, "Output edge list (default stdout)");
        c->callback([this] { run(); });
    }

    void run() const {
        const rlc::Graph g = model == "er" ? rlc::generate_er(n, deg, labels, zipf, seed)
                                           : rlc::generate_ba(n, attach, labels, zipf, seed);
        std::vector<std::string> header;
        std::ostringstream params;
        params << "model=" << model << " n=" << n;
        if (model == "er") {
            params << " deg=" << deg;
        } else {
            params << " m=" << attach;
        }
        params << " labels=" << labels << " zipf=" << zipf << " seed=" << seed;
        header.push_back(params.str());
        with_output(out, false, [&](std::ostream& os) { rlc::write_edge_list(g, os, header); });
    }
};

struct GenWorkload {
    std::string graph;
    rlc::WorkloadParams p;
    std::string out;

    void add(CLI::App& app) {
        auto* c = app.add_subcommand("gen-workload", "Generate true/false query sets classified by BiBFS");
        c->add_option("--graph", graph, "Edge list")->required();
        c->add_option("--length", p.length, "Constraint length |L|")->capture_default_str();
        c->add_option("--true", p.n_true, "Number of true queries")->capture_default_str();
        c->add_option("--false", p.n_false, "Number of false queries")->capture_default_str();
        c->add_option("--seed", p.seed, "Random seed")->capture_default_str();
        c->add_option("--step-cap", p.step_cap, "BiBFS expansions per probe before it is discarded")
            ->capture_default_str();
        c->add_option("--budget", p.draw_budget, "Maximum draws (0: automatic)")->capture_default_str();
        c->add_option("--out", out, "Output CSV (default stdout)");
        c->callback([this] { run(); });
    }

    void run() {
        const rlc::Graph g = read_graph(graph);
        p.graph_id = rlc::graph_fingerprint(g);
        const rlc::Workload w = rlc::generate_workload(g, p);
        with_output(out, false, [&](std::ostream& os) {
            rlc::write_workload(w, g.vertex_names().names(), g.label_names().names(), os);
        });
    }
};

struct Build {
    std::string graph;
    unsigned k = 2;
    std::string out;

    void add(CLI::App& app) {
        auto* c = app.add_subcommand("build", "Build an RLC index");
        c->add_option("--graph", graph, "Edge list")->required();
        c->add_option("--k", k, "Maximum constraint length")->capture_default_str()->check(CLI::Range(1u, 65535u));
        c->add_option("--out", out, "Index file")->required();
        c->callback([this] { run(); });
    }

    void run() const {
        const rlc::Graph g = read_graph(graph);
        const auto start = Clock::now();
        rlc::IndexBuilder b(g, k);
        b.run();
        const double secs = seconds_since(start);
        const rlc::RlcIndex idx = std::move(b).take();
        with_output(out, true, [&](std::ostream& os) { rlc::write_index(idx, os); });
        const rlc::IndexStats s = rlc::index_stats(idx);
        std::cout << "vertices=" << g.num_vertices() << " edges=" << g.num_edges() << " k=" << k
                  << " entries=" << s.total_entries << " in=" << s.in_entries << " out=" << s.out_entries
                  << " mrs=" << s.dictionary_size << " bytes=" << s.serialized_bytes << " build_seconds=" << secs
                  << '\n';
    }
};

struct Query {
    std::string index;
    std::string s, t, labels;
    bool star = false;

    void add(CLI::App& app) {
        auto* c = app.add_subcommand("query", "Answer one RLC query (s, t, L+) from an index file");
        c->add_option("--index", index, "Index file")->required();
        c->add_option("--s", s, "Source vertex name")->required();
        c->add_option("--t", t, "Target vertex name")->required();
        c->add_option("--labels", labels, "Space-separated label names of L")->required();
        c->add_flag("--star", star, "Kleene star: the empty path counts when s == t");
        c->callback([this] { run(); });
    }

    void run() const {
        const rlc::RlcIndex idx = read_index_file(index);
        const rlc::VertexId vs = idx.vertex(s), vt = idx.vertex(t);
        const rlc::LabelSeq L = idx.labels_from_string(labels);
        const bool answer = star ? rlc::query_star(idx, vs, vt, L) : rlc::query(idx, vs, vt, L);
        std::cout << (answer ? "true" : "false") << '\n';
    }
};

struct Bench {
    std::string graph, workload, index;
    std::string evaluators = "index,bfs,bibfs";
    unsigned k = 2;
    std::size_t repeats = 20;
    std::size_t etc_max_records = 200'000'000;
    std::string csv_out;

    void add(CLI::App& app) {
        auto* c = app.add_subcommand("bench", "Time evaluators on a workload; the first evaluator is the reference");
        c->add_option("--graph", graph, "Edge list")->required();
        c->add_option("--workload", workload, "Workload CSV")->required();
        c->add_option("--evaluators", evaluators, "Comma list from index,bfs,bibfs,etc")->capture_default_str();
        c->add_option("--index", index, "Prebuilt index (otherwise built here and timed)");
        c->add_option("--k", k, "k for on-the-fly index/ETC builds")->capture_default_str()->check(CLI::Range(1u, 65535u));
        c->add_option("--repeats", repeats, "Runs per evaluator; medians are reported")->capture_default_str();
        c->add_option("--etc-max-records", etc_max_records, "Abort the ETC build beyond this many records")
            ->capture_default_str();
        c->add_option("--csv", csv_out, "Also write the report as CSV to this file ('-' for stdout)");
        c->callback([this] { run(); });
    }

    void run() const {
        const rlc::Graph g = read_graph(graph);
        std::ifstream win(workload);
        if (!win) throw Error(Errc::not_found, "cannot open workload file '" + workload + "'");
        const rlc::Workload w = rlc::read_workload(win, g);
        if (!w.graph_id.empty() && w.graph_id != rlc::graph_fingerprint(g)) {
            std::cerr << "rlc: warning: workload was generated for graph " << w.graph_id << ", not this one\n";
        }

        const auto names = split_csv_list(evaluators);
        if (names.empty()) throw Error(Errc::config_rejected, "no evaluators given");

        std::unique_ptr<rlc::RlcIndex> idx;
        std::unique_ptr<rlc::EtcIndex> etc;
        rlc::NfaBfs nfa(g);
        rlc::BiBfs bi(g);
        std::optional<double> ref_build;
        std::vector<rlc::Evaluator> evs;
        for (const auto& name : names) {
            if (name == "index") {
                if (!index.empty()) {
                    idx = std::make_unique<rlc::RlcIndex>(read_index_file(index));
                    if (idx->vertex_names() != g.vertex_names().names()) {
                        throw Error(Errc::config_rejected, "index was not built from this graph");
                    }
                } else {
                    const auto start = Clock::now();
                    idx = std::make_unique<rlc::RlcIndex>(rlc::build_index(g, k));
                    const double secs = seconds_since(start);
                    if (evs.empty()) ref_build = secs;
                    std::cerr << "index built in " << secs << " s (" << idx->total_entries() << " entries)\n";
                }
                evs.push_back({"index", [&idx](rlc::VertexId s, rlc::VertexId t, const rlc::LabelSeq& L) {
                                   return rlc::query(*idx, s, t, L);
                               }});
            } else if (name == "bfs") {
                evs.push_back({"bfs", [&nfa](rlc::VertexId s, rlc::VertexId t, const rlc::LabelSeq& L) {
                                   return *nfa.run(s, t, L);
                               }});
            } else if (name == "bibfs") {
                evs.push_back({"bibfs", [&bi](rlc::VertexId s, rlc::VertexId t, const rlc::LabelSeq& L) {
                                   return *bi.run(s, t, L);
                               }});
            } else if (name == "etc") {
                const auto start = Clock::now();
                etc = std::make_unique<rlc::EtcIndex>(rlc::build_etc(g, k, etc_max_records));
                const double secs = seconds_since(start);
                if (evs.empty()) ref_build = secs;
                std::cerr << "ETC built in " << secs << " s (" << etc->total_records() << " records)\n";
                evs.push_back({"etc", [&etc](rlc::VertexId s, rlc::VertexId t, const rlc::LabelSeq& L) {
                                   return rlc::etc_query(*etc, s, t, L);
                               }});
            } else {
                throw CLI::ValidationError("--evaluators", "unknown evaluator '" + name + "'");
            }
        }
        const rlc::BenchReport r = rlc::run_bench(evs, w, repeats, ref_build);
        rlc::write_bench_table(r, std::cout);
        if (!csv_out.empty()) with_output(csv_out, false, [&](std::ostream& os) { rlc::write_bench_csv(r, os); });
    }
};

struct Verify {
    rlc::VerifyParams p;

    void add(CLI::App& app) {
        auto* c = app.add_subcommand("verify", "Randomized index/ETC/NFA-BFS/BiBFS equivalence check");
        c->add_option("--graphs", p.graphs, "Number of random graphs")->capture_default_str();
        c->add_option("--n-min", p.n_min)->capture_default_str();
        c->add_option("--n-max", p.n_max)->capture_default_str();
        c->add_option("--deg-min", p.deg_min)->capture_default_str();
        c->add_option("--deg-max", p.deg_max)->capture_default_str();
        c->add_option("--labels-min", p.labels_min)->capture_default_str();
        c->add_option("--labels-max", p.labels_max)->capture_default_str();
        c->add_option("--k-min", p.k_min)->capture_default_str();
        c->add_option("--k-max", p.k_max)->capture_default_str();
        c->add_option("--zipf", p.zipf, "Zipf exponent of the label distribution")->capture_default_str();
        c->add_option("--seed", p.seed)->capture_default_str();
        c->callback([this] { run(); });
    }

    void run() const {
        const rlc::VerifyReport r = rlc::verify_equivalence(p);
        std::cout << "graphs=" << r.graphs << " triples=" << r.triples << " mismatches=" << r.mismatches
                  << " condensed_violations=" << r.condensed_violations << " entries=" << r.index_entries << '\n';
        for (const auto& f : r.failures) std::cerr << f << '\n';
        if (r.mismatches != 0 || r.condensed_violations != 0) {
            throw Error(Errc::evaluator_mismatch, "equivalence check failed");
        }
    }
};

struct Stats {
    std::string graph, index;

    void add(CLI::App& app) {
        auto* c = app.add_subcommand("stats", "Print graph or index statistics");
        auto* og = c->add_option("--graph", graph, "Edge list");
        auto* oi = c->add_option("--index", index, "Index file");
        og->excludes(oi);
        c->callback([this] { run(); });
    }

    void run() const {
        if (!graph.empty()) {
            const rlc::GraphStats s = rlc::graph_stats(read_graph(graph));
            std::cout << "vertices=" << s.vertices << " edges=" << s.edges << " labels=" << s.labels
                      << " self_loops=" << s.self_loops << " triangles=" << s.triangles << '\n';
        } else if (!index.empty()) {
            const rlc::RlcIndex idx = read_index_file(index);
            const rlc::IndexStats s = rlc::index_stats(idx);
            std::cout << "vertices=" << idx.num_vertices() << " labels=" << idx.num_labels() << " k=" << idx.k()
                      << " entries=" << s.total_entries << " in=" << s.in_entries << " out=" << s.out_entries
                      << " mrs=" << s.dictionary_size << " bytes=" << s.serialized_bytes << '\n';
        } else {
            throw CLI::RequiredError("--graph or --index");
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RLC reachability index toolkit"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    GenGraph gen_graph;
    GenWorkload gen_workload;
    Build build;
    Query query;
    Bench bench;
    Verify verify;
    Stats stats;
    gen_graph.add(app);
    gen_workload.add(app);
    build.add(app);
    query.add(app);
    bench.add(app);
    verify.add(app);
    stats.add(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const rlc::Error& e) {
        std::cerr << "rlc: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "rlc: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
