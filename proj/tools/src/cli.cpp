#include "splitclust_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitclust/approx.hpp"
#include "splitclust/clustering.hpp"
#include "splitclust/detect.hpp"
#include "splitclust/errors.hpp"
#include "splitclust/exact.hpp"
#include "splitclust/gen.hpp"
#include "splitclust/graph.hpp"
#include "splitclust/kernel.hpp"
#include "splitclust/reduce.hpp"

namespace splitclust::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input read failure, reported as a usage error.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Error in a specific input file; keeps the file name for the diagnostic.
struct file_error : std::runtime_error {
    file_error(const std::string& path, const std::string& what) : std::runtime_error(path + ": " + what) {}
};

class Session {
public:
    Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    std::string slurp(const std::string& path) {
        if (path == "-") {
            if (stdin_used_) throw input_error("stdin ('-') can be used for only one input");
            stdin_used_ = true;
            return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
        }
        std::ifstream f(path, std::ios::binary);
        if (!f) throw input_error("cannot open '" + path + "'");
        return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    }

    template <class Parse>
    auto load(const std::string& path, Parse parse) {
        const std::string text = slurp(path);
        try {
            return parse(std::string_view(text));
        } catch (const format_error& e) {
            throw file_error(path == "-" ? "<stdin>" : path, e.what());
        }
    }

    CorrelationGraph graph(const std::string& path) {
        return load(path, [](std::string_view t) { return parse_graph(t); });
    }
    Clustering clustering(const std::string& path) {
        return load(path, [](std::string_view t) { return parse_clustering(t); });
    }

    std::ostream& out() { return out_; }
    std::ostream& err() { return err_; }

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    bool stdin_used_ = false;
};

Json clusters_json(const Clustering& f) {
    Json a = Json::array();
    for (const auto& c : f.clusters) a.push_back(c);
    return a;
}

Json stars_json(const BadStarForest& forest) {
    Json a = Json::array();
    for (const auto& s : forest.stars) a.push_back({{"center", s.center}, {"leaves", s.leaves}});
    return a;
}

Json input_json(const std::vector<std::string>& paths) {
    if (paths.size() == 1) return paths.front();
    return paths;
}

void emit_json(std::ostream& out, const std::string& command, const std::vector<std::string>& inputs, Json result,
               std::optional<Json> extra = std::nullopt) {
    Json j;
    j["command"] = command;
    j["input"] = input_json(inputs);
    j["result"] = std::move(result);
    if (extra)
        for (auto& [key, value] : extra->items()) j[key] = value;
    out << j.dump() << '\n';
}

std::string guess_label(const GuessOutcome& g) {
    return g.merged_clique ? std::to_string(*g.merged_clique) : std::string("none");
}

std::string path_name(ApproxPath p) {
    switch (p) {
        case ApproxPath::AlreadyClustered: return "already-clustered";
        case ApproxPath::Fallback: return "fallback";
        case ApproxPath::SimpleSolution: return "simple-solution";
    }
    return "unknown";
}

struct Options {
    bool json = false;
    std::size_t budget = SearchBudget{}.max_cost;
    std::uint64_t node_limit = SearchBudget{}.node_limit;
    std::uint64_t seed = 0;
    bool guess_all = false;
    std::string transcript;
    std::string file;
    std::vector<std::string> files;
    std::size_t k = 0;
    std::size_t n = 0;
    double p_blue = 0.5;
    double p_red = 0.5;
    bool incomplete = false;
};

int cmd_approx(Session& s, const Options& o) {
    const auto g = s.graph(o.files[0]);
    const ApproxReport report = approximate_detailed(g);
    const auto check = verify_clustering(g, report.result);
    if (!check.ok()) throw std::logic_error("approximation produced an invalid clustering:\n" + describe(check));

    if (o.json) {
        Json extra = {{"cost", report.cost}, {"path", path_name(report.path)}};
        if (o.guess_all) {
            Json guesses = Json::array();
            for (const auto& gu : report.guesses)
                guesses.push_back({{"merged_clique", gu.merged_clique ? Json(*gu.merged_clique) : Json(nullptr)},
                                   {"cover_sizes", gu.cover_sizes},
                                   {"cost", gu.cost}});
            extra["guesses"] = guesses;
            extra["chosen"] = report.chosen;
        }
        emit_json(s.out(), "approx", o.files, clusters_json(report.result), extra);
        return kSuccess;
    }
    write_clustering(report.result, s.out());
    if (o.guess_all) {
        s.out() << "# path " << path_name(report.path) << '\n';
        s.out() << "# guess cost covers\n";
        for (std::size_t i = 0; i < report.guesses.size(); ++i) {
            const auto& gu = report.guesses[i];
            s.out() << "# " << guess_label(gu) << ' ' << gu.cost;
            for (auto c : gu.cover_sizes) s.out() << ' ' << c;
            if (i == report.chosen) s.out() << " *";
            s.out() << '\n';
        }
    }
    return kSuccess;
}

int cmd_exact(Session& s, const Options& o) {
    const auto g = s.graph(o.files[0]);
    SearchBudget b;
    b.max_cost = o.budget;
    b.node_limit = o.node_limit;
    const auto f = solve_exact(g, b);
    if (o.json) {
        emit_json(s.out(), "exact", o.files, f ? clusters_json(*f) : Json(nullptr),
                  f ? Json{{"cost", cost(*f, g.size())}} : Json::object());
    } else if (f) {
        write_clustering(*f, s.out());
    } else {
        s.err() << "no clustering of cost <= " << o.budget << '\n';
    }
    return f ? kSuccess : kNo;
}

int cmd_decide(Session& s, const Options& o) {
    const auto g = s.graph(o.files[0]);
    const bool yes = decide(g, o.k, o.node_limit);
    if (o.json)
        emit_json(s.out(), "decide", o.files, yes, Json{{"bound", o.k}});
    else
        s.out() << (yes ? "yes" : "no") << '\n';
    return yes ? kSuccess : kNo;
}

int cmd_lb(Session& s, const Options& o) {
    const auto g = s.graph(o.files[0]);
    const auto forest = maximal_bad_star_forest(g);
    if (o.json)
        emit_json(s.out(), "lb", o.files, stars_json(forest), Json{{"bound", forest.weight()}});
    else
        s.out() << forest.weight() << '\n';
    return kSuccess;
}

int cmd_kernel(Session& s, const Options& o) {
    const auto g = s.graph(o.files[0]);
    auto result = kernelize(g, o.k);
    if (auto* no = std::get_if<NoInstance>(&result)) {
        if (o.json) {
            emit_json(s.out(), "kernel", o.files, nullptr,
                      Json{{"bound", no->witness.weight()}, {"witness", stars_json(no->witness)}});
        } else {
            s.out() << "no\n";
            s.err() << "bad star forest of weight " << no->witness.weight() << " exceeds budget " << o.k << '\n';
        }
        return kNo;
    }
    const auto& kernel = std::get<Kernel>(result);
    if (!o.transcript.empty()) {
        std::ofstream t(o.transcript, std::ios::binary);
        if (!t) throw input_error("cannot write transcript '" + o.transcript + "'");
        write_transcript(kernel.transcript, t);
    }
    if (o.json)
        emit_json(s.out(), "kernel", o.files, to_ccg(kernel.graph),
                  Json{{"transcript", to_ktx(kernel.transcript)},
                       {"kernel_vertices", kernel.graph.size()},
                       {"size_bound", kernel_size_bound(o.k)}});
    else
        write_graph(kernel.graph, s.out());
    return kSuccess;
}

int cmd_lift(Session& s, const Options& o) {
    const auto f = s.clustering(o.files[0]);
    const auto t = s.load(o.files[1], [](std::string_view x) { return parse_transcript(x); });
    const auto lifted = lift_clustering(f, t);
    if (o.json)
        emit_json(s.out(), "lift", o.files, clusters_json(lifted), Json{{"cost", cost(lifted, t.original_n)}});
    else
        write_clustering(lifted, s.out());
    return kSuccess;
}

int cmd_verify(Session& s, const Options& o) {
    const auto g = s.graph(o.files[0]);
    const auto f = s.clustering(o.files[1]);
    const auto report = verify_clustering(g, f);
    const std::string text = describe(report);
    if (o.json) {
        Json lines = Json::array();
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        Json extra = {{"valid", report.ok()}};
        if (report.ok()) extra["cost"] = cost(f, g.size());
        emit_json(s.out(), "verify", o.files, lines, extra);
    } else {
        s.out() << text;
    }
    return report.ok() ? kSuccess : kNo;
}

int cmd_stats(Session& s, const Options& o) {
    const auto g = s.graph(o.files[0]);
    const auto comps = blue_components(g);
    const bool cluster = cluster_decomposition(g, all_vertices(g)).has_value() && !has_erroneous_cycle(g);
    std::optional<std::size_t> lb;
    if (g.is_complete()) lb = lower_bound(g);
    if (o.json) {
        Json r = {{"n", g.size()},
                  {"complete", g.is_complete()},
                  {"blue", g.blue_count()},
                  {"red", g.red_count()},
                  {"neutral", g.neutral_count()},
                  {"blue_components", comps.size()},
                  {"cluster_graph", cluster}};
        emit_json(s.out(), "stats", o.files, r, lb ? Json{{"bound", *lb}} : Json::object());
        return kSuccess;
    }
    s.out() << "n " << g.size() << '\n'
            << "complete " << (g.is_complete() ? "yes" : "no") << '\n'
            << "blue " << g.blue_count() << '\n'
            << "red " << g.red_count() << '\n'
            << "neutral " << g.neutral_count() << '\n'
            << "blue_components " << comps.size() << '\n'
            << "cluster_graph " << (cluster ? "yes" : "no") << '\n'
            << "lower_bound " << (lb ? std::to_string(*lb) : std::string("-")) << '\n';
    return kSuccess;
}

MulticutInstance load_instance(Session& s, const std::string& path) {
    return s.load(path, [](std::string_view t) { return parse_multicut_instance(t); });
}

MulticutSolution load_solution(Session& s, const std::string& path, std::size_t expected_n) {
    std::size_t n = 0;
    auto sol = s.load(path, [&](std::string_view t) { return parse_multicut_solution(t, &n); });
    if (n != expected_n)
        throw file_error(path, "solution is for " + std::to_string(n) + " vertices, instance has " +
                                   std::to_string(expected_n));
    return sol;
}

int emit_text(Session& s, const Options& o, const std::string& command, const std::string& text,
              std::optional<Json> extra = std::nullopt) {
    if (o.json)
        emit_json(s.out(), command, o.files, text, extra);
    else
        s.out() << text;
    return kSuccess;
}

int cmd_ccvs_to_mcvs(Session& s, const Options& o) {
    const auto g = s.graph(o.files[0]);
    return emit_text(s, o, "reduce ccvs-to-mcvs", to_mcvs(ccvs_to_mcvs(g, o.k)));
}

int cmd_mcvs_to_ccvs(Session& s, const Options& o) {
    const auto i = load_instance(s, o.files[0]);
    const auto [g, k] = mcvs_to_ccvs(i);
    if (o.json) return emit_text(s, o, "reduce mcvs-to-ccvs", to_ccg(g), Json{{"bound", k}});
    s.out() << to_ccg(g) << "# budget " << k << '\n';
    return kSuccess;
}

int cmd_clustering_to_multicut(Session& s, const Options& o) {
    const auto g = s.graph(o.files[0]);
    const auto f = s.clustering(o.files[1]);
    const auto sol = clustering_to_multicut_solution(g, f);
    return emit_text(s, o, "reduce clustering-to-multicut", to_mcsol(sol, g.size()), Json{{"cost", sol.cost()}});
}

int cmd_multicut_to_clustering(Session& s, const Options& o) {
    const auto i = load_instance(s, o.files[0]);
    const auto sol = load_solution(s, o.files[1], i.n);
    if (!verify_multicut_solution(i, sol)) {
        s.err() << "multicut solution leaves a terminal pair connected\n";
        return kNo;
    }
    const auto f = multicut_solution_to_clustering(i, sol);
    if (o.json) {
        emit_json(s.out(), "reduce multicut-to-clustering", o.files, clusters_json(f),
                  Json{{"cost", cost(f, i.n)}});
        return kSuccess;
    }
    write_clustering(f, s.out());
    return kSuccess;
}

int cmd_verify_multicut(Session& s, const Options& o) {
    const auto i = load_instance(s, o.files[0]);
    const auto sol = load_solution(s, o.files[1], i.n);
    const bool ok = verify_multicut_solution(i, sol);
    if (o.json)
        emit_json(s.out(), "reduce verify-multicut", o.files, ok, Json{{"valid", ok}, {"cost", sol.cost()}});
    else if (!ok)
        s.out() << "terminal pair not separated\n";
    return ok ? kSuccess : kNo;
}

PlainGraph load_plain(Session& s, const std::string& path) {
    return s.load(path, [](std::string_view t) { return parse_dimacs(t); });
}

int cmd_gen_random(Session& s, const Options& o) {
    const auto g = gen_random(o.n, o.p_blue, o.p_red, !o.incomplete, o.seed);
    return emit_text(s, o, "gen random", to_ccg(g));
}

int cmd_gen_vc(Session& s, const Options& o) {
    const auto g = gen_vertex_cover_gadget(load_plain(s, o.files[0]), o.k);
    return emit_text(s, o, "gen vc-gadget", to_ccg(g), Json{{"bound", o.k}});
}

int cmd_gen_coloring(Session& s, const Options& o) {
    const auto i = gen_coloring_gadget(load_plain(s, o.files[0]), o.k);
    return emit_text(s, o, "gen coloring-gadget", to_mcvs(i), Json{{"bound", i.k}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Cluster editing with vertex splitting", "splitclust"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "Print one JSON object instead of text"); };
    auto file_arg = [&](CLI::App* c, const char* name, const char* what) {
        c->add_option(name, o.file, what)->required();
    };

    int (*handler)(Session&, const Options&) = nullptr;
    auto bind = [&](CLI::App* c, int (*h)(Session&, const Options&)) {
        c->callback([&handler, h] { handler = h; });
    };

    auto* approx = app.add_subcommand("approx", "7-approximate clustering of a complete graph");
    file_arg(approx, "graph", "ccg file or -");
    approx->add_flag("--guess-all", o.guess_all, "Report the cost of every merged-clique guess");
    json_flag(approx);
    bind(approx, cmd_approx);

    auto* exact = app.add_subcommand("exact", "Minimum-cost clustering by exhaustive search");
    file_arg(exact, "graph", "ccg file or -");
    exact->add_option("--budget", o.budget, "Largest cost searched")->capture_default_str();
    exact->add_option("--node-limit", o.node_limit, "Search node cap")->capture_default_str();
    json_flag(exact);
    bind(exact, cmd_exact);

    auto* dec = app.add_subcommand("decide", "Is there a clustering of cost at most k?");
    file_arg(dec, "graph", "ccg file or -");
    dec->add_option("k", o.k, "Split budget")->required();
    dec->add_option("--node-limit", o.node_limit, "Search node cap")->capture_default_str();
    json_flag(dec);
    bind(dec, cmd_decide);

    auto* lb = app.add_subcommand("lb", "Bad star forest lower bound");
    file_arg(lb, "graph", "ccg file or -");
    json_flag(lb);
    bind(lb, cmd_lb);

    auto* ker = app.add_subcommand("kernel", "Polynomial kernel for budget k");
    file_arg(ker, "graph", "ccg file or -");
    ker->add_option("k", o.k, "Split budget")->required();
    ker->add_option("--transcript", o.transcript, "Write the lifting transcript (ktx) here");
    json_flag(ker);
    bind(ker, cmd_kernel);

    auto* lift = app.add_subcommand("lift", "Lift a kernel clustering back to the input graph");
    lift->add_option("files", o.files, "kernel clustering (clu) and transcript (ktx)")->required()->expected(2);
    json_flag(lift);
    bind(lift, cmd_lift);

    auto* ver = app.add_subcommand("verify", "Check a clustering against a graph");
    ver->add_option("files", o.files, "graph (ccg) and clustering (clu)")->required()->expected(2);
    json_flag(ver);
    bind(ver, cmd_verify);

    auto* stats = app.add_subcommand("stats", "Graph statistics");
    file_arg(stats, "graph", "ccg file or -");
    json_flag(stats);
    bind(stats, cmd_stats);

    auto* reduce = app.add_subcommand("reduce", "Multicut with vertex splitting reductions");
    reduce->require_subcommand(1);
    auto* c2m = reduce->add_subcommand("ccvs-to-mcvs", "Correlation graph to multicut instance");
    file_arg(c2m, "graph", "ccg file or -");
    c2m->add_option("--budget", o.k, "Budget written to the instance")->capture_default_str();
    json_flag(c2m);
    bind(c2m, cmd_ccvs_to_mcvs);
    auto* m2c = reduce->add_subcommand("mcvs-to-ccvs", "Multicut instance to correlation graph");
    file_arg(m2c, "instance", "mcvs file or -");
    json_flag(m2c);
    bind(m2c, cmd_mcvs_to_ccvs);
    auto* f2s = reduce->add_subcommand("clustering-to-multicut", "Translate a clustering into a multicut solution");
    f2s->add_option("files", o.files, "graph (ccg) and clustering (clu)")->required()->expected(2);
    json_flag(f2s);
    bind(f2s, cmd_clustering_to_multicut);
    auto* s2f = reduce->add_subcommand("multicut-to-clustering", "Translate a multicut solution into a clustering");
    s2f->add_option("files", o.files, "instance (mcvs) and solution (mcsol)")->required()->expected(2);
    json_flag(s2f);
    bind(s2f, cmd_multicut_to_clustering);
    auto* vm = reduce->add_subcommand("verify-multicut", "Check a multicut solution");
    vm->add_option("files", o.files, "instance (mcvs) and solution (mcsol)")->required()->expected(2);
    json_flag(vm);
    bind(vm, cmd_verify_multicut);

    auto* gen = app.add_subcommand("gen", "Instance generators");
    gen->require_subcommand(1);
    auto* rnd = gen->add_subcommand("random", "Seeded random correlation graph");
    rnd->add_option("n", o.n, "Vertex count")->required();
    rnd->add_option("--p-blue", o.p_blue, "Probability of a blue pair")->capture_default_str();
    rnd->add_option("--p-red", o.p_red, "Probability of a red pair")->capture_default_str();
    rnd->add_flag("--incomplete", o.incomplete, "Leave the remaining pairs neutral");
    rnd->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
    json_flag(rnd);
    bind(rnd, cmd_gen_random);
    auto* vc = gen->add_subcommand("vc-gadget", "Vertex cover gadget from a DIMACS graph");
    file_arg(vc, "graph", "DIMACS edge file or -");
    vc->add_option("k", o.k, "Vertex cover size")->required();
    json_flag(vc);
    bind(vc, cmd_gen_vc);
    auto* col = gen->add_subcommand("coloring-gadget", "k-colorability gadget from a DIMACS graph");
    file_arg(col, "graph", "DIMACS edge file or -");
    col->add_option("k", o.k, "Number of colors (at least 3)")->required();
    json_flag(col);
    bind(col, cmd_gen_coloring);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        std::string where;
        for (auto* sub : app.get_subcommands()) {
            where = sub->get_name();
            for (auto* inner : sub->get_subcommands()) where += " " + inner->get_name();
        }
        err << "splitclust" << (where.empty() ? "" : " " + where) << ": " << e.what() << '\n';
        err << "run 'splitclust --help' for usage\n";
        return kUsage;
    }
    if (!handler) {
        err << "splitclust: missing subcommand\n";
        return kUsage;
    }

    if (o.files.empty() && !o.file.empty()) o.files.push_back(o.file);
    Session session(in, out, err);
    try {
        return handler(session, o);
    } catch (const resource_exhausted& e) {
        err << "splitclust: resource exhausted: " << e.what() << '\n';
        return kExhausted;
    } catch (const file_error& e) {
        err << "splitclust: " << e.what() << '\n';
        return kUsage;
    } catch (const input_error& e) {
        err << "splitclust: " << e.what() << '\n';
        return kUsage;
    } catch (const format_error& e) {
        err << "splitclust: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "splitclust: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace splitclust::cli
