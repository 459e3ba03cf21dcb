#include <holeforge/canonical.hpp>
#include <holeforge/class_lab.hpp>
#include <holeforge/errors.hpp>
#include <holeforge/generators.hpp>
#include <holeforge/graph6.hpp>
#include <holeforge/holes.hpp>
#include <holeforge/invariants.hpp>
#include <holeforge/levelling.hpp>
#include <holeforge/perfection.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace holeforge;
using Json = nlohmann::ordered_json;

namespace {
    constexpr int schema_version = 1;

    enum ExitCode
    {
        ok = 0,
        input_error = 1,
        cap_or_timeout = 2,
        internal_error = 3
    };

    struct RunConfig
    {
        std::string command;
        std::vector<std::string> files;
        std::vector<std::string> inline_graphs;
        std::optional<int> vertex_cap;
        double timeout = 0.0;
        std::size_t cycle_cap = 4096;
        std::uint64_t seed = 0;
        std::string format = "json";
        int jobs = 1;
        bool trust = false;
        bool verify = false;

        // color
        bool exact = false;
        // convert
        std::string convert_to = "graph6";
        // search
        F4Budget budget;
        // antichain
        std::optional<int> four_regular;
        std::optional<int> trees;
        std::string forbidden;
        // corpus
        std::string kind = "random_chordal";
        CorpusParams corpus;
    };

    struct Outcome
    {
        Json row;
        int code = ok;
        std::string message;
    };

    auto vertices_json(const VertexSet & s) -> Json
    {
        return s.to_vector();
    }

    auto chromatic_json(Json & row, const std::string & key, const ChromaticResult & r)
    {
        row[key] = r.exact() ? Json(r.value()) : Json(nullptr);
        row[key + "_lower"] = r.lower;
        row[key + "_upper"] = r.upper;
        row[key + "_status"] = r.exact() ? "exact" : "timeout";
    }

    auto solver_options(const RunConfig & c, int default_cap) -> SolverOptions
    {
        return {c.vertex_cap.value_or(default_cap), c.timeout};
    }

    auto analyze_row(const RunConfig & c, const Graph & g, Outcome & out)
    {
        auto r = analyze(g, solver_options(c, 64));
        auto & row = out.row;
        row["n"] = r.n;
        row["m"] = r.m;
        row["omega"] = r.omega;
        chromatic_json(row, "chi", r.chi);
        row["alpha"] = r.alpha;
        chromatic_json(row, "theta", r.theta);
        row["max_clique"] = r.max_clique;
        row["max_stable"] = r.max_stable;
        if (! r.chi.exact() || ! r.theta.exact())
            out.code = cap_or_timeout;
        if (c.verify) {
            auto proper = is_proper(g, r.chi.witness) && is_proper(complement(g), r.theta.witness)
                    && is_clique(g, VertexSet::from_range(g.vertex_count(), r.max_clique))
                    && is_stable(g, VertexSet::from_range(g.vertex_count(), r.max_stable));
            row["verified"] = proper;
            if (! proper)
                throw InvariantViolation("analyze: witness failed verification");
        }
    }

    auto classify_row(const RunConfig & c, const Graph & g, Outcome & out)
    {
        auto f = classify(g, c.vertex_cap.value_or(64));
        auto & row = out.row;
        row["n"] = g.vertex_count();
        row["chordal"] = f.chordal;
        row["chordal_bipartite"] = f.chordal_bipartite;
        row["long_hole_free"] = f.long_hole_free;
        row["weakly_chordal"] = f.weakly_chordal;
        row["parity"] = to_string(f.parity);
        row["same_parity"] = f.same_parity;
        row["even_hole_free"] = f.even_hole_free;
        row["odd_hole_free"] = f.odd_hole_free;
        row["perfect"] = f.perfect;
        row["chordal_witness"] = f.chordal_witness;
        row["long_hole_witness"] = f.long_hole_witness;
        row["complement_long_hole_witness"] = f.complement_long_hole_witness;
        row["even_hole_witness"] = f.even_hole_witness;
        row["odd_hole_witness"] = f.odd_hole_witness;
        row["perfect_witness"] = f.perfect_witness;
        row["perfect_witness_is_antihole"] = f.perfect_witness_is_antihole;
    }

    auto color_row(const RunConfig & c, const Graph & g, Outcome & out)
    {
        auto result = color_long_hole_free_audited(g, c.trust);
        auto omega = clique_number(g).size;
        auto bound = palette_bound(std::max(omega, 1));
        auto used = result.coloring.colors_used();
        auto & row = out.row;
        row["n"] = g.vertex_count();
        row["omega"] = omega;
        row["colors_used"] = used;
        row["palette_bound"] = bound.saturated ? Json("saturated") : Json(bound.value);
        row["within_bound"] = bound.admits(used);
        row["coloring"] = result.coloring.color;
        row["levels_checked"] = result.audit.levels_checked;
        row["widest_level"] = result.audit.widest_level;
        row["level_budget_violations"] = result.audit.level_budget_violations;
        row["component_budget_violations"] = result.audit.component_budget_violations;
        if (c.exact) {
            auto chi = chromatic_number(g, solver_options(c, 64));
            chromatic_json(row, "chi", chi);
            if (! chi.exact())
                out.code = cap_or_timeout;
        }
        if (c.verify) {
            auto good = is_proper(g, result.coloring) && bound.admits(used);
            row["verified"] = good;
            if (! good)
                throw InvariantViolation("color: colouring failed verification");
        }
    }

    auto chip_row(const RunConfig & c, const Graph & g, Outcome & out)
    {
        auto r = perfect_chromatic_number(g, {c.vertex_cap.value_or(24), c.timeout});
        auto & row = out.row;
        row["n"] = g.vertex_count();
        row["chi_p"] = r.exact() ? Json(r.value) : Json(nullptr);
        row["chi_p_lower"] = r.lower;
        row["chi_p_upper"] = r.upper;
        row["chi_p_status"] = r.exact() ? "exact" : "timeout";
        Json classes = Json::array();
        for (auto & s : r.partition.classes)
            classes.push_back(vertices_json(s));
        row["partition"] = classes;
        if (! r.exact())
            out.code = cap_or_timeout;
        if (c.verify) {
            auto good = is_valid_perfect_partition(g, r.partition);
            row["verified"] = good;
            if (! good)
                throw InvariantViolation("chip: partition failed verification");
        }
    }

    auto nice_row(const RunConfig & c, const Graph & g, Outcome & out)
    {
        auto r = is_nice(g, {c.vertex_cap.value_or(11), c.timeout});
        auto & row = out.row;
        row["n"] = g.vertex_count();
        row["nice"] = r.is_nice;
        row["witness"] = r.witness ? vertices_json(*r.witness) : Json(nullptr);
        row["subgraphs_checked"] = r.subgraphs_checked;
    }

    auto slack_row(const RunConfig & c, const Graph & g, Outcome & out)
    {
        auto cap = c.vertex_cap.value_or(20);
        auto r = gyarfas_slack(g, cap);
        auto holes = max_anticomplete_odd_holes(g, std::max(cap, 24), c.cycle_cap);
        auto & row = out.row;
        row["n"] = g.vertex_count();
        row["slack"] = r.slack;
        row["witness"] = vertices_json(r.witness);
        row["witness_alpha"] = r.witness_alpha;
        row["witness_omega"] = r.witness_omega;
        row["anticomplete_odd_holes"] = holes.count;
        row["odd_holes"] = holes.holes;
    }

    using RowFunction = std::function<void(const RunConfig &, const Graph &, Outcome &)>;

    auto per_graph(const std::string & command) -> RowFunction
    {
        if (command == "analyze")
            return analyze_row;
        if (command == "classify")
            return classify_row;
        if (command == "color")
            return color_row;
        if (command == "chip")
            return chip_row;
        if (command == "nice")
            return nice_row;
        if (command == "slack")
            return slack_row;
        return {};
    }

    // A long hole is bad input, unless the caller vouched for the input.
    auto run_guarded(bool trust, const std::function<void(Outcome &)> & body) -> Outcome
    {
        Outcome out;
        try {
            body(out);
        }
        catch (const LongHoleDetected & e) {
            std::ostringstream msg;
            msg << e.what() << "; witness:";
            for (auto v : e.witness())
                msg << ' ' << v;
            out = {Json(), trust ? internal_error : input_error, msg.str()};
        }
        catch (const CapExceeded & e) {
            out = {Json(), cap_or_timeout, e.what()};
        }
        catch (const InputError & e) {
            out = {Json(), input_error, e.what()};
        }
        catch (const std::exception & e) {
            out = {Json(), internal_error, e.what()};
        }
        return out;
    }

    class Printer
    {
    public:
        Printer(std::string format, std::string command) : format_(std::move(format)), command_(std::move(command)) {}

        void print(Json row)
        {
            Json full;
            full["schema_version"] = schema_version;
            full["command"] = command_;
            for (auto & [key, value] : row.items())
                full[key] = value;

            if (format_ == "json") {
                std::cout << full.dump() << '\n';
            }
            else if (format_ == "tsv") {
                if (! header_printed_) {
                    auto first = true;
                    for (auto & [key, value] : full.items()) {
                        std::cout << (first ? "" : "\t") << key;
                        first = false;
                    }
                    std::cout << '\n';
                    header_printed_ = true;
                }
                auto first = true;
                for (auto & [key, value] : full.items()) {
                    std::cout << (first ? "" : "\t") << cell(value);
                    first = false;
                }
                std::cout << '\n';
            }
            else {
                if (records_++ > 0)
                    std::cout << '\n';
                for (auto & [key, value] : full.items())
                    std::cout << key << ": " << cell(value) << '\n';
            }
            std::cout.flush();
        }

    private:
        std::string format_, command_;
        bool header_printed_ = false;
        int records_ = 0;

        static auto cell(const Json & v) -> std::string
        {
            if (v.is_string())
                return v.get<std::string>();
            if (v.is_null())
                return "";
            return v.dump();
        }
    };

    // Reads graphs from inline arguments, files or stdin, one at a time.
    class GraphSource
    {
    public:
        explicit GraphSource(const RunConfig & c)
        {
            for (auto & text : c.inline_graphs)
                pending_.push_back(text);
            files_ = c.files;
            if (c.inline_graphs.empty() && c.files.empty())
                files_.push_back("-");
        }

        /// Next graph, or nullopt at end. Throws InputError on malformed text.
        auto next() -> std::optional<Graph>
        {
            while (true) {
                if (! pending_.empty()) {
                    auto text = std::move(pending_.front());
                    pending_.erase(pending_.begin());
                    return parse(text);
                }
                if (stream_) {
                    std::string line;
                    while (std::getline(*stream_, line)) {
                        if (line.find_first_not_of(" \t\r") == std::string::npos)
                            continue;
                        return parse_graph6(line);
                    }
                    stream_ = nullptr;
                    file_.reset();
                }
                if (files_.empty())
                    return std::nullopt;
                open(files_.front());
                files_.erase(files_.begin());
            }
        }

    private:
        std::vector<std::string> pending_;
        std::vector<std::string> files_;
        std::unique_ptr<std::ifstream> file_;
        std::istream * stream_ = nullptr;

        static auto parse(const std::string & text) -> Graph
        {
            auto start = text.find_first_not_of(" \t\r\n");
            if (start != std::string::npos && std::isdigit(static_cast<unsigned char>(text[start])))
                return parse_edge_list(text);
            return parse_graph6(text);
        }

        void open(const std::string & name)
        {
            if (name == "-") {
                stream_ = &std::cin;
            }
            else {
                file_ = std::make_unique<std::ifstream>(name);
                if (! *file_)
                    throw InputError("cannot open " + name);
                stream_ = file_.get();
            }
            // an edge-list file holds exactly one graph
            auto c = (stream_->peek());
            while (c != EOF && std::isspace(c)) {
                stream_->get();
                c = stream_->peek();
            }
            if (c != EOF && std::isdigit(c)) {
                std::ostringstream all;
                all << stream_->rdbuf();
                pending_.push_back(all.str());
                stream_ = nullptr;
                file_.reset();
            }
        }
    };

    auto run_per_graph(const RunConfig & c, const RowFunction & fn) -> int
    {
        Printer printer(c.format, c.command);
        GraphSource source(c);
        int worst = ok;
        long index = 0;
        auto batch_size = static_cast<std::size_t>(std::max(c.jobs, 1)) * 8;

        for (bool done = false; ! done;) {
            std::vector<Graph> batch;
            try {
                while (batch.size() < batch_size) {
                    auto g = source.next();
                    if (! g) {
                        done = true;
                        break;
                    }
                    batch.push_back(std::move(*g));
                }
            }
            catch (const std::exception & e) {
                std::cerr << "holeforge: input " << index + static_cast<long>(batch.size()) << ": " << e.what() << '\n';
                worst = std::max(worst, static_cast<int>(input_error));
                done = true;
            }

            std::vector<Outcome> results(batch.size());
            std::atomic<std::size_t> next{0};
            auto work = [&] {
                for (std::size_t i; (i = next++) < batch.size();)
                    results[i] = run_guarded(c.trust, [&](Outcome & out) {
                        out.row["index"] = index + static_cast<long>(i);
                        out.row["graph6"] = write_graph6(batch[i]);
                        fn(c, batch[i], out);
                    });
            };
            std::vector<std::thread> workers;
            for (int j = 1; j < c.jobs && static_cast<std::size_t>(j) < batch.size(); ++j)
                workers.emplace_back(work);
            work();
            for (auto & w : workers)
                w.join();

            for (std::size_t i = 0; i < results.size(); ++i) {
                auto & r = results[i];
                if (! r.message.empty())
                    std::cerr << "holeforge: graph " << index + static_cast<long>(i) << ": " << r.message << '\n';
                else
                    printer.print(std::move(r.row));
                worst = std::max(worst, r.code);
            }
            index += static_cast<long>(batch.size());
        }
        return worst;
    }

    auto run_convert(const RunConfig & c) -> int
    {
        GraphSource source(c);
        while (auto g = source.next()) {
            if (c.convert_to == "edges")
                std::cout << write_edge_list(*g);
            else
                std::cout << write_graph6(*g) << '\n';
        }
        return ok;
    }

    auto run_search(const RunConfig & c) -> int
    {
        auto budget = c.budget;
        budget.seed = c.seed;
        if (c.timeout > 0)
            budget.timeout_seconds = c.timeout;
        auto r = f4_search(budget);
        Json row;
        row["omega"] = r.omega;
        row["best_chi"] = r.best_chi;
        row["witness"] = r.witness ? Json(write_graph6(*r.witness)) : Json(nullptr);
        row["witness_n"] = r.witness ? r.witness->vertex_count() : 0;
        row["source"] = r.source;
        row["graphs_examined"] = r.graphs_examined;
        row["unknown"] = r.unknown;
        row["seed"] = c.seed;
        Printer(c.format, c.command).print(row);
        return ok;
    }

    auto run_antichain(const RunConfig & c) -> int
    {
        Printer printer(c.format, c.command);
        if (! c.forbidden.empty()) {
            std::vector<int> counts;
            std::stringstream in(c.forbidden);
            for (std::string item; std::getline(in, item, ',');) {
                try {
                    counts.push_back(std::stoi(item));
                }
                catch (const std::exception &) {
                    throw InputError("--forbidden expects comma-separated integers, got '" + item + "'");
                }
            }
            auto r = realize_forbidden_sequence(counts, c.vertex_cap.value_or(10));
            Json sizes = Json::array();
            for (auto & s : r.sizes)
                sizes.push_back({{"n", s.n}, {"requested", s.requested}, {"available", s.available ? Json(*s.available) : Json(nullptr)},
                        {"feasible", s.feasible}});
            Json selected = Json::array();
            for (auto & g : r.selected)
                selected.push_back(write_graph6(g));
            auto antichain = verify_antichain(r.selected);
            printer.print({{"sizes", sizes}, {"selected", selected}, {"antichain", antichain.is_antichain}});
            return ok;
        }

        std::vector<Graph> graphs;
        if (c.four_regular)
            graphs = enumerate_connected_4_regular(*c.four_regular, c.vertex_cap.value_or(10));
        else if (c.trees)
            for (int k = 1; k <= *c.trees; ++k)
                graphs.push_back(tree_T(k));
        else {
            GraphSource source(c);
            while (auto g = source.next())
                graphs.push_back(std::move(*g));
        }
        auto r = verify_antichain(graphs);
        Json codes = Json::array();
        for (auto & g : r.graphs)
            codes.push_back(write_graph6(g));
        Json row;
        row["count"] = r.graphs.size();
        row["antichain"] = r.is_antichain;
        row["offending"] = r.offending ? Json::array({r.offending->first, r.offending->second}) : Json(nullptr);
        row["graphs"] = codes;
        printer.print(row);
        return ok;
    }

    auto run_corpus(const RunConfig & c) -> int
    {
        auto params = c.corpus;
        params.seed = c.seed;
        corpus(parse_corpus_kind(c.kind), params, [](const Graph & g) { std::cout << write_graph6(g) << '\n'; });
        return ok;
    }

    auto dispatch(const RunConfig & c) -> int
    {
        if (auto fn = per_graph(c.command))
            return run_per_graph(c, fn);
        if (c.command == "convert")
            return run_convert(c);
        if (c.command == "search")
            return run_search(c);
        if (c.command == "antichain")
            return run_antichain(c);
        if (c.command == "corpus")
            return run_corpus(c);
        throw InputError("unknown subcommand " + c.command);
    }
}

auto main(int argc, char ** argv) -> int
{
    RunConfig c;
    CLI::App app{"holeforge: hole-free graph classes, colourings and invariants"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);

    app.add_option("-g,--graph", c.inline_graphs, "Inline graph6 (repeatable)");
    app.add_option("--vcap", c.vertex_cap, "Vertex cap for exponential computations")->envname("HOLEFORGE_VCAP")->check(CLI::PositiveNumber);
    app.add_option("--timeout", c.timeout, "Per-computation timeout in seconds, 0 = none")->envname("HOLEFORGE_TIMEOUT")->check(CLI::NonNegativeNumber);
    app.add_option("--cycle-cap", c.cycle_cap, "Maximum number of holes enumerated")->check(CLI::PositiveNumber);
    app.add_option("--seed", c.seed, "Random seed");
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "tsv", "human"}));
    app.add_option("--jobs", c.jobs, "Worker threads; output stays in input order")->check(CLI::PositiveNumber);
    app.add_flag("--trust", c.trust, "Skip precondition checks; a violated precondition then exits with code 3");
    app.add_flag("--verify", c.verify, "Independently re-check every witness");

    auto with_files = [&](CLI::App * sub) { sub->add_option("files", c.files, "Input files (graph6 lines or one edge list); - for stdin"); };
    with_files(app.add_subcommand("analyze", "omega, chi, alpha, theta with witnesses"));
    with_files(app.add_subcommand("classify", "Hole-based class membership with witnesses"));
    auto color = app.add_subcommand("color", "Levelling colouring of a long-hole-free graph");
    with_files(color);
    color->add_flag("--exact", c.exact, "Also compute the exact chromatic number");
    with_files(app.add_subcommand("chip", "Perfect chromatic number with partition"));
    with_files(app.add_subcommand("nice", "Niceness verdict with witness"));
    with_files(app.add_subcommand("slack", "Gyarfas slack and anticomplete odd holes"));
    auto convert = app.add_subcommand("convert", "Convert between graph6 and edge lists");
    with_files(convert);
    convert->add_option("--to", c.convert_to, "Target format")->check(CLI::IsMember({"graph6", "edges"}));

    auto search = app.add_subcommand("search", "Search long-hole-free graphs of given clique number for large chi");
    search->add_option("--omega", c.budget.omega, "Clique number")->check(CLI::PositiveNumber);
    search->add_option("--exhaustive-n", c.budget.exhaustive_n, "Enumerate every graph up to this size")->check(CLI::Range(0, 10));
    search->add_option("--random-trials", c.budget.random_trials)->check(CLI::NonNegativeNumber);
    search->add_option("--random-max-n", c.budget.random_max_n)->check(CLI::PositiveNumber);
    search->add_option("--substitution-trials", c.budget.substitution_trials)->check(CLI::NonNegativeNumber);
    search->add_option("--substitution-max-n", c.budget.substitution_max_n)->check(CLI::PositiveNumber);

    auto antichain = app.add_subcommand("antichain", "Verify that graphs are pairwise induced-incomparable");
    with_files(antichain);
    auto source = antichain->add_option_group("source");
    source->add_option("--four-regular", c.four_regular, "Connected 4-regular graphs on N vertices")->check(CLI::Range(5, 12));
    source->add_option("--trees", c.trees, "The trees T_1..T_K")->check(CLI::PositiveNumber);
    source->add_option("--forbidden", c.forbidden, "Realize counts f_1,f_2,... as forbidden 4-regular graphs");
    source->require_option(0, 1);

    auto corpus_cmd = app.add_subcommand("corpus", "Emit a seeded corpus as graph6 lines");
    corpus_cmd->add_option("--kind", c.kind)->check(CLI::IsMember({"random_chordal", "random_long_hole_free", "substitution_closure", "exhaustive"}));
    corpus_cmd->add_option("--count", c.corpus.count)->check(CLI::NonNegativeNumber);
    corpus_cmd->add_option("--n-min", c.corpus.n_min)->check(CLI::NonNegativeNumber);
    corpus_cmd->add_option("--n-max", c.corpus.n_max)->check(CLI::NonNegativeNumber);
    corpus_cmd->add_option("--p", c.corpus.edge_probability, "Edge probability")->check(CLI::Range(0.0, 1.0));
    corpus_cmd->add_flag("--long-hole-free", c.corpus.long_hole_free_only, "exhaustive: only long-hole-free graphs");
    corpus_cmd->add_option("--enumeration-cap", c.corpus.enumeration_cap)->check(CLI::Range(0, 12));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? ok : input_error;
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(c);
    }
    catch (const CapExceeded & e) {
        std::cerr << "holeforge: " << e.what() << '\n';
        return cap_or_timeout;
    }
    catch (const InputError & e) {
        std::cerr << "holeforge: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::exception & e) {
        std::cerr << "holeforge: internal error: " << e.what() << '\n';
        return internal_error;
    }
}
