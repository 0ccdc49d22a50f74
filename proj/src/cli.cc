#include <pcn/cli.hh>
#include <pcn/errors.hh>
#include <pcn/families.hh>
#include <pcn/hamming.hh>
#include <pcn/io.hh>
#include <pcn/pcn.hh>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace pcn
{
    namespace
    {
        struct GraphSource
        {
            std::string family;
            std::string path;
            int q = 0, m = 0, n = 0;
            double p = 0.5;
            std::uint64_t seed = 1;
        };

        struct LoadedGraph
        {
            std::string name;
            Graph graph;
            DistanceMatrix distances;
            std::optional<HammingParams> hamming;
        };

        struct BudgetFlags
        {
            std::optional<long long> nodes;
            std::optional<double> seconds;
            int workers = 1;

            auto budget() const -> SolveBudget { return SolveBudget{seconds, nodes, workers}; }
        };

        auto default_vertex_budget_from_env() -> long long
        {
            if (const char * value = std::getenv(vertex_budget_env)) {
                try {
                    long long parsed = std::stoll(value);
                    if (parsed > 0)
                        return parsed;
                }
                catch (const std::exception &) {
                }
                throw Error(ErrorKind::InvalidArgument, std::string(vertex_budget_env) + " must be a positive integer, got '" + value + "'");
            }
            return default_vertex_budget;
        }

        auto add_source_options(CLI::App & app, GraphSource & source) -> void
        {
            app.add_option("--family", source.family, "Graph family: hamming, path, cycle, complete, star, petersen, random");
            app.add_option("--graph", source.path, "DIMACS graph file");
            app.add_option("--q", source.q, "Hamming alphabet size");
            app.add_option("--m", source.m, "Hamming word length");
            app.add_option("--n", source.n, "Vertex count (leaf count for star)");
            app.add_option("--p", source.p, "Edge probability for random graphs");
            app.add_option("--seed", source.seed, "Seed for random graphs");
        }

        auto add_budget_options(CLI::App & app, BudgetFlags & flags) -> void
        {
            app.add_option("--budget-nodes", flags.nodes, "Branch-and-bound node limit per stable set solve")->check(CLI::PositiveNumber);
            app.add_option("--budget-seconds", flags.seconds, "Wall-clock limit per solve (nondeterministic)")->check(CLI::PositiveNumber);
            app.add_option("--workers", flags.workers, "Solver threads")->check(CLI::PositiveNumber);
        }

        auto require_positive(int value, const std::string & flag) -> void
        {
            if (value <= 0)
                throw Error(ErrorKind::InvalidArgument, flag + " must be given and positive");
        }

        auto build_family(const GraphSource & s, long long vertex_budget) -> LoadedGraph
        {
            LoadedGraph result;
            if (s.family == "hamming") {
                HammingParams params{s.q, s.m};
                params.validate(vertex_budget);
                result.name = "hamming-q" + std::to_string(s.q) + "-m" + std::to_string(s.m);
                result.graph = generate(params, vertex_budget);
                result.distances = hamming_distance_matrix(params, vertex_budget);
                result.hamming = params;
                return result;
            }

            if (s.family == "petersen")
                result.graph = petersen_graph();
            else {
                require_positive(s.n, "--n");
                if (s.family == "path")
                    result.graph = path_graph(s.n);
                else if (s.family == "cycle")
                    result.graph = cycle_graph(s.n);
                else if (s.family == "complete")
                    result.graph = complete_graph(s.n);
                else if (s.family == "star")
                    result.graph = star_graph(s.n);
                else if (s.family == "random") {
                    if (! (s.p >= 0 && s.p <= 1))
                        throw Error(ErrorKind::InvalidArgument, "--p must lie in [0, 1]");
                    result.graph = random_connected_graph(s.n, s.p, s.seed);
                }
                else
                    throw Error(ErrorKind::InvalidArgument, "unknown --family '" + s.family + "'");
            }
            result.name = s.family;
            if (s.family == "random")
                result.name += "-n" + std::to_string(s.n) + "-seed" + std::to_string(s.seed);
            else if (s.family != "petersen")
                result.name += "-n" + std::to_string(s.n);
            return result;
        }

        auto load_graph(const GraphSource & s, long long vertex_budget, bool need_distances = true) -> LoadedGraph
        {
            if (s.family.empty() == s.path.empty())
                throw Error(ErrorKind::InvalidArgument, "give exactly one of --family or --graph");
            LoadedGraph result;
            if (! s.path.empty()) {
                result.graph = read_dimacs_file(s.path);
                result.name = std::filesystem::path(s.path).stem().string();
            }
            else
                result = build_family(s, vertex_budget);
            if (need_distances && result.distances.size() != result.graph.size())
                result.distances = all_pairs_distances(result.graph);
            return result;
        }

        auto describe(std::ostream & out, const LoadedGraph & g) -> void
        {
            out << "graph: " << g.name << " (" << g.graph.size() << " vertices, " << g.graph.edge_count()
                << " edges, diameter " << g.distances.diameter() << ")\n";
        }

        auto warn_wall_clock(std::ostream & err, const BudgetFlags & flags) -> void
        {
            if (flags.seconds)
                err << "warning: --budget-seconds makes results depend on machine speed; use --budget-nodes for reproducible runs\n";
            if (flags.workers > 1)
                err << "warning: with --workers > 1 only proven optimal results are reproducible\n";
        }

        auto status_text(PcnStatus s) -> std::string
        {
            return s == PcnStatus::Exact ? "exact" : "bounds";
        }

        auto report(std::ostream & out, const PcnResult & r) -> void
        {
            if (r.status == PcnStatus::Exact)
                out << "chi_rho = " << r.upper << '\n';
            else
                out << "chi_rho in [" << r.lower << ", " << r.upper << "]\n";
            out << "status: " << status_text(r.status) << '\n';
            out << "lower bound source: " << r.lower_source << '\n';
            out << "witness: " << (r.witness ? "verified packing " + std::to_string(r.witness->colour_count()) + "-colouring" : "none") << '\n';
            out << "nodes: " << r.nodes << '\n';
        }

        auto result_exit_code(const PcnResult & r) -> int
        {
            return r.status == PcnStatus::Exact ? exit_success : exit_budget_exhausted;
        }

        auto layer_list(const std::string & text) -> std::vector<int>
        {
            std::vector<int> layers;
            std::stringstream in(text);
            for (std::string item ; std::getline(in, item, ',') ; ) {
                try {
                    std::size_t used = 0;
                    int k = std::stoi(item, &used);
                    if (used != item.size())
                        throw std::invalid_argument(item);
                    layers.push_back(k);
                }
                catch (const std::exception &) {
                    throw Error(ErrorKind::InvalidArgument, "--layers expects comma-separated integers, got '" + text + "'");
                }
            }
            return layers;
        }

        auto cmd_gen(const std::string & family_positional, GraphSource source, const std::string & output,
                const std::string & construction, const std::string & construction_out, long long vertex_budget,
                std::ostream & out) -> int
        {
            if (! family_positional.empty()) {
                if (! source.family.empty() && source.family != family_positional)
                    throw Error(ErrorKind::InvalidArgument, "family given twice");
                source.family = family_positional;
            }
            auto g = load_graph(source, vertex_budget, false);

            if (! construction.empty()) {
                if (! g.hamming)
                    throw Error(ErrorKind::InvalidArgument, "--construction needs --family hamming");
                LayeredStableSet set;
                if (construction == "diagonal") {
                    set.layers = {1};
                    for (int v : diagonal_stable_set(*g.hamming, vertex_budget).members)
                        set.members.push_back(LayeredVertex{v, 1});
                }
                else if (construction == "two-layer")
                    set = theorem4_layered_set(*g.hamming);
                else
                    throw Error(ErrorKind::InvalidArgument, "unknown --construction '" + construction + "'");
                if (construction_out.empty())
                    throw Error(ErrorKind::InvalidArgument, "--construction needs --construction-out");
                write_layered_set_file(construction_out, set);
            }

            if (output.empty())
                write_dimacs(out, g.graph, g.name);
            else
                write_dimacs_file(output, g.graph, g.name);
            return exit_success;
        }

        auto cmd_exact(const GraphSource & source, const BudgetFlags & flags, const std::string & strategy,
                const std::string & upper_bound_file, const std::string & witness_out, bool warm_start,
                long long vertex_budget, std::ostream & out, std::ostream & err) -> int
        {
            auto g = load_graph(source, vertex_budget);
            describe(out, g);
            warn_wall_clock(err, flags);
            out << "strategy: " << strategy << '\n';

            ExactOptions options{flags.budget(), std::nullopt, std::nullopt};
            if (g.hamming && g.hamming->m >= 2 && strategy != "starred-capped") {
                options.alpha_cap = alpha_cap_from_lower_bound(*g.hamming);
                if (warm_start) {
                    HeuristicOptions heuristic;
                    heuristic.vertex_budget = vertex_budget;
                    options.warm_start = hamming_heuristic(*g.hamming, heuristic).layered;
                }
            }

            PcnResult result;
            if (strategy == "iterative")
                result = pcn_exact_iterative(g.graph, g.distances, options);
            else if (strategy == "starred")
                result = pcn_exact_starred(g.graph, g.distances, options);
            else if (strategy == "starred-capped") {
                if (upper_bound_file.empty())
                    throw Error(ErrorKind::InvalidArgument, "--strategy starred-capped needs --upper-bound-file");
                auto witness = read_coloring_file(upper_bound_file, g.graph.size());
                result = pcn_exact_starred_capped(g.graph, g.distances, witness.colour_count(), witness, options.budget);
            }
            else
                throw Error(ErrorKind::InvalidArgument, "unknown --strategy '" + strategy + "'");

            report(out, result);
            if (! witness_out.empty() && result.witness)
                write_coloring_file(witness_out, *result.witness, g.name);
            return result_exit_code(result);
        }

        auto cmd_heuristic(int q, int m, const BudgetFlags & flags, bool use_construction, const std::string & layered_out,
                const std::string & witness_out, long long vertex_budget, std::ostream & out, std::ostream & err) -> int
        {
            HammingParams params{q, m};
            HeuristicOptions options{flags.budget(), vertex_budget, use_construction};
            warn_wall_clock(err, flags);
            auto result = hamming_heuristic(params, options);
            const std::string name = "hamming-q" + std::to_string(q) + "-m" + std::to_string(m);
            out << "graph: " << name << '\n';
            if (result.layered)
                out << "layered stable set: " << result.layered->size() << " members on layers 1.." << m - 1 << " (validated)\n";
            report(out, result);
            if (! layered_out.empty() && result.layered)
                write_layered_set_file(layered_out, *result.layered);
            if (! witness_out.empty() && result.witness)
                write_coloring_file(witness_out, *result.witness, name);
            return result_exit_code(result);
        }

        auto cmd_bounds(int q, int m, std::optional<long long> prev_lower, std::ostream & out) -> int
        {
            HammingParams params{q, m};
            if (q < 2 || m < 1)
                throw Error(ErrorKind::InvalidArgument, "need --q >= 2 and --m >= 1");
            out << "lower bound (product inequality): " << lemma2_lower_bound(params) << '\n';
            try {
                out << "closed form: " << theorem4_value(params) << '\n';
            }
            catch (const Error &) {
                out << "closed form: none\n";
            }
            if (m >= 2) {
                out << "alpha(H^[m-1]) cap from lower bound: " << alpha_cap_from_lower_bound(params) << '\n';
                HammingParams previous{q, m - 1};
                long long prev = prev_lower.value_or(lemma2_lower_bound(previous));
                out << "alpha(H^[m-1]) bound from chi(H_{q,m-1}) >= " << prev << ": "
                    << alpha_upper_bound_propagation(params, prev) << '\n';
            }
            return exit_success;
        }

        auto cmd_verify(const GraphSource & source, const std::string & coloring_file, long long vertex_budget,
                std::ostream & out) -> int
        {
            auto g = load_graph(source, vertex_budget);
            auto colouring = read_coloring_file(coloring_file, g.graph.size());
            if (verify_packing_coloring(g.distances, colouring)) {
                out << "valid packing " << colouring.colour_count() << "-colouring of " << g.name << '\n';
                return exit_success;
            }
            out << "invalid packing colouring of " << g.name << '\n';
            return exit_verification_failed;
        }

        auto cmd_export_lp(const GraphSource & source, const std::string & layers_text, const std::string & output,
                long long vertex_budget, std::ostream & out) -> int
        {
            auto g = load_graph(source, vertex_budget);
            auto layers = layers_text.empty() ? layer_range(std::max(1, g.distances.diameter() - 1)) : layer_list(layers_text);
            auto model = export_ilp(g.graph, g.distances, layers);
            model.name = "stable set of " + g.name + " layered";
            if (output.empty())
                write_lp(out, model);
            else {
                write_lp_file(output, model);
                out << "wrote " << output << ": " << model.binaries.size() << " binaries, " << model.constraints.size()
                    << " constraints\n";
            }
            return exit_success;
        }

        auto cmd_table(std::vector<int> ms, int q_min, int q_max, const BudgetFlags & flags, const std::string & csv,
                long long vertex_budget, std::ostream & out, std::ostream & err) -> int
        {
            if (ms.empty())
                throw Error(ErrorKind::InvalidArgument, "table needs at least one --m");
            if (q_min < 2 || q_max < q_min)
                throw Error(ErrorKind::InvalidArgument, "need 2 <= --q-min <= --q-max");
            warn_wall_clock(err, flags);

            std::vector<BoundsRow> rows;
            for (int m : ms)
                for (int q = q_min ; q <= q_max ; ++q) {
                    HammingParams params{q, m};
                    auto count = params.vertex_count();
                    if (m < 1 || count < 0 || count > vertex_budget) {
                        rows.push_back(BoundsRow{q, m, std::nullopt, std::nullopt, "skipped"});
                        continue;
                    }
                    HeuristicOptions heuristic{flags.budget(), vertex_budget, true};
                    auto r = hamming_exact(params, heuristic, flags.budget());
                    rows.push_back(BoundsRow{q, m, r.lower, r.upper, status_text(r.status)});
                }

            out << render_bounds_table(rows);
            out << "every UB is certified by a verified witness colouring\n";
            if (! csv.empty()) {
                std::ofstream file(csv, std::ios::binary);
                if (! file)
                    throw Error(ErrorKind::Io, "cannot open '" + csv + "' for writing");
                file << render_bounds_csv(rows);
            }
            return exit_success;
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Packing chromatic number solver"};
        app.require_subcommand(1);
        long long vertex_budget = 0;
        app.add_option("--vertex-budget", vertex_budget, "Largest Hamming graph to build (default from "
                + std::string(vertex_budget_env) + " or 10000)");

        GraphSource gen_source, exact_source, verify_source, lp_source;
        BudgetFlags exact_flags, heuristic_flags, table_flags;
        std::string gen_family, gen_output, construction, construction_out;
        std::string strategy = "iterative", upper_bound_file, witness_out, heuristic_witness_out, layered_out;
        std::string coloring_file, lp_layers, lp_output, csv;
        bool no_warm_start = false, no_construction = false;
        int heuristic_q = 0, heuristic_m = 0, bounds_q = 0, bounds_m = 0, q_min = 3, q_max = 10;
        std::optional<long long> prev_lower;
        std::vector<int> table_ms;

        auto gen = app.add_subcommand("gen", "Write a graph in DIMACS format");
        gen->add_option("graph-family", gen_family, "Graph family (same as --family)");
        add_source_options(*gen, gen_source);
        gen->add_option("-o,--output", gen_output, "DIMACS output path (default stdout)");
        gen->add_option("--construction", construction, "Stable set construction: diagonal, two-layer");
        gen->add_option("--construction-out", construction_out, "Where to write the construction");

        auto exact = app.add_subcommand("exact", "Compute the packing chromatic number");
        add_source_options(*exact, exact_source);
        add_budget_options(*exact, exact_flags);
        exact->add_option("--strategy", strategy, "iterative, starred or starred-capped")
            ->check(CLI::IsMember({"iterative", "starred", "starred-capped"}));
        exact->add_option("--upper-bound-file", upper_bound_file, "Colouring certifying the cap t (starred-capped)");
        exact->add_option("--witness-out", witness_out, "Write the witness colouring here");
        exact->add_flag("--no-warm-start", no_warm_start, "Skip the heuristic warm start on Hamming graphs");

        auto heuristic = app.add_subcommand("heuristic", "Constructive upper bound for H_{q,m}");
        heuristic->add_option("--q", heuristic_q, "Alphabet size")->required();
        heuristic->add_option("--m", heuristic_m, "Word length")->required();
        add_budget_options(*heuristic, heuristic_flags);
        heuristic->add_flag("--no-construction", no_construction, "Do not seed m=3 with the optimal construction");
        heuristic->add_option("--layered-out", layered_out, "Write the layered stable set here");
        heuristic->add_option("--witness-out", heuristic_witness_out, "Write the witness colouring here");

        auto bounds = app.add_subcommand("bounds", "Closed-form bounds for H_{q,m}");
        bounds->add_option("--q", bounds_q, "Alphabet size")->required();
        bounds->add_option("--m", bounds_m, "Word length")->required();
        bounds->add_option("--prev-lower", prev_lower, "Known lower bound on chi(H_{q,m-1})");

        auto verify = app.add_subcommand("verify", "Check a packing colouring file");
        add_source_options(*verify, verify_source);
        verify->add_option("--coloring", coloring_file, "Colouring file")->required();

        auto export_lp = app.add_subcommand("export-lp", "Write the set-packing model of alpha(G^F)");
        add_source_options(*export_lp, lp_source);
        export_lp->add_option("--layers", lp_layers, "Comma-separated layer set F (default 1..d-1)");
        export_lp->add_option("-o,--output", lp_output, "LP output path (default stdout)");

        auto table = app.add_subcommand("table", "Tabulate bounds for Hamming graphs");
        table->add_option("--m", table_ms, "Word lengths")->required();
        table->add_option("--q-min", q_min, "Smallest alphabet");
        table->add_option("--q-max", q_max, "Largest alphabet");
        add_budget_options(*table, table_flags);
        table->add_option("--csv", csv, "Also write comma-separated values here");

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_success;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << '\n';
            return exit_invalid_input;
        }

        try {
            if (vertex_budget <= 0)
                vertex_budget = default_vertex_budget_from_env();
            if (gen->parsed())
                return cmd_gen(gen_family, gen_source, gen_output, construction, construction_out, vertex_budget, out);
            if (exact->parsed())
                return cmd_exact(exact_source, exact_flags, strategy, upper_bound_file, witness_out, ! no_warm_start,
                        vertex_budget, out, err);
            if (heuristic->parsed())
                return cmd_heuristic(heuristic_q, heuristic_m, heuristic_flags, ! no_construction, layered_out,
                        heuristic_witness_out, vertex_budget, out, err);
            if (bounds->parsed())
                return cmd_bounds(bounds_q, bounds_m, prev_lower, out);
            if (verify->parsed())
                return cmd_verify(verify_source, coloring_file, vertex_budget, out);
            if (export_lp->parsed())
                return cmd_export_lp(lp_source, lp_layers, lp_output, vertex_budget, out);
            if (table->parsed())
                return cmd_table(table_ms, q_min, q_max, table_flags, csv, vertex_budget, out, err);
        }
        catch (const Error & e) {
            err << "error: " << e.what() << '\n';
            return e.kind() == ErrorKind::BudgetExhausted ? exit_budget_exhausted : exit_invalid_input;
        }
        return exit_invalid_input;
    }
}
