#include <pcn/pcn.hh>
#include <pcn/errors.hh>

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace pcn
{
    auto PackingColoring::colour_count() const -> int
    {
        int result = 0;
        for (int c : colours)
            result = std::max(result, c);
        return result;
    }

    auto verify_packing_coloring(const DistanceMatrix & dm, const PackingColoring & c) -> bool
    {
        const int n = dm.size();
        if (static_cast<int>(c.colours.size()) != n)
            return false;
        std::map<int, std::vector<int>> classes;
        for (int v = 0 ; v < n ; ++v) {
            if (c.colours[v] < 1)
                return false;
            classes[c.colours[v]].push_back(v);
        }
        for (auto & [colour, members] : classes)
            for (std::size_t i = 0 ; i < members.size() ; ++i)
                for (std::size_t j = i + 1 ; j < members.size() ; ++j)
                    if (dm(members[i], members[j]) < colour + 1)
                        return false;
        return true;
    }

    auto compact_coloring(const PackingColoring & c) -> PackingColoring
    {
        std::vector<int> used = c.colours;
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());

        PackingColoring result;
        result.colours.reserve(c.colours.size());
        for (int colour : c.colours)
            result.colours.push_back(static_cast<int>(std::lower_bound(used.begin(), used.end(), colour) - used.begin()) + 1);
        return result;
    }

    auto coloring_from_layered_set(const LayeredStableSet & s, int base_size, int extra_base) -> PackingColoring
    {
        PackingColoring result;
        result.colours.assign(base_size, 0);
        for (auto & m : s.members) {
            if (m.is_star())
                throw Error(ErrorKind::StarMembersPresent, "layer " + std::to_string(m.layer) + " has its star vertex selected");
            if (m.vertex < 0 || m.vertex >= base_size)
                throw Error(ErrorKind::InvalidArgument, "member vertex " + std::to_string(m.vertex + 1) + " out of range");
            if (result.colours[m.vertex] != 0)
                throw Error(ErrorKind::InvalidArgument, "column " + std::to_string(m.vertex + 1) + " appears twice");
            result.colours[m.vertex] = m.layer;
        }
        int next = extra_base;
        for (auto & colour : result.colours)
            if (colour == 0)
                colour = ++next;
        return result;
    }

    auto layered_set_from_coloring(const PackingColoring & c, const std::vector<int> & layers, bool starred) -> LayeredStableSet
    {
        LayeredStableSet result;
        result.layers = layers;
        std::sort(result.layers.begin(), result.layers.end());
        std::vector<char> layer_used(result.layers.size(), 0);
        for (int v = 0 ; v < static_cast<int>(c.colours.size()) ; ++v) {
            auto it = std::lower_bound(result.layers.begin(), result.layers.end(), c.colours[v]);
            if (it != result.layers.end() && *it == c.colours[v]) {
                result.members.push_back(LayeredVertex{v, c.colours[v]});
                layer_used[it - result.layers.begin()] = 1;
            }
        }
        if (starred)
            for (std::size_t r = 0 ; r < result.layers.size() ; ++r)
                if (! layer_used[r])
                    result.members.push_back(LayeredVertex{LayeredVertex::star, result.layers[r]});
        return result;
    }

    auto normalise_starred_set(const LayeredStableSet & s, int base_size) -> LayeredStableSet
    {
        std::vector<char> covered(base_size, 0);
        LayeredStableSet result;
        result.layers = s.layers;
        std::vector<int> stars;
        for (auto & m : s.members) {
            if (m.is_star())
                stars.push_back(m.layer);
            else {
                covered[m.vertex] = 1;
                result.members.push_back(m);
            }
        }
        std::sort(stars.begin(), stars.end());

        std::size_t next_star = 0;
        for (int v = 0 ; v < base_size && next_star < stars.size() ; ++v)
            if (! covered[v])
                result.members.push_back(LayeredVertex{v, stars[next_star++]});
        for ( ; next_star < stars.size() ; ++next_star)
            result.members.push_back(LayeredVertex{LayeredVertex::star, stars[next_star]});

        std::sort(result.members.begin(), result.members.end(), [] (const LayeredVertex & a, const LayeredVertex & b) {
            return std::pair(a.layer, a.vertex) < std::pair(b.layer, b.vertex);
        });
        return result;
    }

    namespace
    {
        auto non_star_part(const LayeredStableSet & s) -> LayeredStableSet
        {
            LayeredStableSet result;
            result.layers = s.layers;
            for (auto & m : s.members)
                if (! m.is_star())
                    result.members.push_back(m);
            return result;
        }

        auto witness_from(const LayeredStableSet & s, int base_size, int extra_base) -> PackingColoring
        {
            auto normalised = normalise_starred_set(s, base_size);
            return compact_coloring(coloring_from_layered_set(non_star_part(normalised), base_size, extra_base));
        }

        auto complete_graph_result(int n) -> PcnResult
        {
            PcnResult result;
            result.lower = result.upper = n;
            result.status = PcnStatus::Exact;
            PackingColoring c;
            for (int v = 1 ; v <= n ; ++v)
                c.colours.push_back(v);
            result.witness = c;
            result.lower_source = "complete graph";
            return result;
        }

        auto require_graph(const Graph & g, const DistanceMatrix & dm) -> void
        {
            if (g.size() == 0)
                throw Error(ErrorKind::InvalidArgument, "graph has no vertices");
            if (dm.size() != g.size())
                throw Error(ErrorKind::InvalidArgument, "distance matrix does not match graph");
        }

        auto solve_layered(const LayeredGraph & lg, const SolveBudget & budget, const std::optional<LayeredStableSet> & warm_start,
                std::optional<long long> alpha_cap) -> SolveResult
        {
            SolveOptions options;
            options.budget = budget;
            if (warm_start) {
                if (warm_start->layers != lg.layers())
                    throw Error(ErrorKind::InvalidInitialSet, "warm start layers do not match the layered graph");
                options.initial = to_layered_ids(lg, *warm_start);
            }
            if (alpha_cap)
                options.alpha_cap = static_cast<int>(std::min<long long>(*alpha_cap, lg.size()));
            return solve_mss(lg.graph(), options);
        }

        auto trivial_lower_bound(const Graph & g) -> long long
        {
            return std::min(g.size(), 2);
        }

        auto finish(PcnResult result, const DistanceMatrix & dm) -> PcnResult
        {
            if (! result.witness || ! verify_packing_coloring(dm, *result.witness))
                throw Error(ErrorKind::InvalidArgument, "internal error: witness colouring failed verification");
            result.upper = result.witness->colour_count();
            if (result.lower > result.upper)
                throw Error(ErrorKind::InvalidArgument, "internal error: lower bound " + std::to_string(result.lower)
                        + " above certified upper bound " + std::to_string(result.upper));
            result.status = result.lower == result.upper ? PcnStatus::Exact : PcnStatus::Bounds;
            return result;
        }
    }

    auto pcn_exact_iterative(const Graph & g, const DistanceMatrix & dm, const ExactOptions & options) -> PcnResult
    {
        require_graph(g, dm);
        const int n = g.size(), d = dm.diameter();
        if (d <= 1)
            return complete_graph_result(n);

        auto lg = layered_graph(g, dm, layer_range(d - 1), false);
        auto top = solve_layered(lg, options.budget, options.warm_start, options.alpha_cap);

        PcnResult result;
        result.nodes = top.nodes;
        auto top_set = from_layered_ids(lg, top.best.members);
        result.layered = top_set;
        result.witness = witness_from(top_set, n, d - 1);
        result.lower_source = "solver";

        if (top.upper < n) {
            // alpha(G^{[d-1]}) < n, so chi = (d - 1) + n - alpha.
            result.lower = (d - 1) + n - top.upper;
            return finish(result, dm);
        }

        if (top.lower < n) {
            result.lower = trivial_lower_bound(g);
            result.lower_source = "trivial";
            return finish(result, dm);
        }

        // alpha(G^{[d-1]}) = n: chi is the smallest k with alpha(G^{[k]}) = n.
        for (int k = d - 2 ; k >= 1 ; --k) {
            auto lk = layered_graph(g, dm, layer_range(k), false);
            auto r = solve_layered(lk, options.budget, std::nullopt, std::nullopt);
            result.nodes += r.nodes;
            if (r.lower == n) {
                auto full = from_layered_ids(lk, r.best.members);
                result.layered = full;
                result.witness = witness_from(full, n, k);
                continue;
            }
            if (r.upper < n)
                result.lower = k + 1;
            else {
                result.lower = trivial_lower_bound(g);
                result.lower_source = "trivial";
            }
            return finish(result, dm);
        }

        result.lower = 1;
        return finish(result, dm);
    }

    auto pcn_exact_iterative(const Graph & g, const SolveBudget & budget) -> PcnResult
    {
        return pcn_exact_iterative(g, all_pairs_distances(g), ExactOptions{budget, std::nullopt, std::nullopt});
    }

    auto pcn_exact_starred(const Graph & g, const DistanceMatrix & dm, const ExactOptions & options) -> PcnResult
    {
        require_graph(g, dm);
        const int n = g.size(), d = dm.diameter();
        if (d <= 1)
            return complete_graph_result(n);

        auto lg = layered_graph(g, dm, layer_range(d - 1), true);
        auto r = solve_layered(lg, options.budget, options.warm_start, options.alpha_cap);

        PcnResult result;
        result.nodes = r.nodes;
        auto set = from_layered_ids(lg, r.best.members);
        result.layered = set;
        result.witness = witness_from(set, n, d - 1);
        result.lower = (d - 1) + n - r.upper;
        result.lower_source = "solver";
        return finish(result, dm);
    }

    auto pcn_exact_starred(const Graph & g, const SolveBudget & budget) -> PcnResult
    {
        return pcn_exact_starred(g, all_pairs_distances(g), ExactOptions{budget, std::nullopt, std::nullopt});
    }

    auto pcn_exact_starred_capped(const Graph & g, const DistanceMatrix & dm, int t, const PackingColoring & upper_witness,
            const SolveBudget & budget) -> PcnResult
    {
        require_graph(g, dm);
        const int n = g.size();
        if (t < 1)
            throw Error(ErrorKind::InvalidUpperBound, "upper bound t must be at least 1, got " + std::to_string(t));
        if (! verify_packing_coloring(dm, upper_witness))
            throw Error(ErrorKind::InvalidUpperBound, "supplied colouring is not a packing colouring of the graph");
        auto compact = compact_coloring(upper_witness);
        if (compact.colour_count() > t)
            throw Error(ErrorKind::InvalidUpperBound, "supplied colouring uses " + std::to_string(compact.colour_count())
                    + " colours, more than t=" + std::to_string(t));

        const int layers = std::min(t, n);
        auto lg = layered_graph(g, dm, layer_range(layers), true);
        auto r = solve_layered(lg, budget, layered_set_from_coloring(compact, lg.layers(), true), std::nullopt);

        PcnResult result;
        result.nodes = r.nodes;
        auto set = from_layered_ids(lg, r.best.members);
        result.layered = set;
        result.witness = witness_from(set, n, layers);
        result.lower = static_cast<long long>(n) + layers - r.upper;
        result.lower_source = "solver";
        return finish(result, dm);
    }

    auto pcn_exact_starred_capped(const Graph & g, int t, const PackingColoring & upper_witness, const SolveBudget & budget) -> PcnResult
    {
        return pcn_exact_starred_capped(g, all_pairs_distances(g), t, upper_witness, budget);
    }

    auto lemma7_alpha_formula(const Graph & g, const DistanceMatrix & dm, int p, const SolveBudget & budget) -> long long
    {
        require_graph(g, dm);
        if (p < 1 || p > g.size())
            throw Error(ErrorKind::InvalidArgument, "p must lie in [1, n], got " + std::to_string(p));

        long long best = p;
        for (int t = 1 ; t <= p ; ++t) {
            auto r = solve_mss(layered_graph(g, dm, layer_range(t), false).graph(), budget);
            if (r.status != SolveStatus::Optimal)
                throw Error(ErrorKind::BudgetExhausted, "alpha(G^[" + std::to_string(t) + "]) not proved within budget");
            best = std::max<long long>(best, r.lower + p - t);
        }
        return best;
    }

    namespace
    {
        auto split_budget(const SolveBudget & total, int parts) -> SolveBudget
        {
            SolveBudget result = total;
            if (! total.nodes && ! total.seconds)
                result.nodes = default_heuristic_nodes;
            if (total.nodes)
                result.nodes = std::max<long long>(1, *total.nodes / parts);
            if (total.seconds)
                result.seconds = *total.seconds / parts;
            return result;
        }

        auto closed_form_bounds(const HammingParams & p, const DistanceMatrix & dm, LayeredStableSet set) -> PcnResult
        {
            const int n = dm.size();
            if (! validate_layered_set(dm, set))
                throw Error(ErrorKind::InvalidArgument, "internal error: heuristic produced an invalid layered set");
            PcnResult result;
            result.witness = witness_from(set, n, p.m - 1);
            result.layered = std::move(set);
            result.lower = lemma2_lower_bound(p);
            result.lower_source = "closed-form";
            return finish(result, dm);
        }
    }

    auto hamming_heuristic(const HammingParams & p, const HeuristicOptions & options) -> PcnResult
    {
        p.validate(options.vertex_budget);
        validate_budget(options.budget);
        const int n = static_cast<int>(p.vertex_count());

        if (p.m == 1) {
            auto result = complete_graph_result(n);
            result.lower_source = "closed-form";
            return result;
        }

        auto dm = hamming_distance_matrix(p, options.vertex_budget);

        LayeredStableSet set;
        set.layers = layer_range(p.m - 1);
        int first_open_layer = 2;
        if (options.use_construction && p.m == 3 && p.q >= 3) {
            set = theorem4_layered_set(p);
            first_open_layer = 3;
        }
        else
            for (int v : diagonal_stable_set(p, options.vertex_budget).members)
                set.members.push_back(LayeredVertex{v, 1});

        Bitset used(n);
        for (auto & m : set.members)
            used.set(m.vertex);

        auto step_budget = split_budget(options.budget, p.m - 1);
        long long nodes = 0;
        for (int k = first_open_layer ; k <= p.m - 1 ; ++k) {
            auto power = power_graph(dm, k);
            auto greedy = greedy_maximal_stable_set(power, used);

            std::vector<int> keep, position(n, -1);
            for (int v = 0 ; v < n ; ++v)
                if (! used.test(v)) {
                    position[v] = static_cast<int>(keep.size());
                    keep.push_back(v);
                }
            std::vector<int> initial;
            for (int v : greedy.members)
                initial.push_back(position[v]);

            auto r = solve_mss(induced_subgraph(power, keep), SolveOptions{step_budget, initial, std::nullopt});
            nodes += r.nodes;
            for (int local : r.best.members) {
                set.members.push_back(LayeredVertex{keep[local], k});
                used.set(keep[local]);
            }
        }

        auto result = closed_form_bounds(p, dm, std::move(set));
        result.nodes = nodes;
        return result;
    }

    auto hamming_exact(const HammingParams & p, const HeuristicOptions & heuristic, const SolveBudget & exact_budget) -> PcnResult
    {
        auto warm = hamming_heuristic(p, heuristic);
        if (p.m == 1)
            return warm;

        auto g = generate(p, heuristic.vertex_budget);
        auto dm = hamming_distance_matrix(p, heuristic.vertex_budget);
        auto exact = pcn_exact_iterative(g, dm, ExactOptions{exact_budget, warm.layered, alpha_cap_from_lower_bound(p)});

        PcnResult result = exact.upper <= warm.upper ? exact : warm;
        result.nodes = warm.nodes + exact.nodes;
        if (exact.lower >= warm.lower) {
            result.lower = exact.lower;
            result.lower_source = exact.lower > warm.lower ? exact.lower_source : warm.lower_source;
        }
        else {
            result.lower = warm.lower;
            result.lower_source = warm.lower_source;
        }
        return finish(result, dm);
    }

    auto pcn_bruteforce(const Graph & g) -> int
    {
        const int n = g.size();
        if (n > bruteforce_max_vertices)
            throw Error(ErrorKind::TooLarge, "exhaustive search is limited to " + std::to_string(bruteforce_max_vertices)
                    + " vertices, got " + std::to_string(n));
        if (n == 0)
            return 0;

        // Floyd-Warshall keeps this independent of the BFS distance code.
        constexpr int far = std::numeric_limits<int>::max() / 4;
        std::vector<std::vector<int>> dist(n, std::vector<int>(n, far));
        for (int u = 0 ; u < n ; ++u) {
            dist[u][u] = 0;
            for (int v = 0 ; v < n ; ++v)
                if (g.adjacent(u, v))
                    dist[u][v] = 1;
        }
        for (int w = 0 ; w < n ; ++w)
            for (int u = 0 ; u < n ; ++u)
                for (int v = 0 ; v < n ; ++v)
                    dist[u][v] = std::min(dist[u][v], dist[u][w] + dist[w][v]);

        int best = n;
        std::vector<int> colour(n, 0);
        auto search = [&] (auto & self, int v, int used) -> void {
            if (used >= best)
                return;
            if (v == n) {
                best = used;
                return;
            }
            for (int c = 1 ; c < best ; ++c) {
                bool feasible = true;
                for (int u = 0 ; u < v && feasible ; ++u)
                    if (colour[u] == c && dist[u][v] <= c)
                        feasible = false;
                if (! feasible)
                    continue;
                colour[v] = c;
                self(self, v + 1, std::max(used, c));
            }
            colour[v] = 0;
        };
        search(search, 0, 0);
        return best;
    }
}
