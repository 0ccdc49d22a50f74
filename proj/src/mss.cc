#include <pcn/mss.hh>
#include <pcn/errors.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

namespace pcn
{
    auto is_stable(const Graph & g, std::span<const int> members) -> bool
    {
        Bitset seen(g.size());
        for (int v : members) {
            if (v < 0 || v >= g.size() || seen.test(v))
                return false;
            if (g.neighbours(v).intersects(seen))
                return false;
            seen.set(v);
        }
        return true;
    }

    auto certify_stable_set(const Graph & g, std::vector<int> members) -> StableSet
    {
        std::sort(members.begin(), members.end());
        if (! is_stable(g, members))
            throw Error(ErrorKind::InvalidInitialSet, "vertex set is not stable in a graph of "
                    + std::to_string(g.size()) + " vertices");
        return StableSet{std::move(members), true};
    }

    auto is_maximal_stable(const Graph & g, std::span<const int> members, const Bitset & frozen) -> bool
    {
        if (! is_stable(g, members))
            return false;
        Bitset in_set(g.size()), dominated(g.size());
        for (int v : members) {
            if (frozen.test(v))
                return false;
            in_set.set(v);
            dominated |= g.neighbours(v);
        }
        for (int v = 0 ; v < g.size() ; ++v)
            if (! frozen.test(v) && ! in_set.test(v) && ! dominated.test(v))
                return false;
        return true;
    }

    auto greedy_maximal_stable_set(const Graph & g, const Bitset & frozen) -> StableSet
    {
        const int n = g.size();
        Bitset candidates(n);
        candidates.set_all();
        candidates.subtract(frozen);

        std::vector<int> degree(n, 0);
        candidates.for_each([&] (int v) { degree[v] = g.neighbours(v).intersection_count(candidates); });

        std::vector<int> chosen;
        while (candidates.any()) {
            int best = -1;
            candidates.for_each([&] (int v) {
                if (best == -1 || degree[v] < degree[best])
                    best = v;
            });
            chosen.push_back(best);

            Bitset removed = g.neighbours(best);
            removed &= candidates;
            removed.set(best);
            candidates.subtract(removed);
            removed.for_each([&] (int u) {
                g.neighbours(u).for_each([&] (int w) {
                    if (candidates.test(w))
                        --degree[w];
                });
            });
        }

        std::sort(chosen.begin(), chosen.end());
        return StableSet{std::move(chosen), true};
    }

    auto greedy_maximal_stable_set(const Graph & g) -> StableSet
    {
        return greedy_maximal_stable_set(g, Bitset(g.size()));
    }

    namespace
    {
        auto closed_neighbourhood_cliques(const Graph & base) -> std::vector<std::vector<int>>
        {
            std::vector<std::vector<int>> cliques;
            cliques.reserve(base.size());
            for (int v = 0 ; v < base.size() ; ++v) {
                Bitset closed = base.neighbours(v);
                closed.set(v);
                cliques.push_back(closed.to_vector());
            }
            return cliques;
        }

        // Scans edges of target in (min, max) order and grows each uncovered
        // one into a maximal clique, smallest compatible id first.
        auto cover_remaining_edges(const Graph & target, std::vector<std::vector<int>> cliques) -> std::vector<std::vector<int>>
        {
            const int n = target.size();
            std::vector<Bitset> covered(n, Bitset(n));
            auto mark = [&] (const std::vector<int> & clique) {
                Bitset members(n);
                for (int v : clique)
                    members.set(v);
                for (int v : clique)
                    covered[v] |= members;
            };
            for (auto & clique : cliques)
                mark(clique);

            for (int u = 0 ; u < n ; ++u) {
                const Bitset & row = target.neighbours(u);
                for (int v = row.find_next(u + 1) ; v != -1 ; v = row.find_next(v + 1)) {
                    if (covered[u].test(v))
                        continue;
                    std::vector<int> clique{u, v};
                    Bitset compatible = row;
                    compatible &= target.neighbours(v);
                    for (int w = compatible.find_first() ; w != -1 ; w = compatible.find_first()) {
                        clique.push_back(w);
                        compatible &= target.neighbours(w);
                    }
                    std::sort(clique.begin(), clique.end());
                    mark(clique);
                    cliques.push_back(std::move(clique));
                }
            }
            return cliques;
        }
    }

    auto clique_cover_even(const Graph & g, const DistanceMatrix & dm, int power) -> CliqueCover
    {
        if (power < 2 || power % 2 != 0)
            throw Error(ErrorKind::InvalidArgument, "even clique cover needs an even power >= 2, got " + std::to_string(power));
        return CliqueCover{power, closed_neighbourhood_cliques(power_graph(g, dm, power / 2))};
    }

    auto clique_cover_odd(const Graph & g, const DistanceMatrix & dm, int power) -> CliqueCover
    {
        if (power < 3 || power % 2 != 1)
            throw Error(ErrorKind::InvalidArgument, "odd clique cover needs an odd power >= 3, got " + std::to_string(power));
        auto base = closed_neighbourhood_cliques(power_graph(g, dm, (power - 1) / 2));
        return CliqueCover{power, cover_remaining_edges(power_graph(g, dm, power), std::move(base))};
    }

    auto clique_cover_edges(const Graph & g) -> CliqueCover
    {
        return CliqueCover{1, cover_remaining_edges(g, {})};
    }

    auto clique_cover(const Graph & g, const DistanceMatrix & dm, int power) -> CliqueCover
    {
        if (power == 1)
            return clique_cover_edges(g);
        if (power % 2 == 0)
            return clique_cover_even(g, dm, power);
        return clique_cover_odd(g, dm, power);
    }

    auto validate_cover(const CliqueCover & cover, const Graph & g_power) -> bool
    {
        const int n = g_power.size();
        std::vector<Bitset> covered(n, Bitset(n));
        for (auto & clique : cover.cliques) {
            Bitset members(n);
            for (int v : clique) {
                if (v < 0 || v >= n || members.test(v))
                    return false;
                members.set(v);
            }
            for (int v : clique) {
                Bitset others = members;
                others.reset(v);
                if (! others.is_subset_of(g_power.neighbours(v)))
                    return false;
            }
            for (int v : clique)
                covered[v] |= members;
        }
        for (int v = 0 ; v < n ; ++v)
            if (! g_power.neighbours(v).is_subset_of(covered[v]))
                return false;
        return true;
    }

    auto validate_budget(const SolveBudget & budget) -> void
    {
        if (budget.seconds && ! (*budget.seconds > 0))
            throw Error(ErrorKind::InvalidArgument, "time limit must be positive");
        if (budget.nodes && *budget.nodes <= 0)
            throw Error(ErrorKind::InvalidArgument, "node limit must be positive");
        if (budget.workers < 1)
            throw Error(ErrorKind::InvalidArgument, "worker count must be positive");
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct ColouredVertex
        {
            int vertex;
            int colour;
        };

        // Search state shared by all workers. Vertices are relabelled so
        // that bit order is the static branching order.
        class BranchAndBound
        {
            public:
                BranchAndBound(const Graph & g, const SolveOptions & options) :
                    _n(g.size()),
                    _budget(options.budget),
                    _cap(options.alpha_cap),
                    _start(Clock::now())
                {
                    // Low-degree vertices first: they join many cliques of the
                    // partition, so high-degree vertices are branched on first.
                    _order.resize(_n);
                    std::iota(_order.begin(), _order.end(), 0);
                    std::stable_sort(_order.begin(), _order.end(), [&] (int a, int b) {
                        return g.degree(a) < g.degree(b);
                    });
                    std::vector<int> position(_n);
                    for (int i = 0 ; i < _n ; ++i)
                        position[_order[i]] = i;

                    _adjacency.assign(_n, Bitset(_n));
                    for (int i = 0 ; i < _n ; ++i)
                        g.neighbours(_order[i]).for_each([&] (int w) { _adjacency[i].set(position[w]); });

                    if (options.initial) {
                        for (int v : *options.initial)
                            _best.push_back(position[v]);
                        _best_size.store(static_cast<int>(_best.size()));
                    }
                }

                auto run() -> SolveResult
                {
                    Bitset all(_n);
                    all.set_all();

                    std::vector<ColouredVertex> root;
                    if (! cap_reached())
                        colour_sort(all, 0, root);
                    _completed.assign(root.size(), 0);
                    _nodes.fetch_add(1);

                    std::atomic<int> next{static_cast<int>(root.size()) - 1};
                    auto worker = [&] () {
                        std::vector<int> current;
                        for (int i = next.fetch_sub(1) ; i >= 0 ; i = next.fetch_sub(1)) {
                            if (_stop.load())
                                return;
                            if (root[i].colour > _best_size.load()) {
                                Bitset candidates = all;
                                for (std::size_t j = i + 1 ; j < root.size() ; ++j)
                                    candidates.reset(root[j].vertex);
                                const int v = root[i].vertex;
                                candidates.subtract(_adjacency[v]);
                                candidates.reset(v);
                                current.assign(1, v);
                                if (candidates.none())
                                    offer(current);
                                else
                                    expand(current, candidates);
                            }
                            if (! _aborted.load())
                                _completed[i] = 1;
                        }
                    };

                    if (_budget.workers <= 1 || root.size() < 2)
                        worker();
                    else {
                        std::vector<std::jthread> threads;
                        for (int t = 0 ; t < _budget.workers ; ++t)
                            threads.emplace_back(worker);
                    }

                    SolveResult result;
                    std::vector<int> members;
                    for (int v : _best)
                        members.push_back(_order[v]);
                    std::sort(members.begin(), members.end());
                    result.best = StableSet{std::move(members), true};
                    result.lower = result.best.size();
                    result.nodes = _nodes.load();

                    if (_aborted.load()) {
                        int upper = result.lower;
                        for (std::size_t i = 0 ; i < root.size() ; ++i)
                            if (! _completed[i])
                                upper = std::max(upper, root[i].colour);
                        if (_cap)
                            upper = std::min(upper, *_cap);
                        result.upper = std::max(upper, result.lower);
                        result.status = result.upper == result.lower ? SolveStatus::Optimal : SolveStatus::BudgetExhausted;
                    }
                    else {
                        result.upper = result.lower;
                        result.status = SolveStatus::Optimal;
                    }
                    return result;
                }

            private:
                int _n;
                SolveBudget _budget;
                std::optional<int> _cap;
                Clock::time_point _start;

                std::vector<int> _order;
                std::vector<Bitset> _adjacency;

                std::mutex _best_mutex;
                std::vector<int> _best;
                std::atomic<int> _best_size{0};

                std::atomic<long long> _nodes{0};
                std::atomic<bool> _stop{false}, _aborted{false};
                std::vector<char> _completed;

                auto cap_reached() const -> bool
                {
                    return _cap && _best_size.load() >= *_cap;
                }

                auto offer(const std::vector<int> & candidate) -> void
                {
                    std::lock_guard lock(_best_mutex);
                    if (static_cast<int>(candidate.size()) > _best_size.load()) {
                        _best = candidate;
                        _best_size.store(static_cast<int>(candidate.size()));
                        if (cap_reached())
                            _stop.store(true);
                    }
                }

                auto charge_node() -> bool
                {
                    long long count = _nodes.fetch_add(1) + 1;
                    if (_budget.nodes && count >= *_budget.nodes) {
                        _aborted.store(true);
                        _stop.store(true);
                    }
                    else if (_budget.seconds && count % 256 == 0) {
                        std::chrono::duration<double> elapsed = Clock::now() - _start;
                        if (elapsed.count() >= *_budget.seconds) {
                            _aborted.store(true);
                            _stop.store(true);
                        }
                    }
                    return ! _stop.load();
                }

                // Greedy partition of candidates into cliques of g. Only
                // vertices whose clique index can still beat the incumbent
                // are emitted, in non-decreasing clique index.
                auto colour_sort(const Bitset & candidates, int depth, std::vector<ColouredVertex> & out) const -> void
                {
                    out.clear();
                    const int min_colour = _best_size.load() - depth + 1;
                    Bitset uncoloured = candidates;
                    for (int colour = 1 ; uncoloured.any() ; ++colour) {
                        Bitset open = uncoloured;
                        for (int v = open.find_first() ; v != -1 ; v = open.find_next(v + 1)) {
                            uncoloured.reset(v);
                            open &= _adjacency[v];
                            if (colour >= min_colour)
                                out.push_back(ColouredVertex{v, colour});
                        }
                    }
                }

                auto expand(std::vector<int> & current, Bitset & candidates) -> void
                {
                    if (! charge_node())
                        return;

                    const int depth = static_cast<int>(current.size());
                    std::vector<ColouredVertex> order;
                    colour_sort(candidates, depth, order);

                    for (int i = static_cast<int>(order.size()) - 1 ; i >= 0 ; --i) {
                        if (depth + order[i].colour <= _best_size.load() || _stop.load())
                            return;
                        const int v = order[i].vertex;
                        Bitset next = candidates;
                        next.subtract(_adjacency[v]);
                        next.reset(v);
                        current.push_back(v);
                        if (next.none())
                            offer(current);
                        else
                            expand(current, next);
                        current.pop_back();
                        candidates.reset(v);
                    }
                }
        };
    }

    auto solve_mss(const Graph & g, const SolveOptions & options) -> SolveResult
    {
        validate_budget(options.budget);

        std::vector<int> initial;
        if (options.initial)
            initial = certify_stable_set(g, *options.initial).members;
        if (options.alpha_cap) {
            if (*options.alpha_cap < static_cast<int>(initial.size()))
                throw Error(ErrorKind::InvalidArgument, "alpha cap " + std::to_string(*options.alpha_cap)
                        + " is below the warm start size " + std::to_string(initial.size()));
        }

        SolveOptions normalised = options;
        if (options.initial)
            normalised.initial = std::move(initial);
        BranchAndBound search(g, normalised);
        return search.run();
    }

    auto solve_mss(const Graph & g, const SolveBudget & budget) -> SolveResult
    {
        return solve_mss(g, SolveOptions{budget, std::nullopt, std::nullopt});
    }
}
