#ifndef PCN_MSS_HH
#define PCN_MSS_HH

#include <pcn/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pcn
{
    /// Sorted vertex ids. certified means no edge of the graph it was built
    /// against joins two members.
    struct StableSet
    {
        std::vector<int> members;
        bool certified = false;

        auto size() const -> int { return static_cast<int>(members.size()); }
    };

    auto is_stable(const Graph & g, std::span<const int> members) -> bool;

    /// Sorts, checks and marks certified. Throws InvalidInitialSet.
    auto certify_stable_set(const Graph & g, std::vector<int> members) -> StableSet;

    /// Every member outside frozen is stable, and every other vertex outside
    /// frozen has a neighbour in the set.
    auto is_maximal_stable(const Graph & g, std::span<const int> members, const Bitset & frozen) -> bool;

    /// Repeatedly picks the unfrozen candidate of smallest residual degree
    /// (ties to the smaller id) and discards its neighbours.
    auto greedy_maximal_stable_set(const Graph & g, const Bitset & frozen) -> StableSet;
    auto greedy_maximal_stable_set(const Graph & g) -> StableSet;

    /// A family of cliques of G^power whose union covers every edge.
    struct CliqueCover
    {
        int power = 1;
        std::vector<std::vector<int>> cliques;
    };

    /// Closed neighbourhoods in G^(power/2).
    auto clique_cover_even(const Graph & g, const DistanceMatrix & dm, int power) -> CliqueCover;

    /// Closed neighbourhoods in G^((power-1)/2), then greedily grown maximal
    /// cliques for whatever edges of G^power are still uncovered.
    auto clique_cover_odd(const Graph & g, const DistanceMatrix & dm, int power) -> CliqueCover;

    /// Greedy maximal cliques of g covering every edge.
    auto clique_cover_edges(const Graph & g) -> CliqueCover;

    /// Picks the construction matching the parity of power; power 1 uses
    /// clique_cover_edges.
    auto clique_cover(const Graph & g, const DistanceMatrix & dm, int power) -> CliqueCover;

    auto validate_cover(const CliqueCover & cover, const Graph & g_power) -> bool;

    struct SolveBudget
    {
        std::optional<double> seconds;
        std::optional<long long> nodes;
        int workers = 1;

        static auto unlimited() -> SolveBudget { return {}; }
        static auto node_limit(long long n) -> SolveBudget { return SolveBudget{std::nullopt, n, 1}; }
    };

    /// Throws InvalidArgument for non-positive limits.
    auto validate_budget(const SolveBudget & budget) -> void;

    enum class SolveStatus
    {
        Optimal,
        BudgetExhausted
    };

    struct SolveResult
    {
        StableSet best;
        int lower = 0;
        int upper = 0;
        SolveStatus status = SolveStatus::Optimal;
        long long nodes = 0;
    };

    struct SolveOptions
    {
        SolveBudget budget;
        std::optional<std::vector<int>> initial;
        std::optional<int> alpha_cap;
    };

    /// Exact maximum stable set by branch and bound. The bound at each node
    /// is a greedy partition of the candidates into cliques of g; any stable
    /// set meets each clique at most once. With one worker every result is
    /// reproducible; with more, Optimal answers still are.
    auto solve_mss(const Graph & g, const SolveOptions & options) -> SolveResult;
    auto solve_mss(const Graph & g, const SolveBudget & budget = {}) -> SolveResult;
}

#endif
