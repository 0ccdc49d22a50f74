#ifndef PCN_PCN_HH
#define PCN_PCN_HH

#include <pcn/graph.hh>
#include <pcn/hamming.hh>
#include <pcn/layered_set.hh>
#include <pcn/mss.hh>

#include <optional>
#include <string>
#include <vector>

namespace pcn
{
    /// colours[v] is the 1-based colour of vertex v.
    struct PackingColoring
    {
        std::vector<int> colours;

        /// Largest colour in use, i.e. k of the packing k-colouring.
        auto colour_count() const -> int;
    };

    /// Every pair sharing colour i is at distance at least i + 1.
    auto verify_packing_coloring(const DistanceMatrix & dm, const PackingColoring & c) -> bool;

    /// Renumbers the colours in use to 1, 2, ... preserving their order.
    /// Lowering a colour only relaxes its distance requirement, so validity
    /// is preserved.
    auto compact_coloring(const PackingColoring & c) -> PackingColoring;

    /// Member (v, k) gives v colour k; every uncovered vertex gets its own
    /// colour extra_base + 1, extra_base + 2, ... in vertex order.
    /// Throws StarMembersPresent.
    auto coloring_from_layered_set(const LayeredStableSet & s, int base_size, int extra_base) -> PackingColoring;

    /// Inverse direction: colour c of v becomes member (v, c) for c in
    /// layers; unused layers receive their star vertex when starred.
    auto layered_set_from_coloring(const PackingColoring & c, const std::vector<int> & layers, bool starred) -> LayeredStableSet;

    /// Swaps star members for uncovered columns on the same layer until no
    /// star or no uncovered column remains. Size is unchanged.
    auto normalise_starred_set(const LayeredStableSet & s, int base_size) -> LayeredStableSet;

    enum class PcnStatus
    {
        Exact,
        Bounds
    };

    struct PcnResult
    {
        long long lower = 0;
        long long upper = 0;
        PcnStatus status = PcnStatus::Bounds;
        std::optional<PackingColoring> witness;
        std::optional<LayeredStableSet> layered;
        /// Where the lower bound comes from, e.g. "solver" or "closed-form".
        std::string lower_source;
        long long nodes = 0;
    };

    struct ExactOptions
    {
        /// Applied to each stable set solve separately.
        SolveBudget budget;
        /// Stable set of the layered graph the strategy solves on.
        std::optional<LayeredStableSet> warm_start;
        /// Valid upper bound on the stability number being solved for.
        std::optional<long long> alpha_cap;
    };

    /// Stability number of G^{[d-1]}; descends through G^{[k]} while that
    /// equals n.
    auto pcn_exact_iterative(const Graph & g, const DistanceMatrix & dm, const ExactOptions & options) -> PcnResult;
    auto pcn_exact_iterative(const Graph & g, const SolveBudget & budget = {}) -> PcnResult;

    /// One solve on the starred graph G_*^{[d-1]}:
    /// chi = (d - 1) + n - alpha(G_*^{[d-1]}).
    auto pcn_exact_starred(const Graph & g, const DistanceMatrix & dm, const ExactOptions & options) -> PcnResult;
    auto pcn_exact_starred(const Graph & g, const SolveBudget & budget = {}) -> PcnResult;

    /// Given a verified colouring with at most t colours,
    /// chi = n + t - alpha(G_*^{[t]}). Throws InvalidUpperBound.
    auto pcn_exact_starred_capped(const Graph & g, const DistanceMatrix & dm, int t, const PackingColoring & upper_witness,
            const SolveBudget & budget) -> PcnResult;
    auto pcn_exact_starred_capped(const Graph & g, int t, const PackingColoring & upper_witness,
            const SolveBudget & budget = {}) -> PcnResult;

    /// max over t in 0..p of alpha(G^{[t]}) + p - t, by p separate solves.
    /// Throws BudgetExhausted if any solve is not proved optimal.
    auto lemma7_alpha_formula(const Graph & g, const DistanceMatrix & dm, int p, const SolveBudget & budget = {}) -> long long;

    /// Node limit used by the heuristic when the budget sets no limit.
    constexpr long long default_heuristic_nodes = 200000;

    struct HeuristicOptions
    {
        /// Split evenly over the improvement steps.
        SolveBudget budget;
        long long vertex_budget = default_vertex_budget;
        /// Seed layers 1-2 with the optimal m = 3 construction when q >= 3.
        bool use_construction = true;
    };

    /// Layer 1 gets the diagonal set; each later layer k gets a greedy
    /// maximal stable set of H^k on the unused columns, then a budgeted
    /// solve tries to enlarge it. Always returns a validated layered set.
    auto hamming_heuristic(const HammingParams & p, const HeuristicOptions & options) -> PcnResult;

    /// Heuristic warm start, then the iterative strategy on H_{q,m}^{[m-1]}
    /// with the closed-form lower bound as alpha cap.
    auto hamming_exact(const HammingParams & p, const HeuristicOptions & heuristic, const SolveBudget & exact_budget) -> PcnResult;

    /// Exhaustive colouring search for n <= 12. Throws TooLarge.
    auto pcn_bruteforce(const Graph & g) -> int;

    constexpr int bruteforce_max_vertices = 12;
}

#endif
