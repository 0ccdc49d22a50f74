#ifndef PCN_HAMMING_HH
#define PCN_HAMMING_HH

#include <pcn/graph.hh>
#include <pcn/layered_set.hh>
#include <pcn/mss.hh>

#include <vector>

namespace pcn
{
    /// Default cap on q^m, the largest Hamming graphs tabulated in practice.
    constexpr long long default_vertex_budget = 10000;

    /// Alphabet size q and word length m of H_{q,m}.
    struct HammingParams
    {
        int q;
        int m;

        /// q^m, or -1 if it overflows.
        auto vertex_count() const -> long long;

        /// Throws InvalidArgument for q < 2 or m < 1, BudgetExceeded when
        /// q^m is above vertex_budget.
        auto validate(long long vertex_budget = default_vertex_budget) const -> void;
    };

    /// A word of {0..q-1}^m. Coordinate 0 is the most significant digit of
    /// the base-q rank, which is also the vertex id.
    using Word = std::vector<int>;

    auto encode(const HammingParams & p, const Word & word) -> int;
    auto decode(const HammingParams & p, int rank) -> Word;

    auto generate(const HammingParams & p, long long vertex_budget = default_vertex_budget) -> Graph;

    /// Distance is the number of differing coordinates.
    auto hamming_distance_matrix(const HammingParams & p, long long vertex_budget = default_vertex_budget) -> DistanceMatrix;

    /// Words whose coordinate sum is 0 mod q: q^(m-1) pairwise non-adjacent
    /// vertices.
    auto diagonal_stable_set(const HammingParams & p, long long vertex_budget = default_vertex_budget) -> StableSet;

    /// a_i = q - 2(i+1) for i < floor(q/2); above that 2q - 2(i+1), plus one
    /// when q is even. Checked at runtime to be a permutation of 0..q-1 with
    /// 2i + a_i != 0 mod q. Throws QTooSmall for q < 3.
    auto a_permutation(int q) -> std::vector<int>;

    /// Stable set of H_{q,3}^{[2]} of size q^2 + q: the diagonal set on layer
    /// 1 and the words (i, i, a_i) on layer 2.
    auto theorem4_layered_set(const HammingParams & p) -> LayeredStableSet;

    /// m - 1 + q^m - sum_{k=1}^{m-1} q^k.
    auto lemma2_lower_bound(const HammingParams & p) -> long long;

    /// Closed forms 1 + q^2 - q (m = 2) and 2 + q^3 - q^2 - q (m = 3, q >= 3).
    /// Throws OutOfTheoremRange elsewhere.
    auto theorem4_value(const HammingParams & p) -> long long;

    /// Upper bound on alpha(H_{q,m}^{[m-1]}) from a lower bound on the packing
    /// chromatic number of H_{q,m-1}, via the cartesian product inequality.
    auto alpha_upper_bound_propagation(const HammingParams & p, long long pcn_lower_prev) -> long long;

    /// Largest alpha(H_{q,m}^{[m-1]}) compatible with lemma2_lower_bound.
    auto alpha_cap_from_lower_bound(const HammingParams & p) -> long long;
}

#endif
