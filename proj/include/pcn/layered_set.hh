#ifndef PCN_LAYERED_SET_HH
#define PCN_LAYERED_SET_HH

#include <pcn/graph.hh>

#include <vector>

namespace pcn
{
    /// Stable set of G^F or G_*^F, kept as (vertex, layer) pairs.
    struct LayeredStableSet
    {
        std::vector<int> layers;
        std::vector<LayeredVertex> members;

        auto size() const -> int { return static_cast<int>(members.size()); }

        /// K(S): layers whose star vertex is a member.
        auto star_layers() const -> std::vector<int>;

        /// Members on the given layer, base vertex ids in ascending order.
        auto layer_members(int layer) const -> std::vector<int>;

        /// Number of distinct base vertices carrying a member.
        auto covered_columns() const -> int;
    };

    /// Checks the set against distances alone, without materializing the
    /// layered graph: layers known, at most one member per column, members
    /// sharing layer k at distance > k, a star only on an otherwise empty
    /// layer.
    auto validate_layered_set(const DistanceMatrix & dm, const LayeredStableSet & s) -> bool;

    auto to_layered_ids(const LayeredGraph & lg, const LayeredStableSet & s) -> std::vector<int>;
    auto from_layered_ids(const LayeredGraph & lg, const std::vector<int> & ids) -> LayeredStableSet;
}

#endif
