#include <pcn/layered_set.hh>
#include <pcn/errors.hh>

#include <algorithm>
#include <map>

namespace pcn
{
    auto LayeredStableSet::star_layers() const -> std::vector<int>
    {
        std::vector<int> result;
        for (auto & m : members)
            if (m.is_star())
                result.push_back(m.layer);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto LayeredStableSet::layer_members(int layer) const -> std::vector<int>
    {
        std::vector<int> result;
        for (auto & m : members)
            if (! m.is_star() && m.layer == layer)
                result.push_back(m.vertex);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto LayeredStableSet::covered_columns() const -> int
    {
        std::vector<int> columns;
        for (auto & m : members)
            if (! m.is_star())
                columns.push_back(m.vertex);
        std::sort(columns.begin(), columns.end());
        return static_cast<int>(std::unique(columns.begin(), columns.end()) - columns.begin());
    }

    auto validate_layered_set(const DistanceMatrix & dm, const LayeredStableSet & s) -> bool
    {
        const int n = dm.size();
        std::vector<char> column_used(n, 0);
        std::map<int, std::vector<int>> by_layer;
        std::map<int, int> stars;

        for (auto & m : s.members) {
            if (! std::binary_search(s.layers.begin(), s.layers.end(), m.layer))
                return false;
            if (m.is_star()) {
                if (++stars[m.layer] > 1)
                    return false;
                continue;
            }
            if (m.vertex < 0 || m.vertex >= n || column_used[m.vertex])
                return false;
            column_used[m.vertex] = 1;
            by_layer[m.layer].push_back(m.vertex);
        }

        for (auto & [layer, count] : stars)
            if (by_layer.contains(layer))
                return false;

        for (auto & [layer, vertices] : by_layer)
            for (std::size_t i = 0 ; i < vertices.size() ; ++i)
                for (std::size_t j = i + 1 ; j < vertices.size() ; ++j)
                    if (dm(vertices[i], vertices[j]) <= layer)
                        return false;
        return true;
    }

    auto to_layered_ids(const LayeredGraph & lg, const LayeredStableSet & s) -> std::vector<int>
    {
        std::vector<int> ids;
        ids.reserve(s.members.size());
        for (auto & m : s.members)
            ids.push_back(lg.id(m));
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    auto from_layered_ids(const LayeredGraph & lg, const std::vector<int> & ids) -> LayeredStableSet
    {
        LayeredStableSet result;
        result.layers = lg.layers();
        for (int id : ids)
            result.members.push_back(lg.vertex(id));
        return result;
    }
}
