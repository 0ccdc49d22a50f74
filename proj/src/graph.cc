#include <pcn/graph.hh>
#include <pcn/errors.hh>

#include <algorithm>
#include <limits>
#include <string>

namespace pcn
{
    auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        if (n < 0)
            throw Error(ErrorKind::InvalidArgument, "negative vertex count");

        std::vector<Bitset> rows(n, Bitset(n));
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error(ErrorKind::InvalidArgument, "edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1)
                        + ") out of range for " + std::to_string(n) + " vertices");
            if (u == v)
                throw Error(ErrorKind::InvalidArgument, "self-loop on vertex " + std::to_string(u + 1));
            if (rows[u].test(v))
                throw Error(ErrorKind::InvalidArgument, "duplicate edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ")");
            rows[u].set(v);
            rows[v].set(u);
        }

        Graph g;
        g._rows = std::move(rows);
        g._edge_count = static_cast<long long>(edges.size());
        return g;
    }

    auto Graph::from_rows(std::vector<Bitset> rows) -> Graph
    {
        const int n = static_cast<int>(rows.size());
        long long degree_sum = 0;
        for (int v = 0 ; v < n ; ++v) {
            if (rows[v].size() != n)
                throw Error(ErrorKind::InvalidArgument, "adjacency row has wrong width");
            if (rows[v].test(v))
                throw Error(ErrorKind::InvalidArgument, "self-loop on vertex " + std::to_string(v + 1));
            degree_sum += rows[v].count();
        }
        for (int u = 0 ; u < n ; ++u)
            rows[u].for_each([&] (int v) {
                if (! rows[v].test(u))
                    throw Error(ErrorKind::InvalidArgument, "adjacency is not symmetric");
            });

        Graph g;
        g._rows = std::move(rows);
        g._edge_count = degree_sum / 2;
        return g;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(static_cast<std::size_t>(_edge_count));
        for (int u = 0 ; u < size() ; ++u)
            for (int v = _rows[u].find_next(u + 1) ; v != -1 ; v = _rows[u].find_next(v + 1))
                result.emplace_back(u, v);
        return result;
    }

    auto Graph::is_complete() const -> bool
    {
        long long n = size();
        return _edge_count == n * (n - 1) / 2;
    }

    auto induced_subgraph(const Graph & g, std::span<const int> keep) -> Graph
    {
        const int k = static_cast<int>(keep.size());
        std::vector<Bitset> rows(k, Bitset(k));
        for (int i = 0 ; i < k ; ++i)
            for (int j = i + 1 ; j < k ; ++j)
                if (g.adjacent(keep[i], keep[j])) {
                    rows[i].set(j);
                    rows[j].set(i);
                }
        return Graph::from_rows(std::move(rows));
    }

    namespace
    {
        constexpr auto unreachable = std::numeric_limits<DistanceMatrix::Distance>::max();

        auto adjacency_lists(const Graph & g) -> std::vector<std::vector<int>>
        {
            std::vector<std::vector<int>> lists(g.size());
            for (int v = 0 ; v < g.size() ; ++v)
                lists[v] = g.neighbours(v).to_vector();
            return lists;
        }
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.size() == 0)
            return true;
        Bitset seen(g.size());
        std::vector<int> stack{0};
        seen.set(0);
        int reached = 1;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.neighbours(v).for_each([&] (int w) {
                if (! seen.test(w)) {
                    seen.set(w);
                    ++reached;
                    stack.push_back(w);
                }
            });
        }
        return reached == g.size();
    }

    DistanceMatrix::DistanceMatrix(int n, std::vector<Distance> dist) :
        _n(n),
        _dist(std::move(dist))
    {
        if (_dist.size() != static_cast<std::size_t>(n) * n)
            throw Error(ErrorKind::InvalidArgument, "distance matrix has wrong size");
        for (auto d : _dist) {
            if (d == unreachable)
                throw Error(ErrorKind::Disconnected, "graph is not connected");
            _diameter = std::max<int>(_diameter, d);
        }
    }

    auto all_pairs_distances(const Graph & g) -> DistanceMatrix
    {
        const int n = g.size();
        if (n >= unreachable)
            throw Error(ErrorKind::TooLarge, "too many vertices for 16-bit distances");

        auto lists = adjacency_lists(g);
        std::vector<DistanceMatrix::Distance> dist(static_cast<std::size_t>(n) * n, unreachable);
        std::vector<int> queue(n);
        for (int source = 0 ; source < n ; ++source) {
            auto row = dist.begin() + static_cast<std::ptrdiff_t>(source) * n;
            int head = 0, tail = 0;
            queue[tail++] = source;
            row[source] = 0;
            while (head < tail) {
                int v = queue[head++];
                for (int w : lists[v])
                    if (row[w] == unreachable) {
                        row[w] = row[v] + 1;
                        queue[tail++] = w;
                    }
            }
            if (tail != n)
                throw Error(ErrorKind::Disconnected, "vertex " + std::to_string(source + 1) + " reaches only "
                        + std::to_string(tail) + " of " + std::to_string(n) + " vertices");
        }
        return DistanceMatrix(n, std::move(dist));
    }

    auto power_graph(const DistanceMatrix & dm, int k) -> Graph
    {
        if (k < 1)
            throw Error(ErrorKind::InvalidArgument, "power must be at least 1, got " + std::to_string(k));

        const int n = dm.size();
        std::vector<Bitset> rows(n, Bitset(n));
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                if (u != v && dm(u, v) <= k)
                    rows[u].set(v);
        return Graph::from_rows(std::move(rows));
    }

    auto power_graph(const Graph & g, const DistanceMatrix & dm, int k) -> Graph
    {
        if (g.size() != dm.size())
            throw Error(ErrorKind::InvalidArgument, "distance matrix does not match graph");
        if (k == 1)
            return g;
        return power_graph(dm, k);
    }

    LayeredGraph::LayeredGraph(int base_size, std::vector<int> layers, bool starred, Graph graph) :
        _base_size(base_size),
        _layers(std::move(layers)),
        _starred(starred),
        _graph(std::move(graph))
    {
    }

    auto LayeredGraph::layer_rank(int layer) const -> int
    {
        auto it = std::lower_bound(_layers.begin(), _layers.end(), layer);
        if (it == _layers.end() || *it != layer)
            return -1;
        return static_cast<int>(it - _layers.begin());
    }

    auto LayeredGraph::id(LayeredVertex v) const -> int
    {
        int rank = layer_rank(v.layer);
        if (rank < 0)
            throw Error(ErrorKind::InvalidArgument, "layer " + std::to_string(v.layer) + " is not in the layer set");
        if (v.is_star()) {
            if (! _starred)
                throw Error(ErrorKind::InvalidArgument, "star vertex in a non-starred layered graph");
            return _base_size * static_cast<int>(_layers.size()) + rank;
        }
        if (v.vertex < 0 || v.vertex >= _base_size)
            throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v.vertex + 1) + " out of range");
        return rank * _base_size + v.vertex;
    }

    auto LayeredGraph::vertex(int id) const -> LayeredVertex
    {
        const int blocks = _base_size * static_cast<int>(_layers.size());
        if (id < 0 || id >= size())
            throw Error(ErrorKind::InvalidArgument, "layered vertex id " + std::to_string(id) + " out of range");
        if (id >= blocks)
            return LayeredVertex{LayeredVertex::star, _layers[id - blocks]};
        return LayeredVertex{id % _base_size, _layers[id / _base_size]};
    }

    auto layered_graph(const Graph & g, const DistanceMatrix & dm, std::vector<int> layers, bool starred) -> LayeredGraph
    {
        std::sort(layers.begin(), layers.end());
        layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
        if (layers.empty())
            throw Error(ErrorKind::EmptyLayerSet, "layered graph needs at least one layer");

        const int n = g.size();
        if (dm.size() != n)
            throw Error(ErrorKind::InvalidArgument, "distance matrix does not match graph");
        for (int k : layers)
            if (k < 1 || k > n)
                throw Error(ErrorKind::InvalidArgument, "layer " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");

        const int f = static_cast<int>(layers.size());
        const int total = n * f + (starred ? f : 0);
        std::vector<Bitset> rows(total, Bitset(total));

        for (int r = 0 ; r < f ; ++r) {
            const int k = layers[r], offset = r * n;
            for (int u = 0 ; u < n ; ++u)
                for (int v = 0 ; v < n ; ++v)
                    if (u != v && dm(u, v) <= k)
                        rows[offset + u].set(offset + v);
        }

        for (int v = 0 ; v < n ; ++v)
            for (int r = 0 ; r < f ; ++r)
                for (int s = 0 ; s < f ; ++s)
                    if (r != s)
                        rows[r * n + v].set(s * n + v);

        if (starred)
            for (int r = 0 ; r < f ; ++r) {
                const int star = n * f + r;
                for (int v = 0 ; v < n ; ++v) {
                    rows[star].set(r * n + v);
                    rows[r * n + v].set(star);
                }
            }

        return LayeredGraph(n, std::move(layers), starred, Graph::from_rows(std::move(rows)));
    }

    auto layer_range(int k) -> std::vector<int>
    {
        std::vector<int> result;
        for (int i = 1 ; i <= k ; ++i)
            result.push_back(i);
        return result;
    }
}
