#ifndef PCN_GRAPH_HH
#define PCN_GRAPH_HH

#include <pcn/bitset.hh>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pcn
{
    using Edge = std::pair<int, int>;

    /// Immutable undirected simple graph on vertices 0..n-1, stored as
    /// bitset adjacency rows.
    class Graph
    {
        public:
            Graph() = default;

            /// Builds from an edge list. Self-loops, duplicate edges and
            /// out-of-range endpoints are rejected.
            static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

            /// Builds from symmetric adjacency rows with an empty diagonal.
            static auto from_rows(std::vector<Bitset> rows) -> Graph;

            auto size() const -> int { return static_cast<int>(_rows.size()); }
            auto edge_count() const -> long long { return _edge_count; }

            auto adjacent(int u, int v) const -> bool { return _rows[u].test(v); }
            auto neighbours(int v) const -> const Bitset & { return _rows[v]; }
            auto degree(int v) const -> int { return _rows[v].count(); }

            /// Edges (u, v) with u < v in lexicographic order.
            auto edges() const -> std::vector<Edge>;

            auto is_complete() const -> bool;

            auto operator== (const Graph &) const -> bool = default;

        private:
            std::vector<Bitset> _rows;
            long long _edge_count = 0;
    };

    /// Subgraph induced by keep; vertex i of the result is keep[i].
    auto induced_subgraph(const Graph & g, std::span<const int> keep) -> Graph;

    auto is_connected(const Graph & g) -> bool;

    /// All-pairs hop counts of a connected graph.
    class DistanceMatrix
    {
        public:
            using Distance = std::uint16_t;

            DistanceMatrix() = default;
            DistanceMatrix(int n, std::vector<Distance> dist);

            auto size() const -> int { return _n; }
            auto diameter() const -> int { return _diameter; }

            auto operator() (int u, int v) const -> int
            {
                return _dist[static_cast<std::size_t>(u) * _n + v];
            }

            auto operator== (const DistanceMatrix &) const -> bool = default;

        private:
            int _n = 0;
            int _diameter = 0;
            std::vector<Distance> _dist;
    };

    /// BFS from every vertex. Throws Disconnected.
    auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

    /// G^k: u ~ v iff 0 < d(u, v) <= k.
    auto power_graph(const DistanceMatrix & dm, int k) -> Graph;
    auto power_graph(const Graph & g, const DistanceMatrix & dm, int k) -> Graph;

    /// Vertex of a layered graph: (vertex, layer), with vertex == star for
    /// the universal per-layer vertex of the starred construction.
    struct LayeredVertex
    {
        static constexpr int star = -1;

        int vertex;
        int layer;

        auto is_star() const -> bool { return vertex == star; }
        auto operator<=> (const LayeredVertex &) const = default;
    };

    /// Materialized G^F (or G_*^F when starred). Layer with rank r occupies
    /// ids r*n .. r*n+n-1; star vertices follow all layer blocks in layer
    /// order.
    class LayeredGraph
    {
        public:
            LayeredGraph(int base_size, std::vector<int> layers, bool starred, Graph graph);

            auto base_size() const -> int { return _base_size; }
            auto layers() const -> const std::vector<int> & { return _layers; }
            auto starred() const -> bool { return _starred; }
            auto graph() const -> const Graph & { return _graph; }
            auto size() const -> int { return _graph.size(); }

            /// Position of layer in layers(), or -1.
            auto layer_rank(int layer) const -> int;

            auto id(LayeredVertex v) const -> int;
            auto vertex(int id) const -> LayeredVertex;

        private:
            int _base_size;
            std::vector<int> _layers;
            bool _starred;
            Graph _graph;
    };

    /// Layers are sorted and deduplicated; each must lie in [1, n].
    /// Throws EmptyLayerSet.
    auto layered_graph(const Graph & g, const DistanceMatrix & dm, std::vector<int> layers, bool starred) -> LayeredGraph;

    /// The layer set [k] = {1, ..., k}.
    auto layer_range(int k) -> std::vector<int>;
}

#endif
