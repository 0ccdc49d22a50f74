#include <pcn/families.hh>
#include <pcn/errors.hh>

#include <random>
#include <string>

namespace pcn
{
    namespace
    {
        auto require(bool condition, const std::string & message) -> void
        {
            if (! condition)
                throw Error(ErrorKind::InvalidArgument, message);
        }

        // mt19937_64 output is fixed by the standard; distributions are not,
        // so draws are mapped by hand.
        auto uniform_real(std::mt19937_64 & rng) -> double
        {
            return static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }

        auto uniform_below(std::mt19937_64 & rng, int bound) -> int
        {
            return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
        }
    }

    auto path_graph(int n) -> Graph
    {
        require(n >= 1, "path needs at least one vertex");
        std::vector<Edge> edges;
        for (int v = 0 ; v + 1 < n ; ++v)
            edges.emplace_back(v, v + 1);
        return Graph::from_edges(n, edges);
    }

    auto cycle_graph(int n) -> Graph
    {
        require(n >= 3, "cycle needs at least three vertices");
        std::vector<Edge> edges;
        for (int v = 0 ; v < n ; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph::from_edges(n, edges);
    }

    auto complete_graph(int n) -> Graph
    {
        require(n >= 1, "complete graph needs at least one vertex");
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

    auto star_graph(int leaves) -> Graph
    {
        require(leaves >= 1, "star needs at least one leaf");
        std::vector<Edge> edges;
        for (int v = 1 ; v <= leaves ; ++v)
            edges.emplace_back(0, v);
        return Graph::from_edges(leaves + 1, edges);
    }

    auto petersen_graph() -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0 ; i < 5 ; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph::from_edges(10, edges);
    }

    auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        require(n >= 1, "random graph needs at least one vertex");
        std::mt19937_64 rng(seed);
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (uniform_real(rng) < p)
                    edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

    auto random_connected_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        require(n >= 1, "random graph needs at least one vertex");
        std::mt19937_64 rng(seed);
        std::vector<Bitset> rows(n, Bitset(n));
        for (int v = 1 ; v < n ; ++v) {
            int parent = uniform_below(rng, v);
            rows[v].set(parent);
            rows[parent].set(v);
        }
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (uniform_real(rng) < p) {
                    rows[u].set(v);
                    rows[v].set(u);
                }
        return Graph::from_rows(std::move(rows));
    }
}
