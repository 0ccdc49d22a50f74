#ifndef PCN_FAMILIES_HH
#define PCN_FAMILIES_HH

#include <pcn/graph.hh>

#include <cstdint>

namespace pcn
{
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;

    /// K_{1,leaves}; vertex 0 is the centre.
    auto star_graph(int leaves) -> Graph;

    auto petersen_graph() -> Graph;

    /// Random connected graph: a random recursive spanning tree plus each
    /// remaining pair independently with probability p. The same seed gives
    /// the same graph on every platform.
    auto random_connected_graph(int n, double p, std::uint64_t seed) -> Graph;

    /// G(n, p) without the connectivity guarantee.
    auto random_graph(int n, double p, std::uint64_t seed) -> Graph;
}

#endif
