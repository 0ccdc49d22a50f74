#ifndef PCN_IO_HH
#define PCN_IO_HH

#include <pcn/graph.hh>
#include <pcn/layered_set.hh>
#include <pcn/mss.hh>
#include <pcn/pcn.hh>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pcn
{
    /// DIMACS edge format: `p edge n m`, then `e u v` lines with 1-based
    /// vertices; `c` lines are comments. Throws Parse with the line number.
    auto read_dimacs(std::istream & in) -> Graph;
    auto read_dimacs_file(const std::filesystem::path & path) -> Graph;

    /// Edges are written once each, (u, v) with u < v, in lexicographic order.
    auto write_dimacs(std::ostream & out, const Graph & g, const std::string & comment = "") -> void;
    auto write_dimacs_file(const std::filesystem::path & path, const Graph & g, const std::string & comment = "") -> void;

    struct LpTerm
    {
        long long coefficient;
        std::string variable;
    };

    struct LpConstraint
    {
        std::string name;
        std::vector<LpTerm> terms;
        std::string sense;
        long long rhs;
    };

    /// Pure 0-1 maximization model.
    struct LpModel
    {
        std::string name;
        std::vector<LpTerm> objective;
        std::vector<LpConstraint> constraints;
        std::vector<std::string> binaries;
    };

    /// x_v_k for external vertex v = vertex + 1.
    auto lp_variable_name(int vertex, int layer) -> std::string;

    /// Set-packing model of alpha(G^F): one column row per vertex and one row
    /// per clique of each layer's cover. Throws EmptyLayerSet, InvalidCover.
    auto export_ilp(const Graph & g, const DistanceMatrix & dm, std::vector<int> layers,
            const std::map<int, CliqueCover> & covers) -> LpModel;

    /// As above with clique_cover() for every layer.
    auto export_ilp(const Graph & g, const DistanceMatrix & dm, std::vector<int> layers) -> LpModel;

    /// Maximize / Subject To / Binaries / End sections, unit coefficients
    /// written explicitly, at most eight terms per line.
    auto write_lp(std::ostream & out, const LpModel & model) -> void;
    auto write_lp_file(const std::filesystem::path & path, const LpModel & model) -> void;

    /// Conflict graph over the binaries: two variables are adjacent when they
    /// share a row. Its stability number is the model optimum. Throws
    /// InvalidArgument when a row is not of the form sum x <= 1 or the
    /// objective is not all ones.
    auto lp_conflict_graph(const LpModel & model) -> Graph;

    /// Header `# pcn <k> graph <name>`, then `v colour` per vertex, 1-based.
    auto write_coloring(std::ostream & out, const PackingColoring & c, const std::string & graph_name) -> void;
    auto write_coloring_file(const std::filesystem::path & path, const PackingColoring & c, const std::string & graph_name) -> void;

    /// Every vertex 1..n must appear exactly once, where n is the largest id
    /// listed or expected_vertices when given.
    auto read_coloring(std::istream & in, std::optional<int> expected_vertices = std::nullopt) -> PackingColoring;
    auto read_coloring_file(const std::filesystem::path & path, std::optional<int> expected_vertices = std::nullopt) -> PackingColoring;

    /// `# layer k` then one 1-based vertex id per line, ascending; a star
    /// member is written as `*`.
    auto write_layered_set(std::ostream & out, const LayeredStableSet & s) -> void;
    auto write_layered_set_file(const std::filesystem::path & path, const LayeredStableSet & s) -> void;
    auto read_layered_set(std::istream & in) -> LayeredStableSet;

    struct BoundsRow
    {
        int q;
        int m;
        std::optional<long long> lower;
        std::optional<long long> upper;
        /// "exact", "bounds" or "skipped".
        std::string status;
    };

    /// Columns q, m, LB, UB, status separated by two spaces, numbers right
    /// aligned; missing values print as `-`.
    auto render_bounds_table(const std::vector<BoundsRow> & rows) -> std::string;
    auto render_bounds_csv(const std::vector<BoundsRow> & rows) -> std::string;
}

#endif
