#include <pcn/io.hh>
#include <pcn/errors.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace pcn
{
    namespace
    {
        auto parse_error(int line, const std::string & message) -> Error
        {
            return Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message);
        }

        auto split(const std::string & line) -> std::vector<std::string>
        {
            std::vector<std::string> tokens;
            std::istringstream in(line);
            for (std::string token ; in >> token ; )
                tokens.push_back(token);
            return tokens;
        }

        auto parse_int(const std::string & token, int line) -> long long
        {
            long long value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size())
                throw parse_error(line, "expected an integer, got '" + token + "'");
            return value;
        }

        auto open_in(const std::filesystem::path & path) -> std::ifstream
        {
            std::ifstream in(path);
            if (! in)
                throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for reading");
            return in;
        }

        auto open_out(const std::filesystem::path & path) -> std::ofstream
        {
            std::ofstream out(path, std::ios::binary);
            if (! out)
                throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
            return out;
        }
    }

    auto read_dimacs(std::istream & in) -> Graph
    {
        std::optional<long long> n, m;
        std::vector<Edge> edges;
        std::vector<int> edge_lines;
        int line_no = 0;
        for (std::string line ; std::getline(in, line) ; ) {
            ++line_no;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            auto tokens = split(line);
            if (tokens.empty() || tokens[0] == "c")
                continue;
            if (tokens[0] == "p") {
                if (n)
                    throw parse_error(line_no, "second problem line");
                if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
                    throw parse_error(line_no, "expected 'p edge <n> <m>'");
                n = parse_int(tokens[2], line_no);
                m = parse_int(tokens[3], line_no);
                if (*n < 0 || *m < 0 || *n > 1'000'000)
                    throw parse_error(line_no, "bad vertex or edge count");
            }
            else if (tokens[0] == "e") {
                if (! n)
                    throw parse_error(line_no, "edge before problem line");
                if (tokens.size() != 3)
                    throw parse_error(line_no, "expected 'e <u> <v>'");
                auto u = parse_int(tokens[1], line_no), v = parse_int(tokens[2], line_no);
                if (u < 1 || v < 1 || u > *n || v > *n)
                    throw parse_error(line_no, "vertex out of range 1.." + std::to_string(*n));
                if (u == v)
                    throw parse_error(line_no, "self-loop on vertex " + std::to_string(u));
                edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
                edge_lines.push_back(line_no);
            }
            else
                throw parse_error(line_no, "unknown line type '" + tokens[0] + "'");
        }
        if (! n)
            throw parse_error(line_no, "missing problem line");
        if (static_cast<long long>(edges.size()) != *m)
            throw parse_error(line_no, "header declares " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));

        // Graph::from_edges would report a duplicate without its line.
        std::vector<Bitset> seen(*n, Bitset(static_cast<int>(*n)));
        for (std::size_t i = 0 ; i < edges.size() ; ++i) {
            auto [u, v] = edges[i];
            if (seen[u].test(v))
                throw parse_error(edge_lines[i], "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
            seen[u].set(v);
            seen[v].set(u);
        }
        return Graph::from_edges(static_cast<int>(*n), edges);
    }

    auto read_dimacs_file(const std::filesystem::path & path) -> Graph
    {
        auto in = open_in(path);
        try {
            return read_dimacs(in);
        }
        catch (const Error & e) {
            throw Error(e.kind(), path.string() + ": " + e.detail());
        }
    }

    auto write_dimacs(std::ostream & out, const Graph & g, const std::string & comment) -> void
    {
        if (! comment.empty())
            out << "c " << comment << '\n';
        out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }

    auto write_dimacs_file(const std::filesystem::path & path, const Graph & g, const std::string & comment) -> void
    {
        auto out = open_out(path);
        write_dimacs(out, g, comment);
    }

    auto lp_variable_name(int vertex, int layer) -> std::string
    {
        return "x_" + std::to_string(vertex + 1) + "_" + std::to_string(layer);
    }

    auto export_ilp(const Graph & g, const DistanceMatrix & dm, std::vector<int> layers,
            const std::map<int, CliqueCover> & covers) -> LpModel
    {
        std::sort(layers.begin(), layers.end());
        layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
        if (layers.empty())
            throw Error(ErrorKind::EmptyLayerSet, "ILP export needs at least one layer");
        const int n = g.size();
        for (int k : layers) {
            if (k < 1 || k > n)
                throw Error(ErrorKind::InvalidArgument, "layer " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
            auto it = covers.find(k);
            if (it == covers.end())
                throw Error(ErrorKind::InvalidCover, "no clique cover supplied for layer " + std::to_string(k));
            if (! validate_cover(it->second, power_graph(g, dm, k)))
                throw Error(ErrorKind::InvalidCover, "cover for layer " + std::to_string(k) + " is not a clique edge cover of G^"
                        + std::to_string(k));
        }

        LpModel model;
        model.name = "stable set of G^F";
        for (int k : layers)
            for (int v = 0 ; v < n ; ++v) {
                model.objective.push_back(LpTerm{1, lp_variable_name(v, k)});
                model.binaries.push_back(lp_variable_name(v, k));
            }

        for (int v = 0 ; v < n ; ++v) {
            LpConstraint row{"col_" + std::to_string(v + 1), {}, "<=", 1};
            for (int k : layers)
                row.terms.push_back(LpTerm{1, lp_variable_name(v, k)});
            model.constraints.push_back(std::move(row));
        }

        for (int k : layers) {
            const auto & cover = covers.at(k);
            for (std::size_t j = 0 ; j < cover.cliques.size() ; ++j) {
                LpConstraint row{"clq_" + std::to_string(k) + "_" + std::to_string(j + 1), {}, "<=", 1};
                auto clique = cover.cliques[j];
                std::sort(clique.begin(), clique.end());
                for (int v : clique)
                    row.terms.push_back(LpTerm{1, lp_variable_name(v, k)});
                model.constraints.push_back(std::move(row));
            }
        }
        return model;
    }

    auto export_ilp(const Graph & g, const DistanceMatrix & dm, std::vector<int> layers) -> LpModel
    {
        std::map<int, CliqueCover> covers;
        for (int k : layers)
            if (k >= 1 && k <= g.size())
                covers.emplace(k, clique_cover(g, dm, k));
        return export_ilp(g, dm, std::move(layers), covers);
    }

    namespace
    {
        constexpr std::size_t terms_per_line = 8;

        auto write_terms(std::ostream & out, const std::vector<LpTerm> & terms) -> void
        {
            for (std::size_t i = 0 ; i < terms.size() ; ++i) {
                if (i > 0) {
                    if (i % terms_per_line == 0)
                        out << "\n   ";
                    out << (terms[i].coefficient < 0 ? " - " : " + ");
                }
                else if (terms[i].coefficient < 0)
                    out << "- ";
                out << (terms[i].coefficient < 0 ? -terms[i].coefficient : terms[i].coefficient) << ' ' << terms[i].variable;
            }
        }
    }

    auto write_lp(std::ostream & out, const LpModel & model) -> void
    {
        out << "\\ " << model.name << '\n';
        out << "\\ " << model.binaries.size() << " binaries, " << model.constraints.size() << " constraints\n";
        out << "Maximize\n obj: ";
        write_terms(out, model.objective);
        out << "\nSubject To\n";
        for (auto & row : model.constraints) {
            out << ' ' << row.name << ": ";
            write_terms(out, row.terms);
            out << ' ' << row.sense << ' ' << row.rhs << '\n';
        }
        out << "Binaries\n";
        for (std::size_t i = 0 ; i < model.binaries.size() ; ++i)
            out << ' ' << model.binaries[i]
                << ((i + 1) % terms_per_line == 0 || i + 1 == model.binaries.size() ? "\n" : "");
        out << "End\n";
    }

    auto write_lp_file(const std::filesystem::path & path, const LpModel & model) -> void
    {
        auto out = open_out(path);
        write_lp(out, model);
    }

    auto lp_conflict_graph(const LpModel & model) -> Graph
    {
        std::unordered_map<std::string, int> index;
        for (auto & name : model.binaries)
            if (! index.emplace(name, static_cast<int>(index.size())).second)
                throw Error(ErrorKind::InvalidArgument, "binary '" + name + "' declared twice");
        for (auto & term : model.objective)
            if (term.coefficient != 1 || ! index.contains(term.variable))
                throw Error(ErrorKind::InvalidArgument, "objective is not a unit sum over binaries");

        const int n = static_cast<int>(index.size());
        std::vector<Bitset> rows(n, Bitset(n));
        for (auto & row : model.constraints) {
            if (row.sense != "<=" || row.rhs != 1)
                throw Error(ErrorKind::InvalidArgument, "row '" + row.name + "' is not a packing row");
            std::vector<int> vars;
            for (auto & term : row.terms) {
                auto it = index.find(term.variable);
                if (term.coefficient != 1 || it == index.end())
                    throw Error(ErrorKind::InvalidArgument, "row '" + row.name + "' has a non-unit or undeclared term");
                vars.push_back(it->second);
            }
            for (int a : vars)
                for (int b : vars)
                    if (a != b)
                        rows[a].set(b);
        }
        return Graph::from_rows(std::move(rows));
    }

    auto write_coloring(std::ostream & out, const PackingColoring & c, const std::string & graph_name) -> void
    {
        out << "# pcn " << c.colour_count() << " graph " << graph_name << '\n';
        for (std::size_t v = 0 ; v < c.colours.size() ; ++v)
            out << v + 1 << ' ' << c.colours[v] << '\n';
    }

    auto write_coloring_file(const std::filesystem::path & path, const PackingColoring & c, const std::string & graph_name) -> void
    {
        auto out = open_out(path);
        write_coloring(out, c, graph_name);
    }

    auto read_coloring(std::istream & in, std::optional<int> expected_vertices) -> PackingColoring
    {
        std::map<long long, long long> assigned;
        int line_no = 0;
        for (std::string line ; std::getline(in, line) ; ) {
            ++line_no;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            auto tokens = split(line);
            if (tokens.empty() || tokens[0].starts_with("#"))
                continue;
            if (tokens.size() != 2)
                throw parse_error(line_no, "expected '<vertex> <colour>'");
            auto v = parse_int(tokens[0], line_no), c = parse_int(tokens[1], line_no);
            if (v < 1 || v > 1'000'000)
                throw parse_error(line_no, "vertex " + tokens[0] + " out of range");
            if (c < 1 || c > 1'000'000)
                throw parse_error(line_no, "colour " + tokens[1] + " out of range");
            if (! assigned.emplace(v, c).second)
                throw parse_error(line_no, "vertex " + tokens[0] + " coloured twice");
        }

        const long long n = expected_vertices ? *expected_vertices : (assigned.empty() ? 0 : assigned.rbegin()->first);
        PackingColoring result;
        result.colours.assign(n, 0);
        for (auto [v, c] : assigned) {
            if (v > n)
                throw Error(ErrorKind::Parse, "vertex " + std::to_string(v) + " exceeds the graph's " + std::to_string(n) + " vertices");
            result.colours[v - 1] = static_cast<int>(c);
        }
        for (long long v = 0 ; v < n ; ++v)
            if (result.colours[v] == 0)
                throw Error(ErrorKind::Parse, "vertex " + std::to_string(v + 1) + " has no colour");
        return result;
    }

    auto read_coloring_file(const std::filesystem::path & path, std::optional<int> expected_vertices) -> PackingColoring
    {
        auto in = open_in(path);
        try {
            return read_coloring(in, expected_vertices);
        }
        catch (const Error & e) {
            throw Error(e.kind(), path.string() + ": " + e.detail());
        }
    }

    auto write_layered_set(std::ostream & out, const LayeredStableSet & s) -> void
    {
        auto stars = s.star_layers();
        for (int k : s.layers) {
            out << "# layer " << k << '\n';
            if (std::binary_search(stars.begin(), stars.end(), k))
                out << "*\n";
            for (int v : s.layer_members(k))
                out << v + 1 << '\n';
        }
    }

    auto write_layered_set_file(const std::filesystem::path & path, const LayeredStableSet & s) -> void
    {
        auto out = open_out(path);
        write_layered_set(out, s);
    }

    auto read_layered_set(std::istream & in) -> LayeredStableSet
    {
        LayeredStableSet result;
        std::optional<int> layer;
        int line_no = 0;
        for (std::string line ; std::getline(in, line) ; ) {
            ++line_no;
            auto tokens = split(line);
            if (tokens.empty())
                continue;
            if (tokens[0] == "#") {
                if (tokens.size() != 3 || tokens[1] != "layer")
                    throw parse_error(line_no, "expected '# layer <k>'");
                layer = static_cast<int>(parse_int(tokens[2], line_no));
                if (*layer < 1)
                    throw parse_error(line_no, "layer must be positive");
                result.layers.push_back(*layer);
                continue;
            }
            if (! layer)
                throw parse_error(line_no, "member before any '# layer' header");
            if (tokens.size() != 1)
                throw parse_error(line_no, "expected one vertex id");
            if (tokens[0] == "*")
                result.members.push_back(LayeredVertex{LayeredVertex::star, *layer});
            else {
                auto v = parse_int(tokens[0], line_no);
                if (v < 1 || v > 1'000'000)
                    throw parse_error(line_no, "vertex out of range");
                result.members.push_back(LayeredVertex{static_cast<int>(v - 1), *layer});
            }
        }
        std::sort(result.layers.begin(), result.layers.end());
        result.layers.erase(std::unique(result.layers.begin(), result.layers.end()), result.layers.end());
        return result;
    }

    namespace
    {
        auto cell(const std::optional<long long> & value) -> std::string
        {
            return value ? std::to_string(*value) : "-";
        }
    }

    auto render_bounds_table(const std::vector<BoundsRow> & rows) -> std::string
    {
        std::vector<std::vector<std::string>> cells;
        cells.push_back({"q", "m", "LB", "UB", "status"});
        for (auto & row : rows)
            cells.push_back({std::to_string(row.q), std::to_string(row.m), cell(row.lower), cell(row.upper), row.status});

        std::vector<std::size_t> width(5, 0);
        for (auto & line : cells)
            for (std::size_t i = 0 ; i < line.size() ; ++i)
                width[i] = std::max(width[i], line[i].size());

        std::ostringstream out;
        for (auto & line : cells) {
            for (std::size_t i = 0 ; i < 4 ; ++i)
                out << std::setw(static_cast<int>(width[i])) << line[i] << "  ";
            out << line[4] << '\n';
        }
        return out.str();
    }

    auto render_bounds_csv(const std::vector<BoundsRow> & rows) -> std::string
    {
        std::ostringstream out;
        out << "q,m,lower,upper,status\n";
        for (auto & row : rows)
            out << row.q << ',' << row.m << ',' << cell(row.lower) << ',' << cell(row.upper) << ',' << row.status << '\n';
        return out.str();
    }
}
